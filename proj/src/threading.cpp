#include "homog/threading.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace homog {

namespace {
std::atomic<int> g_cap{1};
}

int thread_cap() { return g_cap.load(); }

void set_thread_cap(int cap) { g_cap.store(std::max(1, cap)); }

void parallel_for(long long total, const std::function<void(long long, long long)>& f) {
    int cap = thread_cap();
    if (total <= 0) return;
    if (cap <= 1 || total < 4096) {
        f(0, total);
        return;
    }
    int workers = int(std::min<long long>(cap, (total + 4095) / 4096));
    long long chunk = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int t = 0; t < workers; ++t) {
        long long b = t * chunk;
        long long e = std::min(total, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, b, e] { f(b, e); });
    }
    for (auto& th : pool) th.join();
}

} // namespace homog
