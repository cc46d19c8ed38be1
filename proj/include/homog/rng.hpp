#pragma once

#include <cstdint>
#include <vector>

namespace homog {

// splitmix64. Chosen over std::mt19937 + distributions because the stream
// must be identical across standard libraries; generated corpora and
// certificates are keyed by these seeds.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), rejection-sampled, bound >= 1.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        while (true) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int index(int bound) { return int(below(uint64_t(bound))); }

    bool chance(long long num, long long den) {
        // true with probability num/den, exactly
        return (long long)below(uint64_t(den)) < num;
    }

    template <class T> void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c = 0) {
    Rng r(a ^ 0x632be59bd9b4e019ULL);
    uint64_t h = r.next() ^ b;
    Rng r2(h);
    return r2.next() ^ (c * 0x9e3779b97f4a7c15ULL);
}

} // namespace homog
