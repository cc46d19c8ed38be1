#include "homog/clique.hpp"

#include <algorithm>

#include "homog/errors.hpp"

namespace homog {

std::vector<int> greedy_clique(const Graph& g) {
    int n = g.n();
    std::vector<int> clique;
    if (n == 0) return clique;
    Bitset alive(n);
    alive.set_all();
    while (alive.any()) {
        // minimum complement-degree = maximum adjacency into alive
        int best = -1;
        long long best_adj = -1;
        for (int v = alive.first_set(); v >= 0; v = alive.next_set(v)) {
            long long a = g.row(v).and_count(alive);
            if (a > best_adj) {
                best_adj = a;
                best = v;
            }
        }
        clique.push_back(best);
        alive &= g.row(best); // v itself drops out: no self-loops
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

namespace {

struct Mcq {
    const Graph& g;
    long long budget;
    long long nodes = 0;
    std::vector<int> best;
    std::vector<int> cur;

    void expand(Bitset p) {
        if (++nodes > budget) throw CapacityError("max_clique_exact: node budget exceeded");
        // greedy colouring of p; colour number bounds any clique extension
        std::vector<int> order;
        std::vector<int> bound;
        Bitset uncolored = p;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset avail = uncolored;
            while (true) {
                int v = avail.first_set();
                if (v < 0) break;
                order.push_back(v);
                bound.push_back(color);
                uncolored.reset(v);
                avail.reset(v);
                avail.and_not(g.row(v));
            }
        }
        Bitset rem = p;
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (int(cur.size()) + bound[std::size_t(i)] <= int(best.size())) return;
            int v = order[std::size_t(i)];
            cur.push_back(v);
            Bitset next = rem & g.row(v);
            if (next.any())
                expand(next);
            else if (cur.size() > best.size())
                best = cur;
            cur.pop_back();
            rem.reset(v);
        }
    }
};

} // namespace

std::vector<int> max_clique_exact(const Graph& g, long long node_budget) {
    if (g.n() == 0) return {};
    Mcq mcq{g, node_budget};
    Bitset all(g.n());
    all.set_all();
    mcq.expand(all);
    std::sort(mcq.best.begin(), mcq.best.end());
    return mcq.best;
}

std::vector<int> max_independent_exact(const Graph& g, long long node_budget) {
    return max_clique_exact(g.complement(), node_budget);
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) return false;
    return true;
}

} // namespace homog
