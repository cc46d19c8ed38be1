#pragma once

// Test-side oracles. These deliberately re-implement counting and search
// with different algorithms than the library (injection enumeration instead
// of subset isomorphism, mask scans instead of branch and bound) so shared
// bugs cannot hide.

#include <algorithm>
#include <numeric>
#include <vector>

#include "homog/graph.hpp"
#include "homog/rng.hpp"

namespace testsupport {

using homog::Graph;

// All adjacency-preserving bijections f -> f, counted by raw permutation
// scan.
inline long long oracle_aut(const Graph& f) {
    int m = f.n();
    std::vector<int> perm(std::size_t(m), 0);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j)
                if (f.has_edge(i, j) != f.has_edge(perm[std::size_t(i)], perm[std::size_t(j)]))
                    ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Unlabeled induced-copy count by enumerating every injection and dividing
// by |Aut(f)|.
inline long long oracle_count_induced(const Graph& g, const Graph& f) {
    int m = f.n();
    int n = g.n();
    if (m > n) return 0;
    long long injections = 0;
    std::vector<int> image(std::size_t(m), -1);
    std::vector<char> used(std::size_t(n), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            ++injections;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[std::size_t(v)]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (f.has_edge(j, i) != g.has_edge(image[std::size_t(j)], v)) ok = false;
            if (!ok) continue;
            used[std::size_t(v)] = 1;
            image[std::size_t(i)] = v;
            self(self, i + 1);
            used[std::size_t(v)] = 0;
        }
    };
    rec(rec, 0);
    return injections / oracle_aut(f);
}

inline Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

inline uint64_t pair_bits(int n) { return uint64_t(n) * (n - 1) / 2; }

inline Graph random_graph(int n, uint64_t seed, long long pnum = 1, long long pden = 2) {
    homog::Rng rng(homog::mix_seed(seed, 0x7453ULL));
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(pnum, pden)) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

inline Graph relabel_random(const Graph& g, uint64_t seed) {
    homog::Rng rng(homog::mix_seed(seed, 0x52454CULL));
    std::vector<int> perm(std::size_t(g.n()), 0);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[std::size_t(u)], perm[std::size_t(v)]);
    return Graph::from_edges(g.n(), es);
}

// Max clique / independent set by direct mask scan, n <= 24.
inline int brute_max_clique(const Graph& g) {
    int n = g.n();
    std::vector<uint32_t> adj(std::size_t(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[std::size_t(u)] |= uint32_t(1) << v;
        adj[std::size_t(v)] |= uint32_t(1) << u;
    }
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        int sz = std::popcount(mask);
        if (sz <= best) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((mask >> v) & 1)
                if ((adj[std::size_t(v)] & mask) != (mask ^ (uint32_t(1) << v))) ok = false;
        if (ok) best = sz;
    }
    return best;
}

inline int brute_max_independent(const Graph& g) { return brute_max_clique(g.complement()); }

// Independent shatter check for the neighborhood set system.
inline int oracle_vc(const Graph& g) {
    int n = g.n();
    std::vector<uint32_t> nb(std::size_t(n), 0);
    for (auto [u, v] : g.edges()) {
        nb[std::size_t(u)] |= uint32_t(1) << v;
        nb[std::size_t(v)] |= uint32_t(1) << u;
    }
    int best = 0;
    uint32_t top = (uint32_t(1) << n) - 1;
    for (uint32_t s = 1; s <= top; ++s) {
        int size = std::popcount(s);
        if (size <= best) continue;
        // mark which subsets of s occur as traces
        std::vector<char> hit(std::size_t(1) << size, 0);
        std::vector<int> positions;
        for (int b = 0; b < n; ++b)
            if ((s >> b) & 1) positions.push_back(b);
        for (int v = 0; v < n; ++v) {
            uint32_t tr = nb[std::size_t(v)] & s;
            uint32_t compact = 0;
            for (std::size_t b = 0; b < positions.size(); ++b)
                if ((tr >> positions[b]) & 1) compact |= uint32_t(1) << b;
            hit[compact] = 1;
        }
        bool shattered = true;
        for (char h : hit)
            if (!h) shattered = false;
        if (shattered) best = size;
    }
    return best;
}

// Every cograph structure on exactly n vertices (as labeled graphs on
// 0..n-1, duplicates possible), built by union/join recursion over integer
// partitions.
inline std::vector<std::vector<std::pair<int, int>>> cograph_edge_sets(int n, bool join_root) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) {
        out.emplace_back();
        return out;
    }
    // partitions of n into at least two parts, descending
    std::vector<int> parts;
    auto emit = [&](auto&& self_emit) -> void {
        // combine child structures for the current `parts`
        std::vector<std::vector<std::vector<std::pair<int, int>>>> choices;
        for (int p : parts) choices.push_back(cograph_edge_sets(p, !join_root));
        std::vector<std::size_t> pick(parts.size(), 0);
        while (true) {
            std::vector<std::pair<int, int>> edges;
            int base = 0;
            std::vector<std::pair<int, int>> spans;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                for (auto [u, v] : choices[i][pick[i]])
                    edges.emplace_back(base + u, base + v);
                spans.emplace_back(base, parts[i]);
                base += parts[i];
            }
            if (join_root)
                for (std::size_t i = 0; i < spans.size(); ++i)
                    for (std::size_t j = i + 1; j < spans.size(); ++j)
                        for (int u = spans[i].first; u < spans[i].first + spans[i].second; ++u)
                            for (int v = spans[j].first; v < spans[j].first + spans[j].second; ++v)
                                edges.emplace_back(u, v);
            out.push_back(std::move(edges));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
        (void)self_emit;
    };
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            if (parts.size() >= 2) emit(emit);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n - 1);
    return out;
}

inline std::vector<Graph> all_cographs_up_to(int nmax) {
    std::vector<Graph> out;
    for (int n = 1; n <= nmax; ++n)
        for (bool join : {false, true}) {
            if (n == 1 && join) continue;
            for (auto& edges : cograph_edge_sets(n, join))
                out.push_back(Graph::from_edges(n, edges));
        }
    return out;
}

} // namespace testsupport
