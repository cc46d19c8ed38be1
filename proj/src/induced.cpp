#include "homog/induced.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "homog/errors.hpp"
#include "homog/rng.hpp"

namespace homog {

bool verify_induced(const Graph& g, const Graph& pattern, const std::vector<int>& image) {
    int m = pattern.n();
    if (int(image.size()) != m) return false;
    for (int i = 0; i < m; ++i) {
        if (image[std::size_t(i)] < 0 || image[std::size_t(i)] >= g.n()) return false;
        for (int j = i + 1; j < m; ++j) {
            if (image[std::size_t(i)] == image[std::size_t(j)]) return false;
            if (pattern.has_edge(i, j) != g.has_edge(image[std::size_t(i)], image[std::size_t(j)]))
                return false;
        }
    }
    return true;
}

namespace {

// Adjacency of a <=32-vertex graph as per-vertex bit masks.
std::vector<uint32_t> mask_rows(const Graph& f) {
    std::vector<uint32_t> rows(std::size_t(f.n()), 0);
    for (auto [u, v] : f.edges()) {
        rows[std::size_t(u)] |= uint32_t(1) << v;
        rows[std::size_t(v)] |= uint32_t(1) << u;
    }
    return rows;
}

// Backtracking count of bijections rows_a -> rows_b preserving adjacency.
long long count_iso_maps(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    int m = int(a.size());
    std::vector<int> map(std::size_t(m), -1);
    uint32_t used = 0;
    long long found = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            ++found;
            return;
        }
        for (int t = 0; t < m; ++t) {
            if (used & (uint32_t(1) << t)) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                bool ea = (a[std::size_t(i)] >> j) & 1;
                bool eb = (b[std::size_t(t)] >> map[std::size_t(j)]) & 1;
                if (ea != eb) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[std::size_t(i)] = t;
            used |= uint32_t(1) << t;
            self(self, i + 1);
            used &= ~(uint32_t(1) << t);
        }
    };
    rec(rec, 0);
    return found;
}

// First adjacency-preserving bijection pattern -> target, or empty.
std::vector<int> first_iso_map(const std::vector<uint32_t>& pat, const std::vector<uint32_t>& tgt) {
    int m = int(pat.size());
    std::vector<int> map(std::size_t(m), -1);
    uint32_t used = 0;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) return true;
        for (int t = 0; t < m; ++t) {
            if (used & (uint32_t(1) << t)) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                bool ea = (pat[std::size_t(i)] >> j) & 1;
                bool eb = (tgt[std::size_t(t)] >> map[std::size_t(j)]) & 1;
                if (ea != eb) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[std::size_t(i)] = t;
            used |= uint32_t(1) << t;
            if (self(self, i + 1)) return true;
            used &= ~(uint32_t(1) << t);
        }
        return false;
    };
    if (!rec(rec, 0)) return {};
    return map;
}

std::vector<uint32_t> sub_mask_rows(const Graph& g, const std::vector<int>& sub) {
    int m = int(sub.size());
    std::vector<uint32_t> rows(std::size_t(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(sub[std::size_t(i)], sub[std::size_t(j)])) {
                rows[std::size_t(i)] |= uint32_t(1) << j;
                rows[std::size_t(j)] |= uint32_t(1) << i;
            }
    return rows;
}

bool degree_multiset_matches(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<int> da, db;
    da.reserve(a.size());
    db.reserve(b.size());
    for (uint32_t r : a) da.push_back(std::popcount(r));
    for (uint32_t r : b) db.push_back(std::popcount(r));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= std::size_t(x) + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

long long automorphism_count(const Graph& f) {
    if (f.n() == 0) return 1;
    if (f.n() > 12) throw CapacityError("automorphism_count: pattern too large");
    auto rows = mask_rows(f);
    return count_iso_maps(rows, rows);
}

bool subset_induces(const Graph& g, const std::vector<int>& sub, const Graph& pattern) {
    if (int(sub.size()) != pattern.n()) return false;
    auto p = mask_rows(pattern);
    auto s = sub_mask_rows(g, sub);
    if (!degree_multiset_matches(p, s)) return false;
    return !first_iso_map(p, s).empty();
}

std::optional<std::vector<int>> embedding_onto(const Graph& g, const std::vector<int>& sub,
                                               const Graph& pattern) {
    if (int(sub.size()) != pattern.n()) return std::nullopt;
    auto p = mask_rows(pattern);
    auto s = sub_mask_rows(g, sub);
    auto map = first_iso_map(p, s);
    if (map.empty() && pattern.n() > 0) return std::nullopt;
    std::vector<int> image(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) image[i] = sub[std::size_t(map[i])];
    return image;
}

long long subset_count_capped(long long n, int m, long long cap) {
    if (m < 0 || n < m) return 0;
    unsigned __int128 c = 1;
    for (int i = 1; i <= m; ++i) {
        c = c * (unsigned __int128)(n - (m - i));
        c /= (unsigned __int128)i;
        if (c > (unsigned __int128)cap) return cap + 1;
    }
    return (long long)c;
}

long long count_induced_exact(const Graph& g, const Graph& f, long long budget) {
    int m = f.n();
    int n = g.n();
    if (m < 1) throw ArgumentError("count_induced_exact: empty pattern");
    if (m > n) return 0;
    if (subset_count_capped(n, m, budget) > budget)
        throw CapacityError("count_induced_exact: C(" + std::to_string(n) + "," +
                            std::to_string(m) + ") exceeds budget; use estimate_induced");
    auto prows = mask_rows(f);
    std::vector<int> dp;
    for (uint32_t r : prows) dp.push_back(std::popcount(r));
    std::sort(dp.begin(), dp.end());

    std::vector<int> idx(std::size_t(m), 0);
    for (int i = 0; i < m; ++i) idx[std::size_t(i)] = i;
    long long count = 0;
    std::vector<int> sub(std::size_t(m), 0);
    while (true) {
        for (int i = 0; i < m; ++i) sub[std::size_t(i)] = idx[std::size_t(i)];
        auto srows = sub_mask_rows(g, sub);
        std::vector<int> ds;
        for (uint32_t r : srows) ds.push_back(std::popcount(r));
        std::sort(ds.begin(), ds.end());
        if (ds == dp && !first_iso_map(prows, srows).empty()) ++count;
        // next lexicographic combination
        int i = m - 1;
        while (i >= 0 && idx[std::size_t(i)] == n - m + i) --i;
        if (i < 0) break;
        ++idx[std::size_t(i)];
        for (int j = i + 1; j < m; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
    }
    return count;
}

InducedEstimate estimate_induced(const Graph& g, const Graph& f, long long samples,
                                 uint64_t seed) {
    if (samples < 1) throw ArgumentError("estimate_induced: need samples >= 1");
    int m = f.n();
    int n = g.n();
    InducedEstimate est;
    est.samples = samples;
    double total = 1;
    for (int i = 0; i < m; ++i) total = total * double(n - i) / double(i + 1);
    est.total_subsets = (m <= n) ? total : 0;
    if (m > n) return est;

    Rng rng(mix_seed(seed, 0x35414D50ULL));
    auto prows = mask_rows(f);
    std::vector<int> sub(std::size_t(m), 0);
    for (long long s = 0; s < samples; ++s) {
        // distinct m-subset by rejection; m is tiny
        for (int i = 0; i < m;) {
            int v = rng.index(n);
            bool dup = false;
            for (int j = 0; j < i; ++j)
                if (sub[std::size_t(j)] == v) dup = true;
            if (!dup) sub[std::size_t(i++)] = v;
        }
        auto srows = sub_mask_rows(g, sub);
        if (degree_multiset_matches(prows, srows) && !first_iso_map(prows, srows).empty())
            ++est.hits;
    }
    double phat = double(est.hits) / double(samples);
    est.point = phat * est.total_subsets;
    // Wilson score interval at 95%
    const double z = 1.959963984540054;
    double ns = double(samples);
    double denom = 1.0 + z * z / ns;
    double center = (phat + z * z / (2 * ns)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / ns + z * z / (4 * ns * ns)) / denom;
    est.lo = std::max(0.0, center - half) * est.total_subsets;
    est.hi = std::min(1.0, center + half) * est.total_subsets;
    if (est.hits == 0) est.lo = 0;
    if (est.hits == samples) est.hi = est.total_subsets;
    return est;
}

CrossCopyResult find_cross_copies(const Graph& g, const Graph& pattern,
                                  const std::vector<const VertexSet*>& assignment,
                                  int target, uint64_t seed) {
    int m = pattern.n();
    if (int(assignment.size()) != m) throw ArgumentError("find_cross_copies: assignment size");
    if (target < 1) throw ArgumentError("find_cross_copies: target >= 1 required");

    // group pattern vertices by assigned part, first-occurrence order
    std::vector<const VertexSet*> parts;
    std::vector<std::vector<int>> group; // pattern vertices per part
    for (int p = 0; p < m; ++p) {
        const VertexSet* vs = assignment[std::size_t(p)];
        if (vs == nullptr) throw ArgumentError("find_cross_copies: null part");
        std::size_t gi = 0;
        while (gi < parts.size() && parts[gi] != vs) ++gi;
        if (gi == parts.size()) {
            parts.push_back(vs);
            group.emplace_back();
        }
        group[gi].push_back(p);
    }
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            if (parts[a]->bits.intersects(parts[b]->bits))
                throw ArgumentError("find_cross_copies: assigned parts overlap");

    CrossCopyResult res;
    std::vector<std::vector<int>> pool; // part members
    for (auto* vs : parts) {
        pool.push_back(vs->members());
        if (pool.back().size() < group[pool.size() - 1].size()) {
            res.partial = true; // part too small to host its pattern vertices
            return res;
        }
    }

    Rng rng(mix_seed(seed, 0x43524F53ULL));
    std::unordered_set<std::vector<int>, VecHash> seen;
    std::vector<int> image(std::size_t(m), -1);
    long long cap = 64LL * target;
    std::vector<int> picks;
    while (res.draws < cap && int(res.copies.size()) < target) {
        ++res.draws;
        for (std::size_t gi = 0; gi < group.size(); ++gi) {
            int need = int(group[gi].size());
            int avail = int(pool[gi].size());
            picks.clear();
            while (int(picks.size()) < need) {
                int c = rng.index(avail);
                bool dup = false;
                for (int q : picks)
                    if (q == c) dup = true;
                if (!dup) picks.push_back(c);
            }
            for (int t = 0; t < need; ++t)
                image[std::size_t(group[gi][std::size_t(t)])] = pool[gi][std::size_t(picks[std::size_t(t)])];
        }
        if (!verify_induced(g, pattern, image)) continue;
        std::vector<int> key = image;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) res.copies.push_back(InducedCopy{image});
    }
    res.partial = int(res.copies.size()) < target;
    return res;
}

} // namespace homog
