#include "homog/cograph.hpp"

#include "homog/errors.hpp"

namespace homog {

namespace {

// Connected components of g restricted to `mask`, as bitsets.
std::vector<Bitset> components_within(const Graph& g, const Bitset& mask, bool in_complement) {
    std::vector<Bitset> comps;
    Bitset todo = mask;
    int n = g.n();
    while (true) {
        int seed = todo.first_set();
        if (seed < 0) break;
        Bitset comp(n);
        comp.set(seed);
        todo.reset(seed);
        Bitset frontier(n);
        frontier.set(seed);
        while (frontier.any()) {
            Bitset next(n);
            frontier.for_each([&](int u) {
                if (in_complement) {
                    Bitset nb = todo;
                    nb.and_not(g.row(u));
                    next |= nb;
                } else {
                    next |= g.row(u) & todo;
                }
            });
            next &= todo;
            if (!next.any()) break;
            comp |= next;
            todo.and_not(next);
            frontier = next;
        }
        comps.push_back(comp);
    }
    return comps;
}

// In a connected, co-connected subgraph an induced 4-path always exists;
// scan ordered edges (b,c) and look for a-b-c-d with a and d on opposite
// private sides.
std::array<int, 4> extract_p4(const Graph& g, const Bitset& mask) {
    int n = g.n();
    for (int b = mask.first_set(); b >= 0; b = mask.next_set(b)) {
        Bitset nb = g.row(b) & mask;
        for (int c = nb.first_set(); c >= 0; c = nb.next_set(c)) {
            Bitset aside = nb;
            aside.and_not(g.row(c));
            aside.reset(c);
            if (!aside.any()) continue;
            Bitset dside = g.row(c) & mask;
            dside.and_not(g.row(b));
            dside.reset(b);
            if (!dside.any()) continue;
            for (int a = aside.first_set(); a >= 0; a = aside.next_set(a)) {
                Bitset cand = dside;
                cand.and_not(g.row(a));
                int d = cand.first_set();
                if (d >= 0) return {a, b, c, d};
            }
        }
    }
    (void)n;
    throw ViolationError("extract_p4: no induced 4-path in a connected co-connected subgraph");
}

struct Analyzer {
    const Graph& g;
    bool failed = false;
    std::array<int, 4> p4{-1, -1, -1, -1};

    struct Best {
        std::vector<int> clique;
        std::vector<int> indep;
    };

    Best analyze(const Bitset& mask, int size) {
        Best out;
        if (failed) return out;
        if (size == 1) {
            int v = mask.first_set();
            out.clique = {v};
            out.indep = {v};
            return out;
        }
        auto comps = components_within(g, mask, false);
        if (comps.size() > 1) {
            // union: cliques stay inside one component, independent sets add up
            for (const auto& c : comps) {
                Best b = analyze(c, c.count());
                if (failed) return out;
                if (b.clique.size() > out.clique.size()) out.clique = std::move(b.clique);
                out.indep.insert(out.indep.end(), b.indep.begin(), b.indep.end());
            }
            return out;
        }
        auto cocomps = components_within(g, mask, true);
        if (cocomps.size() > 1) {
            for (const auto& c : cocomps) {
                Best b = analyze(c, c.count());
                if (failed) return out;
                if (b.indep.size() > out.indep.size()) out.indep = std::move(b.indep);
                out.clique.insert(out.clique.end(), b.clique.begin(), b.clique.end());
            }
            return out;
        }
        failed = true;
        p4 = extract_p4(g, mask);
        return out;
    }
};

} // namespace

CotreeResult cotree_analyze(const Graph& g) {
    CotreeResult r;
    if (g.n() == 0) {
        r.is_cograph = true;
        return r;
    }
    Bitset all(g.n());
    all.set_all();
    Analyzer an{g};
    auto best = an.analyze(all, g.n());
    if (an.failed) {
        r.is_cograph = false;
        r.p4 = an.p4;
        return r;
    }
    r.is_cograph = true;
    r.max_clique = std::move(best.clique);
    r.max_independent = std::move(best.indep);
    return r;
}

std::optional<std::array<int, 4>> find_induced_p4(const Graph& g) {
    auto r = cotree_analyze(g);
    if (r.is_cograph) return std::nullopt;
    return r.p4;
}

} // namespace homog
