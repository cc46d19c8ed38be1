#include <doctest.h>

#include "homog/errors.hpp"
#include "homog/induced.hpp"
#include "support.hpp"

using namespace homog;

TEST_CASE("count_induced_exact on the named examples") {
    CHECK(count_induced_exact(path_graph(4), path_graph(4)) == 1);
    CHECK(count_induced_exact(cycle_graph(5), path_graph(4)) == 5);
    CHECK(testsupport::oracle_count_induced(cycle_graph(5), path_graph(4)) == 5);
    CHECK(count_induced_exact(complete_graph(4), path_graph(4)) == 0);
}

TEST_CASE("count_induced_exact budget error") {
    Graph g = testsupport::random_graph(40, 3);
    CHECK_THROWS_AS(count_induced_exact(g, path_graph(4), 1000), CapacityError);
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(path_graph(4)) == 2);
    CHECK(automorphism_count(complete_graph(4)) == 24);
    CHECK(automorphism_count(cycle_graph(5)) == 10);
    CHECK(automorphism_count(star_graph(3)) == 6);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = testsupport::random_graph(6, seed);
        CHECK(automorphism_count(g) == testsupport::oracle_aut(g));
    }
}

TEST_CASE("count agrees with the injection oracle on random small graphs") {
    std::vector<Graph> patterns{path_graph(4), complete_graph(3), cycle_graph(4), star_graph(3)};
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = testsupport::random_graph(7, seed);
        for (const auto& f : patterns)
            CHECK(count_induced_exact(g, f) == testsupport::oracle_count_induced(g, f));
    }
}

TEST_CASE("complementation duality of induced counts") {
    std::vector<Graph> patterns{path_graph(4), complete_graph(3), cycle_graph(4)};
    // exhaustive on <= 5 vertices, seeded samples at 6 and 7
    for (int n = 2; n <= 5; ++n) {
        uint64_t masks = uint64_t(1) << testsupport::pair_bits(n);
        for (uint64_t mask = 0; mask < masks; ++mask) {
            Graph g = testsupport::graph_from_mask(n, mask);
            Graph cg = g.complement();
            for (const auto& f : patterns)
                CHECK(count_induced_exact(g, f) == count_induced_exact(cg, f.complement()));
        }
    }
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = testsupport::random_graph(6 + int(seed & 1), seed);
        Graph cg = g.complement();
        for (const auto& f : patterns)
            CHECK(count_induced_exact(g, f) == count_induced_exact(cg, f.complement()));
    }
    // the 4-path is self-complementary, so its counts survive complementation
    Graph g = testsupport::random_graph(9, 1234);
    CHECK(count_induced_exact(g, path_graph(4)) ==
          count_induced_exact(g.complement(), path_graph(4)));
}

TEST_CASE("estimate_induced on the named examples") {
    auto zero = estimate_induced(complete_graph(4), path_graph(4), 500, 1);
    CHECK(zero.hits == 0);
    CHECK(zero.point == 0);
    CHECK(zero.lo == 0);

    auto one = estimate_induced(path_graph(4), path_graph(4), 200, 1);
    CHECK(one.hits == 200);
    CHECK(one.point == doctest::Approx(1.0));

    // G(40, 1/2): expected induced 4-paths = (3/16) C(40,4); the 3/16 comes
    // from the 12 labeled path orientations over 2^6 pair states, checked
    // here by enumeration before it is used
    int labeled = 0;
    for (uint64_t mask = 0; mask < 64; ++mask) {
        Graph h = testsupport::graph_from_mask(4, mask);
        if (subset_induces(h, {0, 1, 2, 3}, path_graph(4))) labeled += 1;
    }
    CHECK(labeled == 12); // 4!/|Aut|, so a fixed 4-set is a path w.p. 12/64 = 3/16

    Graph g40 = testsupport::random_graph(40, 99);
    auto est = estimate_induced(g40, path_graph(4), 60000, 7);
    double expect = (3.0 / 16.0) * est.total_subsets;
    CHECK(est.point > expect * 0.9);
    CHECK(est.point < expect * 1.1);

    // validated against the exact count at n = 10
    Graph g10 = testsupport::random_graph(10, 5);
    long long exact = count_induced_exact(g10, path_graph(4));
    auto est10 = estimate_induced(g10, path_graph(4), 20000, 11);
    CHECK(est10.lo <= double(exact));
    CHECK(est10.hi >= double(exact));
}

TEST_CASE("estimator interval covers the exact count in >= 90% of seeded runs") {
    int covered = 0;
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        Graph g = testsupport::random_graph(10, seed * 7 + 1);
        long long exact = count_induced_exact(g, path_graph(4));
        auto est = estimate_induced(g, path_graph(4), 600, seed);
        if (est.lo <= double(exact) && double(exact) <= est.hi) ++covered;
    }
    CHECK(covered >= 90);
}

TEST_CASE("find_cross_copies on complete and empty bipartite pairs") {
    Graph edge = path_graph(2);
    // two parts joined completely
    Graph kb = complete_bipartite(10, 10);
    VertexSet left = VertexSet::of(20, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    VertexSet right = VertexSet::of(20, {10, 11, 12, 13, 14, 15, 16, 17, 18, 19});
    auto res = find_cross_copies(kb, edge, {&left, &right}, 30, 5);
    CHECK(!res.partial);
    CHECK(int(res.copies.size()) == 30);
    for (const auto& c : res.copies) CHECK(verify_induced(kb, edge, c.image));

    // no cross edges: empty, flagged partial
    Graph none = empty_graph(20);
    auto res2 = find_cross_copies(none, edge, {&left, &right}, 5, 5);
    CHECK(res2.partial);
    CHECK(res2.copies.empty());
    CHECK(res2.draws == 64 * 5);
}

TEST_CASE("find_cross_copies succeeds at least half the time at threshold densities") {
    // four parts of 50; path-edge pairs planted at density >= 1-gamma and
    // non-edge pairs at <= gamma with gamma = 1/16; per-draw failure is at
    // most 6*gamma = 3/8 by the union bound
    const int ps = 50;
    const long long pairs = (long long)ps * ps; // 2500
    const long long hi = (pairs * 15 + 15) / 16;  // ceil(15/16 * 2500)
    const long long lo = pairs / 16;              // floor(1/16 * 2500)
    Graph p4 = path_graph(4);
    Rng rng(424242);
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            long long want = p4.has_edge(a, b) ? hi : lo;
            std::vector<std::pair<int, int>> cross;
            for (int u = 0; u < ps; ++u)
                for (int v = 0; v < ps; ++v) cross.emplace_back(a * ps + u, b * ps + v);
            rng.shuffle(cross);
            for (long long t = 0; t < want; ++t) es.push_back(cross[std::size_t(t)]);
        }
    Graph g = Graph::from_edges(4 * ps, es);
    std::vector<VertexSet> parts;
    for (int a = 0; a < 4; ++a) {
        VertexSet p(4 * ps);
        for (int u = 0; u < ps; ++u) p.add(a * ps + u);
        parts.push_back(p);
    }
    auto res = find_cross_copies(g, p4, {&parts[0], &parts[1], &parts[2], &parts[3]}, 1000, 17);
    CHECK(!res.partial);
    // draws needed for 1000 verified copies bounds the success rate from below
    CHECK(res.draws <= 2000);
    for (const auto& c : res.copies) CHECK(verify_induced(g, p4, c.image));
}

TEST_CASE("cross copies with several pattern vertices in one part") {
    // both endpoints of an edge from the same part
    Graph g = complete_graph(6);
    VertexSet part = VertexSet::of(6, {0, 1, 2});
    Graph edge = path_graph(2);
    auto res = find_cross_copies(g, edge, {&part, &part}, 3, 9);
    CHECK(int(res.copies.size()) == 3); // C(3,2) distinct pairs
    auto res4 = find_cross_copies(g, edge, {&part, &part}, 4, 9);
    CHECK(res4.partial);
    CHECK(int(res4.copies.size()) == 3);
}

TEST_CASE("verify_induced rejects wrong tuples") {
    Graph g = path_graph(4);
    CHECK(verify_induced(g, path_graph(4), {0, 1, 2, 3}));
    CHECK(!verify_induced(g, path_graph(4), {0, 1, 3, 2}));
    CHECK(!verify_induced(g, path_graph(4), {0, 1, 2, 2}));
    CHECK(!verify_induced(g, path_graph(4), {0, 1, 2}));
}
