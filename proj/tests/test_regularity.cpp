#include <doctest.h>

#include <set>

#include "homog/errors.hpp"
#include "homog/oracle.hpp"
#include "homog/regularity.hpp"
#include "homog/threading.hpp"
#include "support.hpp"

using namespace homog;

namespace {

RegularPartition make_partition(const Graph& g, const std::vector<VertexSet>& parts,
                                const Rational& gamma) {
    auto cls = classify_pairs(g, parts, gamma);
    RegularPartition rp;
    rp.parts = parts;
    rp.gamma = gamma;
    rp.labels = cls.labels;
    rp.densities = cls.densities;
    rp.bad_count = cls.bad_count;
    return rp;
}

} // namespace

TEST_CASE("classify_pairs on the named examples") {
    // complete bipartite pair -> HIGH
    Graph kb = complete_bipartite(3, 3);
    std::vector<VertexSet> parts{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3, 4, 5})};
    auto cls = classify_pairs(kb, parts, Rational(1, 10));
    CHECK(cls.labels[0] == PairLabel::High);
    CHECK(cls.bad_count == 0);

    // empty pair -> LOW
    auto cls2 = classify_pairs(empty_graph(6), parts, Rational(1, 10));
    CHECK(cls2.labels[0] == PairLabel::Low);

    // density 1/2 -> BAD at gamma = 1/10
    Graph half = Graph::from_edges(4, {{0, 2}, {1, 3}});
    std::vector<VertexSet> p2{VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})};
    auto cls3 = classify_pairs(half, p2, Rational(1, 10));
    CHECK(cls3.labels[0] == PairLabel::Bad);
    CHECK(cls3.bad_count == 1);

    // gamma >= 1/2 leaves nothing bad
    auto cls4 = classify_pairs(half, p2, Rational(1, 2));
    CHECK(cls4.bad_count == 0);
}

TEST_CASE("classify_pairs boundary densities are exact") {
    // 3x3 pair with 3 of 9 edges: LOW iff gamma >= 1/3, exactly
    Graph g = Graph::from_edges(6, {{0, 3}, {1, 4}, {2, 5}});
    std::vector<VertexSet> parts{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3, 4, 5})};
    CHECK(classify_pairs(g, parts, Rational(1, 3)).labels[0] == PairLabel::Low);
    CHECK(classify_pairs(g, parts, Rational(333333333, 1000000000)).labels[0] == PairLabel::Bad);
    CHECK(classify_pairs(g, parts, Rational(333333334, 1000000000)).labels[0] == PairLabel::Low);
}

TEST_CASE("classify_pairs is independent of the thread cap") {
    Graph g = testsupport::random_graph(60, 42);
    auto parts = equipartition(g, 12, 3);
    auto a = classify_pairs(g, parts, Rational(1, 5));
    set_thread_cap(4);
    auto b = classify_pairs(g, parts, Rational(1, 5));
    set_thread_cap(1);
    CHECK(a.labels == b.labels);
    CHECK(a.bad_count == b.bad_count);
}

TEST_CASE("monotone in gamma: larger gamma can only shrink the bad set") {
    Graph g = testsupport::random_graph(40, 17);
    auto parts = equipartition(g, 8, 5);
    auto tight = classify_pairs(g, parts, Rational(1, 10));
    auto loose = classify_pairs(g, parts, Rational(1, 4));
    REQUIRE(tight.labels.size() == loose.labels.size());
    for (std::size_t t = 0; t < tight.labels.size(); ++t)
        if (loose.labels[t] == PairLabel::Bad) CHECK(tight.labels[t] == PairLabel::Bad);
    CHECK(loose.bad_count <= tight.bad_count);
}

TEST_CASE("afn_partition on a complete graph: all pairs HIGH, no bad") {
    Graph g = complete_graph(40);
    auto fam = FamilySpec::builtin_p4();
    auto out = afn_partition(g, fam, Rational(1, 20), 2, 40, 1);
    REQUIRE(out.is_partition());
    const auto& rp = out.partition();
    CHECK(rp.k() == 2);
    CHECK(rp.bad_count == 0);
    for (auto lab : rp.labels) CHECK(lab == PairLabel::High);
}

TEST_CASE("afn_partition on two cliques with an aligned seed") {
    Graph g;
    {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) es.emplace_back(u, v);
        for (int u = 5; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v) es.emplace_back(u, v);
        g = Graph::from_edges(10, es);
    }
    // the contract fixes the partition given (g, k, seed); search for a seed
    // whose shuffle realizes the natural split, then use it
    uint64_t aligned = 0;
    bool found = false;
    for (uint64_t s = 0; s < 5000 && !found; ++s) {
        auto parts = equipartition(g, 2, s);
        bool pure = true;
        for (const auto& p : parts) {
            bool first_clique = p.contains(0) || p.contains(1);
            for (int v : p.members())
                if ((v < 5) != first_clique) pure = false;
        }
        if (pure) {
            aligned = s;
            found = true;
        }
    }
    REQUIRE(found);
    auto fam = FamilySpec::builtin_p4();
    auto out = afn_partition(g, fam, Rational(1, 10), 2, 10, aligned);
    REQUIRE(out.is_partition());
    const auto& rp = out.partition();
    CHECK(rp.k() == 2);
    CHECK(rp.bad_count == 0);
    CHECK(rp.labels[0] == PairLabel::Low); // the single cross pair
}

TEST_CASE("afn_partition finds abundant copies in dense random graphs") {
    homog::oracle::GeneratorSpec spec;
    spec.kind = homog::oracle::GeneratorSpec::Kind::Gnp;
    spec.n = 60;
    spec.p = Rational(1, 2);
    spec.seed = 77;
    Graph g = homog::oracle::generate(spec);
    // abundance first: the exact count at n=60 dwarfs the evidence target
    long long exact = count_induced_exact(g, path_graph(4));
    CHECK(exact > 10000);

    auto fam = FamilySpec::builtin_p4();
    auto out = afn_partition(g, fam, Rational(1, 20), 20, 60, 5);
    REQUIRE(!out.is_partition());
    const auto& ev = out.evidence();
    CHECK(int(ev.copies.size()) >= 100);
    for (const auto& c : ev.copies) CHECK(verify_induced(g, ev.pattern, c.image));
    // distinct as vertex sets
    std::set<std::vector<int>> keys;
    for (const auto& c : ev.copies) {
        auto k = c.image;
        std::sort(k.begin(), k.end());
        CHECK(keys.insert(k).second);
    }
}

TEST_CASE("afn_partition outcomes are deterministic") {
    Graph g = testsupport::random_graph(80, 9);
    auto fam = FamilySpec::builtin_p4();
    auto a = afn_partition(g, fam, Rational(1, 20), 10, 80, 33);
    auto b = afn_partition(g, fam, Rational(1, 20), 10, 80, 33);
    CHECK(a.is_partition() == b.is_partition());
    if (!a.is_partition()) {
        CHECK(a.evidence().copies.size() == b.evidence().copies.size());
        for (std::size_t i = 0; i < a.evidence().copies.size(); ++i)
            CHECK(a.evidence().copies[i].image == b.evidence().copies[i].image);
    } else {
        CHECK(a.partition().labels == b.partition().labels);
        for (int i = 0; i < a.partition().k(); ++i)
            CHECK(a.partition().parts[std::size_t(i)] == b.partition().parts[std::size_t(i)]);
    }
}

TEST_CASE("returned partitions reproduce under recount") {
    homog::oracle::GeneratorSpec spec;
    spec.kind = homog::oracle::GeneratorSpec::Kind::Cograph;
    spec.n = 120;
    spec.seed = 4;
    Graph g = homog::oracle::generate(spec);
    auto fam = FamilySpec::builtin_p4();
    auto out = afn_partition(g, fam, Rational(1, 100), 10, 120, 2);
    REQUIRE(out.is_partition());
    const auto& rp = out.partition();
    auto recheck = classify_pairs(g, rp.parts, rp.gamma);
    CHECK(recheck.labels == rp.labels);
    CHECK(recheck.bad_count == rp.bad_count);
    CHECK(rp.within_bad_budget());
    // equipartition shape survives refinement
    int mn = g.n(), mx = 0;
    Bitset seen(g.n());
    for (const auto& p : rp.parts) {
        mn = std::min(mn, p.size);
        mx = std::max(mx, p.size);
        CHECK(!seen.intersects(p.bits));
        seen |= p.bits;
    }
    CHECK(seen.count() == g.n());
    CHECK(mx - mn <= 1);
}

TEST_CASE("afn_partition exhaustion carries diagnostics") {
    // k_max too small for a dense random graph, and no 4-path target can be
    // reached because the family member is planted absent: use a cograph
    // with a low k_max so refinement cannot reach homogeneity
    homog::oracle::GeneratorSpec spec;
    spec.kind = homog::oracle::GeneratorSpec::Kind::Cograph;
    spec.n = 200;
    spec.seed = 12;
    Graph g = homog::oracle::generate(spec);
    auto fam = FamilySpec::builtin_p4();
    bool threw = false;
    bool clean = false;
    try {
        clean = afn_partition(g, fam, Rational(1, 1000), 8, 16, 3).is_partition();
    } catch (const ExhaustionError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("trajectory") != std::string::npos);
        CHECK(std::string(e.what()).find("copies") != std::string::npos);
    }
    CHECK((threw || clean));
}

TEST_CASE("partition serialization round trip") {
    Graph g = testsupport::random_graph(30, 21);
    auto parts = equipartition(g, 5, 2);
    auto rp = make_partition(g, parts, Rational(1, 4));
    auto text = rp.to_text();
    auto back = RegularPartition::from_text(text, g);
    CHECK(back.labels == rp.labels);
    CHECK(back.bad_count == rp.bad_count);
    for (int i = 0; i < rp.k(); ++i) CHECK(back.parts[std::size_t(i)] == rp.parts[std::size_t(i)]);

    // tampered text must fail the recount
    auto broken = text;
    auto pos = broken.find("bad_count");
    broken.replace(pos, std::string("bad_count").size(), "bad_count"); // no-op guard
    pos = broken.find("membership 0");
    if (pos != std::string::npos) {
        CHECK_THROWS_AS(RegularPartition::from_text(
                            broken.replace(pos + 11, 1, "1"), g),
                        ParseError);
    }
}

TEST_CASE("afn_partition argument errors") {
    Graph g = empty_graph(10);
    auto fam = FamilySpec::builtin_p4();
    CHECK_THROWS_AS(afn_partition(g, fam, Rational(1, 10), 0, 10, 1), ArgumentError);
    CHECK_THROWS_AS(afn_partition(g, fam, Rational(1, 10), 5, 20, 1), ArgumentError);
    auto k3fam =
        FamilySpec::from_members("k3", {{"K3", complete_graph(3)}}, Rational(1, 2), Rational(1));
    CHECK_THROWS_AS(afn_partition(g, k3fam, Rational(1, 10), 2, 10, 1), ArgumentError);
}
