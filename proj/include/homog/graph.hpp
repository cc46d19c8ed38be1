#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homog/bitset.hpp"
#include "homog/rational.hpp"

namespace homog {

// Immutable simple undirected graph on vertices 0..n-1, adjacency stored as
// one bitset row per vertex. Symmetry and absence of self-loops are enforced
// at construction.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[std::size_t(u)].test(v); }
    const Bitset& row(int u) const { return adj_[std::size_t(u)]; }
    int degree(int u) const { return adj_[std::size_t(u)].count(); }

    Graph complement() const;

    // Induced subgraph; vertex i of the result is verts[i].
    Graph induced(const std::vector<int>& verts) const;

    std::vector<std::pair<int, int>> edges() const;

    // Edge-list text form: "n <count>" then one "u v" line per edge.
    std::string to_text() const;
    // Accepts the edge-list form or an n-line 0/1 adjacency matrix,
    // auto-detected by the first significant line. '#' starts a comment.
    static Graph from_text(const std::string& text);

    static Graph read_file(const std::string& path);
    void write_file(const std::string& path) const;

    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// A subset of V(G) with its cardinality kept alongside the bits.
struct VertexSet {
    Bitset bits;
    int size = 0;

    VertexSet() = default;
    explicit VertexSet(int n) : bits(n) {}

    static VertexSet of(int n, const std::vector<int>& members);
    static VertexSet full(int n);

    bool contains(int v) const { return bits.test(v); }
    void add(int v) {
        if (!bits.test(v)) {
            bits.set(v);
            ++size;
        }
    }
    std::vector<int> members() const { return bits.to_vector(); }

    bool operator==(const VertexSet& o) const = default;
};

// Exact edge-count / pair-count fraction. Comparisons against rational
// thresholds cross-multiply in integers.
struct Density {
    long long num = 0; // edges counted
    long long den = 1; // pairs available

    Rational value() const { return Rational(num, den); }

    bool le(const Rational& t) const { return cmp_frac(num, den, t.num(), t.den()) <= 0; }
    bool ge(const Rational& t) const { return cmp_frac(num, den, t.num(), t.den()) >= 0; }
    // density >= 1 - t
    bool ge_one_minus(const Rational& t) const {
        return cmp_frac(num, den, t.den() - t.num(), t.den()) >= 0;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Cross density e(u,v) / (|u|*|v|) for disjoint non-empty u, v.
Density pair_density(const Graph& g, const VertexSet& u, const VertexSet& v);

// Internal density e(x) / C(|x|,2) for |x| >= 2.
Density set_density(const Graph& g, const VertexSet& x);

long long count_edges_between(const Graph& g, const VertexSet& u, const VertexSet& v);
long long count_edges_within(const Graph& g, const VertexSet& x);

// Seeded shuffle + round robin; parts tile V(G) with sizes differing by at
// most one (the first n mod k parts are the larger ones).
std::vector<VertexSet> equipartition(const Graph& g, int k, uint64_t seed);

struct Homogeneity {
    bool homogeneous = false;
    bool dense_side = false; // meaningful when homogeneous
    Density density;
};

// d(x) <= eps or d(x) >= 1-eps, with the witnessing density.
Homogeneity is_homogeneous(const Graph& g, const VertexSet& x, const Rational& eps);

// Small named graphs used by families, generators and tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves); // K_{1,leaves}, center = vertex 0

} // namespace homog
