#include "homog/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "homog/errors.hpp"
#include "homog/rng.hpp"

namespace homog {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw ArgumentError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(std::size_t(n), Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + " " +
                                std::to_string(v));
        if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
        if (g.adj_[std::size_t(u)].test(v))
            throw ArgumentError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.adj_[std::size_t(u)].set(v);
        g.adj_[std::size_t(v)].set(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::complement() const {
    Graph g;
    g.n_ = n_;
    g.adj_.reserve(std::size_t(n_));
    for (int u = 0; u < n_; ++u) {
        Bitset row = adj_[std::size_t(u)].complement_within(n_);
        row.reset(u);
        g.adj_.push_back(std::move(row));
    }
    long long pairs = (long long)n_ * (n_ - 1) / 2;
    g.m_ = pairs - m_;
    return g;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    int k = int(verts.size());
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (has_edge(verts[std::size_t(i)], verts[std::size_t(j)])) es.emplace_back(i, j);
    return from_edges(k, es);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(std::size_t(m_));
    for (int u = 0; u < n_; ++u) {
        int v = adj_[std::size_t(u)].next_set(u);
        while (v != -1) {
            es.emplace_back(u, v);
            v = adj_[std::size_t(u)].next_set(v);
        }
    }
    return es;
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out << "n " << n_ << "\n";
    for (auto [u, v] : edges()) out << u << " " << v << "\n";
    return out.str();
}

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!isspace((unsigned char)c)) return true;
    }
    return false;
}

bool looks_like_matrix_row(const std::string& line) {
    bool seen = false;
    for (char c : line) {
        if (c == '0' || c == '1') {
            seen = true;
        } else if (isspace((unsigned char)c)) {
            if (seen) return false; // "0 1" is an edge line, not a matrix row
        } else {
            return false;
        }
    }
    return seen;
}

} // namespace

Graph Graph::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (significant(line)) lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty graph text");

    if (looks_like_matrix_row(lines[0])) {
        std::string first;
        for (char c : lines[0])
            if (!isspace((unsigned char)c)) first.push_back(c);
        int n = int(first.size());
        if (int(lines.size()) < n) throw ParseError("adjacency matrix: missing rows");
        std::vector<std::string> rows;
        for (int i = 0; i < n; ++i) {
            std::string r;
            for (char c : lines[std::size_t(i)])
                if (!isspace((unsigned char)c)) r.push_back(c);
            if (int(r.size()) != n)
                throw ParseError("adjacency matrix row " + std::to_string(i) + " has wrong length");
            rows.push_back(r);
        }
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i) {
            if (rows[std::size_t(i)][std::size_t(i)] != '0')
                throw ParseError("adjacency matrix has a self-loop at " + std::to_string(i));
            for (int j = i + 1; j < n; ++j) {
                if (rows[std::size_t(i)][std::size_t(j)] != rows[std::size_t(j)][std::size_t(i)])
                    throw ParseError("adjacency matrix not symmetric at " + std::to_string(i) +
                                     "," + std::to_string(j));
                if (rows[std::size_t(i)][std::size_t(j)] == '1') es.emplace_back(i, j);
            }
        }
        return from_edges(n, es);
    }

    std::istringstream head(lines[0]);
    std::string tag;
    long long n = -1;
    head >> tag >> n;
    std::string trail;
    if (tag != "n" || n < 0 || (head >> trail))
        throw ParseError("expected 'n <count>' on the first line, got '" + lines[0] + "'");
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        long long u, v;
        if (!(ls >> u >> v) || (ls >> trail))
            throw ParseError("bad edge line: '" + lines[i] + "'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range on line: '" + lines[i] + "'");
        es.emplace_back(int(u), int(v));
    }
    try {
        return from_edges(int(n), es);
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("invalid edge list: ") + e.what());
    }
}

Graph Graph::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

void Graph::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write graph file: " + path);
    out << to_text();
}

VertexSet VertexSet::of(int n, const std::vector<int>& members) {
    VertexSet s(n);
    for (int v : members) {
        if (v < 0 || v >= n) throw ArgumentError("vertex out of range: " + std::to_string(v));
        s.add(v);
    }
    return s;
}

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    s.bits.set_all();
    s.size = n;
    return s;
}

long long count_edges_between(const Graph& g, const VertexSet& u, const VertexSet& v) {
    long long e = 0;
    // iterate over the smaller side
    const VertexSet& a = u.size <= v.size ? u : v;
    const VertexSet& b = u.size <= v.size ? v : u;
    a.bits.for_each([&](int w) { e += g.row(w).and_count(b.bits); });
    return e;
}

long long count_edges_within(const Graph& g, const VertexSet& x) {
    long long twice = 0;
    x.bits.for_each([&](int w) { twice += g.row(w).and_count(x.bits); });
    return twice / 2;
}

Density pair_density(const Graph& g, const VertexSet& u, const VertexSet& v) {
    if (u.size == 0 || v.size == 0) throw ArgumentError("pair_density: empty side");
    if (u.bits.intersects(v.bits)) throw ArgumentError("pair_density: sides overlap");
    Density d;
    d.num = count_edges_between(g, u, v);
    d.den = (long long)u.size * v.size;
    return d;
}

Density set_density(const Graph& g, const VertexSet& x) {
    if (x.size < 2) throw ArgumentError("set_density: need at least 2 vertices");
    Density d;
    d.num = count_edges_within(g, x);
    d.den = (long long)x.size * (x.size - 1) / 2;
    return d;
}

std::vector<VertexSet> equipartition(const Graph& g, int k, uint64_t seed) {
    int n = g.n();
    if (k < 1 || k > n) throw ArgumentError("equipartition: need 1 <= k <= n");
    std::vector<int> order(std::size_t(n), 0);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(mix_seed(seed, 0x45515054ULL));
    rng.shuffle(order);
    auto parts = std::vector<VertexSet>(std::size_t(k), VertexSet(n));
    for (int i = 0; i < n; ++i) parts[std::size_t(i % k)].add(order[std::size_t(i)]);
    return parts;
}

Homogeneity is_homogeneous(const Graph& g, const VertexSet& x, const Rational& eps) {
    if (eps <= Rational(0) || eps >= Rational(1, 2))
        throw ArgumentError("is_homogeneous: eps must be in (0, 1/2)");
    Homogeneity h;
    h.density = set_density(g, x);
    if (h.density.le(eps)) {
        h.homogeneous = true;
        h.dense_side = false;
    } else if (h.density.ge_one_minus(eps)) {
        h.homogeneous = true;
        h.dense_side = true;
    }
    return h;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::from_edges(a + b, es);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
}

} // namespace homog
