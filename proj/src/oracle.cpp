#include "homog/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "homog/cograph.hpp"
#include "homog/errors.hpp"
#include "homog/rng.hpp"

namespace homog {
namespace oracle {

namespace {

const char* kind_word(GeneratorSpec::Kind k) {
    switch (k) {
    case GeneratorSpec::Kind::Cograph: return "cograph";
    case GeneratorSpec::Kind::Split: return "split";
    case GeneratorSpec::Kind::Gnp: return "gnp";
    case GeneratorSpec::Kind::Planted: return "planted";
    case GeneratorSpec::Kind::TwoCliques: return "two_cliques";
    }
    return "?";
}

GeneratorSpec::Kind kind_from(const std::string& w) {
    if (w == "cograph") return GeneratorSpec::Kind::Cograph;
    if (w == "split") return GeneratorSpec::Kind::Split;
    if (w == "gnp") return GeneratorSpec::Kind::Gnp;
    if (w == "planted") return GeneratorSpec::Kind::Planted;
    if (w == "two_cliques") return GeneratorSpec::Kind::TwoCliques;
    throw ParseError("unknown generator kind '" + w + "'");
}

} // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& line) {
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head != "instance") throw ParseError("generator record must start with 'instance'");
    GeneratorSpec s;
    std::string kind;
    ls >> kind;
    s.kind = kind_from(kind);
    std::string key;
    bool have_n = false;
    while (ls >> key) {
        std::string v;
        if (!(ls >> v)) throw ParseError("generator record: key '" + key + "' without value");
        if (key == "n") {
            s.n = std::stoi(v);
            have_n = true;
        } else if (key == "p") {
            s.p = Rational::parse(v);
        } else if (key == "plant") {
            s.plant_size = std::stoi(v);
        } else if (key == "plant_density") {
            s.plant_density = Rational::parse(v);
        } else if (key == "seed") {
            s.seed = std::stoull(v);
        } else {
            throw ParseError("generator record: unknown key '" + key + "'");
        }
    }
    if (!have_n || s.n < 1) throw ParseError("generator record missing n");
    if (s.p < Rational(0) || s.p > Rational(1))
        throw ParseError("generator record: p outside [0,1]");
    if (s.kind == Kind::Planted && (s.plant_size < 2 || s.plant_size > s.n))
        throw ParseError("generator record: plant size must be in [2, n]");
    return s;
}

std::string GeneratorSpec::to_line() const {
    std::ostringstream out;
    out << "instance " << kind_word(kind) << " n " << n;
    if (kind == Kind::Gnp || kind == Kind::Split || kind == Kind::Planted)
        out << " p " << p.str();
    if (kind == Kind::Planted)
        out << " plant " << plant_size << " plant_density " << plant_density.str();
    out << " seed " << seed;
    return out.str();
}

namespace {

// random cotree: recursive union/join over a random composition
void cotree_edges(Rng& rng, int base, int count, bool join_here,
                  std::vector<std::pair<int, int>>& edges) {
    if (count == 1) return;
    int max_children = std::min(count, 4);
    int t = 2 + (max_children > 2 ? int(rng.below(uint64_t(max_children - 1))) : 0);
    // composition of `count` into t positive parts
    std::vector<int> cuts;
    std::vector<int> avail(std::size_t(count - 1));
    std::iota(avail.begin(), avail.end(), 1);
    rng.shuffle(avail);
    cuts.assign(avail.begin(), avail.begin() + (t - 1));
    cuts.push_back(0);
    cuts.push_back(count);
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::pair<int, int>> spans;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        spans.emplace_back(base + cuts[i], cuts[i + 1] - cuts[i]);
    if (join_here)
        for (std::size_t i = 0; i < spans.size(); ++i)
            for (std::size_t j = i + 1; j < spans.size(); ++j)
                for (int u = spans[i].first; u < spans[i].first + spans[i].second; ++u)
                    for (int v = spans[j].first; v < spans[j].first + spans[j].second; ++v)
                        edges.emplace_back(u, v);
    for (auto [b, c] : spans) cotree_edges(rng, b, c, !join_here, edges);
}

std::vector<std::pair<int, int>> relabel(const std::vector<std::pair<int, int>>& edges, int n,
                                         Rng& rng) {
    std::vector<int> perm(std::size_t(n), 0);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges)
        out.emplace_back(perm[std::size_t(u)], perm[std::size_t(v)]);
    return out;
}

} // namespace

Graph generate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw ArgumentError("generate: n must be positive");
    Rng rng(mix_seed(spec.seed, 0x47454EULL, uint64_t(spec.kind)));
    int n = spec.n;
    switch (spec.kind) {
    case GeneratorSpec::Kind::Cograph: {
        std::vector<std::pair<int, int>> edges;
        bool join_root = rng.below(2) == 1;
        cotree_edges(rng, 0, n, join_root, edges);
        Graph g = Graph::from_edges(n, relabel(edges, n, rng));
        auto ct = cotree_analyze(g);
        if (!ct.is_cograph) throw ViolationError("generate: cotree output failed recognition");
        return g;
    }
    case GeneratorSpec::Kind::Split: {
        int a = 1 + int(rng.below(uint64_t(std::max(1, n - 1))));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a; ++u)
            for (int v = u + 1; v < a; ++v) edges.emplace_back(u, v);
        for (int u = 0; u < a; ++u)
            for (int v = a; v < n; ++v)
                if (rng.chance(spec.p.num(), spec.p.den())) edges.emplace_back(u, v);
        return Graph::from_edges(n, relabel(edges, n, rng));
    }
    case GeneratorSpec::Kind::Gnp: {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(spec.p.num(), spec.p.den())) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
    case GeneratorSpec::Kind::Planted: {
        if (spec.plant_size < 2 || spec.plant_size > n)
            throw ArgumentError("generate: plant size must be in [2, n]");
        std::vector<int> ids(std::size_t(n), 0);
        std::iota(ids.begin(), ids.end(), 0);
        rng.shuffle(ids);
        std::vector<char> in_plant(std::size_t(n), 0);
        for (int i = 0; i < spec.plant_size; ++i) in_plant[std::size_t(ids[std::size_t(i)])] = 1;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool both = in_plant[std::size_t(u)] && in_plant[std::size_t(v)];
                const Rational& pr = both ? spec.plant_density : spec.p;
                if (pr.num() > 0 && rng.chance(pr.num(), pr.den())) edges.emplace_back(u, v);
            }
        return Graph::from_edges(n, edges);
    }
    case GeneratorSpec::Kind::TwoCliques: {
        int a = n / 2;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a; ++u)
            for (int v = u + 1; v < a; ++v) edges.emplace_back(u, v);
        for (int u = a; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, relabel(edges, n, rng));
    }
    }
    throw ArgumentError("generate: unknown kind");
}

std::vector<GeneratorSpec> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus manifest: " + path);
    std::vector<GeneratorSpec> specs;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char c : line)
            if (!isspace((unsigned char)c)) blank = false;
        if (blank) continue;
        specs.push_back(GeneratorSpec::parse(line));
    }
    return specs;
}

BruteBest brute_best_homogeneous(const Graph& g, const Rational& eps, int cap) {
    int n = g.n();
    if (n > cap)
        throw CapacityError("brute_best_homogeneous: n=" + std::to_string(n) + " above cap " +
                            std::to_string(cap));
    // own adjacency copy; no shared counting helpers
    std::vector<uint32_t> adj(std::size_t(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[std::size_t(u)] |= uint32_t(1) << v;
        adj[std::size_t(v)] |= uint32_t(1) << u;
    }
    for (int size = n; size >= 2; --size) {
        std::vector<int> idx(std::size_t(size), 0);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            long long e = 0;
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j)
                    if ((adj[std::size_t(idx[std::size_t(i)])] >> idx[std::size_t(j)]) & 1) ++e;
            long long pairs = (long long)size * (size - 1) / 2;
            bool sparse = (__int128)e * eps.den() <= (__int128)eps.num() * pairs;
            bool dense =
                (__int128)e * eps.den() >= (__int128)(eps.den() - eps.num()) * pairs;
            if (sparse || dense) {
                BruteBest b;
                b.size = size;
                std::vector<int> mem(idx.begin(), idx.end());
                b.witness = VertexSet::of(n, mem);
                return b;
            }
            int i = size - 1;
            while (i >= 0 && idx[std::size_t(i)] == n - size + i) --i;
            if (i < 0) break;
            ++idx[std::size_t(i)];
            for (int j = i + 1; j < size; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
        }
    }
    BruteBest b;
    b.size = std::min(n, 1);
    b.witness = VertexSet(n);
    if (n >= 1) b.witness.add(0);
    return b;
}

VerifyReport verify_outcome(const Graph& g, const Outcome& outcome, const Rational& eps) {
    VerifyReport rep;
    int n = g.n();

    // independent adjacency rebuild: all recounts below use this matrix only
    std::vector<std::vector<char>> adj(std::size_t(n), std::vector<char>(std::size_t(n), 0));
    long long m = 0;
    for (auto [u, v] : g.edges()) {
        adj[std::size_t(u)][std::size_t(v)] = 1;
        adj[std::size_t(v)][std::size_t(u)] = 1;
        ++m;
    }

    if (outcome.digest_n != n)
        rep.fail("digest mismatch: certificate is for n=" + std::to_string(outcome.digest_n) +
                 ", graph has n=" + std::to_string(n));
    if (outcome.digest_m != m)
        rep.fail("digest mismatch: certificate counts m=" + std::to_string(outcome.digest_m) +
                 ", graph has m=" + std::to_string(m));
    if (outcome.params.eps != eps)
        rep.fail("eps mismatch: certificate carries " + outcome.params.eps.str() +
                 ", verification asked for " + eps.str());
    if (!rep.pass) return rep;

    if (outcome.is_certificate()) {
        const auto& cert = outcome.certificate();
        auto mem = cert.x.members();
        if (int(mem.size()) != cert.x.size) {
            rep.fail("certificate set size disagrees with membership");
            return rep;
        }
        if (cert.x.size < 2) {
            rep.fail("certificate set has fewer than 2 vertices");
            return rep;
        }
        long long e = 0;
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j)
                if (adj[std::size_t(mem[i])][std::size_t(mem[j])]) ++e;
        long long pairs = (long long)cert.x.size * (cert.x.size - 1) / 2;
        if (e != cert.density.num || pairs != cert.density.den) {
            rep.fail("density recount mismatch: recounted " + std::to_string(e) + "/" +
                     std::to_string(pairs) + ", certificate claims " + cert.density.str());
            return rep;
        }
        bool sparse_ok = (__int128)e * eps.den() <= (__int128)eps.num() * pairs;
        bool dense_ok = (__int128)e * eps.den() >= (__int128)(eps.den() - eps.num()) * pairs;
        if (cert.side == Side::Sparse && !sparse_ok)
            rep.fail("sparse-side certificate fails d(X) <= eps on recount");
        if (cert.side == Side::Dense && !dense_ok)
            rep.fail("dense-side certificate fails d(X) >= 1-eps on recount");
        // delta_actual = |X|/n, cross-multiplied
        if ((__int128)cert.delta_actual.num() * n != (__int128)cert.delta_actual.den() * cert.x.size)
            rep.fail("delta_actual disagrees with |X|/n");
        if (rep.pass)
            rep.notes.push_back("homogeneous certificate verified: |X|=" +
                                std::to_string(cert.x.size) + ", d(X)=" + cert.density.str());
        return rep;
    }

    const auto& ev = outcome.evidence();
    int pm = ev.pattern.n();
    std::vector<std::pair<int, int>> pedges = ev.pattern.edges();
    if (ev.copies.empty()) rep.fail("evidence lists no copies");
    std::set<std::vector<int>> distinct;
    for (std::size_t ci = 0; ci < ev.copies.size(); ++ci) {
        const auto& image = ev.copies[ci].image;
        if (int(image.size()) != pm) {
            rep.fail("copy #" + std::to_string(ci) + " has wrong arity");
            continue;
        }
        bool ok = true;
        for (int i = 0; i < pm && ok; ++i) {
            if (image[std::size_t(i)] < 0 || image[std::size_t(i)] >= n) ok = false;
            for (int j = i + 1; j < pm && ok; ++j) {
                if (image[std::size_t(i)] == image[std::size_t(j)]) ok = false;
            }
        }
        if (ok) {
            // induced condition, edge by edge, from the rebuilt matrix
            std::vector<std::vector<char>> pe(std::size_t(pm), std::vector<char>(std::size_t(pm), 0));
            for (auto [u, v] : pedges) pe[std::size_t(u)][std::size_t(v)] = pe[std::size_t(v)][std::size_t(u)] = 1;
            for (int i = 0; i < pm && ok; ++i)
                for (int j = i + 1; j < pm && ok; ++j)
                    if (pe[std::size_t(i)][std::size_t(j)] !=
                        adj[std::size_t(image[std::size_t(i)])][std::size_t(image[std::size_t(j)])])
                        ok = false;
        }
        if (!ok) {
            rep.fail("copy #" + std::to_string(ci) + " fails the induced condition");
            continue;
        }
        std::vector<int> key = image;
        std::sort(key.begin(), key.end());
        if (!distinct.insert(key).second)
            rep.fail("copy #" + std::to_string(ci) + " repeats an earlier vertex set");
    }
    if (ev.derivation) {
        const auto& d = *ev.derivation;
        if (int(d.part_indices.size()) != pm || int(d.part_sizes.size()) != pm ||
            (long long)d.pair_densities.size() != (long long)pm * (pm - 1) / 2) {
            rep.fail("bound derivation has wrong arity");
        } else {
            unsigned __int128 prod = 1;
            for (long long s : d.part_sizes) {
                if (s < 1) rep.fail("bound derivation lists an empty part");
                prod *= (unsigned __int128)std::max<long long>(1, s);
            }
            long long expect = (long long)((prod + 1) / 2);
            if (expect != ev.claimed_lower_bound)
                rep.fail("claimed lower bound " + std::to_string(ev.claimed_lower_bound) +
                         " differs from ceil(prod/2)=" + std::to_string(expect));
            // each pattern pair must sit on the homogeneous side matching the
            // pattern's edge/non-edge, at the gamma recorded in the certificate
            const Rational& gm = outcome.params.gamma;
            std::vector<std::vector<char>> pe(std::size_t(pm), std::vector<char>(std::size_t(pm), 0));
            for (auto [u, v] : pedges) pe[std::size_t(u)][std::size_t(v)] = pe[std::size_t(v)][std::size_t(u)] = 1;
            std::size_t t = 0;
            for (int i = 0; i < pm; ++i)
                for (int j = i + 1; j < pm; ++j, ++t) {
                    const Density& dd = d.pair_densities[t];
                    if (dd.den != d.part_sizes[std::size_t(i)] * d.part_sizes[std::size_t(j)])
                        rep.fail("derivation density denominator mismatch at pattern pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
                    bool high = (__int128)dd.num * gm.den() >= (__int128)(gm.den() - gm.num()) * dd.den;
                    bool low = (__int128)dd.num * gm.den() <= (__int128)gm.num() * dd.den;
                    if (pe[std::size_t(i)][std::size_t(j)] ? !high : !low)
                        rep.fail("derivation density at pattern pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") does not match the pattern at gamma");
                }
        }
    } else {
        if (ev.claimed_lower_bound > (long long)distinct.size())
            rep.fail("claimed lower bound exceeds the number of verified distinct copies and no "
                     "derivation is given");
    }
    if (rep.pass)
        rep.notes.push_back("evidence verified: " + std::to_string(distinct.size()) +
                            " distinct induced copies of " + ev.pattern_name +
                            ", claimed lower bound " + std::to_string(ev.claimed_lower_bound));
    return rep;
}

} // namespace oracle
} // namespace homog
