#include <fstream>
#include <sstream>

#include "homog/errors.hpp"
#include "homog/pipeline.hpp"

namespace homog {

namespace {

const char* side_word(Side s) { return s == Side::Dense ? "DENSE" : "SPARSE"; }

const char* branch_word(Branch b) {
    switch (b) {
    case Branch::PartitionEvidence: return "partition_evidence";
    case Branch::Case1: return "case1";
    case Branch::Case2: return "case2";
    }
    return "?";
}

} // namespace

std::string Outcome::to_text() const {
    std::ostringstream out;
    out << "homog certificate v1\n";
    out << "digest n " << digest_n << " m " << digest_m << "\n";
    out << "eps " << params.eps.str() << "\n";
    out << "family " << family_name << "\n";
    out << "branch " << (is_certificate() ? "homogeneous" : "evidence") << "\n";
    out << "param gamma " << params.gamma.str() << "\n";
    out << "param k0 " << params.k0 << "\n";
    out << "param k_max " << params.k_max << "\n";
    out << "param f " << params.f << "\n";
    out << "param c " << params.c.str() << "\n";
    out << "param c_const " << params.c_const.str() << "\n";
    out << "param clique_target " << params.clique_target << "\n";
    out << "param b_target " << params.b_target.str() << "\n";
    out << "trace k " << trace.k << "\n";
    out << "trace bad_count " << trace.bad_count << "\n";
    out << "trace a_size " << trace.a_size << "\n";
    out << "trace b_size " << trace.b_size << "\n";
    out << "trace side " << (trace.side_meaningful ? side_word(trace.side) : "NA") << "\n";
    out << "trace branch " << branch_word(trace.branch) << "\n";
    out << "trace rounds " << trace.rounds << "\n";
    out << "trace delta_promised " << trace.delta_promised.str() << "\n";
    out << "trace chain_ok " << (trace.chain_ok ? 1 : 0) << "\n";
    out << "trace b_meets_target " << (trace.b_meets_target ? 1 : 0) << "\n";
    if (is_certificate()) {
        const auto& cert = certificate();
        out << "side " << side_word(cert.side) << "\n";
        out << "density " << cert.density.num << "/" << cert.density.den << "\n";
        out << "delta_actual " << cert.delta_actual.str() << "\n";
        out << "x_size " << cert.x.size << "\n";
        out << "parts_used";
        for (int p : cert.parts_used) out << " " << p;
        out << "\nx";
        for (int v : cert.x.members()) out << " " << v;
        out << "\n";
    } else {
        const auto& ev = evidence();
        out << "pattern " << ev.pattern_name << "\n";
        out << "pattern_n " << ev.pattern.n() << "\n";
        for (auto [u, v] : ev.pattern.edges()) out << "pattern_edge " << u << " " << v << "\n";
        out << "claimed_lower_bound " << ev.claimed_lower_bound << "\n";
        if (ev.derivation) {
            out << "derivation_parts";
            for (int p : ev.derivation->part_indices) out << " " << p;
            out << "\nderivation_sizes";
            for (long long s : ev.derivation->part_sizes) out << " " << s;
            out << "\nderivation_densities";
            for (const auto& d : ev.derivation->pair_densities) out << " " << d.num << "/" << d.den;
            out << "\n";
        }
        out << "copies " << ev.copies.size() << "\n";
        for (const auto& c : ev.copies) {
            out << "copy";
            for (int v : c.image) out << " " << v;
            out << "\n";
        }
    }
    out << "end\n";
    return out.str();
}

namespace {

Density parse_density(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) throw ParseError("bad density token '" + tok + "'");
    Density d;
    d.num = std::stoll(tok.substr(0, slash));
    d.den = std::stoll(tok.substr(slash + 1));
    if (d.den <= 0) throw ParseError("bad density token '" + tok + "'");
    return d;
}

} // namespace

Outcome Outcome::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Outcome o;
    bool have_header = false, have_digest = false, have_branch = false, have_end = false;
    bool branch_homog = false;
    HomogeneousSetCertificate cert;
    InducedCopyEvidence ev;
    int pattern_n = -1;
    std::vector<std::pair<int, int>> pattern_edges;
    long long copies_expected = -1;
    std::vector<int> x_members;
    BoundDerivation deriv;
    bool have_deriv = false;

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "homog") {
            std::string w1, w2;
            ls >> w1 >> w2;
            if (w1 != "certificate" || w2 != "v1")
                throw ParseError("unrecognized certificate header");
            have_header = true;
        } else if (key == "digest") {
            std::string nk, mk;
            ls >> nk >> o.digest_n >> mk >> o.digest_m;
            if (nk != "n" || mk != "m") throw ParseError("bad digest line");
            have_digest = true;
        } else if (key == "eps") {
            std::string v;
            ls >> v;
            o.params.eps = Rational::parse(v);
        } else if (key == "family") {
            ls >> o.family_name;
        } else if (key == "branch") {
            std::string b;
            ls >> b;
            if (b == "homogeneous")
                branch_homog = true;
            else if (b == "evidence")
                branch_homog = false;
            else
                throw ParseError("bad branch '" + b + "'");
            have_branch = true;
        } else if (key == "param") {
            std::string name, v;
            ls >> name >> v;
            if (name == "gamma") o.params.gamma = Rational::parse(v);
            else if (name == "k0") o.params.k0 = std::stoll(v);
            else if (name == "k_max") o.params.k_max = std::stoll(v);
            else if (name == "f") o.params.f = std::stoi(v);
            else if (name == "c") o.params.c = Rational::parse(v);
            else if (name == "c_const") o.params.c_const = Rational::parse(v);
            else if (name == "clique_target") o.params.clique_target = std::stoll(v);
            else if (name == "b_target") o.params.b_target = Rational::parse(v);
            else throw ParseError("unknown param '" + name + "'");
        } else if (key == "trace") {
            std::string name, v;
            ls >> name >> v;
            if (name == "k") o.trace.k = std::stoll(v);
            else if (name == "bad_count") o.trace.bad_count = std::stoll(v);
            else if (name == "a_size") o.trace.a_size = std::stoll(v);
            else if (name == "b_size") o.trace.b_size = std::stoll(v);
            else if (name == "side") {
                if (v == "NA") o.trace.side_meaningful = false;
                else {
                    o.trace.side_meaningful = true;
                    o.trace.side = (v == "DENSE") ? Side::Dense : Side::Sparse;
                }
            } else if (name == "branch") {
                if (v == "partition_evidence") o.trace.branch = Branch::PartitionEvidence;
                else if (v == "case1") o.trace.branch = Branch::Case1;
                else if (v == "case2") o.trace.branch = Branch::Case2;
                else throw ParseError("bad trace branch '" + v + "'");
            } else if (name == "rounds") o.trace.rounds = std::stoi(v);
            else if (name == "delta_promised") o.trace.delta_promised = Rational::parse(v);
            else if (name == "chain_ok") o.trace.chain_ok = (v == "1");
            else if (name == "b_meets_target") o.trace.b_meets_target = (v == "1");
            else throw ParseError("unknown trace field '" + name + "'");
        } else if (key == "side") {
            std::string v;
            ls >> v;
            cert.side = (v == "DENSE") ? Side::Dense : Side::Sparse;
        } else if (key == "density") {
            std::string v;
            ls >> v;
            cert.density = parse_density(v);
        } else if (key == "delta_actual") {
            std::string v;
            ls >> v;
            cert.delta_actual = Rational::parse(v);
        } else if (key == "x_size") {
            int sz;
            ls >> sz;
            cert.x.size = sz; // rebuilt below; cross-checked
        } else if (key == "parts_used") {
            int p;
            while (ls >> p) cert.parts_used.push_back(p);
        } else if (key == "x") {
            int v;
            while (ls >> v) x_members.push_back(v);
        } else if (key == "pattern") {
            ls >> ev.pattern_name;
        } else if (key == "pattern_n") {
            ls >> pattern_n;
        } else if (key == "pattern_edge") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("bad pattern_edge line");
            pattern_edges.emplace_back(u, v);
        } else if (key == "claimed_lower_bound") {
            ls >> ev.claimed_lower_bound;
        } else if (key == "derivation_parts") {
            have_deriv = true;
            int p;
            while (ls >> p) deriv.part_indices.push_back(p);
        } else if (key == "derivation_sizes") {
            long long s;
            while (ls >> s) deriv.part_sizes.push_back(s);
        } else if (key == "derivation_densities") {
            std::string tok;
            while (ls >> tok) deriv.pair_densities.push_back(parse_density(tok));
        } else if (key == "copies") {
            ls >> copies_expected;
        } else if (key == "copy") {
            InducedCopy c;
            int v;
            while (ls >> v) c.image.push_back(v);
            ev.copies.push_back(std::move(c));
        } else if (key == "end") {
            have_end = true;
        } else {
            throw ParseError("unexpected certificate line: '" + line + "'");
        }
    }
    if (!have_header || !have_digest || !have_branch || !have_end)
        throw ParseError("certificate text incomplete (missing header, digest, branch or end)");

    if (branch_homog) {
        if (o.digest_n < 0 || o.digest_n > (1 << 26)) throw ParseError("digest n out of range");
        int claimed_size = cert.x.size;
        cert.x = VertexSet(int(o.digest_n));
        for (int v : x_members) {
            if (v < 0 || v >= o.digest_n) throw ParseError("certificate vertex out of range");
            cert.x.add(v);
        }
        if (cert.x.size != claimed_size || cert.x.size != int(x_members.size()))
            throw ParseError("certificate x_size disagrees with the membership list");
        o.value = std::move(cert);
    } else {
        if (pattern_n < 1) throw ParseError("evidence missing pattern_n");
        try {
            ev.pattern = Graph::from_edges(pattern_n, pattern_edges);
        } catch (const ArgumentError& e) {
            throw ParseError(std::string("bad evidence pattern: ") + e.what());
        }
        if (copies_expected != (long long)ev.copies.size())
            throw ParseError("evidence copy count disagrees with the list");
        if (have_deriv) ev.derivation = std::move(deriv);
        o.value = std::move(ev);
    }
    return o;
}

Outcome Outcome::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open certificate file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

void Outcome::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write certificate file: " + path);
    out << to_text();
}

} // namespace homog
