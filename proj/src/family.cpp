#include "homog/family.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "homog/errors.hpp"
#include "homog/induced.hpp"

namespace homog {

namespace {

bool two_colorable(const Graph& g) {
    int n = g.n();
    std::vector<int> color(std::size_t(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[std::size_t(s)] != -1) continue;
        color[std::size_t(s)] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            bool bad = false;
            g.row(u).for_each([&](int v) {
                if (color[std::size_t(v)] == -1) {
                    color[std::size_t(v)] = 1 - color[std::size_t(u)];
                    queue.push_back(v);
                } else if (color[std::size_t(v)] == color[std::size_t(u)]) {
                    bad = true;
                }
            });
            if (bad) return false;
        }
    }
    return true;
}

bool split_by_search(const Graph& g) {
    int n = g.n();
    if (n > 20) throw CapacityError("split check: graph too large for exhaustive search");
    std::vector<uint32_t> rows(std::size_t(n), 0);
    for (auto [u, v] : g.edges()) {
        rows[std::size_t(u)] |= uint32_t(1) << v;
        rows[std::size_t(v)] |= uint32_t(1) << u;
    }
    uint32_t all = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    for (uint32_t mask = 0; ; ++mask) {
        bool clique = true;
        for (int v = 0; v < n && clique; ++v)
            if ((mask >> v) & 1)
                if ((rows[std::size_t(v)] & mask) != (mask ^ (uint32_t(1) << v))) clique = false;
        if (clique) {
            uint32_t rest = all & ~mask;
            bool indep = true;
            for (int v = 0; v < n && indep; ++v)
                if ((rest >> v) & 1)
                    if (rows[std::size_t(v)] & rest) indep = false;
            if (indep) return true;
        }
        if (mask == all) break;
    }
    return false;
}

} // namespace

ClassifyFlags classify(const Graph& f) {
    if (f.n() == 0) throw ArgumentError("classify: empty graph");
    ClassifyFlags flags;
    flags.bipartite = two_colorable(f);
    flags.co_bipartite = two_colorable(f.complement());
    flags.split = split_by_search(f);
    return flags;
}

std::string FamilyValidation::summary() const {
    if (!ok) return "invalid: " + reason;
    std::ostringstream out;
    out << "bipartite=member#" << bipartite_member << " co_bipartite=member#" << co_bipartite_member
        << " split=member#" << split_member;
    return out.str();
}

FamilyValidation FamilySpec::validate() const {
    FamilyValidation v;
    if (members.empty()) {
        v.reason = "family has no members";
        return v;
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& fl = members[i].flags;
        if (fl.bipartite && v.bipartite_member < 0) v.bipartite_member = int(i);
        if (fl.co_bipartite && v.co_bipartite_member < 0) v.co_bipartite_member = int(i);
        if (fl.split && v.split_member < 0) v.split_member = int(i);
    }
    if (v.bipartite_member < 0) {
        v.reason = "no bipartite member";
        return v;
    }
    if (v.co_bipartite_member < 0) {
        v.reason = "no co-bipartite member";
        return v;
    }
    if (v.split_member < 0) {
        v.reason = "no split member";
        return v;
    }
    v.ok = true;
    return v;
}

bool FamilySpec::all_members_p4() const {
    for (const auto& m : members)
        if (m.p4_map.empty()) return false;
    return !members.empty();
}

namespace {

FamilyMember make_member(std::string name, Graph g) {
    if (g.n() < 2) throw ArgumentError("family member '" + name + "' needs >= 2 vertices");
    FamilyMember m;
    m.name = std::move(name);
    m.aut_size = automorphism_count(g);
    m.flags = classify(g);
    if (g.n() == 4) {
        std::vector<int> all{0, 1, 2, 3};
        auto emb = embedding_onto(g, all, path_graph(4));
        if (emb) m.p4_map = *emb; // (*emb)[t] = member vertex at path position t
    }
    m.g = std::move(g);
    return m;
}

} // namespace

FamilySpec FamilySpec::from_members(std::string name,
                                    std::vector<std::pair<std::string, Graph>> ms, Rational c,
                                    Rational c_const) {
    FamilySpec fam;
    fam.name = std::move(name);
    if (c <= Rational(0) || c > Rational(1))
        throw ArgumentError("family exponent c must be in (0, 1]");
    if (c_const <= Rational(0)) throw ArgumentError("family constant must be positive");
    fam.c = c;
    fam.c_const = c_const;
    for (auto& [mname, g] : ms) {
        fam.members.push_back(make_member(mname, std::move(g)));
        fam.f = std::max(fam.f, fam.members.back().g.n());
    }
    return fam;
}

FamilySpec FamilySpec::builtin_p4() {
    return from_members("p4", {{"P4", path_graph(4)}}, Rational(1, 2), Rational(1));
}

FamilySpec FamilySpec::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string fam_name;
    Rational c, c_const(1);
    bool have_c = false;
    std::vector<std::pair<std::string, Graph>> members;

    std::string cur_name;
    int cur_n = -1;
    std::vector<std::pair<int, int>> cur_edges;
    bool in_graph = false;
    int lineno = 0;

    auto flush_graph = [&]() {
        if (!in_graph) return;
        if (cur_n < 0) throw ParseError("graph '" + cur_name + "' missing 'n' line");
        members.emplace_back(cur_name, Graph::from_edges(cur_n, cur_edges));
        cur_edges.clear();
        cur_n = -1;
        in_graph = false;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "family") {
            ls >> fam_name;
        } else if (key == "c") {
            std::string v;
            ls >> v;
            c = Rational::parse(v);
            have_c = true;
        } else if (key == "const") {
            std::string v;
            ls >> v;
            c_const = Rational::parse(v);
        } else if (key == "graph") {
            flush_graph();
            in_graph = true;
            if (!(ls >> cur_name)) throw ParseError("graph without a name at line " + std::to_string(lineno));
        } else if (key == "n") {
            if (!in_graph) throw ParseError("'n' outside a graph block at line " + std::to_string(lineno));
            if (!(ls >> cur_n) || cur_n < 0)
                throw ParseError("bad vertex count at line " + std::to_string(lineno));
        } else if (key == "end") {
            if (!in_graph) throw ParseError("'end' outside a graph block at line " + std::to_string(lineno));
            flush_graph();
        } else {
            // edge line inside a graph block
            if (!in_graph) throw ParseError("unexpected line " + std::to_string(lineno) + ": '" + line + "'");
            int u = -1, v = -1;
            std::istringstream es(key);
            if (!(es >> u) || !(ls >> v))
                throw ParseError("bad edge line " + std::to_string(lineno) + ": '" + line + "'");
            cur_edges.emplace_back(u, v);
        }
    }
    flush_graph();
    if (fam_name.empty()) throw ParseError("family file missing 'family <name>' line");
    if (!have_c) throw ParseError("family file missing 'c <p>/<q>' line");
    if (members.empty()) throw ParseError("family '" + fam_name + "' has no graphs");
    try {
        return from_members(fam_name, std::move(members), c, c_const);
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("invalid family: ") + e.what());
    }
}

FamilySpec FamilySpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open family file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

std::string FamilySpec::to_text() const {
    std::ostringstream out;
    out << "family " << name << "\n";
    out << "c " << c.str() << "\n";
    out << "const " << c_const.str() << "\n";
    for (const auto& m : members) {
        out << "graph " << m.name << "\n";
        out << "n " << m.g.n() << "\n";
        for (auto [u, v] : m.g.edges()) out << u << " " << v << "\n";
        out << "end\n";
    }
    return out.str();
}

FamilySpec resolve_family(const std::string& name_or_path) {
    if (name_or_path == "p4") return FamilySpec::builtin_p4();
    if (std::filesystem::exists(name_or_path)) return FamilySpec::from_file(name_or_path);
    throw ParseError("unknown family '" + name_or_path + "' (not a builtin, not a file)");
}

int neighborhood_vc_dimension(const Graph& g, int cap) {
    int n = g.n();
    if (n > cap)
        throw CapacityError("neighborhood_vc_dimension: n=" + std::to_string(n) +
                            " above brute-force cap " + std::to_string(cap));
    if (n == 0) return 0;
    std::vector<uint32_t> nb(std::size_t(n), 0);
    for (auto [u, v] : g.edges()) {
        nb[std::size_t(u)] |= uint32_t(1) << v;
        nb[std::size_t(v)] |= uint32_t(1) << u;
    }
    // 2^s distinct traces require 2^s distinct neighborhoods-on-S; s can
    // never beat log2(n).
    int best = 0;
    uint32_t top = (n >= 31) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    std::vector<uint32_t> traces;
    for (uint32_t s = 1; s <= top && s != 0; ++s) {
        int size = std::popcount(s);
        if (size <= best) continue;
        if ((1u << size) > uint32_t(n)) continue;
        traces.clear();
        for (int v = 0; v < n; ++v) traces.push_back(nb[std::size_t(v)] & s);
        std::sort(traces.begin(), traces.end());
        traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
        if (traces.size() == (std::size_t(1) << size)) best = size;
    }
    return best;
}

} // namespace homog
