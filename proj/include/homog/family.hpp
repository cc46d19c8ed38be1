#pragma once

#include <string>
#include <vector>

#include "homog/graph.hpp"
#include "homog/rational.hpp"

namespace homog {

struct ClassifyFlags {
    bool bipartite = false;
    bool co_bipartite = false;
    bool split = false;
};

// Bipartite via 2-coloring, co-bipartite via 2-coloring of the complement,
// split via exhaustive clique/independent-set bipartition search.
ClassifyFlags classify(const Graph& f);

struct FamilyMember {
    std::string name;
    Graph g;
    long long aut_size = 1;
    ClassifyFlags flags;
    // When the member is isomorphic to the 4-vertex path: p4_map[t] is the
    // member vertex sitting at path position t. Enables the fast finder.
    std::vector<int> p4_map;
};

struct FamilyValidation {
    bool ok = false;
    std::string reason;
    int bipartite_member = -1;
    int co_bipartite_member = -1;
    int split_member = -1;
    std::string summary() const;
};

struct FamilySpec {
    std::string name;
    std::vector<FamilyMember> members;
    Rational c{1, 2};       // clique-or-independent-set exponent
    Rational c_const{1};    // multiplicative constant
    int f = 0;              // max member order

    static FamilySpec builtin_p4();
    static FamilySpec from_members(std::string name, std::vector<std::pair<std::string, Graph>> ms,
                                   Rational c, Rational c_const);
    static FamilySpec from_file(const std::string& path);
    static FamilySpec from_text(const std::string& text);

    // Passes iff some member is bipartite, some co-bipartite and some split.
    FamilyValidation validate() const;

    bool all_members_p4() const;
    std::string to_text() const;
};

// Resolves a --family argument: a known builtin name or a file path.
FamilySpec resolve_family(const std::string& name_or_path);

// VC dimension of {N(v) : v in V(g)} over V(g) by exhaustive shatter checks.
// Capacity-errors when n exceeds the brute-force cap.
int neighborhood_vc_dimension(const Graph& g, int cap = 16);

} // namespace homog
