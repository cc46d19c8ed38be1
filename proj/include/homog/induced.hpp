#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homog/graph.hpp"

namespace homog {

// A witnessed induced embedding: image[i] is the G-vertex carrying pattern
// vertex i. Edges and non-edges of the pattern must both be preserved.
struct InducedCopy {
    std::vector<int> image;
};

bool verify_induced(const Graph& g, const Graph& pattern, const std::vector<int>& image);

// |Aut(F)| by backtracking; patterns are small.
long long automorphism_count(const Graph& f);

// True iff g[sub] is isomorphic to `pattern` (|sub| == pattern.n()).
bool subset_induces(const Graph& g, const std::vector<int>& sub, const Graph& pattern);

// Some induced embedding of `pattern` onto the vertex set `sub` of g,
// returned as image-by-pattern-vertex; nullopt if none.
std::optional<std::vector<int>> embedding_onto(const Graph& g, const std::vector<int>& sub,
                                               const Graph& pattern);

inline constexpr long long kDefaultExactBudget = 5'000'000; // subsets

// Number of vertex subsets of g inducing a copy of f (equivalently, labeled
// embeddings divided by |Aut(f)|). Throws CapacityError when C(n,|V(f)|)
// exceeds the budget.
long long count_induced_exact(const Graph& g, const Graph& f,
                              long long budget = kDefaultExactBudget);

struct InducedEstimate {
    long long samples = 0;
    long long hits = 0;
    double total_subsets = 0; // C(n, m)
    double point = 0;         // scaled to a count
    double lo = 0, hi = 0;    // 95% interval, scaled
};

InducedEstimate estimate_induced(const Graph& g, const Graph& f, long long samples,
                                 uint64_t seed);

struct CrossCopyResult {
    std::vector<InducedCopy> copies;
    bool partial = false; // retry cap hit before reaching the target
    long long draws = 0;
};

// Samples one tuple per draw, taking as many distinct vertices from each part
// as the assignment maps onto it; keeps verified induced copies, deduplicated
// by vertex set, until `target` copies or 64*target draws.
CrossCopyResult find_cross_copies(const Graph& g, const Graph& pattern,
                                  const std::vector<const VertexSet*>& assignment,
                                  int target, uint64_t seed);

struct BoundDerivation {
    std::vector<int> part_indices;      // by pattern vertex
    std::vector<long long> part_sizes;  // by pattern vertex
    std::vector<Density> pair_densities; // pattern pairs (p,q), p<q, lex
};

struct InducedCopyEvidence {
    std::string pattern_name;
    Graph pattern;
    std::vector<InducedCopy> copies;
    long long claimed_lower_bound = 0;
    std::optional<BoundDerivation> derivation;
};

// C(n, m) clamped to `cap`, so callers can budget-test without overflow.
long long subset_count_capped(long long n, int m, long long cap);

} // namespace homog
