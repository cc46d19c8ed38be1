#pragma once

#include <array>
#include <optional>
#include <vector>

#include "homog/graph.hpp"

namespace homog {

// Recursive component / co-component decomposition. Succeeds exactly on
// graphs with no induced 4-vertex path; on failure the offending path is
// returned instead.
struct CotreeResult {
    bool is_cograph = false;
    std::array<int, 4> p4{-1, -1, -1, -1}; // induced path a-b-c-d when !is_cograph
    std::vector<int> max_clique;           // valid when is_cograph
    std::vector<int> max_independent;      // valid when is_cograph
};

CotreeResult cotree_analyze(const Graph& g);

// First induced 4-path found under the decomposition order, or nullopt.
std::optional<std::array<int, 4>> find_induced_p4(const Graph& g);

} // namespace homog
