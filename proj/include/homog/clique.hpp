#pragma once

#include <vector>

#include "homog/graph.hpp"

namespace homog {

// Clique by minimum-degree elimination on the complement. Guaranteed at
// least n/(avg_complement_degree + 1) vertices.
std::vector<int> greedy_clique(const Graph& g);

// Exact maximum clique, branch and bound with a greedy-colouring bound.
std::vector<int> max_clique_exact(const Graph& g, long long node_budget = 200'000'000);

std::vector<int> max_independent_exact(const Graph& g, long long node_budget = 200'000'000);

bool is_clique(const Graph& g, const std::vector<int>& verts);
bool is_independent(const Graph& g, const std::vector<int>& verts);

} // namespace homog
