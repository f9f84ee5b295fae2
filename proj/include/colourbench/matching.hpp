#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colourbench/graph.hpp"

namespace colourbench {

/// Vertex-disjoint edges of a host graph.
using Matching = std::vector<Edge>;

bool is_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching (Edmonds' blossom algorithm). Edges come out
/// with u < v, sorted.
Matching max_matching(const Graph& g);

/// A perfect matching between the two sides of a balanced bipartite graph in
/// which no two edges induce 2K2. `side` gives 0 or 1 per vertex. Throws
/// std::invalid_argument when g is not bipartite across `side` or the sides
/// differ in size; throws BudgetExhausted past `node_limit` (0 = unlimited).
std::optional<Matching> connected_perfect_matching(const Graph& g, const std::vector<int>& side,
                                                   std::uint64_t node_limit = 0);

inline bool has_connected_matching_n(const Graph& g, const std::vector<int>& side, std::uint64_t node_limit = 0)
{
    return connected_perfect_matching(g, side, node_limit).has_value();
}

}  // namespace colourbench
