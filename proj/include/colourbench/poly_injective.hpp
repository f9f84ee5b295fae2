#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colourbench/colouring.hpp"
#include "colourbench/graph.hpp"
#include "colourbench/matching.hpp"

namespace colourbench {

/// The input is outside the class an algorithm was written for.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct InjectiveSolution {
    int colours = 0;
    Colouring colouring;
    std::string route;  // which algorithm produced the colouring
};

struct TwoInjectiveSolution {
    int colours = 0;
    Colouring colouring;
    /// The size-2 colour classes; colours == pairs.size() + (n - 2 * pairs.size()).
    Matching pairs;
};

/// Optimal injective colouring among those whose classes have at most two
/// vertices: two vertices may share a colour iff they are at distance at
/// least 3, and a maximum matching of that compatibility graph gives the classes.
TwoInjectiveSolution optimal_2injective(const Graph& g);

/// Same, restricted to colouring `vertices` while distances are still
/// measured in g. The colouring is indexed by vertices of g; vertices outside
/// the subset get colour -1.
TwoInjectiveSolution optimal_2injective(const Graph& g, const std::vector<Vertex>& vertices);

/// Structure around an independent triple U = {u1, u2, u3}: T[0] holds the
/// vertices with no neighbour in U, T[i] those adjacent to u_i only.
/// grade[v] counts the other T-sets (among T[1..3]) that v has a neighbour in;
/// it is -1 for U and T[0].
struct TriplePartition {
    std::array<Vertex, 3> u{};
    std::array<std::vector<Vertex>, 4> t;
    std::vector<int> grade;
    std::vector<Vertex> s;                      // grade-2 vertices
    std::array<std::vector<Vertex>, 3> free0;  // grade-0 vertices of T[1], T[2], T[3]
};

/// nullopt unless U is independent and every other vertex has at most one
/// neighbour in U. With `t_cliques`, also requires T[0] empty and each T[i] a clique.
std::optional<TriplePartition> triple_partition(const Graph& g, std::array<Vertex, 3> u, bool t_cliques);

InjectiveSolution injective_p4free(const Graph& g);
InjectiveSolution injective_p1p4free(const Graph& g);
InjectiveSolution injective_4p1free(const Graph& g);
InjectiveSolution injective_2p1p3free(const Graph& g);
InjectiveSolution injective_3p1p2free(const Graph& g);

/// Routes an H-free graph to the strongest applicable algorithm, for H an
/// induced subgraph of P1+P4, 2P1+P3, 3P1+P2 or 4P1.
InjectiveSolution injective_dispatch(const Graph& g, const Graph& h);

}  // namespace colourbench
