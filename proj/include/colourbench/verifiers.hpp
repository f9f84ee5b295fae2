#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "colourbench/colouring.hpp"
#include "colourbench/graph.hpp"

namespace colourbench {

/// The colour map does not cover every vertex (or edge), or uses a negative colour.
class NotTotalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Why a colouring fails a discipline. The witness alone exhibits the failure:
///  - improper_edge: {u, v}, adjacent and equally coloured;
///  - bichromatic_cycle: the cycle's vertices in order, two alternating colours;
///  - bichromatic_p4: a 4-vertex path a-b-c-d using two colours;
///  - repeated_neighbour_colour: {x, centre, y}, x and y equally coloured
///    neighbours of centre.
/// For edge colourings the witness lists edge ids.
struct Violation {
    enum class Kind { improper_edge, bichromatic_cycle, bichromatic_p4, repeated_neighbour_colour };

    Kind kind = Kind::improper_edge;
    std::vector<int> witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view to_string(Violation::Kind k);
std::string describe(const Violation& v);

/// nullopt when `c` is a valid colouring of `g` under `p`.
std::optional<Violation> verify(const Graph& g, const Colouring& c, PropertyKind p);

inline bool is_valid(const Graph& g, const Colouring& c, PropertyKind p)
{
    return !verify(g, c, p).has_value();
}

/// True iff the witness, read against `g` and `c`, really violates `p`.
bool witness_holds(const Graph& g, const Colouring& c, const Violation& v);

/// Checks an edge colouring by colouring the line graph. A second, direct
/// checker working on bichromatic edge components runs alongside; a
/// disagreement between the two throws std::logic_error.
std::optional<Violation> verify_edge(const Multigraph& m, const EdgeColouring& c, PropertyKind p);

/// Direct edge-space check: every two-colour edge subgraph has maximum degree
/// two, so its components are paths and cycles, and each discipline becomes a
/// bound on component shape.
bool edge_colouring_ok_direct(const Multigraph& m, const EdgeColouring& c, PropertyKind p);

/// Star condition by the shape of two-class unions: every union must be a
/// forest of stars. Used to cross-check the 4-vertex-path formulation in verify().
bool star_by_components(const Graph& g, const Colouring& c);

/// The two definitions of an injective colouring evaluated independently.
struct InjectiveDefinitions {
    bool by_class_unions = false;   // proper, and every two-class union induces sP1+tP2
    bool by_neighbourhoods = false; // proper, and every open neighbourhood is rainbow
    bool agree() const noexcept { return by_class_unions == by_neighbourhoods; }
};

InjectiveDefinitions injective_definitions_agree(const Graph& g, const Colouring& c);

}  // namespace colourbench
