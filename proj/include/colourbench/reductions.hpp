#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "colourbench/colouring.hpp"
#include "colourbench/engine.hpp"
#include "colourbench/graph.hpp"
#include "colourbench/io.hpp"
#include "colourbench/matching.hpp"

namespace colourbench {

/// A gadget together with the elements its forced-colour claim is about.
struct Gadget {
    std::string name;
    int parameter = 0;  // k for edge gadgets, g for the vertex gadget
    PropertyKind property = PropertyKind::proper;
    int k = 0;                  // palette size the claim refers to
    bool edge_gadget = false;   // designated entries are edge ids of `multigraph`
    bool claim_asserted = true; // false where generation is allowed but no claim is made
    Graph graph;
    Multigraph multigraph;
    std::vector<int> designated;
    std::array<Vertex, 2> ends{};  // vertices identified with the endpoints of a source edge
};

/// Acyclic edge gadget on v1..v14 (indices 0..13): simple edges v1v2, v2v4,
/// v3v5, v4v6, v5v7, v7v8, v8v9, v9v11, v10v11, v10v12, v12v13, v13v14 and
/// bundles of k-2 parallel edges v2v3, v4v5, v6v7, v8v10, v11v13. The
/// designated pair is (v1v2, v13v14); the ends are v1 and v14.
Gadget acyclic_edge_gadget(int k);

/// Star edge gadget on v1..v10 (indices 0..9): path edges v1v2, v2v3, v4v5,
/// v6v7, v7v8, bundles of k-2 edges v3v4 and v5v6, pendants v4v9 and v5v10.
/// The designated pair is (v1v2, v7v8); the ends are v1 and v8.
Gadget star_edge_gadget(int k);

/// Star vertex gadget: cycle d_1..d_{12g} (indices 0..12g-1), pendant e_i on
/// d_i (indices 12g..24g-1) and f_i adjacent to e_{3ig} (indices 24g..24g+3).
/// Designated: f_1..f_4. The claim is only asserted for g >= 3.
Gadget star_vertex_gadget(int g);

/// Runs the gadget's forced-colour claim through the exact engine.
ForcedEqualResult check_gadget_claim(const Gadget& gadget, const SearchBudget& budget = {});

/// Graph S' with designated x1, x3 such that every acyclic k-colouring gives
/// x1 and x3 the same colour and joins them by a bichromatic path in every
/// other colour.
struct EqualityGadget {
    Graph s;
    Vertex x1 = 0;
    Vertex x3 = 0;
    int k = 0;
    bool verified = false;
    /// Subdivision vertices removed, as indices into the subdivided F, in removal order.
    std::vector<Vertex> removed;
};

struct EqualityGadgetOptions {
    /// Skip the check that F has no proper 2k(k-1)-colouring.
    bool trust_f = false;
    SearchBudget budget;
};

/// Subdivides F, then removes subdivision vertices in ascending order until
/// the rest is acyclically k-colourable. F defaults to K_{2k(k-1)+1}.
/// Throws std::invalid_argument when F is 2k(k-1)-colourable and
/// BudgetExhausted when a colourability test runs out of budget.
EqualityGadget acyclic_equality_gadget(int k, const std::optional<Graph>& f = std::nullopt,
                                       const EqualityGadgetOptions& options = {});

/// Enumerates acyclic k-colourings of s up to renaming and checks both
/// properties directly. Throws BudgetExhausted.
bool verify_equality_gadget(const Graph& s, Vertex x1, Vertex x3, int k, const SearchBudget& budget = {});

/// Runs verify_equality_gadget on the gadget and records the outcome in `verified`.
bool certify_equality_gadget(EqualityGadget& gadget, const SearchBudget& budget = {});

/// For k >= 3 the same answer from two decisions: s is acyclically
/// k-colourable and s plus a vertex adjacent to x1 and x3 is not.
bool verify_equality_gadget_by_extension(const Graph& s, Vertex x1, Vertex x3, int k,
                                         const SearchBudget& budget = {});

/// How a solution of the output instance becomes a solution of the input.
enum class Recipe {
    representative,  // source element i takes the colour of target element representative[i]
    palette,         // source vertex u takes the index l of the palette vertex coloured like u
    greedy_extend,   // representative, then deleted vertices coloured greedily in reverse order
    matching,        // two-vertex colour classes of the output are the matching edges
};

std::string_view to_string(Recipe r);

struct ReductionResult {
    std::string lemma;
    Graph source;
    PropertyKind source_property = PropertyKind::proper;
    bool source_is_edge_problem = false;
    int source_k = 0;

    std::optional<Graph> graph;
    std::optional<Multigraph> multigraph;
    PropertyKind target_property = PropertyKind::proper;
    bool target_is_edge_problem = false;
    int target_k = 0;

    /// The input was decided "no" during preprocessing; the output is a fixed no-instance.
    bool trivially_no = false;

    /// For each source element (vertex, or edge id for edge problems) the output elements built for it.
    std::vector<std::vector<int>> forward;
    Recipe recipe = Recipe::representative;
    std::vector<int> representative;
    std::vector<Vertex> palette;  // palette recipe: output vertex of colour l
    std::vector<Vertex> deleted;  // greedy_extend: source vertices removed in preprocessing, in order
};

/// Source colouring induced by a valid output colouring; colours are renumbered
/// densely in order of first appearance for the representative recipes.
Colouring back_translate(const ReductionResult& r, const Colouring& target);
EdgeColouring back_translate_edges(const ReductionResult& r, const EdgeColouring& target);
Matching back_translate_matching(const ReductionResult& r, const Colouring& target);

ReductionResult reduce_edgecol_to_acyclic_edgecol(const Graph& g, int k);
ReductionResult reduce_edgecol_to_star_edgecol(const Graph& g, int k);

/// Rotation at each vertex is its adjacency order. Maximum degree at most 4.
ReductionResult reduce_3col_to_star3(const Graph& g, int girth_param);

/// Star 3-colouring to star k-colouring by adding a dominating clique of size k-3.
ReductionResult reduce_star3_to_stark(const Graph& g, int k);

/// Each vertex of degree d becomes max(1, d) copies chained by d-1 copies of
/// the gadget. Refuses an unverified gadget.
ReductionResult reduce_acyclic_vertexsplit(const Graph& g, const EqualityGadget& gadget, int k);

/// Per edge uv: u'_v on u, v'_u on v, and k-2 vertices adjacent to both primes.
ReductionResult reduce_injective_bipartite(const Graph& g, int k);

/// `cover` partitions V(g) into at most three cliques.
ReductionResult reduce_colouring_to_injective_5p1(const Graph& g, const std::vector<std::vector<Vertex>>& cover, int k);

/// Lists are 0-based subsets of {0..k-1}; output is g plus a palette clique.
ReductionResult reduce_listcol_to_colouring(const Graph& g, const ListAssignment& lists);

/// `side` is 0/1 per vertex; the sides must be equal in size.
ReductionResult reduce_connmatching_to_acyclic(const Graph& g, const std::vector<int>& side);

/// Key-value text: forward map and back-translation recipe.
void write_map(std::ostream& out, const ReductionResult& r);

}  // namespace colourbench
