#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "colourbench/colouring.hpp"
#include "colourbench/graph.hpp"

namespace colourbench {

/// Limits for one search. Zero means unlimited. The seed, when present,
/// shuffles value order and tie-breaking; results stay deterministic per seed.
struct SearchBudget {
    std::uint64_t node_limit = 0;
    std::chrono::milliseconds time_limit{0};
    std::optional<std::uint64_t> seed;
};

class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what, std::uint64_t nodes = 0)
        : std::runtime_error(what), nodes_(nodes)
    {
    }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

class NotColourableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest palette the engine handles (domains are 64-bit masks).
inline constexpr int kMaxColours = 64;

enum class Answer { yes, no, exhausted };

/// Vertices whose colour is fixed before the search starts.
using Precolouring = std::vector<std::pair<Vertex, int>>;

struct Decision {
    Answer answer = Answer::no;
    std::optional<Colouring> colouring;  // present iff answer == yes; always verified
    std::uint64_t nodes = 0;
};

/// Exact backtracking decision. Variable choice: smallest remaining domain,
/// ties broken by descending degree then index. Colours are tried ascending
/// and a vertex may only open the lowest unused colour.
Decision decide(const Graph& g, int k, PropertyKind p, const SearchBudget& budget = {},
                const Precolouring& fixed = {});

struct ChromaticResult {
    int k = 0;
    Colouring colouring;
    std::uint64_t nodes = 0;
};

/// Minimum number of colours, solved per component; throws BudgetExhausted.
ChromaticResult chromatic(const Graph& g, PropertyKind p, const SearchBudget& budget = {});

/// `labelled` visits every valid map into {0..k-1}; `up_to_renaming` visits one
/// representative per orbit under permutations of unused colours.
enum class Symmetry { labelled, up_to_renaming };

struct EnumerateOptions {
    Symmetry symmetry = Symmetry::labelled;
    bool verify_each = false;
    Precolouring fixed;
};

struct Enumeration {
    std::uint64_t visited = 0;
    bool stopped = false;  // the visitor asked to stop
    std::uint64_t nodes = 0;
};

/// The visitor returns false to stop. Throws BudgetExhausted.
Enumeration enumerate(const Graph& g, int k, PropertyKind p, const std::function<bool(const Colouring&)>& visitor,
                      const SearchBudget& budget = {}, const EnumerateOptions& options = {});

std::uint64_t count_colourings(const Graph& g, int k, PropertyKind p, const SearchBudget& budget = {},
                               Symmetry symmetry = Symmetry::labelled);

struct ForcedEqualResult {
    bool equal = false;
    std::optional<Colouring> counterexample;
    std::uint64_t nodes = 0;
};

/// Whether every valid k-colouring gives all of `s` one colour. Each pair
/// (s[0], s[j]) is tested by searching for a colouring with s[0] -> 0 and
/// s[j] -> 1, which exists iff some colouring separates them. The node limit
/// is shared by all sub-searches. Throws NotColourableError, BudgetExhausted.
ForcedEqualResult forced_equal(const Graph& g, int k, PropertyKind p, const std::vector<Vertex>& s,
                               const SearchBudget& budget = {});

/// Whether some union of two colour classes joins u and v by a path.
bool has_bichromatic_path(const Graph& g, const Colouring& c, Vertex u, Vertex v);

/// Colours i != c(u) such that the {c(u), i} union joins u and v.
std::vector<int> bichromatic_path_colours(const Graph& g, const Colouring& c, Vertex u, Vertex v);

/// One valid colouring from a randomized search without symmetry breaking,
/// or nullopt if none was found within the node limit.
std::optional<Colouring> sample_colouring(const Graph& g, int k, PropertyKind p, std::uint64_t seed,
                                          std::uint64_t node_limit);

/// Graph whose proper colourings are the injective colourings of g: u and v
/// are adjacent iff their distance in g is 1 or 2.
Graph distance_two_graph(const Graph& g);

/// Greedy clique lower bound for the property's chromatic number.
int clique_lower_bound(const Graph& g, PropertyKind p);

/// Edge-colouring questions answered through the line graph.
Decision decide_edge(const Multigraph& m, int k, PropertyKind p, const SearchBudget& budget = {});
ForcedEqualResult forced_equal_edges(const Multigraph& m, int k, PropertyKind p, const std::vector<int>& edge_ids,
                                     const SearchBudget& budget = {});

}  // namespace colourbench
