#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colourbench {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when a graph operation is asked to exceed a configured size bound
/// (for instance an induced-subgraph search with a pattern that is too large).
class SizeBoundError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Each vertex keeps its neighbours in insertion order. That order is the
/// rotation system consumed by the vertex-splitting reductions, so it is
/// preserved by file I/O: a graph read from an edge list has neighbour
/// sequences equal to the order in which edges appear.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Vertex>& neighbours(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges in insertion order, each as (u, v) exactly as added.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    Vertex add_vertex();
    /// Throws std::invalid_argument on self-loops, parallel edges or bad indices.
    void add_edge(Vertex u, Vertex v);

    /// Labelled equality: same order and the same edge set (neighbour order ignored).
    friend bool operator==(const Graph& a, const Graph& b);

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<Vertex>> sorted_;
    std::vector<Edge> edges_;
};

/// Undirected multigraph; parallel edges allowed, self-loops not. Edge ids are
/// dense 0..m-1 in insertion order.
struct MultiEdge {
    Vertex u = 0;
    Vertex v = 0;
    int id = 0;
};

class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : incident_(static_cast<std::size_t>(n)) {}

    static Multigraph from_graph(const Graph& g);

    int order() const noexcept { return static_cast<int>(incident_.size()); }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<MultiEdge>& edges() const noexcept { return edges_; }
    const MultiEdge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
    /// Edge ids incident to v, in insertion order.
    const std::vector<int>& incident(Vertex v) const { return incident_.at(static_cast<std::size_t>(v)); }
    int multiplicity(Vertex u, Vertex v) const;

    Vertex add_vertex();
    int add_edge(Vertex u, Vertex v);
    /// Adds `count` parallel copies of uv; returns the id of the first copy.
    int add_bundle(Vertex u, Vertex v, int count);

private:
    std::vector<std::vector<int>> incident_;
    std::vector<MultiEdge> edges_;
};

inline constexpr int kInfiniteGirth = -1;

Graph complement(const Graph& g);
Graph line_graph(const Multigraph& m);
Graph line_graph(const Graph& g);
/// Subdivides every edge once. Old vertices keep indices 0..n-1; the new
/// vertex of edge i (insertion order) is n+i.
Graph subdivide(const Graph& g);
/// Length of a shortest cycle, or kInfiniteGirth for forests.
int girth(const Graph& g);
int degeneracy(const Graph& g);
Graph add_dominating_clique(const Graph& g, int size);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
/// Proper 2-colouring (side per vertex) if bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);
/// Shortest-path distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

inline constexpr int kDefaultPatternBound = 8;

/// Lexicographically first injective map from V(h) into V(g) that preserves
/// adjacency and non-adjacency, or nullopt. Throws SizeBoundError when h has
/// more than `bound` vertices.
std::optional<std::vector<Vertex>> induced_subgraph_find(const Graph& g, const Graph& h,
                                                         int bound = kDefaultPatternBound);
bool is_induced_subgraph(const Graph& h, const Graph& g, int bound = kDefaultPatternBound);

/// Exact isomorphism by degree-pruned permutation search; both graphs must
/// have at most `bound` vertices.
bool is_isomorphic(const Graph& g, const Graph& h, int bound = kDefaultPatternBound);

/// Canonical adjacency code of a small graph (at most 11 vertices): equal
/// codes iff isomorphic. Permutations are restricted to degree classes.
std::string canonical_code(const Graph& g);

std::string describe(const Graph& g);

}  // namespace colourbench
