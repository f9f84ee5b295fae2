#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "colourbench/graph.hpp"

namespace colourbench {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph empty_graph(int n);
Graph petersen_graph();
/// `copies` vertex-disjoint copies of g, components consecutive.
Graph repeat(const Graph& g, int copies);

/// A graph written the way it is named: `P4`, `C5`, `K4`, `K33` / `K3,3` /
/// `K_{3,3}` (biclique), `K_13` / `K(13)` (complete graph with two or more
/// digits), `Petersen`, `claw`, and disjoint unions of multiples such as
/// `2P1+P4` or `3K3`.
///
/// Vertex numbering: components appear in term order and occupy consecutive
/// indices; paths run left to right; cycles are numbered around the cycle;
/// bicliques list the left side first.
class NamedGraph {
public:
    enum class Kind { path, cycle, complete, biclique, petersen };

    struct Term {
        int copies = 1;
        Kind kind = Kind::path;
        int a = 0;
        int b = 0;
    };

    static NamedGraph parse(std::string_view text);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    Graph expand() const;
    std::string text() const;

private:
    std::vector<Term> terms_;
};

inline Graph named_graph(std::string_view text)
{
    return NamedGraph::parse(text).expand();
}

}  // namespace colourbench
