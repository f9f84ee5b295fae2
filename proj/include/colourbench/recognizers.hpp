#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colourbench/graph.hpp"

namespace colourbench {

bool is_h_free(const Graph& g, const Graph& h);
/// Acyclic with maximum degree at most two.
bool is_linear_forest(const Graph& h);
/// Every component is a star K_{1,r} (r >= 0).
bool is_star_forest(const Graph& h);
bool is_forest(const Graph& h);
bool is_bipartite(const Graph& g);
bool is_p4_free(const Graph& g);

/// Partition of V(g) into at most t cliques, found as a proper t-colouring of
/// the complement. Only t <= 3 is accepted.
std::optional<std::vector<std::vector<Vertex>>> clique_cover(const Graph& g, int t);
bool is_cobipartite(const Graph& g);

/// Split test through the forbidden induced subgraphs 2P2, C4 and C5.
bool is_split(const Graph& g);

/// A (clique, independent set) partition of a split graph.
struct SplitPartition {
    std::vector<Vertex> clique;
    std::vector<Vertex> independent;
};
std::optional<SplitPartition> split_partition(const Graph& g);

/// Class tags: `<H>-free` or `h-free(<H>)`, `linear-forest`, `bipartite`,
/// `co-bipartite`, `split`, `clique-coverable(<t>)`, `p4-free`.
class ClassQuery {
public:
    enum class Kind { h_free, linear_forest, bipartite, cobipartite, split, clique_coverable, p4_free };

    static ClassQuery parse(std::string_view tag);

    Kind kind() const noexcept { return kind_; }
    const Graph& forbidden() const noexcept { return h_; }
    const std::string& forbidden_name() const noexcept { return h_name_; }
    int cover_size() const noexcept { return t_; }
    std::string tag() const;

private:
    Kind kind_ = Kind::bipartite;
    Graph h_;
    std::string h_name_;
    int t_ = 0;
};

struct Recognition {
    bool member = false;
    /// Certificate: a partition for members of partition classes, an induced
    /// copy of the obstruction for non-members of H-free classes, or a short reason.
    std::string witness;
};

Recognition recognize(const Graph& g, const ClassQuery& q);
inline bool belongs(const Graph& g, const ClassQuery& q) { return recognize(g, q).member; }

}  // namespace colourbench
