#include "colourbench/recognizers.hpp"

#include <algorithm>
#include <sstream>

#include "colourbench/engine.hpp"
#include "colourbench/named.hpp"

namespace colourbench {

bool is_h_free(const Graph& g, const Graph& h)
{
    return !induced_subgraph_find(g, h).has_value();
}

bool is_forest(const Graph& h)
{
    return h.size() + static_cast<int>(components(h).size()) == h.order();
}

bool is_linear_forest(const Graph& h)
{
    return is_forest(h) && h.max_degree() <= 2;
}

bool is_star_forest(const Graph& h)
{
    if (!is_forest(h)) return false;
    for (const auto& [u, v] : h.edges())
        if (h.degree(u) >= 2 && h.degree(v) >= 2) return false;
    return true;
}

bool is_bipartite(const Graph& g)
{
    return bipartition(g).has_value();
}

bool is_p4_free(const Graph& g)
{
    return is_h_free(g, path_graph(4));
}

std::optional<std::vector<std::vector<Vertex>>> clique_cover(const Graph& g, int t)
{
    if (t < 0 || t > 3) throw std::invalid_argument("clique covers are only searched for t <= 3");
    const Decision d = decide(complement(g), t, PropertyKind::proper);
    if (d.answer != Answer::yes) return std::nullopt;
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(t));
    for (Vertex v = 0; v < g.order(); ++v) parts[static_cast<std::size_t>((*d.colouring)[v])].push_back(v);
    parts.erase(std::remove_if(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); }), parts.end());
    return parts;
}

bool is_cobipartite(const Graph& g)
{
    return clique_cover(g, 2).has_value();
}

bool is_split(const Graph& g)
{
    return is_h_free(g, named_graph("2P2")) && is_h_free(g, cycle_graph(4)) && is_h_free(g, cycle_graph(5));
}

std::optional<SplitPartition> split_partition(const Graph& g)
{
    if (!is_split(g)) return std::nullopt;
    // Highest-degree prefix: the largest m with d_m >= m - 1 spans a maximum clique.
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::size_t m = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (g.degree(order[i]) >= static_cast<int>(i)) m = i + 1;
    SplitPartition out;
    out.clique.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    out.independent.assign(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
    std::sort(out.clique.begin(), out.clique.end());
    std::sort(out.independent.begin(), out.independent.end());
    for (std::size_t i = 0; i < out.clique.size(); ++i)
        for (std::size_t j = i + 1; j < out.clique.size(); ++j)
            if (!g.adjacent(out.clique[i], out.clique[j])) throw std::logic_error("split partition clique check failed");
    for (std::size_t i = 0; i < out.independent.size(); ++i)
        for (std::size_t j = i + 1; j < out.independent.size(); ++j)
            if (g.adjacent(out.independent[i], out.independent[j]))
                throw std::logic_error("split partition independence check failed");
    return out;
}

ClassQuery ClassQuery::parse(std::string_view tag)
{
    ClassQuery q;
    auto inside = [&](std::string_view prefix) -> std::optional<std::string_view> {
        if (tag.size() > prefix.size() + 1 && tag.substr(0, prefix.size()) == prefix && tag.back() == ')')
            return tag.substr(prefix.size(), tag.size() - prefix.size() - 1);
        return std::nullopt;
    };
    auto set_h = [&](std::string_view name) {
        q.kind_ = Kind::h_free;
        q.h_name_ = std::string(name);
        q.h_ = named_graph(name);
        if (q.h_.order() > kDefaultPatternBound)
            throw SizeBoundError("forbidden graph " + q.h_name_ + " has more than " +
                                 std::to_string(kDefaultPatternBound) + " vertices");
    };

    if (tag == "linear-forest") q.kind_ = Kind::linear_forest;
    else if (tag == "bipartite") q.kind_ = Kind::bipartite;
    else if (tag == "co-bipartite") q.kind_ = Kind::cobipartite;
    else if (tag == "split") q.kind_ = Kind::split;
    else if (tag == "p4-free" || tag == "P4-free") q.kind_ = Kind::p4_free;
    else if (auto t = inside("clique-coverable(")) {
        q.kind_ = Kind::clique_coverable;
        const std::string digits(*t);
        if (digits.size() != 1 || digits[0] < '0' || digits[0] > '3')
            throw std::invalid_argument("clique-coverable takes t in 0..3");
        q.t_ = digits[0] - '0';
    } else if (auto h = inside("h-free(")) {
        set_h(*h);
    } else if (tag.size() > 5 && tag.substr(tag.size() - 5) == "-free") {
        set_h(tag.substr(0, tag.size() - 5));
    } else {
        throw std::invalid_argument("unknown class tag '" + std::string(tag) + "'");
    }
    return q;
}

std::string ClassQuery::tag() const
{
    switch (kind_) {
    case Kind::h_free: return h_name_ + "-free";
    case Kind::linear_forest: return "linear-forest";
    case Kind::bipartite: return "bipartite";
    case Kind::cobipartite: return "co-bipartite";
    case Kind::split: return "split";
    case Kind::clique_coverable: return "clique-coverable(" + std::to_string(t_) + ")";
    case Kind::p4_free: return "p4-free";
    }
    return "?";
}

namespace {

std::string list(const std::vector<Vertex>& vs)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << '}';
    return out.str();
}

Recognition from_embedding(const Graph& g, const Graph& h, const std::string& name)
{
    const auto found = induced_subgraph_find(g, h);
    if (!found) return {true, "no induced " + name};
    return {false, "induced " + name + " on " + list(*found)};
}

Recognition from_cover(const std::optional<std::vector<std::vector<Vertex>>>& cover)
{
    if (!cover) return {false, "no cover by that many cliques"};
    std::string text = "cliques";
    for (const auto& part : *cover) text += " " + list(part);
    return {true, text};
}

}  // namespace

Recognition recognize(const Graph& g, const ClassQuery& q)
{
    switch (q.kind()) {
    case ClassQuery::Kind::h_free: return from_embedding(g, q.forbidden(), q.forbidden_name());
    case ClassQuery::Kind::p4_free: return from_embedding(g, path_graph(4), "P4");
    case ClassQuery::Kind::linear_forest:
        if (!is_forest(g)) return {false, "contains a cycle"};
        if (g.max_degree() > 2) return {false, "maximum degree " + std::to_string(g.max_degree())};
        return {true, "disjoint union of paths"};
    case ClassQuery::Kind::bipartite: {
        const auto sides = bipartition(g);
        if (!sides) return {false, "contains an odd cycle"};
        std::vector<Vertex> a, b;
        for (Vertex v = 0; v < g.order(); ++v) ((*sides)[static_cast<std::size_t>(v)] == 0 ? a : b).push_back(v);
        return {true, "sides " + list(a) + " " + list(b)};
    }
    case ClassQuery::Kind::cobipartite: return from_cover(clique_cover(g, 2));
    case ClassQuery::Kind::clique_coverable: return from_cover(clique_cover(g, q.cover_size()));
    case ClassQuery::Kind::split: {
        const auto part = split_partition(g);
        if (!part) {
            for (const char* name : {"2P2", "C4", "C5"}) {
                auto r = from_embedding(g, named_graph(name), name);
                if (!r.member) return r;
            }
        }
        return {true, "clique " + list(part->clique) + " independent " + list(part->independent)};
    }
    }
    return {};
}

}  // namespace colourbench
