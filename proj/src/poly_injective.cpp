#include "colourbench/poly_injective.hpp"

#include <algorithm>
#include <functional>

#include "colourbench/engine.hpp"
#include "colourbench/named.hpp"
#include "colourbench/recognizers.hpp"
#include "colourbench/verifiers.hpp"

namespace colourbench {

namespace {

Colouring from_classes(int n, const std::vector<std::vector<Vertex>>& classes)
{
    Colouring c(n, -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i]) c[v] = static_cast<int>(i);
    return c;
}

void certify(const Graph& g, const InjectiveSolution& s)
{
    if (auto bad = verify(g, s.colouring, PropertyKind::injective))
        throw std::logic_error(s.route + " produced an invalid injective colouring: " + describe(*bad));
    if (s.colouring.distinct_colours() != s.colours || (g.order() > 0 && s.colouring.num_colours() != s.colours))
        throw std::logic_error(s.route + " reported " + std::to_string(s.colours) + " colours but used " +
                               std::to_string(s.colouring.distinct_colours()));
}

void require(bool holds, const std::string& what)
{
    if (!holds) throw PreconditionError("input graph is not " + what);
}

// Solves each component separately and reuses colours across components.
InjectiveSolution per_component(const Graph& g, const std::function<InjectiveSolution(const Graph&)>& solve,
                                 const std::string& route)
{
    InjectiveSolution out;
    out.route = route;
    out.colouring = Colouring(g.order());
    for (const auto& comp : components(g)) {
        const Graph h = induced_subgraph(g, comp);
        const InjectiveSolution part = solve(h);
        out.colours = std::max(out.colours, part.colours);
        for (std::size_t i = 0; i < comp.size(); ++i) out.colouring[comp[i]] = part.colouring[static_cast<Vertex>(i)];
        if (comp.size() == static_cast<std::size_t>(g.order())) out.route = part.route;
    }
    certify(g, out);
    return out;
}

InjectiveSolution as_solution(const TwoInjectiveSolution& two, std::string route)
{
    return {two.colours, two.colouring, std::move(route)};
}

std::vector<Vertex> all_vertices(const Graph& g)
{
    std::vector<Vertex> out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = v;
    return out;
}

// Colour classes: U first, then `triples`, then the classes of `two` over its subset.
InjectiveSolution assemble(const Graph& g, const std::array<Vertex, 3>& u,
                           const std::vector<std::vector<Vertex>>& triples, const TwoInjectiveSolution& two,
                           const std::string& route)
{
    std::vector<std::vector<Vertex>> classes{{u[0], u[1], u[2]}};
    for (const auto& t : triples) classes.push_back(t);
    std::vector<std::vector<Vertex>> rest(static_cast<std::size_t>(two.colours));
    for (Vertex v = 0; v < g.order(); ++v)
        if (two.colouring[v] >= 0) rest[static_cast<std::size_t>(two.colouring[v])].push_back(v);
    classes.insert(classes.end(), rest.begin(), rest.end());
    InjectiveSolution out{static_cast<int>(classes.size()), from_classes(g.order(), classes), route};
    certify(g, out);
    return out;
}

template <typename Visit>
void for_each_triple(int n, Visit&& visit)
{
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) visit(std::array<Vertex, 3>{a, b, c});
}

InjectiveSolution four_p1_free_unchecked(const Graph& g)
{
    InjectiveSolution best = as_solution(optimal_2injective(g), "4p1-free:2-injective");
    for_each_triple(g.order(), [&](const std::array<Vertex, 3>& u) {
        const auto tp = triple_partition(g, u, true);
        if (!tp) return;
        const std::size_t q1 = std::min({tp->free0[0].size(), tp->free0[1].size(), tp->free0[2].size()});
        for (std::size_t p = q1 + 1; p-- > 0;) {
            std::vector<std::vector<Vertex>> triples;
            std::vector<char> fixed(static_cast<std::size_t>(g.order()), 0);
            for (Vertex x : u) fixed[static_cast<std::size_t>(x)] = 1;
            for (std::size_t j = 0; j < p; ++j) {
                triples.push_back({tp->free0[0][j], tp->free0[1][j], tp->free0[2][j]});
                for (Vertex x : triples.back()) fixed[static_cast<std::size_t>(x)] = 1;
            }
            std::vector<Vertex> rest;
            for (Vertex v = 0; v < g.order(); ++v)
                if (!fixed[static_cast<std::size_t>(v)]) rest.push_back(v);
            const TwoInjectiveSolution two = optimal_2injective(g, rest);
            const int total = 1 + static_cast<int>(p) + two.colours;
            if (total < best.colours) best = assemble(g, u, triples, two, "4p1-free:triple");
        }
    });
    certify(g, best);
    return best;
}

}  // namespace

TwoInjectiveSolution optimal_2injective(const Graph& g, const std::vector<Vertex>& vertices)
{
    const Graph near = distance_two_graph(g);
    const int m = static_cast<int>(vertices.size());
    Graph compatible(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!near.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
                compatible.add_edge(i, j);
    const Matching local = max_matching(compatible);

    TwoInjectiveSolution out;
    out.colouring = Colouring(g.order(), -1);
    int next = 0;
    for (const auto& [i, j] : local) {
        const Vertex a = vertices[static_cast<std::size_t>(i)];
        const Vertex b = vertices[static_cast<std::size_t>(j)];
        out.pairs.emplace_back(std::min(a, b), std::max(a, b));
        out.colouring[a] = out.colouring[b] = next++;
    }
    for (Vertex v : vertices)
        if (out.colouring[v] < 0) out.colouring[v] = next++;
    out.colours = next;
    return out;
}

TwoInjectiveSolution optimal_2injective(const Graph& g)
{
    return optimal_2injective(g, all_vertices(g));
}

std::optional<TriplePartition> triple_partition(const Graph& g, std::array<Vertex, 3> u, bool t_cliques)
{
    std::sort(u.begin(), u.end());
    if (u[0] == u[1] || u[1] == u[2]) return std::nullopt;
    if (g.adjacent(u[0], u[1]) || g.adjacent(u[0], u[2]) || g.adjacent(u[1], u[2])) return std::nullopt;

    TriplePartition tp;
    tp.u = u;
    tp.grade.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (v == u[0] || v == u[1] || v == u[2]) continue;
        int which = 0;
        int hits = 0;
        for (int i = 0; i < 3; ++i)
            if (g.adjacent(v, u[static_cast<std::size_t>(i)])) {
                which = i + 1;
                ++hits;
            }
        if (hits > 1) return std::nullopt;
        part[static_cast<std::size_t>(v)] = which;
        tp.t[static_cast<std::size_t>(which)].push_back(v);
    }
    if (t_cliques) {
        if (!tp.t[0].empty()) return std::nullopt;
        for (int i = 1; i <= 3; ++i) {
            const auto& ti = tp.t[static_cast<std::size_t>(i)];
            for (std::size_t a = 0; a < ti.size(); ++a)
                for (std::size_t b = a + 1; b < ti.size(); ++b)
                    if (!g.adjacent(ti[a], ti[b])) return std::nullopt;
        }
    }
    for (int i = 1; i <= 3; ++i) {
        for (Vertex v : tp.t[static_cast<std::size_t>(i)]) {
            std::array<bool, 4> touches{};
            for (Vertex w : g.neighbours(v)) {
                const int j = part[static_cast<std::size_t>(w)];
                if (j >= 1 && j != i) touches[static_cast<std::size_t>(j)] = true;
            }
            const int grade = static_cast<int>(std::count(touches.begin(), touches.end(), true));
            tp.grade[static_cast<std::size_t>(v)] = grade;
            if (grade == 2) tp.s.push_back(v);
            if (grade == 0) tp.free0[static_cast<std::size_t>(i - 1)].push_back(v);
        }
    }
    return tp;
}

InjectiveSolution injective_p4free(const Graph& g)
{
    require(is_p4_free(g), "P4-free");
    return per_component(
        g,
        [](const Graph& h) {
            InjectiveSolution s;
            s.colours = h.order();
            s.colouring = Colouring(all_vertices(h));
            s.route = "p4-free";
            return s;
        },
        "p4-free");
}

InjectiveSolution injective_p1p4free(const Graph& g)
{
    require(is_h_free(g, named_graph("P1+P4")), "(P1+P4)-free");
    if (is_p4_free(g)) return injective_p4free(g);
    InjectiveSolution out = as_solution(optimal_2injective(g), "p1p4-free:2-injective");
    certify(g, out);
    return out;
}

InjectiveSolution injective_4p1free(const Graph& g)
{
    require(is_h_free(g, named_graph("4P1")), "4P1-free");
    return four_p1_free_unchecked(g);
}

InjectiveSolution injective_2p1p3free(const Graph& g)
{
    require(is_h_free(g, named_graph("2P1+P3")), "(2P1+P3)-free");
    return per_component(
        g,
        [](const Graph& h) {
            if (is_h_free(h, named_graph("4P1"))) return four_p1_free_unchecked(h);
            return as_solution(optimal_2injective(h), "2p1p3-free:2-injective");
        },
        "2p1p3-free");
}

InjectiveSolution injective_3p1p2free(const Graph& g)
{
    require(is_h_free(g, named_graph("3P1+P2")), "(3P1+P2)-free");
    return per_component(
        g,
        [](const Graph& h) {
            if (is_h_free(h, named_graph("4P1"))) return four_p1_free_unchecked(h);
            InjectiveSolution best = as_solution(optimal_2injective(h), "3p1p2-free:2-injective");
            for_each_triple(h.order(), [&](const std::array<Vertex, 3>& u) {
                const auto tp = triple_partition(h, u, false);
                if (!tp) return;
                if (!tp->t[0].empty()) {
                    if (h.order() - 2 >= best.colours) return;
                    std::vector<Vertex> rest;
                    for (Vertex v = 0; v < h.order(); ++v)
                        if (v != u[0] && v != u[1] && v != u[2]) rest.push_back(v);
                    TwoInjectiveSolution singletons;
                    singletons.colouring = Colouring(h.order(), -1);
                    for (Vertex v : rest) singletons.colouring[v] = singletons.colours++;
                    best = assemble(h, u, {}, singletons, "3p1p2-free:triple-with-outsider");
                    return;
                }
                std::vector<Vertex> rest;
                for (Vertex v = 0; v < h.order(); ++v)
                    if (v != u[0] && v != u[1] && v != u[2]) rest.push_back(v);
                const TwoInjectiveSolution two = optimal_2injective(h, rest);
                if (1 + two.colours < best.colours) best = assemble(h, u, {}, two, "3p1p2-free:triple");
            });
            return best;
        },
        "3p1p2-free");
}

InjectiveSolution injective_dispatch(const Graph& g, const Graph& h)
{
    if (!is_h_free(g, h)) throw PreconditionError("input graph contains the forbidden induced subgraph");
    if (is_induced_subgraph(h, path_graph(4))) return injective_p4free(g);
    if (is_induced_subgraph(h, named_graph("4P1"))) return injective_4p1free(g);
    if (is_induced_subgraph(h, named_graph("P1+P4"))) return injective_p1p4free(g);
    if (is_induced_subgraph(h, named_graph("2P1+P3"))) return injective_2p1p3free(g);
    if (is_induced_subgraph(h, named_graph("3P1+P2"))) return injective_3p1p2free(g);
    throw PreconditionError("no polynomial algorithm covers this forbidden graph");
}

}  // namespace colourbench
