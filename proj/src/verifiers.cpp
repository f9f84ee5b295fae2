#include "colourbench/verifiers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace colourbench {

std::string_view to_string(Violation::Kind k)
{
    switch (k) {
    case Violation::Kind::improper_edge: return "improper-edge";
    case Violation::Kind::bichromatic_cycle: return "bichromatic-cycle";
    case Violation::Kind::bichromatic_p4: return "bichromatic-p4";
    case Violation::Kind::repeated_neighbour_colour: return "repeated-neighbour-colour";
    }
    return "?";
}

std::string describe(const Violation& v)
{
    std::ostringstream out;
    out << to_string(v.kind) << ':';
    for (int x : v.witness) out << ' ' << x;
    return out.str();
}

namespace {

void require_total(int n, const std::vector<int>& colours, const char* what)
{
    if (static_cast<int>(colours.size()) != n)
        throw NotTotalError(std::string(what) + " colouring has " + std::to_string(colours.size()) +
                            " entries, expected " + std::to_string(n));
    for (int c : colours)
        if (c < 0) throw NotTotalError(std::string(what) + " colouring uses a negative colour");
}

using ColourPair = std::pair<int, int>;

ColourPair pair_of(int a, int b)
{
    return a < b ? ColourPair{a, b} : ColourPair{b, a};
}

struct DisjointSets {
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n))
    {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
    std::vector<int> parent;
};

// Path from `from` to `to` through the given edges (which form a forest containing both).
std::vector<Vertex> forest_path(int n, const std::vector<Edge>& edges, Vertex from, Vertex to)
{
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<Vertex> prev(static_cast<std::size_t>(n), -2);
    std::deque<Vertex> queue{from};
    prev[static_cast<std::size_t>(from)] = -1;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (Vertex w : adj[static_cast<std::size_t>(u)])
            if (prev[static_cast<std::size_t>(w)] == -2) {
                prev[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
            }
    }
    std::vector<Vertex> path;
    for (Vertex x = to; x != -1; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::map<ColourPair, std::vector<Edge>> edges_by_colour_pair(const Graph& g, const Colouring& c)
{
    std::map<ColourPair, std::vector<Edge>> groups;
    for (const auto& [u, v] : g.edges()) groups[pair_of(c[u], c[v])].emplace_back(u, v);
    return groups;
}

std::optional<Violation> find_improper(const Graph& g, const Colouring& c)
{
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v]) return Violation{Violation::Kind::improper_edge, {u, v}};
    return std::nullopt;
}

std::optional<Violation> find_bichromatic_cycle(const Graph& g, const Colouring& c)
{
    for (const auto& [pair, edges] : edges_by_colour_pair(g, c)) {
        (void)pair;
        DisjointSets sets(g.order());
        std::vector<Edge> forest;
        for (const auto& [u, v] : edges) {
            if (!sets.unite(u, v)) {
                auto cycle = forest_path(g.order(), forest, v, u);
                return Violation{Violation::Kind::bichromatic_cycle, std::move(cycle)};
            }
            forest.emplace_back(u, v);
        }
    }
    return std::nullopt;
}

std::optional<Violation> find_bichromatic_p4(const Graph& g, const Colouring& c)
{
    for (const auto& [pair, edges] : edges_by_colour_pair(g, c)) {
        (void)pair;
        std::map<Vertex, std::vector<Vertex>> adj;
        for (const auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (const auto& [u, v] : edges) {
            const auto& nu = adj[u];
            const auto& nv = adj[v];
            if (nu.size() < 2 || nv.size() < 2) continue;
            const Vertex x = nu[0] != v ? nu[0] : nu[1];
            const Vertex y = nv[0] != u ? nv[0] : nv[1];
            return Violation{Violation::Kind::bichromatic_p4, {x, u, v, y}};
        }
    }
    return std::nullopt;
}

std::optional<Violation> find_repeated_neighbour_colour(const Graph& g, const Colouring& c)
{
    for (Vertex centre = 0; centre < g.order(); ++centre) {
        std::map<int, Vertex> seen;
        for (Vertex w : g.neighbours(centre)) {
            auto [it, inserted] = seen.emplace(c[w], w);
            if (!inserted) return Violation{Violation::Kind::repeated_neighbour_colour, {it->second, centre, w}};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> verify(const Graph& g, const Colouring& c, PropertyKind p)
{
    require_total(g.order(), c.values(), "vertex");
    if (auto bad = find_improper(g, c)) return bad;
    switch (p) {
    case PropertyKind::proper: return std::nullopt;
    case PropertyKind::acyclic: return find_bichromatic_cycle(g, c);
    case PropertyKind::star: return find_bichromatic_p4(g, c);
    case PropertyKind::injective: return find_repeated_neighbour_colour(g, c);
    }
    return std::nullopt;
}

bool witness_holds(const Graph& g, const Colouring& c, const Violation& v)
{
    const auto& w = v.witness;
    auto in_range = [&](int x) { return x >= 0 && x < g.order(); };
    if (!std::all_of(w.begin(), w.end(), in_range)) return false;
    auto distinct = [&] {
        auto s = w;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    switch (v.kind) {
    case Violation::Kind::improper_edge:
        return w.size() == 2 && g.adjacent(w[0], w[1]) && c[w[0]] == c[w[1]];
    case Violation::Kind::repeated_neighbour_colour:
        return w.size() == 3 && distinct() && g.adjacent(w[0], w[1]) && g.adjacent(w[1], w[2]) &&
               c[w[0]] == c[w[2]];
    case Violation::Kind::bichromatic_p4:
    case Violation::Kind::bichromatic_cycle: {
        const bool cycle = v.kind == Violation::Kind::bichromatic_cycle;
        if (cycle ? w.size() < 3 : w.size() != 4) return false;
        if (!distinct()) return false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!g.adjacent(w[i], w[i + 1])) return false;
        if (cycle && !g.adjacent(w.back(), w.front())) return false;
        std::vector<int> colours;
        for (int x : w) colours.push_back(c[x]);
        std::sort(colours.begin(), colours.end());
        colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
        return colours.size() <= 2;
    }
    }
    return false;
}

bool edge_colouring_ok_direct(const Multigraph& m, const EdgeColouring& c, PropertyKind p)
{
    require_total(m.size(), c.values(), "edge");
    for (Vertex v = 0; v < m.order(); ++v) {
        std::vector<int> seen;
        for (int id : m.incident(v)) seen.push_back(c[id]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    if (p == PropertyKind::proper) return true;

    std::vector<int> used = c.values();
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    for (std::size_t i = 0; i < used.size(); ++i) {
        for (std::size_t j = i + 1; j < used.size(); ++j) {
            DisjointSets sets(m.order());
            std::vector<int> touched;
            for (const auto& e : m.edges()) {
                if (c[e.id] != used[i] && c[e.id] != used[j]) continue;
                sets.unite(e.u, e.v);
                touched.push_back(e.id);
            }
            std::map<int, int> edge_count;
            std::map<int, std::vector<Vertex>> vertices;
            for (int id : touched) {
                const auto& e = m.edge(id);
                const int root = sets.find(e.u);
                ++edge_count[root];
                vertices[root].push_back(e.u);
                vertices[root].push_back(e.v);
            }
            for (auto& [root, vs] : vertices) {
                std::sort(vs.begin(), vs.end());
                vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                const int edges = edge_count[root];
                const bool is_cycle = edges == static_cast<int>(vs.size());
                switch (p) {
                case PropertyKind::acyclic:
                    if (is_cycle && edges >= 3) return false;
                    break;
                case PropertyKind::star:
                    if (edges >= 4) return false;
                    break;
                case PropertyKind::injective:
                    if (edges >= 3) return false;
                    break;
                case PropertyKind::proper: break;
                }
            }
        }
    }
    return true;
}

std::optional<Violation> verify_edge(const Multigraph& m, const EdgeColouring& c, PropertyKind p)
{
    require_total(m.size(), c.values(), "edge");
    auto result = verify(line_graph(m), c.as_vertex_colouring(), p);
    const bool direct = edge_colouring_ok_direct(m, c, p);
    if (direct == result.has_value())
        throw std::logic_error("edge colouring checkers disagree for " + std::string(to_string(p)));
    return result;
}

bool star_by_components(const Graph& g, const Colouring& c)
{
    require_total(g.order(), c.values(), "vertex");
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v]) return false;

    const int k = c.num_colours();
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < g.order(); ++v)
                if (c[v] == a || c[v] == b) members.push_back(v);
            const Graph sub = induced_subgraph(g, members);
            for (const auto& comp : components(sub)) {
                int edges = 0;
                int branching = 0;
                for (Vertex v : comp) {
                    edges += sub.degree(v);
                    if (sub.degree(v) >= 2) ++branching;
                }
                edges /= 2;
                if (edges != static_cast<int>(comp.size()) - 1) return false;
                if (branching > 1) return false;
            }
        }
    }
    return true;
}

InjectiveDefinitions injective_definitions_agree(const Graph& g, const Colouring& c)
{
    require_total(g.order(), c.values(), "vertex");
    bool proper = true;
    for (const auto& [u, v] : g.edges()) proper = proper && c[u] != c[v];

    InjectiveDefinitions out;

    bool unions_ok = proper;
    const int k = c.num_colours();
    for (int a = 0; a < k && unions_ok; ++a) {
        for (int b = a + 1; b < k && unions_ok; ++b) {
            for (Vertex v = 0; v < g.order() && unions_ok; ++v) {
                if (c[v] != a && c[v] != b) continue;
                int inside = 0;
                for (Vertex w : g.neighbours(v))
                    if (c[w] == a || c[w] == b) ++inside;
                unions_ok = inside <= 1;
            }
        }
    }
    out.by_class_unions = unions_ok;

    bool rainbow = proper;
    for (Vertex v = 0; v < g.order() && rainbow; ++v) {
        std::vector<int> seen;
        for (Vertex w : g.neighbours(v)) seen.push_back(c[w]);
        std::sort(seen.begin(), seen.end());
        rainbow = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    }
    out.by_neighbourhoods = rainbow;
    return out;
}

}  // namespace colourbench
