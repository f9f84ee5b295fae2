#include "colourbench/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace colourbench {

Graph::Graph(int n)
{
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    adj_.resize(static_cast<std::size_t>(n));
    sorted_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= order())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for graph of order " +
                                    std::to_string(order()));
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    const auto& s = sorted_[static_cast<std::size_t>(u)];
    return std::binary_search(s.begin(), s.end(), v);
}

Vertex Graph::add_vertex()
{
    adj_.emplace_back();
    sorted_.emplace_back();
    return order() - 1;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
        throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    auto& su = sorted_[static_cast<std::size_t>(u)];
    su.insert(std::upper_bound(su.begin(), su.end(), v), v);
    auto& sv = sorted_[static_cast<std::size_t>(v)];
    sv.insert(std::upper_bound(sv.begin(), sv.end(), u), u);
    edges_.emplace_back(u, v);
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.sorted_ == b.sorted_;
}

Multigraph Multigraph::from_graph(const Graph& g)
{
    Multigraph m(g.order());
    for (const auto& [u, v] : g.edges()) m.add_edge(u, v);
    return m;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const
{
    int count = 0;
    for (int id : incident(u)) {
        const auto& e = edges_[static_cast<std::size_t>(id)];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++count;
    }
    return count;
}

Vertex Multigraph::add_vertex()
{
    incident_.emplace_back();
    return order() - 1;
}

int Multigraph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::invalid_argument("multigraph edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    const int id = size();
    edges_.push_back({u, v, id});
    incident_[static_cast<std::size_t>(u)].push_back(id);
    incident_[static_cast<std::size_t>(v)].push_back(id);
    return id;
}

int Multigraph::add_bundle(Vertex u, Vertex v, int count)
{
    if (count < 1) throw std::invalid_argument("bundle multiplicity must be positive");
    const int first = add_edge(u, v);
    for (int i = 1; i < count; ++i) add_edge(u, v);
    return first;
}

Graph complement(const Graph& g)
{
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph line_graph(const Multigraph& m)
{
    Graph out(m.size());
    // Each pair of edges sharing an endpoint is joined once, even when the two
    // edges are parallel and so share both endpoints.
    for (int a = 0; a < m.size(); ++a) {
        const auto& ea = m.edge(a);
        for (int b = a + 1; b < m.size(); ++b) {
            const auto& eb = m.edge(b);
            if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) out.add_edge(a, b);
        }
    }
    return out;
}

Graph line_graph(const Graph& g)
{
    return line_graph(Multigraph::from_graph(g));
}

Graph subdivide(const Graph& g)
{
    Graph out(g.order() + g.size());
    int next = g.order();
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, next);
        out.add_edge(next, v);
        ++next;
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbours(u)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int girth(const Graph& g)
{
    const int n = g.order();
    int best = kInfiniteGirth;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<Vertex> queue{root};
        dist[static_cast<std::size_t>(root)] = 0;
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            const int du = dist[static_cast<std::size_t>(u)];
            if (best != kInfiniteGirth && 2 * du + 1 >= best) break;
            for (Vertex w : g.neighbours(u)) {
                auto& dw = dist[static_cast<std::size_t>(w)];
                if (dw < 0) {
                    dw = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    const int len = du + dw + 1;
                    if (best == kInfiniteGirth || len < best) best = len;
                }
            }
        }
    }
    return best;
}

int degeneracy(const Graph& g)
{
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int result = 0;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
                pick = v;
        result = std::max(result, deg[static_cast<std::size_t>(pick)]);
        removed[static_cast<std::size_t>(pick)] = true;
        for (Vertex w : g.neighbours(pick))
            if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
    return result;
}

Graph add_dominating_clique(const Graph& g, int size)
{
    if (size < 0) throw std::invalid_argument("dominating clique size must be non-negative");
    Graph out = Graph::from_edges(g.order(), g.edges());
    const int first = g.order();
    for (int i = 0; i < size; ++i) out.add_vertex();
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) out.add_edge(first + i, first + j);
    for (int i = 0; i < size; ++i)
        for (Vertex v = 0; v < g.order(); ++v) out.add_edge(first + i, v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto& slot = index.at(static_cast<std::size_t>(vertices[i]));
        if (slot >= 0) throw std::invalid_argument("duplicate vertex in induced subgraph selection");
        slot = static_cast<int>(i);
    }
    Graph out(static_cast<int>(vertices.size()));
    for (const auto& [u, v] : g.edges()) {
        const int a = index[static_cast<std::size_t>(u)];
        const int b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) out.add_edge(a, b);
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph out = Graph::from_edges(a.order(), a.edges());
    const int shift = a.order();
    for (int i = 0; i < b.order(); ++i) out.add_vertex();
    for (const auto& [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
    return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbours(comp[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return components(g).size() <= 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbours(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::optional<std::vector<Vertex>> induced_subgraph_find(const Graph& g, const Graph& h, int bound)
{
    const int k = h.order();
    if (k > bound)
        throw SizeBoundError("pattern has " + std::to_string(k) + " vertices; bound is " + std::to_string(bound));
    if (k > g.order()) return std::nullopt;

    std::vector<Vertex> map(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);

    std::function<bool(int)> extend = [&](int i) -> bool {
        if (i == k) return true;
        for (Vertex cand = 0; cand < g.order(); ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (g.degree(cand) < h.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = h.adjacent(i, j) == g.adjacent(cand, map[static_cast<std::size_t>(j)]);
            if (!ok) continue;
            map[static_cast<std::size_t>(i)] = cand;
            used[static_cast<std::size_t>(cand)] = true;
            if (extend(i + 1)) return true;
            used[static_cast<std::size_t>(cand)] = false;
        }
        return false;
    };
    if (extend(0)) return map;
    return std::nullopt;
}

bool is_induced_subgraph(const Graph& h, const Graph& g, int bound)
{
    return induced_subgraph_find(g, h, bound).has_value();
}

namespace {

std::vector<int> sorted_degrees(const Graph& g)
{
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h, int bound)
{
    if (g.order() > bound || h.order() > bound)
        throw SizeBoundError("isomorphism test limited to " + std::to_string(bound) + " vertices");
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (sorted_degrees(g) != sorted_degrees(h)) return false;
    return induced_subgraph_find(g, h, bound).has_value();
}

std::string canonical_code(const Graph& g)
{
    const int n = g.order();
    if (n > 11) throw SizeBoundError("canonical code limited to 11 vertices");

    // Refine by (degree, sorted neighbour degrees); only permutations that keep
    // this invariant order are tried.
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> key{g.degree(v)};
        std::vector<int> nd;
        for (Vertex w : g.neighbours(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        key.insert(key.end(), nd.begin(), nd.end());
        keyed.emplace_back(std::move(key), v);
    }
    std::sort(keyed.begin(), keyed.end());

    std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal keys
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && keyed[static_cast<std::size_t>(j)].first == keyed[static_cast<std::size_t>(i)].first) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = keyed[static_cast<std::size_t>(i)].second;

    std::string best;
    std::string code(static_cast<std::size_t>(n * (n - 1) / 2), '0');
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            std::size_t pos = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    code[pos++] = g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? '1' : '0';
            if (best.empty() || code < best) best = code;
            return;
        }
        auto first = perm.begin() + blocks[b].first;
        auto last = perm.begin() + blocks[b].second;
        std::sort(first, last);
        do {
            rec(b + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);

    std::ostringstream out;
    out << n << ':';
    for (const auto& [key, v] : keyed) {
        (void)v;
        out << key.front() << ',';
    }
    out << ':' << best;
    return out.str();
}

std::string describe(const Graph& g)
{
    std::ostringstream out;
    out << "n=" << g.order() << " m=" << g.size() << " {";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        out << (first ? "" : " ") << u << '-' << v;
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace colourbench
