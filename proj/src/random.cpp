#include "colourbench/random.hpp"

#include <stdexcept>
#include <string>

#include "colourbench/recognizers.hpp"

namespace colourbench {

Graph random_gnp(int n, double p, Rng& rng)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

namespace {

// Vertices split into `parts` groups; pairs inside a group use p_in, across groups p_out.
Graph blocks(int n, int parts, double p_in, double p_out, Rng& rng)
{
    std::vector<int> group(static_cast<std::size_t>(n));
    for (auto& x : group) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(parts)));
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(group[static_cast<std::size_t>(u)] == group[static_cast<std::size_t>(v)] ? p_in : p_out))
                g.add_edge(u, v);
    return g;
}

Graph relabel(const Graph& g, Rng& rng)
{
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) perm[static_cast<std::size_t>(v)] = v;
    rng.shuffle(perm);
    Graph out(g.order());
    for (const auto& [u, v] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

Graph candidate(int n, Rng& rng)
{
    const double p = 0.05 + 0.9 * rng.unit();
    const double q = 0.3 * rng.unit();
    const int parts = rng.between(1, 4);
    switch (rng.below(6)) {
    case 0: return random_gnp(n, p, rng);
    case 1: return complement(random_gnp(n, q, rng));
    case 2: return blocks(n, parts, 1.0, q, rng);              // noisy cliques
    case 3: return complement(blocks(n, parts, 1.0, q, rng));  // noisy complete multipartite
    case 4: return blocks(n, 2, 0.0, p, rng);                  // bipartite
    default: {                                                  // split: a clique, an independent set, cross edges
        Graph g = blocks(n, 2, 0.0, p, rng);
        std::vector<Vertex> core;
        for (Vertex v = 0; v < n; ++v)
            if (rng.chance(0.5)) core.push_back(v);
        for (std::size_t i = 0; i < core.size(); ++i)
            for (std::size_t j = i + 1; j < core.size(); ++j)
                if (!g.adjacent(core[i], core[j])) g.add_edge(core[i], core[j]);
        Graph out(n);
        std::vector<char> in_core(static_cast<std::size_t>(n), 0);
        for (Vertex v : core) in_core[static_cast<std::size_t>(v)] = 1;
        for (const auto& [u, v] : g.edges())
            if (in_core[static_cast<std::size_t>(u)] || in_core[static_cast<std::size_t>(v)]) out.add_edge(u, v);
        return out;
    }
    }
}

}  // namespace

Graph random_instance(std::string_view tag, int n, std::uint64_t seed, int attempts)
{
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    const ClassQuery q = ClassQuery::parse(tag);
    Rng rng(seed);
    for (int i = 0; i < attempts; ++i) {
        Graph g = relabel(candidate(n, rng), rng);
        if (belongs(g, q)) return g;
    }
    throw std::runtime_error("no " + q.tag() + " graph on " + std::to_string(n) + " vertices after " +
                             std::to_string(attempts) + " attempts");
}

}  // namespace colourbench
