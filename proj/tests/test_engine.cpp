#include <doctest.h>

#include "colourbench/engine.hpp"
#include "colourbench/named.hpp"
#include "colourbench/verifiers.hpp"
#include "oracles.hpp"

using namespace colourbench;

namespace {

constexpr PropertyKind kAll[] = {PropertyKind::proper, PropertyKind::acyclic, PropertyKind::star,
                                 PropertyKind::injective};

// Orbits under colour renaming: maps whose colours first appear in the order 0, 1, 2, ...
std::uint64_t orbit_count(const Graph& g, int k, PropertyKind p)
{
    std::uint64_t total = 0;
    oracle::for_each_map(g.order(), k, [&](const std::vector<int>& c) {
        int next = 0;
        for (int x : c) {
            if (x > next) return true;
            if (x == next) ++next;
        }
        total += oracle::valid(g, c, p);
        return true;
    });
    return total;
}

}  // namespace

TEST_CASE("decide matches brute force on every graph with at most five vertices")
{
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : oracle::all_graphs(n))
            for (PropertyKind p : kAll)
                for (int k = 0; k <= 3; ++k) {
                    const Decision d = decide(g, k, p);
                    CHECK_MESSAGE((d.answer == Answer::yes) == oracle::colourable(g, k, p),
                                  describe(g) << " k=" << k << ' ' << to_string(p));
                    if (d.colouring) CHECK(oracle::valid(g, d.colouring->values(), p));
                }
}

TEST_CASE("colouring counts match brute force, labelled and up to renaming")
{
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::gnp(rng.between(1, 6), 0.45, rng);
        for (PropertyKind p : kAll) {
            const int k = rng.between(1, 4);
            CHECK(count_colourings(g, k, p) == oracle::count(g, k, p));
            CHECK(count_colourings(g, k, p, {}, Symmetry::up_to_renaming) == orbit_count(g, k, p));
        }
    }
}

TEST_CASE("chromatic numbers of small named graphs")
{
    CHECK(chromatic(cycle_graph(5), PropertyKind::star).k == 4);
    CHECK(chromatic(cycle_graph(5), PropertyKind::injective).k == 5);
    CHECK(chromatic(complete_bipartite(3, 3), PropertyKind::injective).k == 6);
    CHECK(chromatic(named_graph("3K3"), PropertyKind::injective).k == 3);
    CHECK(chromatic(cycle_graph(4), PropertyKind::acyclic).k == 3);
    CHECK(chromatic(petersen_graph(), PropertyKind::proper).k == 3);
    CHECK(chromatic(Graph(0), PropertyKind::injective).k == 0);
}

TEST_CASE("chromatic numbers agree with brute force and are monotone across disciplines")
{
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::gnp(rng.between(1, 7), 0.4, rng);
        int previous = 0;
        for (PropertyKind p : kAll) {
            const ChromaticResult r = chromatic(g, p);
            CHECK(r.k >= previous);
            CHECK(oracle::valid(g, r.colouring.values(), p));
            if (g.order() <= 6) CHECK(r.k == oracle::chromatic(g, p));
            previous = r.k;
        }
    }
}

TEST_CASE("precoloured vertices keep their colours")
{
    const Graph g = path_graph(4);
    const Decision d = decide(g, 2, PropertyKind::proper, {}, {{0, 1}});
    REQUIRE(d.answer == Answer::yes);
    CHECK((*d.colouring)[0] == 1);
    CHECK((*d.colouring)[2] == 1);
    CHECK(decide(g, 2, PropertyKind::proper, {}, {{0, 1}, {2, 0}}).answer == Answer::no);
    CHECK(decide(g, 3, PropertyKind::proper, {}, {{3, 2}}).colouring->values()[3] == 2);
}

TEST_CASE("budgets stop the search")
{
    const Graph hard = complete_graph(9);
    SearchBudget tiny;
    tiny.node_limit = 5;
    CHECK(decide(hard, 8, PropertyKind::proper, tiny).answer == Answer::exhausted);
    CHECK_THROWS_AS(count_colourings(hard, 9, PropertyKind::proper, tiny), BudgetExhausted);
    CHECK_THROWS_AS(chromatic(hard, PropertyKind::proper, tiny), BudgetExhausted);
}

TEST_CASE("seeded searches are reproducible and valid")
{
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::gnp(9, 0.3, rng);
        SearchBudget b;
        b.seed = 1000 + static_cast<std::uint64_t>(trial);
        const Decision a = decide(g, 4, PropertyKind::star, b);
        const Decision c = decide(g, 4, PropertyKind::star, b);
        CHECK(a.answer == c.answer);
        CHECK(a.colouring == c.colouring);
        CHECK(a.answer == decide(g, 4, PropertyKind::star).answer);
        if (auto s = sample_colouring(g, 5, PropertyKind::acyclic, 77, 100000)) CHECK(oracle::valid(g, s->values(), PropertyKind::acyclic));
    }
}

TEST_CASE("forced_equal on paths")
{
    CHECK(forced_equal(path_graph(3), 2, PropertyKind::proper, {0, 2}).equal);
    const auto split = forced_equal(path_graph(4), 2, PropertyKind::proper, {0, 3});
    CHECK_FALSE(split.equal);
    REQUIRE(split.counterexample);
    CHECK((*split.counterexample)[0] != (*split.counterexample)[3]);
    CHECK_THROWS_AS(forced_equal(complete_graph(3), 2, PropertyKind::proper, {0, 1}), NotColourableError);
}

TEST_CASE("forced_equal agrees with enumerating every colouring")
{
    Rng rng(21);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = oracle::gnp(rng.between(2, 6), 0.5, rng);
        const PropertyKind p = kAll[rng.below(4)];
        const int k = rng.between(2, 4);
        const std::vector<Vertex> s{0, g.order() - 1};
        bool any = false;
        bool equal = true;
        oracle::for_each_map(g.order(), k, [&](const std::vector<int>& c) {
            if (oracle::valid(g, c, p)) {
                any = true;
                equal = equal && c[0] == c.back();
            }
            return true;
        });
        if (!any) {
            CHECK_THROWS_AS(forced_equal(g, k, p, s), NotColourableError);
            continue;
        }
        CHECK(forced_equal(g, k, p, s).equal == equal);
    }
}

TEST_CASE("bichromatic paths")
{
    const Graph g = path_graph(5);
    const Colouring c({0, 1, 0, 1, 0});
    CHECK(has_bichromatic_path(g, c, 0, 4));
    CHECK(bichromatic_path_colours(g, c, 0, 4) == std::vector<int>{1});
    const Colouring d({0, 1, 2, 1, 0});
    CHECK_FALSE(has_bichromatic_path(g, d, 0, 4));
}

TEST_CASE("distance-two graph joins exactly the pairs at distance one or two")
{
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::gnp(8, 0.3, rng);
        const Graph sq = distance_two_graph(g);
        for (Vertex u = 0; u < g.order(); ++u) {
            const auto dist = bfs_distances(g, u);
            for (Vertex v = 0; v < g.order(); ++v)
                if (u != v) CHECK(sq.adjacent(u, v) == (dist[static_cast<std::size_t>(v)] == 1 || dist[static_cast<std::size_t>(v)] == 2));
        }
    }
}

TEST_CASE("clique lower bound never exceeds the chromatic number")
{
    Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::gnp(7, 0.5, rng);
        for (PropertyKind p : kAll) CHECK(clique_lower_bound(g, p) <= chromatic(g, p).k);
    }
}

TEST_CASE("edge decisions through the line graph")
{
    CHECK(decide_edge(Multigraph::from_graph(complete_graph(4)), 3, PropertyKind::proper).answer == Answer::yes);
    CHECK(decide_edge(Multigraph::from_graph(complete_bipartite(1, 4)), 3, PropertyKind::proper).answer == Answer::no);
    Multigraph m(2);
    m.add_bundle(0, 1, 3);
    CHECK(decide_edge(m, 2, PropertyKind::proper).answer == Answer::no);
    CHECK(decide_edge(m, 3, PropertyKind::proper).answer == Answer::yes);
}
