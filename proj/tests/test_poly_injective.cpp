#include <doctest.h>

#include <algorithm>
#include <map>

#include "colourbench/engine.hpp"
#include "colourbench/named.hpp"
#include "colourbench/poly_injective.hpp"
#include "colourbench/random.hpp"
#include "colourbench/recognizers.hpp"
#include "colourbench/verifiers.hpp"
#include "oracles.hpp"

using namespace colourbench;

namespace {

// Largest colour class inside one component; colours repeat across components.
std::size_t largest_class(const Graph& g, const Colouring& c)
{
    std::size_t best = 0;
    for (const auto& comp : components(g)) {
        std::map<int, std::size_t> sizes;
        for (Vertex v : comp) best = std::max(best, ++sizes[c[v]]);
    }
    return best;
}

void check_solution(const Graph& g, const InjectiveSolution& s, std::size_t class_bound)
{
    CHECK(is_valid(g, s.colouring, PropertyKind::injective));
    CHECK(s.colouring.distinct_colours() == s.colours);
    CHECK(largest_class(g, s.colouring) <= class_bound);
}

int exact(const Graph& g) { return chromatic(g, PropertyKind::injective).k; }

}  // namespace

TEST_CASE("optimal 2-injective examples")
{
    CHECK(optimal_2injective(path_graph(3)).colours == 3);
    const auto p4 = optimal_2injective(path_graph(4));
    CHECK(p4.colours == 3);
    REQUIRE(p4.pairs.size() == 1);
    CHECK(p4.pairs[0] == Edge{0, 3});
    CHECK(optimal_2injective(cycle_graph(6)).colours == 3);
}

TEST_CASE("optimal 2-injective matches brute force and the matching formula")
{
    Rng rng(51);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::gnp(rng.between(1, 9), rng.unit(), rng);
        const TwoInjectiveSolution s = optimal_2injective(g);
        CHECK(s.colours == oracle::optimal_2injective(g));
        const int mu = static_cast<int>(s.pairs.size());
        CHECK(s.colours == mu + (g.order() - 2 * mu));
        CHECK(is_valid(g, s.colouring, PropertyKind::injective));
        CHECK(largest_class(g, s.colouring) <= 2);
    }
}

TEST_CASE("subset 2-injective leaves outside vertices uncoloured")
{
    const Graph g = cycle_graph(6);
    const auto s = optimal_2injective(g, {0, 1, 3});
    CHECK(s.colouring[2] == -1);
    CHECK(s.colouring[0] == s.colouring[3]);
    CHECK(s.colours == 2);
}

TEST_CASE("P4-free examples")
{
    CHECK(injective_p4free(complete_graph(3)).colours == 3);
    CHECK(injective_p4free(named_graph("2K3")).colours == 3);
    CHECK(injective_p4free(complete_bipartite(2, 2)).colours == 4);
    CHECK_THROWS_AS(injective_p4free(path_graph(4)), PreconditionError);
}

TEST_CASE("(P1+P4)-free examples")
{
    CHECK(injective_p1p4free(path_graph(4)).colours == 3);
    CHECK(injective_p1p4free(cycle_graph(5)).colours == 5);
    CHECK(injective_p1p4free(complete_bipartite(1, 4)).colours == 5);
    CHECK_THROWS_AS(injective_p1p4free(path_graph(6)), PreconditionError);
}

TEST_CASE("4P1-free examples")
{
    const auto s = injective_4p1free(named_graph("3K3"));
    CHECK(s.colours == 3);
    for (const auto& cls : s.colouring.classes()) CHECK(cls.size() == 3);
    CHECK(injective_4p1free(cycle_graph(5)).colours == 5);
    CHECK(injective_4p1free(complete_bipartite(3, 3)).colours == 6);
    CHECK_THROWS_AS(injective_4p1free(named_graph("4P1")), PreconditionError);
}

TEST_CASE("(2P1+P3)-free examples")
{
    CHECK(injective_2p1p3free(cycle_graph(5)).colours == 5);
    CHECK(injective_2p1p3free(complete_bipartite(3, 3)).colours == 6);
    REQUIRE(is_h_free(cycle_graph(6), named_graph("2P1+P3")));
    CHECK(injective_2p1p3free(cycle_graph(6)).colours == 3);
}

TEST_CASE("(3P1+P2)-free examples")
{
    CHECK(injective_3p1p2free(complete_bipartite(1, 3)).colours == 4);
    CHECK(injective_3p1p2free(named_graph("3K3")).colours == 3);
    CHECK(injective_3p1p2free(cycle_graph(5)).colours == 5);
    CHECK_THROWS_AS(injective_3p1p2free(named_graph("3P1+P2")), PreconditionError);
}

TEST_CASE("dispatch")
{
    CHECK(injective_dispatch(complete_bipartite(2, 3), path_graph(4)).route == "p4-free");
    CHECK(injective_dispatch(cycle_graph(5), named_graph("3P1")).colours == 5);
    CHECK(injective_dispatch(named_graph("3K3"), named_graph("4P1")).colours == 3);
    CHECK_THROWS_AS(injective_dispatch(cycle_graph(5), named_graph("5P1")), PreconditionError);
    CHECK_THROWS_AS(injective_dispatch(path_graph(4), path_graph(4)), PreconditionError);
}

TEST_CASE("triple partitions")
{
    const Graph g = named_graph("3K3");
    const auto tp = triple_partition(g, {0, 3, 6}, true);
    REQUIRE(tp);
    CHECK(tp->t[0].empty());
    for (int i = 1; i <= 3; ++i) CHECK(tp->t[static_cast<std::size_t>(i)].size() == 2);
    CHECK_FALSE(triple_partition(g, {0, 1, 6}, false));
    CHECK_FALSE(triple_partition(complete_bipartite(1, 3), {1, 2, 3}, false));
}

TEST_CASE("each algorithm matches the exact injective chromatic number on its class")
{
    struct Case {
        const char* tag;
        InjectiveSolution (*solve)(const Graph&);
        std::size_t class_bound;
    };
    const Case cases[] = {
        {"P1+P4-free", injective_p1p4free, 2},
        {"4P1-free", injective_4p1free, 3},
        {"2P1+P3-free", injective_2p1p3free, 3},
        {"3P1+P2-free", injective_3p1p2free, 3},
    };
    for (const Case& c : cases) {
        CAPTURE(c.tag);
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            const Graph g = random_instance(c.tag, 1 + static_cast<int>(seed % 10), seed);
            const InjectiveSolution s = c.solve(g);
            check_solution(g, s, c.class_bound);
            CHECK(s.colours == exact(g));
        }
    }
}

TEST_CASE("disconnected inputs are solved per component")
{
    Rng rng(52);
    int used = 0;
    for (int trial = 0; trial < 200 && used < 40; ++trial) {
        const Graph a = random_instance("co-bipartite", rng.between(2, 6), rng.next());
        const Graph b = random_instance("co-bipartite", rng.between(1, 3), rng.next());
        const Graph g = disjoint_union(a, b);
        if (!is_h_free(g, named_graph("3P1+P2")) || is_connected(g)) continue;
        ++used;
        const InjectiveSolution s = injective_3p1p2free(g);
        CHECK(s.colours == std::max(exact(a), exact(b)));
        CHECK(s.colours == oracle::chromatic(g, PropertyKind::injective));
    }
    CHECK(used >= 20);
}
