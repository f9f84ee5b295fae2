#include <doctest.h>

#include "colourbench/named.hpp"
#include "colourbench/verifiers.hpp"
#include "oracles.hpp"

using namespace colourbench;

namespace {

constexpr PropertyKind kAll[] = {PropertyKind::proper, PropertyKind::acyclic, PropertyKind::star,
                                 PropertyKind::injective};

Multigraph random_multigraph(Rng& rng, int n, int m)
{
    Multigraph out(n);
    for (int i = 0; i < m; ++i) {
        const Vertex u = rng.between(0, n - 1);
        Vertex v = rng.between(0, n - 2);
        if (v >= u) ++v;
        out.add_edge(u, v);
    }
    return out;
}

}  // namespace

TEST_CASE("violations of each discipline")
{
    auto kind = [](const Graph& g, std::vector<int> c, PropertyKind p) {
        const auto v = verify(g, Colouring(std::move(c)), p);
        REQUIRE(v.has_value());
        return v->kind;
    };
    CHECK(kind(cycle_graph(4), {0, 1, 0, 1}, PropertyKind::acyclic) == Violation::Kind::bichromatic_cycle);
    CHECK(kind(path_graph(4), {0, 1, 0, 1}, PropertyKind::star) == Violation::Kind::bichromatic_p4);
    CHECK(kind(complete_bipartite(1, 3), {0, 1, 1, 1}, PropertyKind::injective) ==
          Violation::Kind::repeated_neighbour_colour);
    CHECK(kind(path_graph(2), {0, 0}, PropertyKind::star) == Violation::Kind::improper_edge);
    CHECK(is_valid(path_graph(4), Colouring({0, 1, 2, 0}), PropertyKind::star));
    CHECK(to_string(Violation::Kind::bichromatic_cycle) == "bichromatic-cycle");
}

TEST_CASE("partial colourings are rejected")
{
    CHECK_THROWS_AS(verify(path_graph(3), Colouring(std::vector<int>{0, 1}), PropertyKind::proper), NotTotalError);
    CHECK_THROWS_AS(verify(path_graph(3), Colouring({0, -1, 0}), PropertyKind::proper), NotTotalError);
}

TEST_CASE("verify agrees with the class-union definitions and its witnesses hold")
{
    Rng rng(12);
    for (int trial = 0; trial < 600; ++trial) {
        const Graph g = oracle::gnp(rng.between(1, 9), rng.unit(), rng);
        const Colouring c(oracle::random_map(g.order(), rng.between(1, 5), rng));
        for (PropertyKind p : kAll) {
            const auto v = verify(g, c, p);
            CHECK(v.has_value() != oracle::valid(g, c.values(), p));
            if (v) CHECK(witness_holds(g, c, *v));
        }
    }
}

TEST_CASE("injective implies star implies acyclic implies proper")
{
    Rng rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = oracle::gnp(rng.between(1, 9), rng.unit(), rng);
        const Colouring c(oracle::random_map(g.order(), rng.between(1, 6), rng));
        if (is_valid(g, c, PropertyKind::injective)) CHECK(is_valid(g, c, PropertyKind::star));
        if (is_valid(g, c, PropertyKind::star)) CHECK(is_valid(g, c, PropertyKind::acyclic));
        if (is_valid(g, c, PropertyKind::acyclic)) CHECK(is_valid(g, c, PropertyKind::proper));
    }
}

TEST_CASE("two star formulations agree on every colouring of small graphs")
{
    Rng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::gnp(rng.between(1, 7), 0.45, rng);
        oracle::for_each_map(g.order(), 3, [&](const std::vector<int>& c) {
            const Colouring col(c);
            CHECK(is_valid(g, col, PropertyKind::star) == star_by_components(g, col));
            return true;
        });
    }
}

TEST_CASE("the two injective definitions agree")
{
    CHECK(injective_definitions_agree(cycle_graph(6), Colouring({0, 1, 2, 0, 1, 2})).by_class_unions);
    CHECK(injective_definitions_agree(complete_bipartite(1, 3), Colouring({0, 1, 2, 3})).by_neighbourhoods);
    const auto p3 = injective_definitions_agree(path_graph(3), Colouring({0, 1, 0}));
    CHECK_FALSE(p3.by_class_unions);
    CHECK(p3.agree());
    Rng rng(15);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = oracle::gnp(rng.between(1, 8), rng.unit(), rng);
        const Colouring c(oracle::random_map(g.order(), rng.between(1, 6), rng));
        CHECK(injective_definitions_agree(g, c).agree());
    }
}

TEST_CASE("edge colouring checks")
{
    CHECK_FALSE(verify_edge(Multigraph::from_graph(complete_graph(3)), EdgeColouring({0, 1, 2}), PropertyKind::proper));
    CHECK(verify_edge(Multigraph::from_graph(cycle_graph(4)), EdgeColouring({0, 1, 0, 1}), PropertyKind::acyclic));
    CHECK(verify_edge(Multigraph::from_graph(path_graph(5)), EdgeColouring({0, 1, 0, 1}), PropertyKind::star));
    CHECK_FALSE(verify_edge(Multigraph::from_graph(path_graph(4)), EdgeColouring({0, 1, 0}), PropertyKind::star));

    Rng rng(16);
    for (int trial = 0; trial < 400; ++trial) {
        const Multigraph m = random_multigraph(rng, rng.between(2, 7), rng.between(1, 12));
        const EdgeColouring c(oracle::random_map(m.size(), rng.between(2, 4), rng));
        for (PropertyKind p : kAll) {
            const bool direct = edge_colouring_ok_direct(m, c, p);
            CHECK(direct == !verify(line_graph(m), c.as_vertex_colouring(), p).has_value());
            CHECK(direct == !verify_edge(m, c, p).has_value());
        }
    }
}
