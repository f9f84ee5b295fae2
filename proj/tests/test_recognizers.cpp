#include <doctest.h>

#include "colourbench/engine.hpp"
#include "colourbench/named.hpp"
#include "colourbench/random.hpp"
#include "colourbench/recognizers.hpp"
#include "oracles.hpp"

using namespace colourbench;

namespace {

// Split iff some subset is a clique whose complement is independent.
bool split_by_search(const Graph& g)
{
    const int n = g.order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v) {
                const bool cu = mask >> u & 1u;
                const bool cv = mask >> v & 1u;
                if (cu && cv && !g.adjacent(u, v)) ok = false;
                if (!cu && !cv && g.adjacent(u, v)) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& part)
{
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
            if (!g.adjacent(part[i], part[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("H-free examples")
{
    CHECK(is_h_free(cycle_graph(5), named_graph("3P1")));
    CHECK(is_h_free(named_graph("3K3"), named_graph("4P1")));
    CHECK_FALSE(is_h_free(complete_bipartite(3, 3), cycle_graph(4)));
}

TEST_CASE("forest classes")
{
    CHECK(is_linear_forest(named_graph("P3+P2")));
    CHECK_FALSE(is_linear_forest(complete_bipartite(1, 3)));
    CHECK_FALSE(is_linear_forest(cycle_graph(3)));
    CHECK(is_star_forest(named_graph("K1,3+P2+P1")));
    CHECK_FALSE(is_star_forest(path_graph(4)));
    CHECK(is_forest(path_graph(7)));
}

TEST_CASE("clique covers")
{
    const auto c4 = clique_cover(cycle_graph(4), 2);
    REQUIRE(c4);
    CHECK(c4->size() == 2);
    for (const auto& part : *c4) CHECK(is_clique(cycle_graph(4), part));
    CHECK_FALSE(clique_cover(cycle_graph(5), 2));
    CHECK(clique_cover(complement(cycle_graph(6)), 3));
    CHECK_THROWS(clique_cover(cycle_graph(5), 4));

    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::gnp(rng.between(1, 9), 0.6, rng);
        for (int t = 1; t <= 3; ++t) {
            const auto cover = clique_cover(g, t);
            CHECK(cover.has_value() == (decide(complement(g), t, PropertyKind::proper).answer == Answer::yes));
            CHECK(cover.has_value() == oracle::colourable(complement(g), t, PropertyKind::proper));
            if (cover) {
                std::size_t total = 0;
                for (const auto& part : *cover) {
                    CHECK(is_clique(g, part));
                    total += part.size();
                }
                CHECK(total == static_cast<std::size_t>(g.order()));
            }
        }
    }
}

TEST_CASE("split graphs")
{
    CHECK(is_split(complete_bipartite(1, 3)));
    CHECK_FALSE(is_split(cycle_graph(4)));
    CHECK_FALSE(is_split(cycle_graph(5)));
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = trial % 2 ? oracle::gnp(rng.between(1, 10), rng.unit(), rng)
                                  : random_instance("split", rng.between(1, 10), rng.next());
        CHECK(is_split(g) == split_by_search(g));
        if (auto part = split_partition(g)) {
            CHECK(is_clique(g, part->clique));
            CHECK(part->clique.size() + part->independent.size() == static_cast<std::size_t>(g.order()));
        }
    }
}

TEST_CASE("H-free is inherited by supergraphs of H")
{
    std::vector<Graph> small;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& h : oracle::all_graphs(n)) small.push_back(h);
    const auto five = oracle::all_graphs(5);
    small.insert(small.end(), five.begin(), five.end());
    Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::gnp(rng.between(3, 9), rng.unit(), rng);
        for (const Graph& h : small) {
            if (!is_h_free(g, h)) continue;
            // every H containing h as an induced subgraph is also absent
            for (const Graph& bigger : five)
                if (is_induced_subgraph(h, bigger)) CHECK(is_h_free(g, bigger));
        }
    }
}

TEST_CASE("class tags")
{
    CHECK(ClassQuery::parse("2P1+P4-free").kind() == ClassQuery::Kind::h_free);
    CHECK(ClassQuery::parse("h-free(3P1+P2)").forbidden_name() == "3P1+P2");
    CHECK(ClassQuery::parse("clique-coverable(3)").cover_size() == 3);
    CHECK(ClassQuery::parse("split").tag() == "split");
    CHECK_THROWS(ClassQuery::parse("planar"));
    CHECK_THROWS(ClassQuery::parse("clique-coverable(4)"));
    CHECK_THROWS_AS(ClassQuery::parse("9P1-free"), SizeBoundError);

    const Recognition r = recognize(cycle_graph(5), ClassQuery::parse("P4-free"));
    CHECK_FALSE(r.member);
    CHECK(r.witness.find("induced P4") != std::string::npos);
    CHECK(recognize(cycle_graph(4), ClassQuery::parse("co-bipartite")).member);
    CHECK(recognize(path_graph(5), ClassQuery::parse("linear-forest")).member);
    CHECK_FALSE(recognize(cycle_graph(5), ClassQuery::parse("bipartite")).member);
}

TEST_CASE("random instances belong to their class and are reproducible")
{
    for (const char* tag : {"4P1-free", "split", "bipartite", "P1+P4-free", "2P1+P3-free", "3P1+P2-free",
                            "co-bipartite", "linear-forest", "p4-free", "clique-coverable(3)"}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Graph g = random_instance(tag, 8, seed);
            CHECK(g.order() == 8);
            CHECK(belongs(g, ClassQuery::parse(tag)));
            CHECK(random_instance(tag, 8, seed) == g);
        }
    }
    CHECK_THROWS_AS(random_instance("P1-free", 3, 1, 50), std::runtime_error);
}
