#include <doctest.h>

#include <map>

#include "colourbench/classifier.hpp"
#include "colourbench/engine.hpp"
#include "colourbench/named.hpp"
#include "colourbench/random.hpp"
#include "colourbench/recognizers.hpp"
#include "oracles.hpp"

using namespace colourbench;

namespace {

constexpr PropertyKind kProblems[] = {PropertyKind::acyclic, PropertyKind::star, PropertyKind::injective};

const std::vector<std::optional<int>> kParameters{std::nullopt, 1, 2, 3, 4, 5};

Status status(PropertyKind p, const char* h, std::optional<int> k = std::nullopt)
{
    return classify(p, named_graph(h), k).status;
}

}  // namespace

TEST_CASE("classifier examples")
{
    const Verdict p4 = classify(PropertyKind::acyclic, path_graph(4));
    CHECK(p4.status == Status::polynomial);
    CHECK(p4.citation.find("Lyons") != std::string::npos);

    const Verdict open = classify(PropertyKind::star, named_graph("2P2"));
    CHECK(open.status == Status::open);
    CHECK(open.citation == "Table 1");

    const Verdict split = classify(PropertyKind::injective, named_graph("2P2"));
    CHECK(split.status == Status::np_complete);
    CHECK(split.note.find("split") != std::string::npos);

    CHECK(classify(PropertyKind::injective, complete_graph(3), 4).citation.find("l-triangle") != std::string::npos);
    CHECK(status(PropertyKind::acyclic, "P1+P3", 3) == Status::polynomial);
    CHECK(classify(PropertyKind::injective, complete_bipartite(1, 3), 5).citation.find("Mahdian") != std::string::npos);
    CHECK(status(PropertyKind::injective, "C3", 3) == Status::trivial);
    CHECK(status(PropertyKind::star, "K1,3", 2) == Status::polynomial);

    CHECK_THROWS_AS(classify(PropertyKind::proper, path_graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(classify(PropertyKind::star, empty_graph(9)), SizeBoundError);
}

TEST_CASE("the named rows of the summary table")
{
    // (acyclic, star, injective) with k in the input, then acyclic k=3, star k=3, injective k=4
    const std::map<std::string, std::array<Status, 6>> expected{
        {"P4", {Status::polynomial, Status::polynomial, Status::polynomial, Status::polynomial, Status::polynomial,
                Status::polynomial}},
        {"P1+P3", {Status::np_complete, Status::np_complete, Status::polynomial, Status::polynomial,
                   Status::polynomial, Status::polynomial}},
        {"2P2", {Status::open, Status::open, Status::np_complete, Status::polynomial, Status::polynomial,
                 Status::polynomial}},
        {"2P1+P4", {Status::np_complete, Status::np_complete, Status::open, Status::polynomial, Status::polynomial,
                    Status::polynomial}},
        {"3P1", {Status::np_complete, Status::np_complete, Status::polynomial, Status::polynomial, Status::polynomial,
                 Status::polynomial}},
        {"C3", {Status::np_complete, Status::np_complete, Status::np_complete, Status::np_complete,
                Status::np_complete, Status::np_complete}},
        {"K1,3", {Status::np_complete, Status::np_complete, Status::np_complete, Status::np_complete,
                  Status::np_complete, Status::np_complete}},
        {"5P1", {Status::np_complete, Status::np_complete, Status::np_complete, Status::polynomial,
                 Status::polynomial, Status::polynomial}},
    };
    for (const auto& [name, row] : expected) {
        CAPTURE(name);
        const Graph h = named_graph(name);
        CHECK(classify(PropertyKind::acyclic, h).status == row[0]);
        CHECK(classify(PropertyKind::star, h).status == row[1]);
        CHECK(classify(PropertyKind::injective, h).status == row[2]);
        CHECK(classify(PropertyKind::acyclic, h, 3).status == row[3]);
        CHECK(classify(PropertyKind::star, h, 3).status == row[4]);
        CHECK(classify(PropertyKind::injective, h, 4).status == row[5]);
    }
    const std::string table = table_text();
    CHECK(table.find("else except for 1 open case: H=2P2") != std::string::npos);
    CHECK(table.find("else except for 1 open case: H=2P1+P4") != std::string::npos);
    CHECK(table.find("2P1+P4   | NP-complete  | NP-complete  | Open") != std::string::npos);
}

TEST_CASE("every graph on at most six vertices gets a cited verdict, and Open only where the table says")
{
    const Graph two_p2 = named_graph("2P2");
    const Graph two_p1_p4 = named_graph("2P1+P4");
    for (int n = 1; n <= 6; ++n)
        for (const Graph& h : oracle::all_graphs(n))
            for (PropertyKind p : kProblems)
                for (const auto& k : kParameters) {
                    const Verdict v = classify(p, h, k);
                    CHECK_FALSE(v.citation.empty());
                    if (v.status != Status::open) continue;
                    CHECK_FALSE(k.has_value());
                    CHECK(is_isomorphic(h, p == PropertyKind::injective ? two_p1_p4 : two_p2));
                }
}

TEST_CASE("verdicts never get harder on smaller forbidden graphs")
{
    std::vector<Graph> graphs;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& h : oracle::all_graphs(n)) graphs.push_back(h);
    for (PropertyKind p : kProblems)
        for (const auto& k : kParameters) {
            std::vector<Status> verdicts;
            for (const Graph& h : graphs) verdicts.push_back(classify(p, h, k).status);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                if (verdicts[i] != Status::polynomial) continue;
                for (std::size_t j = 0; j < graphs.size(); ++j)
                    if (graphs[j].order() <= graphs[i].order() && is_induced_subgraph(graphs[j], graphs[i]))
                        CHECK(verdicts[j] != Status::np_complete);
            }
        }
}

TEST_CASE("fixed-k polynomial verdicts are consistent with exact solving on small H-free graphs")
{
    // sanity only: the engine finishes on random linear-forest-free instances
    Rng rng(71);
    for (const char* h : {"P1+P3", "2P2", "3P1"}) {
        REQUIRE(status(PropertyKind::star, h, 3) == Status::polynomial);
        for (int trial = 0; trial < 10; ++trial) {
            const Graph g = random_instance(std::string(h) + "-free", rng.between(4, 10), rng.next());
            CHECK(decide(g, 3, PropertyKind::star).answer != Answer::exhausted);
        }
    }
}
