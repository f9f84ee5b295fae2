#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "colourbench/cli.hpp"
#include "colourbench/io.hpp"
#include "colourbench/named.hpp"
#include "colourbench/recognizers.hpp"
#include "colourbench/verifiers.hpp"

using namespace colourbench;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "colourbench");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(COLOURBENCH_TEST_DATA) + "/" + name; }

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("colourbench_test_" + name)).string();
}

// The colouring printed after the first line of `text`.
ColouringFile colouring_after_first_line(const std::string& text)
{
    std::istringstream in(text.substr(text.find('\n') + 1));
    return read_colouring(in);
}

}  // namespace

TEST_CASE("solve finds minima and prints verified colourings")
{
    const Run k33 = run({"solve", "--min", "K33"});
    CHECK(k33.code == cli::ok);
    CHECK(k33.out == "2\n");
    CHECK(run({"solve", "--property", "acyclic", "--min", data("k33.graph")}).out == "4\n");
    CHECK(run({"solve", "--property", "star", "--min", "C5"}).out.rfind("4\n", 0) == 0);

    const Run yes = run({"solve", "--property", "injective", "--k", "4", "Petersen"});
    REQUIRE(yes.code == cli::ok);
    CHECK(yes.out.rfind("no\n", 0) == 0);

    const Run star = run({"solve", "--property", "star", "--k", "3", "C4"});
    REQUIRE(star.out.rfind("yes\n", 0) == 0);
    const ColouringFile c = colouring_after_first_line(star.out);
    CHECK(c.k == 3);
    CHECK(is_valid(cycle_graph(4), c.colouring, PropertyKind::star));

    const Run shown = run({"solve", "--property", "acyclic", "--min", "--colouring", "Petersen"});
    const ColouringFile best = colouring_after_first_line(shown.out);
    CHECK(is_valid(petersen_graph(), best.colouring, PropertyKind::acyclic));
    CHECK(best.colouring.num_colours() == std::stoi(shown.out));

    CHECK(run({"solve", "--edges", "--property", "star", "--min", "K4"}).out == "5\n");
}

TEST_CASE("verify reports a witness and exit code 2")
{
    CHECK(run({"verify", data("c4.graph"), data("c4_proper.col")}).code == cli::ok);
    const Run cycle = run({"verify", "--property", "acyclic", data("c4.graph"), data("c4_proper.col")});
    CHECK(cycle.code == cli::verification_failure);
    CHECK(cycle.out.find("bichromatic-cycle") != std::string::npos);
    const Run edge = run({"verify", data("c4.graph"), data("c4_improper.col")});
    CHECK(edge.code == cli::verification_failure);
    CHECK(edge.out.find("improper-edge") != std::string::npos);
    CHECK(run({"verify", "--property", "acyclic", data("k33.graph"), data("k33_acyclic.col")}).code == cli::ok);
}

TEST_CASE("malformed input and bad arguments exit with code 1")
{
    const Run bad = run({"solve", "--k", "2", data("bad.graph")});
    CHECK(bad.code == cli::usage_error);
    CHECK(bad.err.find("bad.graph:3:3") != std::string::npos);
    CHECK(run({"solve", "--k", "2", "NotAGraph"}).code == cli::usage_error);
    CHECK(run({"solve", "C5"}).code == cli::usage_error);
    CHECK(run({"solve", "--property", "harmonious", "--k", "2", "C5"}).code == cli::usage_error);
    CHECK(run({"frobnicate"}).code == cli::usage_error);
    CHECK(run({}).code == cli::usage_error);
    CHECK(run({"--help"}).code == cli::ok);
    CHECK(run({"random", "--class", "9P1-free", "--n", "4"}).code == cli::usage_error);
    CHECK(run({"reduce", "--lemma", "l-5p1", "--k", "3", "4P1"}).code == cli::usage_error);
}

TEST_CASE("budget exhaustion exits with code 3")
{
    CHECK(run({"solve", "--property", "acyclic", "--k", "3", "--node-limit", "5", "Petersen"}).code ==
          cli::budget_exhausted);
    CHECK(run({"solve", "--property", "star", "--min", "--node-limit", "3", "Petersen"}).code ==
          cli::budget_exhausted);
    CHECK(run({"random", "--class", "C3-free", "--n", "30", "--attempts", "1", "--seed", "2"}).code ==
          cli::budget_exhausted);
}

TEST_CASE("classify and recognize")
{
    CHECK(run({"classify", "--problem", "star", "--H", "2P2"}).out == "Open (Table 1)\n");
    CHECK(run({"classify", "--problem", "acyclic", "--H", "P4"}).out.rfind("P (", 0) == 0);
    CHECK(run({"classify", "--problem", "injective", "--H", "2P2"}).out.rfind("NP-complete", 0) == 0);
    CHECK(run({"classify", "--table"}).out.find("2P1+P4") != std::string::npos);
    CHECK(run({"classify", "--problem", "acyclic"}).code == cli::usage_error);

    CHECK(run({"recognize", "--class", "4P1-free", "C5"}).code == cli::ok);
    const Run no = run({"recognize", "--class", "split", "C5"});
    CHECK(no.code == cli::verification_failure);
    CHECK(no.out.find("C5") != std::string::npos);
    CHECK(run({"recognize", "--class", "co-bipartite", data("c4.graph")}).code == cli::ok);
}

TEST_CASE("random output is reproducible and in the class")
{
    const Run a = run({"random", "--class", "2P2-free", "--n", "9", "--seed", "17"});
    const Run b = run({"random", "--class", "2P2-free", "--n", "9", "--seed", "17"});
    REQUIRE(a.code == cli::ok);
    CHECK(a.out == b.out);
    std::istringstream in(a.out);
    const Graph g = read_graph(in);
    CHECK(g.order() == 9);
    CHECK(belongs(g, ClassQuery::parse("2P2-free")));
}

TEST_CASE("solve-poly refuses graphs outside the class")
{
    const Run ok = run({"solve-poly", "--H", "P4", "K33"});
    CHECK(ok.code == cli::ok);
    CHECK(ok.out.rfind("6\n", 0) == 0);
    CHECK(run({"solve-poly", "--H", "P4", "C5"}).code == cli::usage_error);
    CHECK(run({"solve-poly", "--H", "3P1+P2", "C5"}).code == cli::ok);
}

TEST_CASE("reduce writes the instance and the map")
{
    const std::string graph_out = temp_path("reduced.graph");
    const std::string map_out = temp_path("reduced.map.json");
    const Run r = run({"reduce", "--lemma", "l-triangle", "--k", "3", "-o", graph_out, "--emit-map", map_out, "P3"});
    REQUIRE(r.code == cli::ok);
    CHECK(r.out.find("target_k 3") != std::string::npos);
    const Graph g = read_graph_file(graph_out);
    CHECK(g.order() == 3 + 2 * 3);
    std::ifstream map(map_out);
    std::stringstream text;
    text << map.rdbuf();
    CHECK(text.str().find("lemma l-triangle") != std::string::npos);
    std::filesystem::remove(graph_out);
    std::filesystem::remove(map_out);

    const Run lists = run({"reduce", "--lemma", "l-4col", "--lists", data("p3.lists"), data("p3.graph")});
    CHECK(lists.code == cli::ok);
    CHECK(run({"reduce", "--lemma", "l-az", "--k", "3", "K3"}).out.rfind("39 ", 0) == 0);
    CHECK(run({"reduce", "--lemma", "l-az", "K3"}).code == cli::usage_error);
    CHECK(run({"reduce", "--lemma", "l-nonsense", "--k", "3", "K3"}).code == cli::usage_error);
}

TEST_CASE("gadget claims can be checked from the command line")
{
    const Run edge = run({"gadget", "--name", "star-edge", "--k", "3", "--check"});
    CHECK(edge.code == cli::ok);
    CHECK(edge.out.find("claim holds") != std::string::npos);
    const Run vertex = run({"gadget", "--name", "star-vertex", "--g", "1"});
    CHECK(vertex.code == cli::ok);
    CHECK(vertex.out.rfind("28 28", 0) == 0);
    CHECK(run({"gadget", "--name", "acyclic-equality", "--k", "2", "--f", "K5", "--check"}).code == cli::ok);
    CHECK(run({"gadget", "--name", "widget"}).code == cli::usage_error);
}
