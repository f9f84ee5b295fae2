#include <doctest.h>

#include <sstream>

#include "colourbench/io.hpp"
#include "colourbench/named.hpp"
#include "oracles.hpp"

using namespace colourbench;

namespace {

Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in, "test");
}

// Position of the ParseError raised by `f`, or (0, 0) if none.
template <class F>
std::pair<int, int> error_position(F f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

}  // namespace

TEST_CASE("graph files")
{
    const Graph g = parse_graph("# a path\n3 2\n0 1\n1 2  # last edge\n");
    CHECK(g == path_graph(3));
    CHECK(parse_graph("0 0\n").order() == 0);
}

TEST_CASE("graph parse errors carry line and column")
{
    CHECK(error_position([] { parse_graph("3 2\n0 1\n1 x\n"); }) == std::pair{3, 3});
    CHECK(error_position([] { parse_graph("3 2\n0 1\n"); }).first == 3);
    CHECK(error_position([] { parse_graph("3 1\n0 3\n"); }) == std::pair{2, 3});
    CHECK(error_position([] { parse_graph("3 1\n1 1\n"); }) == std::pair{2, 1});
    CHECK(error_position([] { parse_graph("3 2\n0 1\n1 0\n"); }) == std::pair{3, 1});
    CHECK(error_position([] { parse_graph("2 1\n0 1\n5\n"); }) == std::pair{3, 1});
    try {
        parse_graph("2 1\n0 q\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("test:2:3") != std::string::npos);
    }
}

TEST_CASE("graph round trips")
{
    Rng rng(81);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::gnp(rng.between(0, 12), rng.unit(), rng);
        std::ostringstream out;
        write_graph(out, g);
        CHECK(parse_graph(out.str()) == g);
    }
}

TEST_CASE("multigraph round trips")
{
    Multigraph m(3);
    m.add_bundle(0, 1, 2);
    m.add_edge(1, 2);
    std::ostringstream out;
    write_multigraph(out, m);
    std::istringstream in(out.str());
    const Multigraph back = read_multigraph(in);
    CHECK(back.size() == 3);
    CHECK(back.multiplicity(0, 1) == 2);
    std::istringstream dup("2 2\n0 1 0\n0 1 0\n");
    CHECK_THROWS_AS(read_multigraph(dup), ParseError);
}

TEST_CASE("colouring files")
{
    std::istringstream with_header("k 3\n0 1\n2\n");
    const ColouringFile c = read_colouring(with_header);
    CHECK(c.k == 3);
    CHECK(c.colouring.values() == std::vector<int>{0, 1, 2});
    std::istringstream plain("1 0 1");
    CHECK_FALSE(read_colouring(plain).k.has_value());
    std::istringstream short_file("0 1");
    CHECK_THROWS_AS(read_colouring(short_file, "c", 3), ParseError);
    std::istringstream above("k 2\n0 2\n");
    CHECK_THROWS_AS(read_colouring(above), ParseError);

    std::ostringstream out;
    write_colouring(out, {2, 0, 1}, 3);
    std::istringstream back(out.str());
    CHECK(read_colouring(back).colouring.values() == std::vector<int>{2, 0, 1});
    CHECK(out.str().rfind("k 3\n", 0) == 0);
}

TEST_CASE("list files")
{
    std::istringstream in("3 2\n0\n0 1\n1\n");
    const ListAssignment lists = read_lists(in);
    CHECK(lists.k == 2);
    CHECK(lists.lists[1] == std::vector<int>{0, 1});
    std::istringstream repeated("1 2\n0 0\n");
    CHECK_THROWS_AS(read_lists(repeated), ParseError);
    std::istringstream range("1 2\n2\n");
    CHECK_THROWS_AS(read_lists(range), ParseError);
}
