#include "colourbench/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace colourbench {

ParseError::ParseError(const std::string& source, int line, int column, const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column)
{
}

namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

class Tokens {
public:
    Tokens(std::istream& in, std::string source) : source_(std::move(source))
    {
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        int line = 1;
        int column = 1;
        std::size_t i = 0;
        while (i < text.size()) {
            const char c = text[i];
            if (c == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
                continue;
            }
            if (c == '\n') {
                ++line;
                column = 1;
                ++i;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                ++column;
                ++i;
                continue;
            }
            Token t{"", line, column};
            while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' && text[i] != '\n' &&
                   text[i] != '#') {
                t.text += text[i++];
                ++column;
            }
            tokens_.push_back(std::move(t));
        }
        end_line_ = line;
    }

    bool done() const { return pos_ >= tokens_.size(); }
    const Token& peek() const { return tokens_.at(pos_); }

    int line_of_next() const { return done() ? end_line_ : peek().line; }

    std::string word(const char* what)
    {
        if (done()) fail_at_end(std::string("expected ") + what);
        return tokens_[pos_++].text;
    }

    int integer(const char* what, int lo, int hi)
    {
        if (done()) fail_at_end(std::string("expected ") + what);
        const Token& t = tokens_[pos_];
        int value = 0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            fail(t, std::string("expected ") + what + ", found '" + t.text + "'");
        if (value < lo || value > hi)
            fail(t, std::string(what) + " " + std::to_string(value) + " out of range [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
        ++pos_;
        return value;
    }

    void expect_end()
    {
        if (!done()) fail(peek(), "unexpected trailing token '" + peek().text + "'");
    }

    [[noreturn]] void fail(const Token& t, const std::string& why) const
    {
        throw ParseError(source_, t.line, t.column, why);
    }
    [[noreturn]] void fail_here(const std::string& why) const
    {
        if (done()) fail_at_end(why);
        fail(peek(), why);
    }
    [[noreturn]] void fail_at_end(const std::string& why) const
    {
        throw ParseError(source_, end_line_, 1, why + " (end of input)");
    }

private:
    std::string source_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int end_line_ = 1;
};

constexpr int kMaxCount = 50'000'000;

std::ifstream open_or_throw(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source)
{
    Tokens toks(in, source);
    const int n = toks.integer("vertex count", 0, kMaxCount);
    const int m = toks.integer("edge count", 0, kMaxCount);
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (toks.done()) toks.fail_at_end("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        const Token at = toks.peek();
        const int u = toks.integer("vertex", 0, n - 1);
        const int v = toks.integer("vertex", 0, n - 1);
        if (u == v) toks.fail(at, "self-loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v)) toks.fail(at, "parallel edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    toks.expect_end();
    return g;
}

Graph read_graph_file(const std::string& path)
{
    auto in = open_or_throw(path);
    return read_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Multigraph read_multigraph(std::istream& in, const std::string& source)
{
    Tokens toks(in, source);
    const int n = toks.integer("vertex count", 0, kMaxCount);
    const int m = toks.integer("edge count", 0, kMaxCount);
    struct Row {
        int u, v, id;
    };
    std::vector<Row> rows;
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        if (toks.done()) toks.fail_at_end("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        const Token at = toks.peek();
        const int u = toks.integer("vertex", 0, n - 1);
        const int v = toks.integer("vertex", 0, n - 1);
        const Token id_at = toks.peek();
        const int id = toks.integer("edge id", 0, m - 1);
        if (u == v) toks.fail(at, "self-loop at vertex " + std::to_string(u));
        if (seen[static_cast<std::size_t>(id)]) toks.fail(id_at, "duplicate edge id " + std::to_string(id));
        seen[static_cast<std::size_t>(id)] = 1;
        rows.push_back({u, v, id});
    }
    toks.expect_end();
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
    Multigraph mg(n);
    for (const auto& r : rows) mg.add_edge(r.u, r.v);
    return mg;
}

void write_multigraph(std::ostream& out, const Multigraph& m)
{
    out << m.order() << ' ' << m.size() << '\n';
    for (const auto& e : m.edges()) out << e.u << ' ' << e.v << ' ' << e.id << '\n';
}

ColouringFile read_colouring(std::istream& in, const std::string& source, std::optional<int> expected)
{
    Tokens toks(in, source);
    ColouringFile out;
    if (!toks.done() && toks.peek().text == "k") {
        toks.word("header");
        out.k = toks.integer("colour count", 0, kMaxCount);
    }
    const int hi = out.k ? std::max(0, *out.k - 1) : kMaxCount;
    std::vector<int> colours;
    while (!toks.done()) {
        if (out.k && *out.k == 0) toks.fail_here("colour present but header declares k 0");
        colours.push_back(toks.integer("colour", 0, hi));
    }
    if (expected && static_cast<int>(colours.size()) != *expected)
        toks.fail_at_end("expected " + std::to_string(*expected) + " colours, found " + std::to_string(colours.size()));
    out.colouring = Colouring(std::move(colours));
    return out;
}

ColouringFile read_colouring_file(const std::string& path, std::optional<int> expected)
{
    auto in = open_or_throw(path);
    return read_colouring(in, path, expected);
}

void write_colouring(std::ostream& out, const std::vector<int>& colours, int k)
{
    out << "k " << k << '\n';
    for (int c : colours) out << c << '\n';
}

ListAssignment read_lists(std::istream& in, const std::string& source)
{
    Tokens toks(in, source);
    const int n = toks.integer("vertex count", 0, kMaxCount);
    const int header_line = toks.line_of_next();
    ListAssignment out;
    out.k = toks.integer("colour count", 1, 64);
    out.lists.resize(static_cast<std::size_t>(n));
    int current_line = header_line;
    int vertex = -1;
    while (!toks.done()) {
        const Token at = toks.peek();
        if (at.line != current_line) {
            current_line = at.line;
            ++vertex;
            if (vertex >= n) toks.fail(at, "more list lines than vertices");
        }
        const int colour = toks.integer("colour", 0, out.k - 1);
        auto& list = out.lists[static_cast<std::size_t>(vertex)];
        if (std::find(list.begin(), list.end(), colour) != list.end())
            toks.fail(at, "colour " + std::to_string(colour) + " repeated in list");
        list.push_back(colour);
    }
    if (vertex + 1 != n)
        toks.fail_at_end("expected " + std::to_string(n) + " list lines, found " + std::to_string(vertex + 1));
    for (auto& list : out.lists) std::sort(list.begin(), list.end());
    return out;
}

ListAssignment read_lists_file(const std::string& path)
{
    auto in = open_or_throw(path);
    return read_lists(in, path);
}

}  // namespace colourbench
