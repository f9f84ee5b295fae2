#include "colourbench/named.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace colourbench {

Graph path_graph(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int s, int t)
{
    Graph g(s + t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
    return g;
}

Graph empty_graph(int n)
{
    return Graph(n);
}

Graph petersen_graph()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
    return g;
}

Graph repeat(const Graph& g, int copies)
{
    Graph out;
    for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
    return out;
}

namespace {

class TermParser {
public:
    TermParser(std::string_view text, std::string_view whole) : s_(text), whole_(whole) {}

    NamedGraph::Term parse()
    {
        NamedGraph::Term term;
        if (peek_digit()) term.copies = number();
        if (term.copies < 1) fail("multiplier must be positive");

        const std::string rest(s_.substr(pos_));
        if (rest == "Petersen" || rest == "petersen") {
            term.kind = NamedGraph::Kind::petersen;
            return term;
        }
        if (rest == "claw") {
            term.kind = NamedGraph::Kind::biclique;
            term.a = 1;
            term.b = 3;
            return term;
        }
        if (pos_ >= s_.size()) fail("missing graph name");
        const char head = s_[pos_++];
        switch (head) {
        case 'P':
            term.kind = NamedGraph::Kind::path;
            term.a = number();
            if (term.a < 1) fail("paths need at least one vertex");
            break;
        case 'C':
            term.kind = NamedGraph::Kind::cycle;
            term.a = number();
            if (term.a < 3) fail("cycles need at least three vertices");
            break;
        case 'K':
            parse_k(term);
            break;
        default:
            fail(std::string("unknown graph family '") + head + "'");
        }
        if (pos_ != s_.size()) fail("trailing characters");
        return term;
    }

private:
    void parse_k(NamedGraph::Term& term)
    {
        if (accept('_')) {
            if (accept('{')) {
                const int a = number();
                if (accept(',')) {
                    term.kind = NamedGraph::Kind::biclique;
                    term.a = a;
                    term.b = number();
                } else {
                    term.kind = NamedGraph::Kind::complete;
                    term.a = a;
                }
                expect('}');
            } else {
                term.kind = NamedGraph::Kind::complete;
                term.a = number();
            }
            return;
        }
        if (accept('(')) {
            term.kind = NamedGraph::Kind::complete;
            term.a = number();
            expect(')');
            return;
        }
        const std::size_t start = pos_;
        const int a = number();
        const std::size_t digits = pos_ - start;
        if (accept(',')) {
            term.kind = NamedGraph::Kind::biclique;
            term.a = a;
            term.b = number();
        } else if (digits == 2) {
            term.kind = NamedGraph::Kind::biclique;
            term.a = s_[start] - '0';
            term.b = s_[start + 1] - '0';
        } else if (digits == 1) {
            term.kind = NamedGraph::Kind::complete;
            term.a = a;
        } else {
            fail("ambiguous K name; write K_n or K(n) for large complete graphs");
        }
    }

    bool peek_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    bool accept(char c)
    {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    int number()
    {
        if (!peek_digit()) fail("expected a number");
        long value = 0;
        while (peek_digit()) {
            value = value * 10 + (s_[pos_++] - '0');
            if (value > 1'000'000) fail("number too large");
        }
        return static_cast<int>(value);
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("bad graph name '" + std::string(whole_) + "': " + why);
    }

    std::string_view s_;
    std::string_view whole_;
    std::size_t pos_ = 0;
};

Graph expand_term(const NamedGraph::Term& t)
{
    Graph one;
    switch (t.kind) {
    case NamedGraph::Kind::path: one = path_graph(t.a); break;
    case NamedGraph::Kind::cycle: one = cycle_graph(t.a); break;
    case NamedGraph::Kind::complete: one = complete_graph(t.a); break;
    case NamedGraph::Kind::biclique: one = complete_bipartite(t.a, t.b); break;
    case NamedGraph::Kind::petersen: one = petersen_graph(); break;
    }
    return repeat(one, t.copies);
}

}  // namespace

NamedGraph NamedGraph::parse(std::string_view text)
{
    NamedGraph out;
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = text.find('+', start);
        const auto piece = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        if (piece.empty()) throw std::invalid_argument("bad graph name '" + std::string(text) + "': empty term");
        out.terms_.push_back(TermParser(piece, text).parse());
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return out;
}

Graph NamedGraph::expand() const
{
    Graph g;
    for (const auto& t : terms_) g = disjoint_union(g, expand_term(t));
    return g;
}

std::string NamedGraph::text() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out << '+';
        first = false;
        if (t.copies != 1) out << t.copies;
        switch (t.kind) {
        case Kind::path: out << 'P' << t.a; break;
        case Kind::cycle: out << 'C' << t.a; break;
        case Kind::complete:
            if (t.a < 10) out << 'K' << t.a;
            else out << "K_" << t.a;
            break;
        case Kind::biclique: out << "K_{" << t.a << ',' << t.b << '}'; break;
        case Kind::petersen: out << "Petersen"; break;
        }
    }
    return out.str();
}

}  // namespace colourbench
