#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colourbench/colouring.hpp"
#include "colourbench/graph.hpp"

namespace colourbench {

/// Malformed input text. `line` and `column` are 1-based; the message
/// already names the source and position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, int line, int column, const std::string& what);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Text formats. All indices 0-based; `#` starts a comment running to end of line.
//
//   graph:       `n m` then m lines `u v`
//   multigraph:  `n m` then m lines `u v id`, ids a permutation of 0..m-1
//   colouring:   optional header `k <value>`, then one colour per vertex
//   lists:       `n k` then n lines, each the colours allowed at that vertex

Graph read_graph(std::istream& in, const std::string& source = "<graph>");
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

Multigraph read_multigraph(std::istream& in, const std::string& source = "<multigraph>");
void write_multigraph(std::ostream& out, const Multigraph& m);

struct ColouringFile {
    Colouring colouring;
    std::optional<int> k;
};

/// Reads colours until end of input. When `expected` is given the count must match.
ColouringFile read_colouring(std::istream& in, const std::string& source = "<colouring>",
                             std::optional<int> expected = std::nullopt);
ColouringFile read_colouring_file(const std::string& path, std::optional<int> expected = std::nullopt);
void write_colouring(std::ostream& out, const std::vector<int>& colours, int k);

struct ListAssignment {
    int k = 0;
    std::vector<std::vector<int>> lists;
};

ListAssignment read_lists(std::istream& in, const std::string& source = "<lists>");
ListAssignment read_lists_file(const std::string& path);

}  // namespace colourbench
