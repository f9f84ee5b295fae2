#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colourbench/colouring.hpp"
#include "colourbench/graph.hpp"

namespace colourbench {

enum class Status { polynomial, np_complete, open, trivial };

/// "P", "NP-complete", "Open", "Trivial".
std::string_view to_string(Status s);

struct Verdict {
    Status status = Status::open;
    std::string citation;  // the theorem or lemma the verdict rests on
    std::string note;
};

/// Complexity of the acyclic, star or injective colouring problem on H-free
/// graphs, with k fixed or part of the input. H has at most 8 vertices.
Verdict classify(PropertyKind problem, const Graph& h, std::optional<int> k = std::nullopt);

/// The summary table for the three problems plus the plain colouring row for
/// context. Rows for the named forbidden graphs list the computed status of
/// each problem.
std::string table_text(const std::vector<std::string>& named = {"P4", "P1+P3", "2P2", "2P1+P4", "3P1", "C3", "K1,3",
                                                                  "5P1"});

}  // namespace colourbench
