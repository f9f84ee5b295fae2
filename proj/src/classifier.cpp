#include "colourbench/classifier.hpp"

#include <iomanip>
#include <sstream>

#include "colourbench/named.hpp"
#include "colourbench/recognizers.hpp"

namespace colourbench {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::polynomial: return "P";
    case Status::np_complete: return "NP-complete";
    case Status::open: return "Open";
    case Status::trivial: return "Trivial";
    }
    return "?";
}

namespace {

// Fixed k >= 3 (>= 4 for injective): hardness for every H that is not a linear forest.
Verdict fixed_k(PropertyKind problem, const Graph& h)
{
    const char* theorem = problem == PropertyKind::acyclic ? "Theorem t-acyclic(ii)"
                          : problem == PropertyKind::star  ? "Theorem t-star(ii)"
                                                           : "Theorem t-injective(ii)";
    if (is_linear_forest(h))
        return {Status::polynomial, std::string(theorem) + ", Corollary c-linearforest",
                "H is a linear forest: bounded treewidth or a large biclique"};
    const bool forest = is_forest(h);
    switch (problem) {
    case PropertyKind::acyclic:
        if (!forest)
            return {Status::np_complete, "Lemma l-girth",
                    "H contains a cycle: hard on 2-degenerate bipartite graphs of girth above |V(H)|"};
        return {Status::np_complete, "Lemma l-az", "H contains K1,3: hard on line graphs of multigraphs"};
    case PropertyKind::star:
        if (!forest && !is_bipartite(h))
            return {Status::np_complete, "Theorem t-star(ii), Albertson et al. Lemma 7.1",
                    "H contains an odd cycle: hard on bipartite graphs"};
        if (!forest)
            return {Status::np_complete, "Lemma l-evencycle",
                    "H contains an even cycle C_p: hard on C_p-free graphs"};
        return {Status::np_complete, "Lemma l-linestar", "H contains K1,3: hard on line graphs of multigraphs"};
    case PropertyKind::injective:
        if (!is_h_free(h, cycle_graph(3)))
            return {Status::np_complete, "Lemma l-triangle", "H contains C3: hard on bipartite graphs"};
        if (!forest)
            return {Status::np_complete, "Theorem t-injective(ii), Mahdian",
                    "H contains a cycle C_p, p >= 4: hard on line graphs of bipartite graphs of large girth"};
        return {Status::np_complete, "Theorem t-injective(ii), Mahdian",
                "H contains K1,3: hard on line graphs of bipartite graphs"};
    case PropertyKind::proper: break;
    }
    throw std::invalid_argument("only acyclic, star and injective colouring are classified");
}

Verdict free_k(PropertyKind problem, const Graph& h)
{
    if (problem == PropertyKind::injective) {
        const Graph top = named_graph("2P1+P4");
        if (is_induced_subgraph(h, top)) {
            if (is_isomorphic(h, top))
                return {Status::open, "Table 1", "the one open case for injective colouring"};
            if (is_induced_subgraph(h, named_graph("P1+P4")))
                return {Status::polynomial, "Lemma l-p1p4", "H is an induced subgraph of P1+P4"};
            if (is_induced_subgraph(h, named_graph("2P1+P3")))
                return {Status::polynomial, "Lemma l-2p1p3", "H is an induced subgraph of 2P1+P3"};
            return {Status::polynomial, "Lemma l-3p1p2", "H is an induced subgraph of 3P1+P2"};
        }
        if (!is_linear_forest(h)) {
            Verdict v = fixed_k(problem, h);
            v.note += " (already for fixed k >= 4)";
            return v;
        }
        if (!is_h_free(h, named_graph("2P2")))
            return {Status::np_complete, "Theorem t-injective(i), Bodlaender et al.",
                    "H contains 2P2: hard on split graphs"};
        return {Status::np_complete, "Lemma l-5p1", "H contains 5P1: hard on 5P1-free graphs"};
    }

    const bool acyclic = problem == PropertyKind::acyclic;
    const char* theorem = acyclic ? "Theorem t-acyclic(i)" : "Theorem t-star(i)";
    if (is_induced_subgraph(h, path_graph(4)))
        return {Status::polynomial, std::string(theorem) + ", Lyons", "H is an induced subgraph of P4"};
    if (is_isomorphic(h, named_graph("2P2")))
        return {Status::open, "Table 1", std::string("the one open case for ") + (acyclic ? "acyclic" : "star") +
                                             " colouring"};
    if (!is_linear_forest(h)) {
        Verdict v = fixed_k(problem, h);
        v.note += " (already for fixed k >= 3)";
        return v;
    }
    if (acyclic)
        return {Status::np_complete, "Lemma l-3p1acyclic", "H contains 3P1: hard on co-bipartite graphs"};
    return {Status::np_complete, "Theorem t-star(i), Shalu and Antony", "H contains 3P1: hard on co-bipartite graphs"};
}

}  // namespace

Verdict classify(PropertyKind problem, const Graph& h, std::optional<int> k)
{
    if (problem == PropertyKind::proper)
        throw std::invalid_argument("only acyclic, star and injective colouring are classified");
    if (h.order() > kDefaultPatternBound)
        throw SizeBoundError("forbidden graph has more than " + std::to_string(kDefaultPatternBound) + " vertices");
    if (!k) return free_k(problem, h);
    if (*k < 1) throw std::invalid_argument("k must be positive");
    if (problem == PropertyKind::injective) {
        if (*k <= 3)
            return {Status::trivial, "injective k-colouring, k <= 3",
                    "polynomial-time solvable on all graphs, so H plays no role"};
        return fixed_k(problem, h);
    }
    if (*k <= 2) {
        const char* why = problem == PropertyKind::acyclic ? "acyclically 2-colourable iff a forest"
                                                           : "star 2-colourable iff every component is a star";
        return {Status::polynomial, "k <= 2 characterization", why};
    }
    return fixed_k(problem, h);
}

std::string table_text(const std::vector<std::string>& named)
{
    std::ostringstream out;
    auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
        out << std::left << std::setw(36) << a << " | " << std::setw(20) << b << " | " << c << '\n';
    };
    row("problem", "polynomial time", "NP-complete");
    row("Colouring (context, not computed)", "H <=i P4 or P1+P3", "else");
    row("Acyclic Colouring", "H <=i P4", "else except for 1 open case: H=2P2");
    row("Star Colouring", "H <=i P4", "else except for 1 open case: H=2P2");
    row("Injective Colouring", "H <i 2P1+P4", "else except for 1 open case: H=2P1+P4");
    row("k-Colouring (context, not computed)", "depends on k", "infinitely many open cases for all k >= 3");
    row("Acyclic k-Colouring (k >= 3)", "H is a linear forest", "else");
    row("Star k-Colouring (k >= 3)", "H is a linear forest", "else");
    row("Injective k-Colouring (k >= 4)", "H is a linear forest", "else");
    if (named.empty()) return out.str();

    out << '\n';
    out << std::left << std::setw(8) << "H";
    for (const char* col : {"acyclic", "star", "injective", "acyclic-k3", "star-k3", "injective-k4"})
        out << " | " << std::setw(12) << col;
    out << '\n';
    for (const std::string& name : named) {
        const Graph h = named_graph(name);
        out << std::left << std::setw(8) << name;
        for (PropertyKind p : {PropertyKind::acyclic, PropertyKind::star, PropertyKind::injective})
            out << " | " << std::setw(12) << to_string(classify(p, h).status);
        out << " | " << std::setw(12) << to_string(classify(PropertyKind::acyclic, h, 3).status);
        out << " | " << std::setw(12) << to_string(classify(PropertyKind::star, h, 3).status);
        out << " | " << std::setw(12) << to_string(classify(PropertyKind::injective, h, 4).status);
        out << '\n';
    }
    return out.str();
}

}  // namespace colourbench
