#include "colourbench/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "colourbench/classifier.hpp"
#include "colourbench/engine.hpp"
#include "colourbench/io.hpp"
#include "colourbench/named.hpp"
#include "colourbench/poly_injective.hpp"
#include "colourbench/random.hpp"
#include "colourbench/recognizers.hpp"
#include "colourbench/reductions.hpp"
#include "colourbench/verifiers.hpp"

namespace colourbench::cli {

namespace {

/// Input or argument problem that maps to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budget {
    std::uint64_t node_limit = 0;
    std::uint64_t time_limit_ms = 0;
    std::optional<std::uint64_t> seed;

    SearchBudget get() const
    {
        SearchBudget b;
        b.node_limit = node_limit;
        b.time_limit = std::chrono::milliseconds(time_limit_ms);
        b.seed = seed;
        return b;
    }
};

void add_budget(CLI::App* app, Budget& b)
{
    app->add_option("--node-limit", b.node_limit, "Search node limit (0 = unlimited)");
    app->add_option("--time-limit", b.time_limit_ms, "Search time limit in milliseconds (0 = unlimited)");
    app->add_option("--seed", b.seed, "Seed for value ordering");
}

PropertyKind property_of(const std::string& text)
{
    const auto p = parse_property(text);
    if (!p) throw InputError("unknown property '" + text + "' (proper, acyclic, star, injective)");
    return *p;
}

/// A file path, `-` for standard input, or a graph name such as C5 or 2P1+P4.
Graph load_graph(const std::string& source)
{
    if (source == "-") return read_graph(std::cin, "<stdin>");
    if (std::filesystem::exists(source)) return read_graph_file(source);
    try {
        return named_graph(source);
    } catch (const std::invalid_argument& e) {
        throw InputError("'" + source + "' is neither a readable file nor a graph name (" + e.what() + ")");
    }
}

Multigraph load_multigraph(const std::string& source)
{
    if (source == "-") return read_multigraph(std::cin, "<stdin>");
    std::ifstream in(source);
    if (!in) throw InputError("cannot open '" + source + "'");
    return read_multigraph(in, source);
}

/// Writes to `path`, or to `out` when the path is empty or `-`.
template <class F>
void emit(const std::string& path, std::ostream& out, F write)
{
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write '" + path + "'");
    write(file);
}

void print_colouring(std::ostream& out, const Colouring& c)
{
    write_colouring(out, c.values(), c.num_colours());
}

// ---- solve -------------------------------------------------------------

struct SolveArgs {
    std::string property = "proper";
    std::optional<int> k;
    bool min = false;
    bool edges = false;
    bool multigraph = false;
    bool show = false;
    std::string input;
    Budget budget;
};

int solve(const SolveArgs& a, std::ostream& out)
{
    const PropertyKind p = property_of(a.property);
    Graph g;
    std::optional<Multigraph> m;
    if (a.multigraph || a.edges) {
        m = a.multigraph ? load_multigraph(a.input) : Multigraph::from_graph(load_graph(a.input));
        g = line_graph(*m);
    } else {
        g = load_graph(a.input);
    }
    // re-verify in the source's own terms before printing
    auto certified = [&](const Colouring& c) {
        const bool ok = m ? !verify_edge(*m, EdgeColouring(c.values()), p) : is_valid(g, c, p);
        if (!ok) throw std::logic_error("solver returned a colouring that fails verification");
    };
    if (a.min) {
        const ChromaticResult r = chromatic(g, p, a.budget.get());
        certified(r.colouring);
        out << r.k << '\n';
        if (a.show) print_colouring(out, r.colouring);
        return ok;
    }
    const Decision d = decide(g, *a.k, p, a.budget.get());
    if (d.answer == Answer::exhausted) throw BudgetExhausted("search budget exhausted", d.nodes);
    if (d.answer == Answer::no) {
        out << "no\n";
        return ok;
    }
    certified(*d.colouring);
    out << "yes\n";
    write_colouring(out, d.colouring->values(), *a.k);
    return ok;
}

// ---- solve-poly --------------------------------------------------------

struct PolyArgs {
    std::string h;
    std::string input;
};

int solve_poly(const PolyArgs& a, std::ostream& out)
{
    const Graph h = named_graph(a.h);
    const Graph g = load_graph(a.input);
    if (!is_h_free(g, h)) throw InputError("input graph is not " + a.h + "-free");
    const InjectiveSolution s = injective_dispatch(g, h);
    out << s.colours << '\n';
    out << "route " << s.route << '\n';
    print_colouring(out, s.colouring);
    return ok;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
    std::string property = "proper";
    bool edges = false;
    bool multigraph = false;
    std::string input;
    std::string colouring;
};

int verify_cmd(const VerifyArgs& a, std::ostream& out)
{
    const PropertyKind p = property_of(a.property);
    std::optional<Violation> bad;
    std::optional<int> k;
    if (a.edges || a.multigraph) {
        const Multigraph m = a.multigraph ? load_multigraph(a.input) : Multigraph::from_graph(load_graph(a.input));
        const ColouringFile c = read_colouring_file(a.colouring, m.size());
        k = c.k;
        bad = verify_edge(m, EdgeColouring(c.colouring.values()), p);
    } else {
        const Graph g = load_graph(a.input);
        const ColouringFile c = read_colouring_file(a.colouring, g.order());
        k = c.k;
        bad = verify(g, c.colouring, p);
    }
    if (bad) {
        out << "invalid " << describe(*bad) << '\n';
        return verification_failure;
    }
    out << "valid";
    if (k) out << " with at most " << *k << " colours";
    out << '\n';
    return ok;
}

// ---- reduce ------------------------------------------------------------

struct ReduceArgs {
    std::string lemma;
    std::optional<int> k;
    int girth = 3;
    std::string input;
    std::string output;
    std::string map;
    std::string lists;
    std::string f;
    bool trust_f = false;
    Budget budget;
};

int need_k(const ReduceArgs& a)
{
    if (!a.k) throw InputError("--k is required for " + a.lemma);
    return *a.k;
}

ReductionResult run_reduction(const ReduceArgs& a)
{
    const std::string& l = a.lemma;
    if (l == "l-4col") {
        if (a.lists.empty()) throw InputError("--lists is required for l-4col");
        return reduce_listcol_to_colouring(load_graph(a.input), read_lists_file(a.lists));
    }
    const Graph g = load_graph(a.input);
    if (l == "l-az") return reduce_edgecol_to_acyclic_edgecol(g, need_k(a));
    if (l == "l-linestar") return reduce_edgecol_to_star_edgecol(g, need_k(a));
    if (l == "star-col-high-girth") return reduce_3col_to_star3(g, a.girth);
    if (l == "l-evencycle") return reduce_star3_to_stark(g, need_k(a));
    if (l == "l-triangle") return reduce_injective_bipartite(g, need_k(a));
    if (l == "l-girth") {
        EqualityGadgetOptions options;
        options.trust_f = a.trust_f;
        options.budget = a.budget.get();
        std::optional<Graph> f;
        if (!a.f.empty()) f = load_graph(a.f);
        EqualityGadget gadget = acyclic_equality_gadget(need_k(a), f, options);
        if (!certify_equality_gadget(gadget, a.budget.get()))
            throw std::logic_error("the constructed equality gadget failed verification");
        return reduce_acyclic_vertexsplit(g, gadget, need_k(a));
    }
    if (l == "l-5p1") {
        const auto cover = clique_cover(g, 3);
        if (!cover) throw InputError("the input graph is not covered by three cliques");
        return reduce_colouring_to_injective_5p1(g, *cover, need_k(a));
    }
    if (l == "l-3p1acyclic") {
        const auto side = bipartition(g);
        if (!side) throw InputError("the input graph is not bipartite");
        return reduce_connmatching_to_acyclic(g, *side);
    }
    throw InputError("unknown lemma '" + l +
                     "' (l-az, l-linestar, star-col-high-girth, l-evencycle, l-girth, l-triangle, l-5p1, l-4col, "
                     "l-3p1acyclic)");
}

int reduce(const ReduceArgs& a, std::ostream& out)
{
    const ReductionResult r = run_reduction(a);
    emit(a.output, out, [&](std::ostream& o) {
        if (r.multigraph) write_multigraph(o, *r.multigraph);
        else write_graph(o, *r.graph);
    });
    if (!a.map.empty()) emit(a.map, out, [&](std::ostream& o) { write_map(o, r); });
    if (!a.output.empty() && a.output != "-") {
        out << "lemma " << r.lemma << '\n';
        out << "target_k " << r.target_k << '\n';
        if (r.trivially_no) out << "trivially_no true\n";
    }
    return ok;
}

// ---- gadget ------------------------------------------------------------

struct GadgetArgs {
    std::string name;
    int k = 3;
    int g = 3;
    bool check = false;
    std::string output;
    std::string f;
    bool trust_f = false;
    Budget budget;
};

int gadget(const GadgetArgs& a, std::ostream& out)
{
    if (a.name == "acyclic-equality") {
        EqualityGadgetOptions options;
        options.trust_f = a.trust_f;
        options.budget = a.budget.get();
        std::optional<Graph> f;
        if (!a.f.empty()) f = load_graph(a.f);
        EqualityGadget e = acyclic_equality_gadget(a.k, f, options);
        emit(a.output, out, [&](std::ostream& o) { write_graph(o, e.s); });
        out << "x1 " << e.x1 << "\nx3 " << e.x3 << '\n';
        if (!a.check) return ok;
        const bool holds = certify_equality_gadget(e, a.budget.get());
        out << (holds ? "claim holds\n" : "claim fails\n");
        return holds ? ok : verification_failure;
    }
    Gadget gd;
    if (a.name == "acyclic-edge") gd = acyclic_edge_gadget(a.k);
    else if (a.name == "star-edge") gd = star_edge_gadget(a.k);
    else if (a.name == "star-vertex") gd = star_vertex_gadget(a.g);
    else throw InputError("unknown gadget '" + a.name + "' (acyclic-edge, star-edge, star-vertex, acyclic-equality)");

    emit(a.output, out, [&](std::ostream& o) {
        if (gd.edge_gadget) write_multigraph(o, gd.multigraph);
        else write_graph(o, gd.graph);
    });
    out << "designated " << (gd.edge_gadget ? "edges" : "vertices");
    for (int x : gd.designated) out << ' ' << x;
    out << '\n';
    if (!a.check) return ok;
    if (!gd.claim_asserted) out << "note: no claim is made for this parameter; checking anyway\n";
    const ForcedEqualResult r = check_gadget_claim(gd, a.budget.get());
    out << (r.equal ? "claim holds" : "claim fails") << " (" << r.nodes << " nodes)\n";
    if (r.counterexample) print_colouring(out, *r.counterexample);
    return r.equal ? ok : verification_failure;
}

// ---- classify ----------------------------------------------------------

struct ClassifyArgs {
    std::string problem;
    std::string h;
    std::optional<int> k;
    bool table = false;
    bool verbose = false;
};

int classify_cmd(const ClassifyArgs& a, std::ostream& out)
{
    if (a.table) {
        out << table_text();
        return ok;
    }
    if (a.problem.empty() || a.h.empty()) throw InputError("classify needs --problem and --H, or --table");
    const PropertyKind p = property_of(a.problem);
    const Verdict v = classify(p, named_graph(a.h), a.k);
    out << to_string(v.status) << " (" << v.citation << ")\n";
    if (a.verbose) out << v.note << '\n';
    return ok;
}

// ---- recognize ---------------------------------------------------------

struct RecognizeArgs {
    std::string tag;
    std::string input;
};

int recognize_cmd(const RecognizeArgs& a, std::ostream& out)
{
    const ClassQuery q = ClassQuery::parse(a.tag);
    const Recognition r = recognize(load_graph(a.input), q);
    out << (r.member ? "member" : "not a member") << " of " << q.tag() << '\n';
    if (!r.witness.empty()) out << r.witness << '\n';
    return r.member ? ok : verification_failure;
}

// ---- random ------------------------------------------------------------

struct RandomArgs {
    std::string tag;
    int n = 8;
    std::uint64_t seed = 1;
    int attempts = 100000;
    std::string output;
};

int random_cmd(const RandomArgs& a, std::ostream& out)
{
    const ClassQuery q = ClassQuery::parse(a.tag);
    Graph g;
    try {
        g = random_instance(q.tag(), a.n, a.seed, a.attempts);
    } catch (const std::runtime_error& e) {
        throw BudgetExhausted(e.what());
    }
    emit(a.output, out, [&](std::ostream& o) { write_graph(o, g); });
    return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Workbench for acyclic, star and injective colouring"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Exact colouring: decide k or find the minimum");
    solve_cmd->add_option("--property", sa.property, "proper, acyclic, star or injective");
    auto* k_opt = solve_cmd->add_option("--k", sa.k, "Number of colours");
    auto* min_opt = solve_cmd->add_flag("--min", sa.min, "Minimum number of colours");
    k_opt->excludes(min_opt);
    solve_cmd->add_flag("--edges", sa.edges, "Colour the edges of the input graph");
    solve_cmd->add_flag("--multigraph", sa.multigraph, "Input is a multigraph file; colour its edges");
    solve_cmd->add_flag("--colouring", sa.show, "With --min, also print an optimal colouring");
    solve_cmd->add_option("graph", sa.input, "Graph file, - for stdin, or a name such as C5")->required();
    add_budget(solve_cmd, sa.budget);

    PolyArgs pa;
    auto* poly_cmd = app.add_subcommand("solve-poly", "Polynomial injective colouring on an H-free class");
    poly_cmd->add_option("--H", pa.h, "Forbidden induced subgraph")->required();
    poly_cmd->add_option("graph", pa.input, "Graph file or name")->required();

    VerifyArgs va;
    auto* verify_sub = app.add_subcommand("verify", "Check a colouring");
    verify_sub->add_option("--property", va.property, "proper, acyclic, star or injective");
    verify_sub->add_flag("--edges", va.edges, "The colouring is of edges");
    verify_sub->add_flag("--multigraph", va.multigraph, "Input is a multigraph file; the colouring is of edges");
    verify_sub->add_option("graph", va.input, "Graph file or name")->required();
    verify_sub->add_option("colouring", va.colouring, "Colouring file")->required();

    ReduceArgs ra;
    auto* reduce_sub = app.add_subcommand("reduce", "Build a hardness-reduction instance");
    reduce_sub->add_option("--lemma", ra.lemma, "Which construction")->required();
    reduce_sub->add_option("--k", ra.k, "Number of colours");
    reduce_sub->add_option("--girth", ra.girth, "Girth parameter of the vertex gadget");
    reduce_sub->add_option("--lists", ra.lists, "List file for l-4col");
    reduce_sub->add_option("--f", ra.f, "Graph F for l-girth (default K_{2k(k-1)+1})");
    reduce_sub->add_flag("--trust-f", ra.trust_f, "Skip the colourability check on F");
    reduce_sub->add_option("-o,--output", ra.output, "Output graph file");
    reduce_sub->add_option("--emit-map", ra.map, "Write the forward map and back-translation recipe");
    reduce_sub->add_option("graph", ra.input, "Graph file or name")->required();
    add_budget(reduce_sub, ra.budget);

    GadgetArgs ga;
    auto* gadget_sub = app.add_subcommand("gadget", "Emit a gadget and optionally check its claim");
    gadget_sub->add_option("--name", ga.name, "acyclic-edge, star-edge, star-vertex or acyclic-equality")->required();
    gadget_sub->add_option("--k", ga.k, "Palette size");
    gadget_sub->add_option("--g", ga.g, "Girth parameter of star-vertex");
    gadget_sub->add_flag("--check", ga.check, "Verify the forced-colour claim");
    gadget_sub->add_option("--f", ga.f, "Graph F for acyclic-equality");
    gadget_sub->add_flag("--trust-f", ga.trust_f, "Skip the colourability check on F");
    gadget_sub->add_option("-o,--output", ga.output, "Output file");
    add_budget(gadget_sub, ga.budget);

    ClassifyArgs ca;
    auto* classify_sub = app.add_subcommand("classify", "Complexity on H-free graphs");
    classify_sub->add_option("--problem", ca.problem, "acyclic, star or injective");
    classify_sub->add_option("--H", ca.h, "Forbidden induced subgraph");
    classify_sub->add_option("--k", ca.k, "Fixed number of colours");
    classify_sub->add_flag("--table", ca.table, "Print the summary table");
    classify_sub->add_flag("--verbose", ca.verbose, "Print the justification");

    RecognizeArgs rc;
    auto* recognize_sub = app.add_subcommand("recognize", "Test membership in a graph class");
    recognize_sub->add_option("--class", rc.tag, "Class tag such as 4P1-free or split")->required();
    recognize_sub->add_option("graph", rc.input, "Graph file or name")->required();

    RandomArgs xa;
    auto* random_sub = app.add_subcommand("random", "Random member of a graph class");
    random_sub->add_option("--class", xa.tag, "Class tag")->required();
    random_sub->add_option("--n", xa.n, "Number of vertices")->check(CLI::NonNegativeNumber);
    random_sub->add_option("--seed", xa.seed, "Seed");
    random_sub->add_option("--attempts", xa.attempts, "Rejection sampling budget")->check(CLI::PositiveNumber);
    random_sub->add_option("-o,--output", xa.output, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*solve_cmd) {
            if (!sa.k && !sa.min) throw InputError("solve needs --k or --min");
            return solve(sa, out);
        }
        if (*poly_cmd) return solve_poly(pa, out);
        if (*verify_sub) return verify_cmd(va, out);
        if (*reduce_sub) return reduce(ra, out);
        if (*gadget_sub) return gadget(ga, out);
        if (*classify_sub) return classify_cmd(ca, out);
        if (*recognize_sub) return recognize_cmd(rc, out);
        if (*random_sub) return random_cmd(xa, out);
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << '\n';
        return budget_exhausted;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const NotColourableError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return verification_failure;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace colourbench::cli
