#include "colourbench/reductions.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "colourbench/named.hpp"
#include "colourbench/verifiers.hpp"

namespace colourbench {

namespace {

void require_k(int k, int minimum, const char* what)
{
    if (k < minimum || k > kMaxColours)
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(minimum) + " <= k <= " +
                                    std::to_string(kMaxColours));
}

void bundle(Multigraph& m, Vertex u, Vertex v, int count)
{
    if (count > 0) m.add_bundle(u, v, count);
}

// 1-based position of `w` in the neighbour sequence of `v`.
int rotation_index(const Graph& g, Vertex v, Vertex w)
{
    const auto& nb = g.neighbours(v);
    return static_cast<int>(std::find(nb.begin(), nb.end(), w) - nb.begin()) + 1;
}

std::vector<int> dense(const std::vector<int>& colours)
{
    std::map<int, int> rename;
    std::vector<int> out;
    out.reserve(colours.size());
    for (int c : colours) {
        auto [it, fresh] = rename.try_emplace(c, static_cast<int>(rename.size()));
        (void)fresh;
        out.push_back(it->second);
    }
    return out;
}

// Replaces every source edge uv by a copy of `gadget`, its ends identified with u and v.
ReductionResult replace_edges(const Graph& g, const Gadget& gadget, const std::string& lemma)
{
    const Multigraph& f = gadget.multigraph;
    ReductionResult r;
    r.lemma = lemma;
    r.source = g;
    r.source_is_edge_problem = true;
    r.source_property = PropertyKind::proper;
    r.source_k = gadget.k;
    r.target_is_edge_problem = true;
    r.target_property = gadget.property;
    r.target_k = gadget.k;

    Multigraph out(g.order());
    for (const auto& [u, v] : g.edges()) {
        std::vector<Vertex> place(static_cast<std::size_t>(f.order()));
        for (Vertex x = 0; x < f.order(); ++x) {
            if (x == gadget.ends[0]) place[static_cast<std::size_t>(x)] = u;
            else if (x == gadget.ends[1]) place[static_cast<std::size_t>(x)] = v;
            else place[static_cast<std::size_t>(x)] = out.add_vertex();
        }
        std::vector<int> ids;
        for (const MultiEdge& e : f.edges())
            ids.push_back(out.add_edge(place[static_cast<std::size_t>(e.u)], place[static_cast<std::size_t>(e.v)]));
        r.representative.push_back(ids[static_cast<std::size_t>(gadget.designated[0])]);
        r.forward.push_back(std::move(ids));
    }
    r.multigraph = std::move(out);
    return r;
}

// Guards the hand-transcribed edge lists: a gadget whose claim fails at k = 3 is never used.
void require_claim(const Gadget& at_three)
{
    const ForcedEqualResult r = check_gadget_claim(at_three);
    if (!r.equal) throw std::logic_error("the " + at_three.name + " gadget fails its forced-colour claim at k = 3");
}

ReductionResult vertex_problem(const std::string& lemma, const Graph& g, PropertyKind source_p, int source_k,
                               PropertyKind target_p, int target_k)
{
    ReductionResult r;
    r.lemma = lemma;
    r.source = g;
    r.source_property = source_p;
    r.source_k = source_k;
    r.target_property = target_p;
    r.target_k = target_k;
    return r;
}

void identity_prefix(ReductionResult& r, int n)
{
    r.forward.assign(static_cast<std::size_t>(n), {});
    r.representative.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        r.forward[static_cast<std::size_t>(v)] = {v};
        r.representative[static_cast<std::size_t>(v)] = v;
    }
}

}  // namespace

Gadget acyclic_edge_gadget(int k)
{
    require_k(k, 3, "the acyclic edge gadget");
    Gadget gd;
    gd.name = "acyclic-edge";
    gd.parameter = k;
    gd.property = PropertyKind::acyclic;
    gd.k = k;
    gd.edge_gadget = true;
    Multigraph m(14);
    auto v = [](int i) { return i - 1; };
    const int first = m.add_edge(v(1), v(2));
    m.add_edge(v(2), v(4));
    bundle(m, v(2), v(3), k - 2);
    m.add_edge(v(3), v(5));
    bundle(m, v(4), v(5), k - 2);
    m.add_edge(v(4), v(6));
    m.add_edge(v(5), v(7));
    bundle(m, v(6), v(7), k - 2);
    m.add_edge(v(7), v(8));
    m.add_edge(v(8), v(9));
    bundle(m, v(8), v(10), k - 2);
    m.add_edge(v(9), v(11));
    m.add_edge(v(10), v(11));
    m.add_edge(v(10), v(12));
    bundle(m, v(11), v(13), k - 2);
    m.add_edge(v(12), v(13));
    const int last = m.add_edge(v(13), v(14));
    gd.multigraph = std::move(m);
    gd.designated = {first, last};
    gd.ends = {v(1), v(14)};
    return gd;
}

Gadget star_edge_gadget(int k)
{
    require_k(k, 3, "the star edge gadget");
    Gadget gd;
    gd.name = "star-edge";
    gd.parameter = k;
    gd.property = PropertyKind::star;
    gd.k = k;
    gd.edge_gadget = true;
    Multigraph m(10);
    auto v = [](int i) { return i - 1; };
    const int first = m.add_edge(v(1), v(2));
    m.add_edge(v(2), v(3));
    bundle(m, v(3), v(4), k - 2);
    m.add_edge(v(4), v(5));
    bundle(m, v(5), v(6), k - 2);
    m.add_edge(v(6), v(7));
    const int last = m.add_edge(v(7), v(8));
    m.add_edge(v(4), v(9));
    m.add_edge(v(5), v(10));
    gd.multigraph = std::move(m);
    gd.designated = {first, last};
    gd.ends = {v(1), v(8)};
    return gd;
}

Gadget star_vertex_gadget(int g)
{
    if (g < 1) throw std::invalid_argument("the star vertex gadget needs g >= 1");
    const int len = 12 * g;
    Gadget gd;
    gd.name = "star-vertex";
    gd.parameter = g;
    gd.property = PropertyKind::star;
    gd.k = 3;
    gd.claim_asserted = g >= 3;
    Graph h(2 * len + 4);
    auto d = [](int i) { return i - 1; };
    auto e = [len](int i) { return len + i - 1; };
    auto f = [len](int i) { return 2 * len + i - 1; };
    for (int i = 1; i <= len; ++i) h.add_edge(d(i), d(i % len + 1));
    for (int i = 1; i <= len; ++i) h.add_edge(d(i), e(i));
    for (int i = 1; i <= 4; ++i) h.add_edge(f(i), e(3 * i * g));
    gd.graph = std::move(h);
    gd.designated = {f(1), f(2), f(3), f(4)};
    gd.ends = {f(1), f(4)};
    return gd;
}

ForcedEqualResult check_gadget_claim(const Gadget& gadget, const SearchBudget& budget)
{
    if (gadget.edge_gadget)
        return forced_equal_edges(gadget.multigraph, gadget.k, gadget.property, gadget.designated, budget);
    return forced_equal(gadget.graph, gadget.k, gadget.property, gadget.designated, budget);
}

EqualityGadget acyclic_equality_gadget(int k, const std::optional<Graph>& f, const EqualityGadgetOptions& options)
{
    require_k(k, 2, "the equality gadget");
    const int palette = 2 * k * (k - 1);
    const Graph base = f ? *f : complete_graph(palette + 1);
    if (base.size() == 0) throw std::invalid_argument("F has no edges");
    if (!options.trust_f && palette <= kMaxColours) {
        const Decision d = decide(base, palette, PropertyKind::proper, options.budget);
        if (d.answer == Answer::exhausted)
            throw BudgetExhausted("budget exhausted while checking that F needs more than " +
                                      std::to_string(palette) + " colours",
                                  d.nodes);
        if (d.answer == Answer::yes)
            throw std::invalid_argument("F has a proper " + std::to_string(palette) + "-colouring");
    }

    const Graph s = subdivide(base);
    const int n = base.order();
    std::vector<char> kept(static_cast<std::size_t>(s.order()), 1);
    EqualityGadget out;
    out.k = k;
    for (int i = 0; i < base.size(); ++i) {
        const Vertex x2 = n + i;
        kept[static_cast<std::size_t>(x2)] = 0;
        out.removed.push_back(x2);
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < s.order(); ++v)
            if (kept[static_cast<std::size_t>(v)]) rest.push_back(v);
        const Graph candidate = induced_subgraph(s, rest);
        const Decision d = decide(candidate, k, PropertyKind::acyclic, options.budget);
        if (d.answer == Answer::exhausted)
            throw BudgetExhausted("budget exhausted after removing " + std::to_string(out.removed.size()) +
                                      " subdivision vertices",
                                  d.nodes);
        if (d.answer == Answer::yes) {
            out.s = candidate;
            out.x1 = base.edges()[static_cast<std::size_t>(i)].first;
            out.x3 = base.edges()[static_cast<std::size_t>(i)].second;
            return out;
        }
    }
    throw std::logic_error("removing every subdivision vertex left a graph that is not acyclically colourable");
}

bool verify_equality_gadget(const Graph& s, Vertex x1, Vertex x3, int k, const SearchBudget& budget)
{
    require_k(k, 1, "equality checking");
    bool seen = false;
    bool holds = true;
    EnumerateOptions options;
    options.symmetry = Symmetry::up_to_renaming;
    enumerate(
        s, k, PropertyKind::acyclic,
        [&](const Colouring& c) {
            seen = true;
            if (c[x1] != c[x3]) {
                holds = false;
                return false;
            }
            if (static_cast<int>(bichromatic_path_colours(s, c, x1, x3).size()) != k - 1) {
                holds = false;
                return false;
            }
            return true;
        },
        budget, options);
    return seen && holds;
}

bool certify_equality_gadget(EqualityGadget& gadget, const SearchBudget& budget)
{
    gadget.verified = verify_equality_gadget(gadget.s, gadget.x1, gadget.x3, gadget.k, budget);
    return gadget.verified;
}

bool verify_equality_gadget_by_extension(const Graph& s, Vertex x1, Vertex x3, int k, const SearchBudget& budget)
{
    require_k(k, 3, "the extension test");
    const Decision base = decide(s, k, PropertyKind::acyclic, budget);
    if (base.answer == Answer::exhausted) throw BudgetExhausted("budget exhausted colouring the gadget", base.nodes);
    if (base.answer == Answer::no) return false;
    Graph extended = s;
    const Vertex x2 = extended.add_vertex();
    extended.add_edge(x2, x1);
    extended.add_edge(x2, x3);
    const Decision ext = decide(extended, k, PropertyKind::acyclic, budget);
    if (ext.answer == Answer::exhausted)
        throw BudgetExhausted("budget exhausted colouring the extended gadget", ext.nodes);
    return ext.answer == Answer::no;
}

std::string_view to_string(Recipe r)
{
    switch (r) {
    case Recipe::representative: return "representative";
    case Recipe::palette: return "palette";
    case Recipe::greedy_extend: return "greedy-extend";
    case Recipe::matching: return "matching";
    }
    return "?";
}

Colouring back_translate(const ReductionResult& r, const Colouring& target)
{
    if (r.source_is_edge_problem) throw std::invalid_argument(r.lemma + " translates edge colourings");
    const int n = r.source.order();
    switch (r.recipe) {
    case Recipe::representative: {
        std::vector<int> colours(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) colours[static_cast<std::size_t>(v)] = target[r.representative[static_cast<std::size_t>(v)]];
        return Colouring(dense(colours));
    }
    case Recipe::palette: {
        std::vector<int> colours(static_cast<std::size_t>(n), -1);
        for (Vertex v = 0; v < n; ++v)
            for (std::size_t l = 0; l < r.palette.size(); ++l)
                if (target[r.palette[l]] == target[v]) colours[static_cast<std::size_t>(v)] = static_cast<int>(l);
        return Colouring(colours);
    }
    case Recipe::greedy_extend: {
        std::vector<int> colours(static_cast<std::size_t>(n), -1);
        std::vector<int> kept;
        std::vector<Vertex> kept_vertices;
        for (Vertex v = 0; v < n; ++v)
            if (r.representative[static_cast<std::size_t>(v)] >= 0) {
                kept_vertices.push_back(v);
                kept.push_back(target[r.representative[static_cast<std::size_t>(v)]]);
            }
        const std::vector<int> renamed = dense(kept);
        for (std::size_t i = 0; i < kept_vertices.size(); ++i) colours[static_cast<std::size_t>(kept_vertices[i])] = renamed[i];
        for (auto it = r.deleted.rbegin(); it != r.deleted.rend(); ++it) {
            std::set<int> taken;
            for (Vertex w : r.source.neighbours(*it))
                if (colours[static_cast<std::size_t>(w)] >= 0) taken.insert(colours[static_cast<std::size_t>(w)]);
            int c = 0;
            while (taken.count(c)) ++c;
            colours[static_cast<std::size_t>(*it)] = c;
        }
        return Colouring(colours);
    }
    case Recipe::matching: throw std::invalid_argument(r.lemma + " translates to a matching");
    }
    return {};
}

EdgeColouring back_translate_edges(const ReductionResult& r, const EdgeColouring& target)
{
    if (!r.source_is_edge_problem) throw std::invalid_argument(r.lemma + " translates vertex colourings");
    std::vector<int> colours;
    for (int id : r.representative) colours.push_back(target[id]);
    return EdgeColouring(colours);
}

Matching back_translate_matching(const ReductionResult& r, const Colouring& target)
{
    if (r.recipe != Recipe::matching) throw std::invalid_argument(r.lemma + " does not translate to a matching");
    std::map<int, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < target.size(); ++v) classes[target[v]].push_back(v);
    Matching out;
    for (const auto& [colour, members] : classes) {
        if (members.size() != 2)
            throw std::invalid_argument("colour class " + std::to_string(colour) + " has " +
                                        std::to_string(members.size()) + " vertices");
        out.emplace_back(members[0], members[1]);
    }
    return out;
}

ReductionResult reduce_edgecol_to_acyclic_edgecol(const Graph& g, int k)
{
    static const bool checked = (require_claim(acyclic_edge_gadget(3)), true);
    (void)checked;
    return replace_edges(g, acyclic_edge_gadget(k), "l-az");
}

ReductionResult reduce_edgecol_to_star_edgecol(const Graph& g, int k)
{
    static const bool checked = (require_claim(star_edge_gadget(3)), true);
    (void)checked;
    return replace_edges(g, star_edge_gadget(k), "l-linestar");
}

ReductionResult reduce_3col_to_star3(const Graph& g, int girth_param)
{
    if (g.max_degree() > 4) throw std::invalid_argument("the vertex gadget has four ports; maximum degree exceeds 4");
    const Gadget gd = star_vertex_gadget(girth_param);
    const Graph& v = gd.graph;
    const int block = v.order();
    ReductionResult r = vertex_problem("star-col-high-girth", g, PropertyKind::proper, 3, PropertyKind::star, 3);
    Graph out(g.order() * block);
    for (Vertex x = 0; x < g.order(); ++x) {
        const int offset = x * block;
        for (const auto& [a, b] : v.edges()) out.add_edge(offset + a, offset + b);
        std::vector<int> copy(static_cast<std::size_t>(block));
        for (int i = 0; i < block; ++i) copy[static_cast<std::size_t>(i)] = offset + i;
        r.forward.push_back(std::move(copy));
        r.representative.push_back(offset + gd.designated[0]);
    }
    for (const auto& [m, n] : g.edges()) {
        const int i = rotation_index(g, m, n);
        const int j = rotation_index(g, n, m);
        out.add_edge(m * block + gd.designated[static_cast<std::size_t>(i - 1)],
                     n * block + gd.designated[static_cast<std::size_t>(j - 1)]);
    }
    r.graph = std::move(out);
    return r;
}

ReductionResult reduce_star3_to_stark(const Graph& g, int k)
{
    require_k(k, 3, "the dominating clique reduction");
    ReductionResult r = vertex_problem("l-evencycle", g, PropertyKind::star, 3, PropertyKind::star, k);
    identity_prefix(r, g.order());
    r.graph = add_dominating_clique(g, k - 3);
    return r;
}

ReductionResult reduce_acyclic_vertexsplit(const Graph& g, const EqualityGadget& gadget, int k)
{
    if (!gadget.verified) throw std::invalid_argument("the equality gadget has not been verified");
    if (gadget.k != k) throw std::invalid_argument("the equality gadget was built for a different k");
    const Graph& s = gadget.s;
    ReductionResult r = vertex_problem("l-girth", g, PropertyKind::acyclic, k, PropertyKind::acyclic, k);

    Graph out;
    std::vector<Vertex> first(static_cast<std::size_t>(g.order()));
    for (Vertex z = 0; z < g.order(); ++z) {
        first[static_cast<std::size_t>(z)] = out.order();
        std::vector<int> copies;
        for (int i = 0; i < std::max(1, g.degree(z)); ++i) copies.push_back(out.add_vertex());
        r.forward.push_back(std::move(copies));
        r.representative.push_back(first[static_cast<std::size_t>(z)]);
    }
    for (Vertex z = 0; z < g.order(); ++z) {
        for (int i = 0; i + 1 < g.degree(z); ++i) {
            std::vector<Vertex> place(static_cast<std::size_t>(s.order()));
            for (Vertex x = 0; x < s.order(); ++x) {
                if (x == gadget.x1) place[static_cast<std::size_t>(x)] = first[static_cast<std::size_t>(z)] + i;
                else if (x == gadget.x3) place[static_cast<std::size_t>(x)] = first[static_cast<std::size_t>(z)] + i + 1;
                else {
                    place[static_cast<std::size_t>(x)] = out.add_vertex();
                    r.forward[static_cast<std::size_t>(z)].push_back(place[static_cast<std::size_t>(x)]);
                }
            }
            for (const auto& [a, b] : s.edges())
                out.add_edge(place[static_cast<std::size_t>(a)], place[static_cast<std::size_t>(b)]);
        }
    }
    for (const auto& [u, v] : g.edges())
        out.add_edge(first[static_cast<std::size_t>(u)] + rotation_index(g, u, v) - 1,
                     first[static_cast<std::size_t>(v)] + rotation_index(g, v, u) - 1);
    r.graph = std::move(out);
    return r;
}

ReductionResult reduce_injective_bipartite(const Graph& g, int k)
{
    require_k(k, 3, "the bipartite injective reduction");
    ReductionResult r = vertex_problem("l-triangle", g, PropertyKind::injective, k, PropertyKind::injective, k);
    identity_prefix(r, g.order());
    Graph out(g.order());
    for (const auto& [u, v] : g.edges()) {
        const Vertex up = out.add_vertex();
        const Vertex vp = out.add_vertex();
        out.add_edge(u, up);
        out.add_edge(v, vp);
        r.forward[static_cast<std::size_t>(u)].push_back(up);
        r.forward[static_cast<std::size_t>(v)].push_back(vp);
        for (int i = 0; i < k - 2; ++i) {
            const Vertex w = out.add_vertex();
            out.add_edge(w, up);
            out.add_edge(w, vp);
        }
    }
    r.graph = std::move(out);
    return r;
}

ReductionResult reduce_colouring_to_injective_5p1(const Graph& g, const std::vector<std::vector<Vertex>>& cover, int k)
{
    require_k(k, 1, "the 5P1-free reduction");
    if (cover.size() > 3) throw std::invalid_argument("the cover has more than three cliques");
    std::vector<int> part(static_cast<std::size_t>(g.order()), -1);
    std::size_t largest = 0;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        largest = std::max(largest, cover[i].size());
        for (Vertex v : cover[i]) {
            if (v < 0 || v >= g.order() || part[static_cast<std::size_t>(v)] >= 0)
                throw std::invalid_argument("the cover is not a partition of the vertex set");
            part[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
        for (std::size_t a = 0; a < cover[i].size(); ++a)
            for (std::size_t b = a + 1; b < cover[i].size(); ++b)
                if (!g.adjacent(cover[i][a], cover[i][b])) throw std::invalid_argument("a cover part is not a clique");
    }
    if (std::count(part.begin(), part.end(), -1) > 0) throw std::invalid_argument("the cover misses a vertex");

    ReductionResult r = vertex_problem("l-5p1", g, PropertyKind::proper, k, PropertyKind::injective, k);
    r.recipe = Recipe::greedy_extend;
    if (static_cast<int>(largest) > k) {
        r.trivially_no = true;
        r.graph = complete_graph(k + 1);
        r.forward.assign(static_cast<std::size_t>(g.order()), {});
        r.representative.assign(static_cast<std::size_t>(g.order()), -1);
        return r;
    }

    std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            const auto& nb = g.neighbours(v);
            const bool inside = std::none_of(nb.begin(), nb.end(), [&](Vertex w) {
                return alive[static_cast<std::size_t>(w)] && part[static_cast<std::size_t>(w)] != part[static_cast<std::size_t>(v)];
            });
            if (inside) {
                alive[static_cast<std::size_t>(v)] = 0;
                r.deleted.push_back(v);
                changed = true;
                break;
            }
        }
    }

    Graph out;
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    r.forward.assign(static_cast<std::size_t>(g.order()), {});
    r.representative.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v)
        if (alive[static_cast<std::size_t>(v)]) {
            index[static_cast<std::size_t>(v)] = out.add_vertex();
            r.forward[static_cast<std::size_t>(v)] = {index[static_cast<std::size_t>(v)]};
            r.representative[static_cast<std::size_t>(v)] = index[static_cast<std::size_t>(v)];
        }
    std::vector<Edge> cross;
    for (const auto& [u, v] : g.edges()) {
        if (!alive[static_cast<std::size_t>(u)] || !alive[static_cast<std::size_t>(v)]) continue;
        if (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)])
            out.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
        else cross.emplace_back(u, v);
    }
    std::vector<Vertex> a0;
    for (const auto& [u, v] : cross) {
        const Vertex w = out.add_vertex();
        for (Vertex x : a0) out.add_edge(x, w);
        a0.push_back(w);
        out.add_edge(index[static_cast<std::size_t>(u)], w);
        out.add_edge(index[static_cast<std::size_t>(v)], w);
    }
    r.target_k = k + static_cast<int>(cross.size());
    r.graph = std::move(out);
    return r;
}

ReductionResult reduce_listcol_to_colouring(const Graph& g, const ListAssignment& lists)
{
    require_k(lists.k, 1, "list colouring");
    if (static_cast<int>(lists.lists.size()) != g.order())
        throw std::invalid_argument("there must be one list per vertex");
    ReductionResult r = vertex_problem("l-4col", g, PropertyKind::proper, lists.k, PropertyKind::proper, lists.k);
    r.recipe = Recipe::palette;
    identity_prefix(r, g.order());
    Graph out = Graph::from_edges(g.order(), g.edges());
    for (int l = 0; l < lists.k; ++l) r.palette.push_back(out.add_vertex());
    for (int a = 0; a < lists.k; ++a)
        for (int b = a + 1; b < lists.k; ++b) out.add_edge(r.palette[static_cast<std::size_t>(a)], r.palette[static_cast<std::size_t>(b)]);
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto& list = lists.lists[static_cast<std::size_t>(u)];
        if (list.empty()) throw std::invalid_argument("vertex " + std::to_string(u) + " has an empty list");
        std::vector<char> allowed(static_cast<std::size_t>(lists.k), 0);
        for (int c : list) {
            if (c < 0 || c >= lists.k) throw std::invalid_argument("list colour outside 0..k-1");
            allowed[static_cast<std::size_t>(c)] = 1;
        }
        for (int l = 0; l < lists.k; ++l)
            if (!allowed[static_cast<std::size_t>(l)]) out.add_edge(r.palette[static_cast<std::size_t>(l)], u);
    }
    r.graph = std::move(out);
    return r;
}

ReductionResult reduce_connmatching_to_acyclic(const Graph& g, const std::vector<int>& side)
{
    if (static_cast<int>(side.size()) != g.order()) throw std::invalid_argument("one side label per vertex is needed");
    int left = 0;
    for (int s : side) {
        if (s != 0 && s != 1) throw std::invalid_argument("side labels must be 0 or 1");
        left += s == 0;
    }
    if (2 * left != g.order()) throw std::invalid_argument("the sides differ in size");
    for (const auto& [u, v] : g.edges())
        if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)])
            throw std::invalid_argument("an edge joins two vertices on the same side");
    ReductionResult r = vertex_problem("l-3p1acyclic", g, PropertyKind::proper, 0, PropertyKind::acyclic, left);
    r.recipe = Recipe::matching;
    identity_prefix(r, g.order());
    r.graph = complement(g);
    return r;
}

void write_map(std::ostream& out, const ReductionResult& r)
{
    out << "lemma " << r.lemma << '\n';
    out << "source " << (r.source_is_edge_problem ? "edges " : "vertices ")
        << (r.source_is_edge_problem ? r.source.size() : r.source.order()) << '\n';
    out << "source_property " << to_string(r.source_property) << '\n';
    out << "source_k " << r.source_k << '\n';
    out << "target_property " << to_string(r.target_property) << (r.target_is_edge_problem ? " edges" : "") << '\n';
    out << "target_k " << r.target_k << '\n';
    out << "trivially_no " << (r.trivially_no ? "true" : "false") << '\n';
    out << "recipe " << to_string(r.recipe) << '\n';
    for (std::size_t i = 0; i < r.forward.size(); ++i) {
        out << "forward " << i;
        for (int x : r.forward[i]) out << ' ' << x;
        out << '\n';
    }
    for (std::size_t i = 0; i < r.representative.size(); ++i) out << "representative " << i << ' ' << r.representative[i] << '\n';
    for (std::size_t l = 0; l < r.palette.size(); ++l) out << "palette " << l << ' ' << r.palette[l] << '\n';
    if (!r.deleted.empty()) {
        out << "deleted";
        for (Vertex v : r.deleted) out << ' ' << v;
        out << '\n';
    }
}

}  // namespace colourbench
