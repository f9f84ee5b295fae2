#include "colourbench/engine.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "colourbench/rng.hpp"
#include "colourbench/verifiers.hpp"

namespace colourbench {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask full_mask(int k)
{
    return k >= 64 ? ~Mask{0} : ((Mask{1} << k) - 1);
}

Mask bit(int c)
{
    return Mask{1} << c;
}

struct Limits {
    std::uint64_t node_limit = 0;
    std::optional<Clock::time_point> deadline;
    std::optional<std::uint64_t> seed;

    static Limits from(const SearchBudget& b)
    {
        Limits l;
        l.node_limit = b.node_limit;
        if (b.time_limit.count() > 0) l.deadline = Clock::now() + b.time_limit;
        l.seed = b.seed;
        return l;
    }

    // Limits for a follow-up search after `spent` nodes were used.
    Limits after(std::uint64_t spent) const
    {
        Limits l = *this;
        if (node_limit != 0) l.node_limit = spent >= node_limit ? 1 : node_limit - spent;
        return l;
    }

    bool nodes_spent(std::uint64_t spent) const { return node_limit != 0 && spent >= node_limit; }
};

void check_palette(int k)
{
    if (k < 0) throw std::invalid_argument("colour count must be non-negative");
    if (k > kMaxColours) throw SizeBoundError("at most " + std::to_string(kMaxColours) + " colours are supported");
}

class Search {
public:
    enum class Status { complete, stopped, exhausted };

    Search(const Graph& g, int k, PropertyKind p, const Limits& limits, bool break_symmetry)
        : g_(g),
          n_(g.order()),
          k_(k),
          p_(p),
          limits_(limits),
          break_symmetry_(break_symmetry),
          colour_(static_cast<std::size_t>(n_), -1),
          dom_(static_cast<std::size_t>(n_), full_mask(k))
    {
        check_palette(k);
        if (p_ == PropertyKind::injective) {
            const Graph square = distance_two_graph(g_);
            conflicts_.resize(static_cast<std::size_t>(n_));
            for (Vertex v = 0; v < n_; ++v) conflicts_[static_cast<std::size_t>(v)] = square.neighbours(v);
        }
        if (p_ == PropertyKind::acyclic) {
            uf_parent_.resize(static_cast<std::size_t>(k_ * k_));
            uf_size_.resize(static_cast<std::size_t>(k_ * k_));
        }
        if (p_ == PropertyKind::star) {
            count_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_), 0);
            stamp_.assign(static_cast<std::size_t>(n_), 0);
        }
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        if (limits_.seed) {
            rng_.emplace(*limits_.seed);
            rng_->shuffle(order_);
        } else {
            std::stable_sort(order_.begin(), order_.end(),
                             [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
        }
    }

    /// Applies a precolouring; false when it is inconsistent on its own.
    bool fix(const Precolouring& fixed)
    {
        for (const auto& [v, c] : fixed) {
            if (v < 0 || v >= n_) throw std::invalid_argument("precoloured vertex out of range");
            if (c < 0 || c >= k_) return false;
            if (colour_[static_cast<std::size_t>(v)] >= 0) {
                if (colour_[static_cast<std::size_t>(v)] != c) return false;
                continue;
            }
            if ((dom_[static_cast<std::size_t>(v)] & bit(c)) == 0) return false;
            if (!assign(v, c)) return false;
        }
        return true;
    }

    Status run(const std::function<bool(const std::vector<int>&)>& on_solution)
    {
        on_solution_ = &on_solution;
        for (Vertex v = 0; v < n_; ++v)
            if (colour_[static_cast<std::size_t>(v)] < 0 && dom_[static_cast<std::size_t>(v)] == 0)
                return Status::complete;
        dfs();
        return status_;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    struct Mark {
        std::size_t dom = 0;
        std::size_t assigned = 0;
        std::size_t unions = 0;
    };

    struct Assigned {
        Vertex v;
        Mask used_before;
    };

    struct Union {
        int pair;
        int child;
    };

    const std::vector<Vertex>& conflicts(Vertex v) const
    {
        return p_ == PropertyKind::injective ? conflicts_[static_cast<std::size_t>(v)] : g_.neighbours(v);
    }

    int colour(Vertex v) const { return colour_[static_cast<std::size_t>(v)]; }

    int pair_id(int a, int b) const { return a < b ? a * k_ + b : b * k_ + a; }

    int find(int pair, int x) const
    {
        const auto& parent = uf_parent_[static_cast<std::size_t>(pair)];
        if (parent.empty()) return x;
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }

    void unite(int pair, int a, int b)
    {
        auto& parent = uf_parent_[static_cast<std::size_t>(pair)];
        auto& size = uf_size_[static_cast<std::size_t>(pair)];
        if (parent.empty()) {
            parent.resize(static_cast<std::size_t>(n_));
            std::iota(parent.begin(), parent.end(), 0);
            size.assign(static_cast<std::size_t>(n_), 1);
        }
        a = find(pair, a);
        b = find(pair, b);
        if (a == b) return;
        if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
        unions_.push_back({pair, b});
    }

    int& count(Vertex v, int c) { return count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }
    int count(Vertex v, int c) const
    {
        return count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
    }

    // Colouring u (uncoloured) with e closes no bichromatic cycle.
    bool acyclic_ok(Vertex u, int e) const
    {
        std::vector<std::pair<int, int>> roots;
        for (Vertex x : g_.neighbours(u)) {
            const int d = colour(x);
            if (d < 0) continue;
            if (d == e) return false;
            roots.emplace_back(d, find(pair_id(e, d), x));
        }
        std::sort(roots.begin(), roots.end());
        return std::adjacent_find(roots.begin(), roots.end()) == roots.end();
    }

    // Colouring u (uncoloured) with e creates no bichromatic 4-vertex path.
    bool star_ok(Vertex u, int e) const
    {
        for (Vertex w : g_.neighbours(u)) {
            const int d = colour(w);
            if (d < 0) continue;
            if (d == e) return false;
            // w' - u - w - x with c(w') = d, c(x) = e
            if (count(u, d) >= 2 && count(w, e) >= 1) return false;
            // u - w - x - y with c(x) = e, c(y) = d
            if (count(w, e) == 0) continue;
            for (Vertex x : g_.neighbours(w))
                if (colour(x) == e && count(x, d) >= 2) return false;
        }
        return true;
    }

    bool structure_ok(Vertex u, int e) const
    {
        switch (p_) {
        case PropertyKind::acyclic: return acyclic_ok(u, e);
        case PropertyKind::star: return star_ok(u, e);
        default: return true;
        }
    }

    void set_domain(Vertex u, Mask mask)
    {
        dom_trail_.emplace_back(u, dom_[static_cast<std::size_t>(u)]);
        dom_[static_cast<std::size_t>(u)] = mask;
    }

    bool prune(Vertex u)
    {
        const Mask mask = dom_[static_cast<std::size_t>(u)];
        Mask keep = mask;
        for (Mask rest = mask; rest != 0; rest &= rest - 1) {
            const int e = std::countr_zero(rest);
            if (!structure_ok(u, e)) keep &= ~bit(e);
        }
        if (keep != mask) set_domain(u, keep);
        return keep != 0;
    }

    bool assign(Vertex v, int c)
    {
        if (!structure_ok(v, c)) return false;
        assigned_.push_back({v, used_});
        colour_[static_cast<std::size_t>(v)] = c;
        used_ |= bit(c);

        if (p_ == PropertyKind::acyclic)
            for (Vertex x : g_.neighbours(v))
                if (colour(x) >= 0 && x != v) unite(pair_id(c, colour(x)), v, x);
        if (p_ == PropertyKind::star)
            for (Vertex w : g_.neighbours(v)) ++count(w, c);

        for (Vertex u : conflicts(v)) {
            if (colour(u) >= 0) continue;
            const Mask mask = dom_[static_cast<std::size_t>(u)];
            if ((mask & bit(c)) == 0) continue;
            if (mask == bit(c)) return false;
            set_domain(u, mask & ~bit(c));
        }

        if (p_ == PropertyKind::acyclic) {
            for (Vertex u : g_.neighbours(v))
                if (colour(u) < 0 && !prune(u)) return false;
        } else if (p_ == PropertyKind::star) {
            ++epoch_;
            auto visit = [&](Vertex u) {
                if (colour(u) >= 0 || stamp_[static_cast<std::size_t>(u)] == epoch_) return true;
                stamp_[static_cast<std::size_t>(u)] = epoch_;
                return prune(u);
            };
            for (Vertex w : g_.neighbours(v)) {
                if (!visit(w)) return false;
                for (Vertex u : g_.neighbours(w))
                    if (!visit(u)) return false;
            }
        }
        return true;
    }

    Mark mark() const { return {dom_trail_.size(), assigned_.size(), unions_.size()}; }

    void undo_to(const Mark& m)
    {
        while (unions_.size() > m.unions) {
            const auto [pair, child] = unions_.back();
            unions_.pop_back();
            auto& parent = uf_parent_[static_cast<std::size_t>(pair)];
            const int root = parent[static_cast<std::size_t>(child)];
            uf_size_[static_cast<std::size_t>(pair)][static_cast<std::size_t>(root)] -=
                uf_size_[static_cast<std::size_t>(pair)][static_cast<std::size_t>(child)];
            parent[static_cast<std::size_t>(child)] = child;
        }
        while (assigned_.size() > m.assigned) {
            const auto [v, used_before] = assigned_.back();
            assigned_.pop_back();
            const int c = colour(v);
            if (p_ == PropertyKind::star)
                for (Vertex w : g_.neighbours(v)) --count(w, c);
            colour_[static_cast<std::size_t>(v)] = -1;
            used_ = used_before;
        }
        while (dom_trail_.size() > m.dom) {
            const auto [u, mask] = dom_trail_.back();
            dom_trail_.pop_back();
            dom_[static_cast<std::size_t>(u)] = mask;
        }
    }

    bool out_of_budget()
    {
        if (limits_.node_limit != 0 && nodes_ >= limits_.node_limit) return true;
        if (limits_.deadline && (nodes_ & 1023) == 0 && Clock::now() >= *limits_.deadline) return true;
        return false;
    }

    // Returns true when the search must end (visitor stop or budget).
    bool dfs()
    {
        if (assigned_.size() == static_cast<std::size_t>(n_)) {
            if (!(*on_solution_)(colour_)) {
                status_ = Status::stopped;
                return true;
            }
            return false;
        }

        Vertex best = -1;
        int best_size = kMaxColours + 1;
        for (Vertex v : order_) {
            if (colour(v) >= 0) continue;
            const int size = std::popcount(dom_[static_cast<std::size_t>(v)]);
            if (size < best_size) {
                best = v;
                best_size = size;
                if (size <= 1) break;
            }
        }

        Mask allowed = dom_[static_cast<std::size_t>(best)];
        if (break_symmetry_) {
            const Mask unused = full_mask(k_) & ~used_;
            const Mask fresh = unused & (~unused + 1);
            allowed &= used_ | fresh;
        }

        std::vector<int> values;
        for (Mask rest = allowed; rest != 0; rest &= rest - 1) values.push_back(std::countr_zero(rest));
        if (rng_) rng_->shuffle(values);

        for (int c : values) {
            if (out_of_budget()) {
                status_ = Status::exhausted;
                return true;
            }
            ++nodes_;
            const Mark m = mark();
            if (assign(best, c) && dfs()) return true;
            undo_to(m);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    PropertyKind p_;
    Limits limits_;
    bool break_symmetry_;
    std::optional<Rng> rng_;

    std::vector<int> colour_;
    std::vector<Mask> dom_;
    Mask used_ = 0;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> conflicts_;

    std::vector<std::vector<int>> uf_parent_;
    std::vector<std::vector<int>> uf_size_;
    std::vector<int> count_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;

    std::vector<std::pair<Vertex, Mask>> dom_trail_;
    std::vector<Assigned> assigned_;
    std::vector<Union> unions_;

    const std::function<bool(const std::vector<int>&)>* on_solution_ = nullptr;
    std::uint64_t nodes_ = 0;
    Status status_ = Status::complete;
};

void certify(const Graph& g, const Colouring& c, PropertyKind p)
{
    if (auto bad = verify(g, c, p))
        throw std::logic_error("search produced an invalid " + std::string(to_string(p)) +
                               " colouring: " + describe(*bad));
}

Decision decide_with(const Graph& g, int k, PropertyKind p, const Limits& limits, const Precolouring& fixed,
                     bool break_symmetry = true)
{
    Search search(g, k, p, limits, break_symmetry);
    Decision out;
    if (!search.fix(fixed)) {
        out.answer = Answer::no;
        return out;
    }
    std::vector<int> found;
    const auto status = search.run([&](const std::vector<int>& colours) {
        found = colours;
        return false;
    });
    out.nodes = search.nodes();
    switch (status) {
    case Search::Status::stopped:
        out.answer = Answer::yes;
        out.colouring = Colouring(std::move(found));
        certify(g, *out.colouring, p);
        break;
    case Search::Status::complete: out.answer = Answer::no; break;
    case Search::Status::exhausted: out.answer = Answer::exhausted; break;
    }
    return out;
}

std::vector<Vertex> reachable_in_union(const Graph& g, const Colouring& c, Vertex from, int a, int b)
{
    std::vector<Vertex> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> out;
    std::deque<Vertex> queue{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        out.push_back(u);
        for (Vertex w : g.neighbours(u)) {
            if (seen[static_cast<std::size_t>(w)] || (c[w] != a && c[w] != b)) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            queue.push_back(w);
        }
    }
    return out;
}

}  // namespace

Graph distance_two_graph(const Graph& g)
{
    Graph out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex w : g.neighbours(v)) {
            if (v < w && !out.adjacent(v, w)) out.add_edge(v, w);
            for (Vertex x : g.neighbours(w))
                if (v < x && !out.adjacent(v, x)) out.add_edge(v, x);
        }
    }
    return out;
}

int clique_lower_bound(const Graph& g, PropertyKind p)
{
    const Graph h = p == PropertyKind::injective ? distance_two_graph(g) : g;
    int best = h.order() > 0 ? 1 : 0;
    for (Vertex v = 0; v < h.order(); ++v) {
        std::vector<Vertex> candidates = h.neighbours(v);
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        std::vector<Vertex> clique{v};
        for (Vertex w : candidates)
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return h.adjacent(w, x); }))
                clique.push_back(w);
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

Decision decide(const Graph& g, int k, PropertyKind p, const SearchBudget& budget, const Precolouring& fixed)
{
    return decide_with(g, k, p, Limits::from(budget), fixed);
}

ChromaticResult chromatic(const Graph& g, PropertyKind p, const SearchBudget& budget)
{
    const Limits limits = Limits::from(budget);
    ChromaticResult out;
    out.colouring = Colouring(g.order());
    for (const auto& comp : components(g)) {
        const Graph h = induced_subgraph(g, comp);
        const int lower = clique_lower_bound(h, p);
        bool solved = false;
        for (int k = lower; k <= kMaxColours && !solved; ++k) {
            const Decision d = decide_with(h, k, p, limits.after(out.nodes), {});
            out.nodes += d.nodes;
            if (d.answer == Answer::exhausted)
                throw BudgetExhausted("budget exhausted while testing " + std::to_string(k) + " colours", out.nodes);
            if (d.answer == Answer::yes) {
                for (std::size_t i = 0; i < comp.size(); ++i) out.colouring[comp[i]] = (*d.colouring)[static_cast<Vertex>(i)];
                out.k = std::max(out.k, k);
                solved = true;
            }
        }
        if (!solved) throw SizeBoundError("component needs more than " + std::to_string(kMaxColours) + " colours");
    }
    certify(g, out.colouring, p);
    return out;
}

Enumeration enumerate(const Graph& g, int k, PropertyKind p, const std::function<bool(const Colouring&)>& visitor,
                      const SearchBudget& budget, const EnumerateOptions& options)
{
    Search search(g, k, p, Limits::from(budget), options.symmetry == Symmetry::up_to_renaming);
    Enumeration out;
    if (!search.fix(options.fixed)) return out;
    const auto status = search.run([&](const std::vector<int>& colours) {
        Colouring c(colours);
        if (options.verify_each) certify(g, c, p);
        ++out.visited;
        return visitor(c);
    });
    out.nodes = search.nodes();
    if (status == Search::Status::exhausted)
        throw BudgetExhausted("budget exhausted after " + std::to_string(out.visited) + " colourings", out.nodes);
    out.stopped = status == Search::Status::stopped;
    return out;
}

std::uint64_t count_colourings(const Graph& g, int k, PropertyKind p, const SearchBudget& budget, Symmetry symmetry)
{
    EnumerateOptions options;
    options.symmetry = symmetry;
    return enumerate(g, k, p, [](const Colouring&) { return true; }, budget, options).visited;
}

ForcedEqualResult forced_equal(const Graph& g, int k, PropertyKind p, const std::vector<Vertex>& s,
                               const SearchBudget& budget)
{
    const Limits limits = Limits::from(budget);
    ForcedEqualResult out;
    const Decision any = decide_with(g, k, p, limits, {});
    out.nodes += any.nodes;
    if (any.answer == Answer::exhausted) throw BudgetExhausted("budget exhausted deciding colourability", out.nodes);
    if (any.answer == Answer::no)
        throw NotColourableError("graph has no " + std::string(to_string(p)) + " " + std::to_string(k) + "-colouring");

    out.equal = true;
    for (std::size_t j = 1; j < s.size() && k >= 2; ++j) {
        if (s[j] == s[0]) continue;
        const Decision split = decide_with(g, k, p, limits.after(out.nodes), {{s[0], 0}, {s[j], 1}});
        out.nodes += split.nodes;
        if (split.answer == Answer::exhausted)
            throw BudgetExhausted("budget exhausted separating vertices " + std::to_string(s[0]) + " and " +
                                      std::to_string(s[j]),
                                  out.nodes);
        if (split.answer == Answer::yes) {
            out.equal = false;
            out.counterexample = split.colouring;
            return out;
        }
    }
    return out;
}

std::vector<int> bichromatic_path_colours(const Graph& g, const Colouring& c, Vertex u, Vertex v)
{
    std::vector<int> out;
    const int k = c.num_colours();
    for (int i = 0; i < k; ++i) {
        if (i == c[u]) continue;
        const auto reach = reachable_in_union(g, c, u, c[u], i);
        if (std::find(reach.begin(), reach.end(), v) != reach.end()) out.push_back(i);
    }
    return out;
}

bool has_bichromatic_path(const Graph& g, const Colouring& c, Vertex u, Vertex v)
{
    if (u == v) return true;
    return !bichromatic_path_colours(g, c, u, v).empty();
}

std::optional<Colouring> sample_colouring(const Graph& g, int k, PropertyKind p, std::uint64_t seed,
                                          std::uint64_t node_limit)
{
    Limits limits;
    limits.node_limit = node_limit;
    limits.seed = seed;
    const Decision d = decide_with(g, k, p, limits, {}, false);
    return d.colouring;
}

Decision decide_edge(const Multigraph& m, int k, PropertyKind p, const SearchBudget& budget)
{
    Decision d = decide(line_graph(m), k, p, budget);
    if (d.colouring && verify_edge(m, EdgeColouring(d.colouring->values()), p))
        throw std::logic_error("edge colouring failed the direct check");
    return d;
}

ForcedEqualResult forced_equal_edges(const Multigraph& m, int k, PropertyKind p, const std::vector<int>& edge_ids,
                                     const SearchBudget& budget)
{
    return forced_equal(line_graph(m), k, p, edge_ids, budget);
}

}  // namespace colourbench
