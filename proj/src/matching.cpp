#include "colourbench/matching.hpp"

#include <algorithm>
#include <deque>

#include "colourbench/engine.hpp"

namespace colourbench {

bool is_matching(const Graph& g, const Matching& m)
{
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (const auto& [u, v] : m) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) return false;
        if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

namespace {

// Augmenting-path search with blossom contraction tracked through `base`.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g),
          n_(static_cast<std::size_t>(g.order())),
          match_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          used_(n_),
          in_blossom_(n_)
    {
    }

    Matching solve()
    {
        // Greedy start keeps the number of phases small.
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (mate(v) >= 0) continue;
            for (Vertex w : g_.neighbours(v))
                if (mate(w) < 0) {
                    match_[at(v)] = w;
                    match_[at(w)] = v;
                    break;
                }
        }
        for (Vertex root = 0; root < g_.order(); ++root) {
            if (mate(root) >= 0) continue;
            Vertex end = find_path(root);
            while (end >= 0) {
                const Vertex pv = parent_[at(end)];
                const Vertex ppv = mate(pv);
                match_[at(end)] = pv;
                match_[at(pv)] = end;
                end = ppv;
            }
        }
        Matching out;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (mate(v) > v) out.emplace_back(v, mate(v));
        return out;
    }

private:
    static std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }
    Vertex mate(Vertex v) const { return match_[at(v)]; }

    Vertex lowest_common_ancestor(Vertex a, Vertex b)
    {
        std::vector<char> seen(n_, 0);
        while (true) {
            a = base_[at(a)];
            seen[at(a)] = 1;
            if (mate(a) < 0) break;
            a = parent_[at(mate(a))];
        }
        while (true) {
            b = base_[at(b)];
            if (seen[at(b)]) return b;
            b = parent_[at(mate(b))];
        }
    }

    void mark_path(Vertex v, Vertex b, Vertex child)
    {
        while (base_[at(v)] != b) {
            in_blossom_[at(base_[at(v)])] = 1;
            in_blossom_[at(base_[at(mate(v))])] = 1;
            parent_[at(v)] = child;
            child = mate(v);
            v = parent_[at(mate(v))];
        }
    }

    Vertex find_path(Vertex root)
    {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
        used_[at(root)] = 1;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex to : g_.neighbours(v)) {
                if (base_[at(v)] == base_[at(to)] || mate(v) == to) continue;
                if (to == root || (mate(to) >= 0 && parent_[at(mate(to))] >= 0)) {
                    const Vertex b = lowest_common_ancestor(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (std::size_t i = 0; i < n_; ++i) {
                        if (!in_blossom_[at(base_[i])]) continue;
                        base_[i] = b;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue.push_back(static_cast<Vertex>(i));
                        }
                    }
                } else if (parent_[at(to)] < 0) {
                    parent_[at(to)] = v;
                    if (mate(to) < 0) return to;
                    used_[at(mate(to))] = 1;
                    queue.push_back(mate(to));
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> match_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> base_;
    std::vector<char> used_;
    std::vector<char> in_blossom_;
};

}  // namespace

Matching max_matching(const Graph& g)
{
    return Blossom(g).solve();
}

std::optional<Matching> connected_perfect_matching(const Graph& g, const std::vector<int>& side,
                                                   std::uint64_t node_limit)
{
    if (static_cast<int>(side.size()) != g.order()) throw std::invalid_argument("side labels do not cover the graph");
    std::vector<Vertex> left;
    int right_count = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (side[static_cast<std::size_t>(v)] == 0) left.push_back(v);
        else if (side[static_cast<std::size_t>(v)] == 1) ++right_count;
        else throw std::invalid_argument("side labels must be 0 or 1");
    }
    for (const auto& [u, v] : g.edges())
        if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)])
            throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) + " lies inside one side");
    if (static_cast<int>(left.size()) != right_count) throw std::invalid_argument("sides differ in size");

    Matching chosen;
    std::vector<char> taken(static_cast<std::size_t>(g.order()), 0);
    std::uint64_t nodes = 0;

    auto compatible = [&](Vertex a, Vertex b) {
        for (const auto& [a2, b2] : chosen)
            if (!g.adjacent(a, b2) && !g.adjacent(a2, b)) return false;
        return true;
    };

    auto search = [&](auto&& self, std::size_t i) -> bool {
        if (i == left.size()) return true;
        const Vertex a = left[i];
        std::vector<Vertex> options = g.neighbours(a);
        std::sort(options.begin(), options.end());
        for (Vertex b : options) {
            if (taken[static_cast<std::size_t>(b)] || !compatible(a, b)) continue;
            if (node_limit != 0 && ++nodes > node_limit)
                throw BudgetExhausted("connected matching search exceeded its node limit", nodes);
            taken[static_cast<std::size_t>(b)] = 1;
            chosen.emplace_back(a, b);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
            taken[static_cast<std::size_t>(b)] = 0;
        }
        return false;
    };

    if (!search(search, 0)) return std::nullopt;
    return chosen;
}

}  // namespace colourbench
