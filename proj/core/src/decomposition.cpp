#include "sparsity/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <unordered_map>

#include "sparsity/parallel.hpp"

namespace sparsity {

int augmentation_rounds(const Orientation& o) {
    int best = 0;
    for (const auto& a : o.arcs()) best = std::max(best, a.round);
    return best;
}

Orientation tf_augment(const Orientation& o, int rounds, int round_cap) {
    if (rounds < 0) throw UsageError("augmentation rounds must be non-negative");
    if (rounds > round_cap)
        throw UsageError("augmentation rounds " + std::to_string(rounds) + " exceed cap " +
                         std::to_string(round_cap));
    Orientation out = o;
    const int n = o.order();
    const int first_round = augmentation_rounds(o) + 1;
    for (int r = 0; r < rounds; ++r) {
        const int round = first_round + r;
        std::vector<std::vector<int>> in(n), outs(n);
        for (int v = 0; v < n; ++v) {
            auto a = out.in_neighbors(v);
            auto b = out.out_neighbors(v);
            in[v].assign(a.begin(), a.end());
            outs[v].assign(b.begin(), b.end());
            std::sort(in[v].begin(), in[v].end());
            std::sort(outs[v].begin(), outs[v].end());
        }

        std::set<std::pair<int, int>> transitive;
        for (int v = 0; v < n; ++v)
            for (int u : in[v])
                for (int w : outs[v])
                    if (u != w && !out.has_edge(u, w)) transitive.emplace(u, w);

        bool changed = false;
        for (auto [u, w] : transitive)
            changed |= out.add_arc(u, w, ArcKind::transitive, round);

        std::vector<Edge> fraternal;
        for (int v = 0; v < n; ++v)
            for (std::size_t i = 0; i < in[v].size(); ++i)
                for (std::size_t j = i + 1; j < in[v].size(); ++j)
                    if (!out.has_edge(in[v][i], in[v][j]))
                        fraternal.emplace_back(in[v][i], in[v][j]);
        if (!fraternal.empty()) {
            Graph f(n, std::move(fraternal));
            std::vector<int> position(n);
            auto order = smallest_last_order(f);
            for (int i = 0; i < n; ++i) position[order[i]] = i;
            for (auto [u, w] : f.edges()) {
                if (position[u] < position[w])
                    out.add_arc(w, u, ArcKind::fraternal, round);
                else
                    out.add_arc(u, w, ArcKind::fraternal, round);
            }
            changed = true;
        }
        if (!changed) break;
    }
    return out;
}

namespace {

std::vector<std::vector<int>> color_subsets(int palette, int max_size) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int start) {
        if (!current.empty()) subsets.push_back(current);
        if (static_cast<int>(current.size()) == max_size) return;
        for (int c = start; c < palette; ++c) {
            current.push_back(c);
            rec(c + 1);
            current.pop_back();
        }
    };
    rec(0);
    return subsets;  // depth-first generation is already lexicographic
}

std::vector<std::vector<int>> fixed_size_subsets(int palette, int size) {
    std::vector<std::vector<int>> subsets;
    for (auto& s : color_subsets(palette, size))
        if (static_cast<int>(s.size()) == size) subsets.push_back(std::move(s));
    return subsets;
}

std::vector<int> vertices_with_colors(const Coloring& c, const std::vector<int>& colors) {
    std::vector<char> wanted(c.palette, 0);
    for (int x : colors) wanted[x] = 1;
    std::vector<int> vertices;
    for (int v = 0; v < static_cast<int>(c.color.size()); ++v)
        if (wanted[c.color[v]]) vertices.push_back(v);
    return vertices;
}

}  // namespace

LtdCheck verify_ltd(const Graph& g, int p, const Coloring& c, const LtdOptions& options) {
    if (p < 1) throw UsageError("parameter p must be at least 1");
    c.validate(g.order());
    auto subsets = color_subsets(c.palette, p);
    std::vector<Decision> verdict(subsets.size(), Decision::yes);
    // subsets past the first known violation cannot change the answer
    std::atomic<std::size_t> first_no{subsets.size()};
    parallel_for(subsets.size(), options.threads, [&](std::size_t i) {
        if (i > first_no.load()) return;
        auto vertices = vertices_with_colors(c, subsets[i]);
        const int k = static_cast<int>(subsets[i].size());
        if (static_cast<int>(vertices.size()) <= k) return;
        auto sub = induced_subgraph(g, vertices);
        verdict[i] = treedepth_at_most(sub.graph, k, options.td_budget).decision;
        if (verdict[i] != Decision::no) return;
        for (auto seen = first_no.load(); i < seen && !first_no.compare_exchange_weak(seen, i);) {
        }
    });
    LtdCheck check;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (verdict[i] == Decision::no) return {Decision::no, subsets[i]};
        if (verdict[i] == Decision::indeterminate && check.status == Decision::yes)
            check = {Decision::indeterminate, subsets[i]};
    }
    return check;
}

LtdDecomposition ltd_coloring(const Graph& g, int p, const LtdOptions& options) {
    if (p < 1) throw UsageError("parameter p must be at least 1");
    const int initial = std::max(0, options.rounds);
    if (initial > options.round_cap)
        throw UsageError("augmentation rounds " + std::to_string(initial) + " exceed cap " +
                         std::to_string(options.round_cap));

    Orientation o = degeneracy_orientation(g);
    int performed = 0;
    if (initial > 0) {
        o = tf_augment(o, initial, options.round_cap);
        performed = initial;
    }
    LtdCheck last;
    for (;;) {
        auto coloring = Coloring::from_colors(greedy_coloring(o.underlying()));
        if (g.order() == 0) coloring.palette = 0;
        last = verify_ltd(g, p, coloring, options);
        if (last.status == Decision::yes) return {std::move(coloring), p, performed, true};
        if (performed >= options.round_cap) break;
        const auto before = o.arc_count();
        o = tf_augment(o, 1, options.round_cap);
        ++performed;
        if (o.arc_count() == before) break;  // fixpoint: more rounds change nothing
    }
    if (g.order() <= options.oracle_limit) {
        Coloring best;
        chi_p_bruteforce(g, p, options.oracle_limit, &best);
        return {std::move(best), p, performed, true};
    }
    std::string subset;
    for (int x : last.colors) subset += (subset.empty() ? "" : ",") + std::to_string(x);
    throw LtdFailure(std::string("low tree-depth coloring ") +
                         (last.status == Decision::no ? "violated" : "undecided") +
                         " for color set {" + subset + "} after " + std::to_string(performed) +
                         " augmentation rounds",
                     last);
}

int chi_p_bruteforce(const Graph& g, int p, int limit, Coloring* best) {
    require_size("chi_p_bruteforce", g.order(), std::min(limit, 16));
    if (p < 1) throw UsageError("parameter p must be at least 1");
    const int n = g.order();
    if (n == 0) {
        if (best) *best = Coloring{};
        return 0;
    }
    std::unordered_map<Mask, int> td_cache;
    auto td_of = [&](Mask vertices) {
        if (auto it = td_cache.find(vertices); it != td_cache.end()) return it->second;
        std::vector<int> list;
        for (Mask m = vertices; m; m &= m - 1) list.push_back(lowest_bit(m));
        int value = treedepth_exact(induced_subgraph(g, list).graph, kMaskBits).treedepth;
        td_cache.emplace(vertices, value);
        return value;
    };

    std::vector<int> color(n, -1);
    auto valid = [&](int used) {
        std::vector<Mask> classes(used, 0);
        for (int v = 0; v < n; ++v) classes[color[v]] |= bit(v);
        for (unsigned subset = 1; subset < (1U << used); ++subset) {
            int size = __builtin_popcount(subset);
            if (size > p || size == 1) continue;  // single classes are independent already
            Mask vertices = 0;
            for (int x = 0; x < used; ++x)
                if (subset >> x & 1U) vertices |= classes[x];
            if (td_of(vertices) > size) return false;
        }
        return true;
    };

    for (int k = 1; k <= n; ++k) {
        // Restricted growth strings: vertex v takes a color <= max used so far + 1.
        std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
            if (v == n) return valid(used);
            for (int x = 0; x < std::min(k, used + 1); ++x) {
                bool proper = true;
                for (int u : g.neighbors(v))
                    if (u < v && color[u] == x) {
                        proper = false;
                        break;
                    }
                if (!proper) continue;
                color[v] = x;
                if (rec(v + 1, std::max(used, x + 1))) return true;
            }
            color[v] = -1;
            return false;
        };
        if (rec(0, 0)) {
            if (best) *best = Coloring::from_colors(color);
            return k;
        }
    }
    return n;  // unreachable: n distinct colors always qualify
}

int ClusterCover::max_membership() const {
    return membership.empty() ? 0 : *std::max_element(membership.begin(), membership.end());
}

std::uint64_t ClusterCover::membership_bound() const {
    const int k = std::min(palette, t);
    std::uint64_t value = 1;
    for (int i = 1; i <= k; ++i) value = value * static_cast<std::uint64_t>(palette - k + i) / i;
    return value;
}

ClusterCover cluster_cover_from(const Graph& g, int t, const Coloring& c, unsigned threads) {
    if (t < 1) throw UsageError("cluster parameter t must be at least 1");
    c.validate(g.order());
    ClusterCover cover;
    cover.t = t;
    cover.palette = c.palette;

    auto subsets = fixed_size_subsets(c.palette, std::min(t, c.palette));
    std::vector<std::vector<std::vector<int>>> per_subset(subsets.size());
    parallel_for(subsets.size(), threads, [&](std::size_t i) {
        auto sub = induced_subgraph(g, vertices_with_colors(c, subsets[i]));
        for (auto& comp : connected_components(sub.graph)) {
            for (int& v : comp) v = sub.to_parent[v];
            per_subset[i].push_back(std::move(comp));
        }
    });
    std::vector<std::vector<int>> candidates;
    for (auto& list : per_subset)
        for (auto& comp : list) candidates.push_back(std::move(comp));
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });

    std::vector<std::vector<int>> containing(g.order());
    for (auto& cand : candidates) {
        bool contained = false;
        for (int idx : containing[cand.front()]) {
            const auto& kept = cover.clusters[idx];
            if (std::includes(kept.begin(), kept.end(), cand.begin(), cand.end())) {
                contained = true;
                break;
            }
        }
        if (contained) continue;
        for (int v : cand) containing[v].push_back(static_cast<int>(cover.clusters.size()));
        cover.clusters.push_back(std::move(cand));
    }
    std::sort(cover.clusters.begin(), cover.clusters.end());
    cover.membership.assign(g.order(), 0);
    for (const auto& cl : cover.clusters)
        for (int v : cl) ++cover.membership[v];
    return cover;
}

ClusterCover cluster_cover(const Graph& g, int t, const LtdOptions& options) {
    auto decomposition = ltd_coloring(g, t, options);
    return cluster_cover_from(g, t, decomposition.coloring, options.threads);
}

namespace {

// Connected-set enumeration in the style of ESU: every set is grown from its
// smallest vertex using only exclusive neighbors, so each appears exactly once.
class ConnectedSets {
public:
    ConnectedSets(const Graph& g, int max_size, std::uint64_t budget,
                  std::vector<std::vector<int>>& out)
        : g_(g), max_size_(max_size), budget_(budget), out_(out), in_set_(g.order(), 0),
          near_(g.order(), 0) {}

    bool run() {
        for (int v = 0; v < g_.order(); ++v) {
            std::vector<int> ext;
            for (int u : g_.neighbors(v))
                if (u > v) ext.push_back(u);
            current_ = {v};
            mark(v, +1);
            bool ok = extend(ext, v);
            mark(v, -1);
            if (!ok) return false;
        }
        return true;
    }

private:
    void mark(int v, int delta) {
        in_set_[v] += delta;
        near_[v] += delta;
        for (int u : g_.neighbors(v)) near_[u] += delta;
    }

    bool extend(std::vector<int> ext, int root) {
        if (++emitted_ > budget_) return false;
        auto sorted = current_;
        std::sort(sorted.begin(), sorted.end());
        out_.push_back(std::move(sorted));
        if (static_cast<int>(current_.size()) == max_size_) return true;
        while (!ext.empty()) {
            int w = ext.back();
            ext.pop_back();
            std::vector<int> next = ext;
            for (int u : g_.neighbors(w))
                if (u > root && !near_[u]) next.push_back(u);
            current_.push_back(w);
            mark(w, +1);
            bool ok = extend(std::move(next), root);
            mark(w, -1);
            current_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    const Graph& g_;
    int max_size_;
    std::uint64_t budget_;
    std::uint64_t emitted_ = 0;
    std::vector<std::vector<int>>& out_;
    std::vector<int> current_;
    std::vector<int> in_set_;
    std::vector<int> near_;  // in the set or adjacent to it
};

}  // namespace

bool enumerate_connected_sets(const Graph& g, int max_size, std::uint64_t budget,
                              std::vector<std::vector<int>>& out) {
    if (max_size < 1) return true;
    return ConnectedSets(g, max_size, budget, out).run();
}

CoverCheck verify_cluster_cover(const Graph& g, const ClusterCover& cover, std::uint64_t budget) {
    CoverCheck check;
    std::vector<std::vector<int>> containing(g.order());
    std::vector<int> membership(g.order(), 0);
    bool undecided = false;
    for (std::size_t i = 0; i < cover.clusters.size(); ++i) {
        const auto& cl = cover.clusters[i];
        if (cl.empty()) return {Decision::no, "cluster " + std::to_string(i) + " is empty", {}};
        for (int v : cl) {
            if (v < 0 || v >= g.order())
                return {Decision::no, "cluster " + std::to_string(i) + " has out-of-range vertex",
                        cl};
        }
        if (!std::is_sorted(cl.begin(), cl.end()) ||
            std::adjacent_find(cl.begin(), cl.end()) != cl.end())
            return {Decision::no, "cluster " + std::to_string(i) + " is not a sorted vertex set",
                    cl};
        auto sub = induced_subgraph(g, cl);
        if (!is_connected(sub.graph))
            return {Decision::no, "cluster " + std::to_string(i) + " is not connected", cl};
        auto td = treedepth_at_most(sub.graph, cover.t, budget);
        if (td.decision == Decision::no)
            return {Decision::no,
                    "cluster " + std::to_string(i) + " has tree-depth above " +
                        std::to_string(cover.t),
                    cl};
        if (td.decision == Decision::indeterminate) undecided = true;
        for (int v : cl) {
            containing[v].push_back(static_cast<int>(i));
            ++membership[v];
        }
    }

    std::vector<std::vector<int>> sets;
    if (!enumerate_connected_sets(g, cover.t, budget, sets))
        return {Decision::indeterminate, "connected-set enumeration budget exceeded", {}};
    for (const auto& s : sets) {
        bool inside = false;
        for (int idx : containing[s.front()]) {
            const auto& cl = cover.clusters[idx];
            if (std::includes(cl.begin(), cl.end(), s.begin(), s.end())) {
                inside = true;
                break;
            }
        }
        if (!inside) return {Decision::no, "connected set not inside any cluster", s};
    }

    const auto bound = cover.membership_bound();
    for (int v = 0; v < g.order(); ++v)
        if (static_cast<std::uint64_t>(membership[v]) > bound)
            return {Decision::no,
                    "vertex " + std::to_string(v) + " lies in " + std::to_string(membership[v]) +
                        " clusters, bound " + std::to_string(bound),
                    {v}};
    if (undecided) return {Decision::indeterminate, "cluster tree-depth undecided", {}};
    return check;
}

}  // namespace sparsity
