#include "sparsity/applications.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sparsity/catalog.hpp"
#include "sparsity/error.hpp"

namespace sparsity {

Graph exact_distance_graph(const Graph& g, int n) {
    if (n < 1) throw UsageError("distance must be at least 1");
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = u + 1; v < g.order(); ++v)
            if (dist[v] == n) edges.emplace_back(u, v);
    }
    return Graph(g.order(), std::move(edges));
}

Coloring dn_coloring(const Graph& g, int n) {
    if (n < 1 || n % 2 == 0) throw UsageError("D_n colorings need an odd n >= 1");
    auto c = Coloring::from_colors(greedy_coloring(exact_distance_graph(g, n)));
    if (g.order() == 0) c.palette = 0;
    return c;
}

bool verify_dn_coloring(const Graph& g, int n, const Coloring& c) {
    c.validate(g.order());
    const Graph d = exact_distance_graph(g, n);
    for (auto [u, v] : d.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

std::vector<int> max_odd_distance_set(const Graph& g, int limit) {
    require_size("max_odd_distance_set", g.order(), limit);
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = u + 1; v < g.order(); ++v)
            if (dist[v] != kInfinity && dist[v] % 2 == 1) edges.emplace_back(u, v);
    }
    auto set = maximum_clique(Graph(g.order(), std::move(edges)), std::max(limit, 1));
    std::sort(set.begin(), set.end());
    return set;
}

std::vector<int> Cover::membership(int n) const {
    std::vector<int> count(n, 0);
    for (const auto& c : clusters)
        for (int v : c.vertices) ++count[v];
    return count;
}

int Cover::max_membership(int n) const {
    auto m = membership(n);
    return m.empty() ? 0 : *std::max_element(m.begin(), m.end());
}

namespace {

std::vector<int> ball(const Graph& g, int center, int radius) {
    auto dist = bfs_distances(g, center);
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (dist[v] <= radius) out.push_back(v);
    return out;
}

bool contains_all(const std::vector<char>& in, const std::vector<int>& set) {
    return std::all_of(set.begin(), set.end(), [&](int v) { return in[v] != 0; });
}

int eccentricity_within(const Graph& g, const std::vector<int>& set, int center) {
    auto sub = induced_subgraph(g, set);
    auto it = std::lower_bound(set.begin(), set.end(), center);
    if (it == set.end() || *it != center) return kInfinity;
    auto dist = bfs_distances(sub.graph, static_cast<int>(it - set.begin()));
    return *std::max_element(dist.begin(), dist.end());
}

}  // namespace

Cover neighborhood_cover(const Graph& g, int r, const std::vector<int>& order_in) {
    if (r < 1) throw UsageError("cover radius r must be at least 1");
    const int n = g.order();
    std::vector<int> order = order_in;
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    }
    {
        auto check = order;
        std::sort(check.begin(), check.end());
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(check.size()) != n || check[i] != i)
                throw UsageError("cover order must be a permutation of the vertices");
    }
    std::vector<std::vector<int>> balls(n);
    for (int v = 0; v < n; ++v) balls[v] = ball(g, v, r);

    Cover cover;
    cover.r = r;
    std::vector<char> done(n, 0);
    for (int c : order) {
        if (done[c]) continue;
        Cluster cluster;
        cluster.vertices = ball(g, c, 2 * r);
        cluster.center = c;
        std::vector<char> in(n, 0);
        for (int v : cluster.vertices) in[v] = 1;
        cluster.radius = eccentricity_within(g, cluster.vertices, c);
        for (int v = 0; v < n; ++v)
            if (!done[v] && contains_all(in, balls[v])) done[v] = 1;
        cover.clusters.push_back(std::move(cluster));
    }
    return cover;
}

CoverVerdict verify_cover(const Graph& g, const Cover& cover) {
    const int n = g.order();
    std::vector<std::vector<char>> in;
    for (int i = 0; i < static_cast<int>(cover.clusters.size()); ++i) {
        auto set = cover.clusters[i].vertices;
        std::sort(set.begin(), set.end());
        if (set.empty()) return {false, "empty cluster", i, -1};
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            return {false, "cluster repeats a vertex", i, set.front()};
        if (set.front() < 0 || set.back() >= n) return {false, "cluster vertex out of range", i, -1};
        if (!is_connected(induced_subgraph(g, set).graph))
            return {false, "cluster is not connected", i, -1};
        int best = eccentricity_within(g, set, cover.clusters[i].center);
        for (int c : set) {
            if (best <= 2 * cover.r) break;
            best = std::min(best, eccentricity_within(g, set, c));
        }
        if (best > 2 * cover.r) return {false, "cluster radius exceeds 2r", i, -1};
        std::vector<char> mark(n, 0);
        for (int v : set) mark[v] = 1;
        in.push_back(std::move(mark));
    }
    for (int v = 0; v < n; ++v) {
        auto nb = ball(g, v, cover.r);
        bool ok = std::any_of(in.begin(), in.end(), [&](const auto& m) { return contains_all(m, nb); });
        if (!ok) return {false, "N_r(v) is not contained in any cluster", -1, v};
    }
    return {};
}

InducedSearch find_induced_copy(const Graph& g, const Graph& pattern, std::uint64_t budget) {
    const int k = pattern.order();
    InducedSearch out;
    if (k == 0) return {Decision::yes, {}};
    if (k > g.order()) return out;

    // BFS order per component, so later vertices usually have a placed neighbor.
    std::vector<int> order, anchor(k, -1);
    std::vector<char> seen(k, 0);
    for (int s = 0; s < k; ++s) {
        if (seen[s]) continue;
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (int u : pattern.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    anchor[u] = v;
                    queue.push_back(u);
                }
        }
    }
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> map(k, -1);
    std::vector<char> used(g.order(), 0);
    std::uint64_t nodes = 0;
    bool exhausted = false;
    auto rec = [&](auto& self, int idx) -> bool {
        if (idx == k) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        const int p = order[idx];
        const auto& candidates = anchor[p] >= 0 ? g.neighbors(map[anchor[p]]) : all;
        for (int x : candidates) {
            if (used[x] || g.degree(x) < pattern.degree(p)) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j)
                ok = pattern.adjacent(order[j], p) == g.adjacent(map[order[j]], x);
            if (!ok) continue;
            map[p] = x;
            used[x] = 1;
            if (self(self, idx + 1)) return true;
            used[x] = 0;
            map[p] = -1;
            if (exhausted) return false;
        }
        return false;
    };
    if (rec(rec, 0)) return {Decision::yes, map};
    out.found = exhausted ? Decision::indeterminate : Decision::no;
    return out;
}

std::vector<PatternScan> induced_pattern_scan(const Graph& g, int s, int t, int q,
                                              std::uint64_t budget) {
    std::vector<PatternScan> out;
    if (s > 0) out.push_back({"P_" + std::to_string(s), find_induced_copy(g, path_graph(s), budget)});
    if (t > 0) out.push_back({"K_" + std::to_string(t), find_induced_copy(g, complete_graph(t), budget)});
    if (q > 0) {
        std::vector<Edge> edges;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) edges.emplace_back(a, q + b);
        out.push_back({"K_{" + std::to_string(q) + "," + std::to_string(q) + "}",
                       find_induced_copy(g, Graph(2 * q, std::move(edges)), budget)});
    }
    return out;
}

namespace {

class ListColoring {
public:
    ListColoring(const Graph& g, int k) : g_(g), k_(k), lists_(g.order()) {}

    // Returns false as soon as some prefix assignment has no proper coloring.
    bool all_colorable() { return assign(0, 0); }

    const std::vector<std::vector<int>>& lists() const { return lists_; }

private:
    bool colorable(int upto) {
        std::vector<int> color(upto, -1);
        auto rec = [&](auto& self, int v) -> bool {
            if (v == upto) return true;
            for (int c : lists_[v]) {
                bool ok = true;
                for (int u : g_.neighbors(v))
                    if (u < v && color[u] == c) ok = false;
                if (!ok) continue;
                color[v] = c;
                if (self(self, v + 1)) return true;
            }
            return false;
        };
        return rec(rec, 0);
    }

    bool assign(int v, int used) {
        if (v == g_.order()) return true;
        for (int old = std::min(k_, used); old >= 0; --old) {
            const int fresh = k_ - old;
            // choose `old` colors among [0, used)
            std::vector<int> pick(old);
            std::iota(pick.begin(), pick.end(), 0);
            for (;;) {
                lists_[v] = pick;
                for (int f = 0; f < fresh; ++f) lists_[v].push_back(used + f);
                if (!colorable(v + 1)) {
                    for (int w = v + 1, next = used + fresh; w < g_.order(); ++w)
                        for (int f = 0; f < k_; ++f) lists_[w].push_back(next++);
                    return false;
                }
                if (!assign(v + 1, used + fresh)) return false;
                int i = old - 1;
                while (i >= 0 && pick[i] == used - old + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < old; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return true;
    }

    const Graph& g_;
    int k_;
    std::vector<std::vector<int>> lists_;
};

}  // namespace

ChoosabilityResult is_k_choosable(const Graph& g, int k, int vertex_limit, int list_limit) {
    if (k < 0) throw UsageError("k must be non-negative");
    require_size("is_k_choosable (vertices)", g.order(), vertex_limit);
    require_size("is_k_choosable (list size)", k, list_limit);
    const int n = g.order();
    ChoosabilityResult result;
    if (n == 0) return result;
    auto same_lists = [&] {
        std::vector<int> list(k);
        std::iota(list.begin(), list.end(), 0);
        return std::vector<std::vector<int>>(n, list);
    };
    if (k == 0) return {false, same_lists()};
    if (degeneracy(g) < k) return result;
    if (find_coloring(g, k).empty()) return {false, same_lists()};
    ListColoring search(g, k);
    if (!search.all_colorable()) {
        result.choosable = false;
        result.bad_lists = search.lists();
    }
    return result;
}

}  // namespace sparsity
