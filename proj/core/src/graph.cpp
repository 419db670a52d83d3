#include "sparsity/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sparsity/error.hpp"

namespace sparsity {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw ValidationError("negative vertex count");
    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != n)
            throw ValidationError("label map does not cover every vertex");
        std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
        if (static_cast<int>(seen.size()) != n) throw ValidationError("duplicate vertex label");
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ValidationError("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    if (n <= kMaskBits) {
        masks_.assign(n, 0);
        for (auto [u, v] : edges_) {
            masks_[u] |= bit(v);
            masks_[v] |= bit(u);
        }
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::adjacent(int u, int v) const {
    if (fits_mask()) return (masks_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::string Graph::label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Mask Graph::vertex_mask() const noexcept {
    return n_ >= kMaskBits ? ~Mask{0} : (bit(n_) - 1);
}

Graph parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.try_emplace(token, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(std::move(tok));
        if (tokens.empty()) continue;
        if (tokens.size() > 2)
            throw ParseError(line_no, "expected two tokens, found " + std::to_string(tokens.size()));
        if (tokens.size() == 1) {
            intern(tokens[0]);
            continue;
        }
        if (tokens[0] == tokens[1])
            throw ValidationError("line " + std::to_string(line_no) + ": self-loop at '" +
                                  tokens[0] + "'");
        int u = intern(tokens[0]);
        int v = intern(tokens[1]);
        edges.emplace_back(u, v);
    }
    int n = static_cast<int>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out;
    int seen = 0;  // ids [0, seen) have appeared in the output
    auto single = [&](int v) {
        out += g.label(v);
        out += '\n';
    };
    for (int v = 0; v < g.order(); ++v) {
        for (int u : g.neighbors(v)) {
            if (u >= v) break;
            // a bare "u v" line may only introduce the next ids in order
            if (v >= seen && !(u == seen && v == seen + 1))
                while (seen < v) single(seen++);
            out += g.label(u);
            out += ' ';
            out += g.label(v);
            out += '\n';
            seen = std::max(seen, v + 1);
        }
    }
    while (seen < g.order()) single(seen++);
    return out;
}

Graph subdivide(const Graph& g, int p) {
    if (p < 0) throw UsageError("subdivision count must be non-negative");
    if (p == 0) return Graph(g.order(), g.edges());
    std::vector<Edge> edges;
    int next = g.order();
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int i = 0; i < p; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph(next, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> keep(vertices.begin(), vertices.end());
    for (int v : keep)
        if (v < 0 || v >= g.order())
            throw ValidationError("induced_subgraph: vertex out of range: " + std::to_string(v));
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<int> local(g.order(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) local[keep[i]] = i;
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int u : g.neighbors(keep[i]))
            if (local[u] > i) edges.emplace_back(i, local[u]);
    return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), kInfinity);
    if (source < 0 || source >= g.order()) throw ValidationError("bfs source out of range");
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v))
            if (dist[u] == kInfinity) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> components;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : g.neighbors(comp[i]))
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

int girth(const Graph& g) {
    int best = kInfinity;
    std::vector<int> dist(g.order()), parent(g.order());
    for (int root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (2 * dist[v] + 1 >= best) break;
            for (int u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (parent[v] != u) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

std::vector<int> smallest_last_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> degree(n);
    std::set<std::pair<int, int>> queue;
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        queue.emplace(degree[v], v);
    }
    std::vector<char> removed(n, 0);
    std::vector<int> order;
    order.reserve(n);
    while (!queue.empty()) {
        int v = queue.begin()->second;
        queue.erase(queue.begin());
        removed[v] = 1;
        order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (removed[u]) continue;
            queue.erase({degree[u], u});
            queue.emplace(--degree[u], u);
        }
    }
    return order;
}

int degeneracy(const Graph& g) {
    auto order = smallest_last_order(g);
    std::vector<char> removed(g.order(), 0);
    int best = 0;
    for (int v : order) {
        int live = 0;
        for (int u : g.neighbors(v)) live += !removed[u];
        best = std::max(best, live);
        removed[v] = 1;
    }
    return best;
}

std::vector<int> greedy_coloring(const Graph& g) {
    auto order = smallest_last_order(g);
    std::vector<int> color(g.order(), -1);
    std::vector<char> used;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        used.assign(g.degree(v) + 1, 0);
        for (int u : g.neighbors(v))
            if (color[u] >= 0 && color[u] <= g.degree(v)) used[color[u]] = 1;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    Mask best = 0;
    int best_size = 0;

    void expand(Mask current, int size, Mask candidates) {
        if (candidates == 0) {
            if (size > best_size) {
                best_size = size;
                best = current;
            }
            return;
        }
        while (candidates) {
            if (size + popcount(candidates) <= best_size) return;
            int v = lowest_bit(candidates);
            candidates &= candidates - 1;
            expand(current | bit(v), size + 1, candidates & g.neighbor_mask(v));
        }
        if (size > best_size) {
            best_size = size;
            best = current;
        }
    }
};

bool color_search(const Graph& g, const std::vector<int>& order, std::size_t idx, int k,
                  int used, std::vector<int>& color) {
    if (idx == order.size()) return true;
    int v = order[idx];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (color_search(g, order, idx + 1, k, std::max(used, c + 1), color)) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

std::vector<int> maximum_clique(const Graph& g, int exact_limit) {
    require_size("maximum_clique", g.order(), std::min(exact_limit, kMaskBits));
    if (g.order() == 0) return {};
    CliqueSearch search{g};
    search.expand(0, 0, g.vertex_mask());
    std::vector<int> clique;
    for (Mask m = search.best; m; m &= m - 1) clique.push_back(lowest_bit(m));
    return clique;
}

int clique_number(const Graph& g, int exact_limit) {
    return static_cast<int>(maximum_clique(g, exact_limit).size());
}

std::vector<int> find_coloring(const Graph& g, int k) {
    std::vector<int> color(g.order(), -1);
    if (g.order() == 0) return color;
    if (k <= 0) return {};
    auto order = smallest_last_order(g);
    std::reverse(order.begin(), order.end());
    if (!color_search(g, order, 0, k, 0, color)) return {};
    return color;
}

int chromatic_number(const Graph& g, int exact_limit) {
    require_size("chromatic_number", g.order(), exact_limit);
    if (g.order() == 0) return 0;
    int lower = std::max(1, clique_number(g, std::max(exact_limit, g.order())));
    for (int k = lower;; ++k)
        if (!find_coloring(g, k).empty()) return k;
}

}  // namespace sparsity
