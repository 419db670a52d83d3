#include "sparsity/treedepth.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "sparsity/error.hpp"

namespace sparsity {

int ceil_log2(std::uint64_t x) {
    int k = 0;
    while (k < 64 && (std::uint64_t{1} << k) < x) ++k;
    return k;
}

const char* to_string(Decision d) {
    switch (d) {
        case Decision::yes: return "yes";
        case Decision::no: return "no";
        case Decision::indeterminate: return "indeterminate";
    }
    return "?";
}

EliminationForest EliminationForest::from_parents(std::vector<int> parent) {
    const int n = static_cast<int>(parent.size());
    EliminationForest f;
    std::vector<int> depth(n, 0);
    for (int v = 0; v < n; ++v) {
        if (parent[v] < -1 || parent[v] >= n || parent[v] == v)
            throw ValidationError("invalid parent for vertex " + std::to_string(v));
        if (parent[v] == -1) f.roots.push_back(v);
    }
    // Resolve depths iteratively; a chain longer than n means a cycle.
    for (int v = 0; v < n; ++v) {
        if (depth[v]) continue;
        std::vector<int> chain;
        int x = v;
        while (x != -1 && depth[x] == 0) {
            chain.push_back(x);
            if (static_cast<int>(chain.size()) > n)
                throw ValidationError("parent relation contains a cycle");
            x = parent[x];
        }
        int base = x == -1 ? 0 : depth[x];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++base;
    }
    f.height = n ? *std::max_element(depth.begin(), depth.end()) : 0;
    f.parent = std::move(parent);
    return f;
}

std::vector<int> EliminationForest::depths() const {
    std::vector<int> depth(parent.size(), 0);
    for (int v = 0; v < order(); ++v) {
        int d = 0;
        for (int x = v; x != -1; x = parent[x]) ++d;
        depth[v] = d;
    }
    return depth;
}

bool EliminationForest::is_ancestor(int a, int b) const {
    for (int x = b; x != -1; x = parent[x])
        if (x == a) return true;
    return false;
}

Coloring Coloring::from_colors(std::vector<int> color) {
    Coloring c;
    for (int x : color) {
        if (x < 0) throw ValidationError("negative color");
        c.palette = std::max(c.palette, x + 1);
    }
    c.color = std::move(color);
    return c;
}

void Coloring::validate(int n) const {
    if (static_cast<int>(color.size()) != n)
        throw ValidationError("coloring does not cover every vertex");
    for (int x : color)
        if (x < 0 || x >= palette) throw ValidationError("color outside declared palette");
}

namespace {

Mask component_of(const Graph& g, Mask within, int start) {
    Mask comp = bit(start), frontier = comp;
    while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= g.neighbor_mask(lowest_bit(m));
        next &= within & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<Mask> components_of(const Graph& g, Mask within) {
    std::vector<Mask> comps;
    while (within) {
        Mask c = component_of(g, within, lowest_bit(within));
        comps.push_back(c);
        within &= ~c;
    }
    return comps;
}

int dfs_height_mask(const Graph& g, Mask within) {
    int height = 0;
    Mask visited = 0;
    int stack[kMaskBits];
    while (Mask rest = within & ~visited) {
        int size = 0;
        stack[size++] = lowest_bit(rest);
        visited |= bit(stack[0]);
        height = std::max(height, 1);
        while (size) {
            Mask next = g.neighbor_mask(stack[size - 1]) & within & ~visited;
            if (!next) {
                --size;
                continue;
            }
            int u = lowest_bit(next);
            visited |= bit(u);
            stack[size++] = u;
            height = std::max(height, size);
        }
    }
    return height;
}

int degeneracy_mask(const Graph& g, Mask within) {
    int best = 0;
    while (within) {
        int pick = -1, low = kMaskBits + 1;
        for (Mask m = within; m; m &= m - 1) {
            int v = lowest_bit(m);
            int d = popcount(g.neighbor_mask(v) & within);
            if (d < low) {
                low = d;
                pick = v;
            }
        }
        best = std::max(best, low);
        within &= ~bit(pick);
    }
    return best;
}

class ExactSolver {
public:
    explicit ExactSolver(const Graph& g) : g_(g) {}

    int solve(Mask set) {
        int best = 0;
        for (Mask c : components_of(g_, set)) best = std::max(best, connected(c));
        return best;
    }

    void build(Mask set, int parent_vertex, std::vector<int>& parent) {
        for (Mask c : components_of(g_, set)) {
            int target = connected(c);
            if (popcount(c) == 1) {
                parent[lowest_bit(c)] = parent_vertex;
                continue;
            }
            for (Mask m = c; m; m &= m - 1) {
                int v = lowest_bit(m);
                if (1 + solve(c & ~bit(v)) == target) {
                    parent[v] = parent_vertex;
                    build(c & ~bit(v), v, parent);
                    break;
                }
            }
        }
    }

private:
    int connected(Mask set) {
        const int size = popcount(set);
        if (size <= 2) return size;
        if (auto it = memo_.find(set); it != memo_.end()) return it->second;

        const int upper = dfs_height_mask(g_, set);
        const int lower = std::max(ceil_log2(static_cast<std::uint64_t>(upper) + 1),
                                   degeneracy_mask(g_, set) + 1);
        int best = upper;
        if (lower < upper) {
            std::vector<std::pair<int, int>> candidates;
            for (Mask m = set; m; m &= m - 1) {
                int v = lowest_bit(m);
                candidates.emplace_back(-popcount(g_.neighbor_mask(v) & set), v);
            }
            std::sort(candidates.begin(), candidates.end());
            for (auto [neg_degree, v] : candidates) {
                int value = 0;
                for (Mask c : components_of(g_, set & ~bit(v))) {
                    value = std::max(value, connected(c));
                    if (1 + value >= best) break;
                }
                if (1 + value < best) {
                    best = 1 + value;
                    if (best == lower) break;
                }
            }
        }
        memo_.emplace(set, best);
        return best;
    }

    const Graph& g_;
    std::unordered_map<Mask, int> memo_;
};

struct DfsForest {
    std::vector<int> parent;
    int height = 0;
};

DfsForest dfs_forest(const Graph& g) {
    const int n = g.order();
    DfsForest f{std::vector<int>(n, -1), 0};
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> cursor(n, 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        stack.assign(1, root);
        f.height = std::max(f.height, 1);
        while (!stack.empty()) {
            int v = stack.back();
            auto nb = g.neighbors(v);
            while (cursor[v] < nb.size() && visited[nb[cursor[v]]]) ++cursor[v];
            if (cursor[v] == nb.size()) {
                stack.pop_back();
                continue;
            }
            int u = nb[cursor[v]];
            visited[u] = 1;
            f.parent[u] = v;
            stack.push_back(u);
            f.height = std::max(f.height, static_cast<int>(stack.size()));
        }
    }
    return f;
}

class BoundedSolver {
public:
    BoundedSolver(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    Decision decide(const std::vector<int>& set, int k) {
        auto sub = induced_subgraph(g_, set);
        bool unknown = false;
        for (const auto& comp : connected_components(sub.graph)) {
            std::vector<int> global;
            global.reserve(comp.size());
            for (int v : comp) global.push_back(sub.to_parent[v]);
            Decision d = decide_connected(global, k);
            if (d == Decision::no) return Decision::no;
            if (d == Decision::indeterminate) unknown = true;
        }
        return unknown ? Decision::indeterminate : Decision::yes;
    }

    // Requires decide(set, k) == yes.
    void build(const std::vector<int>& set, int k, int parent_vertex, std::vector<int>& parent) {
        auto sub = induced_subgraph(g_, set);
        for (const auto& comp : connected_components(sub.graph)) {
            std::vector<int> global;
            for (int v : comp) global.push_back(sub.to_parent[v]);
            if (static_cast<int>(global.size()) <= k) {
                int prev = parent_vertex;
                for (int v : global) {
                    parent[v] = prev;
                    prev = v;
                }
                continue;
            }
            int root = memo_.at({k, global}).second;
            if (root == kUseDfs) {
                auto local = induced_subgraph(g_, global);
                auto dfs = dfs_forest(local.graph);
                for (int i = 0; i < static_cast<int>(global.size()); ++i)
                    parent[global[i]] = dfs.parent[i] < 0 ? parent_vertex : global[dfs.parent[i]];
                continue;
            }
            parent[root] = parent_vertex;
            std::vector<int> rest;
            for (int v : global)
                if (v != root) rest.push_back(v);
            build(rest, k - 1, root, parent);
        }
    }

private:
    static constexpr int kUseDfs = -2;

    Decision decide_connected(const std::vector<int>& comp, int k) {
        if (static_cast<int>(comp.size()) <= k) return Decision::yes;
        if (k <= 1) return Decision::no;
        auto key = std::make_pair(k, comp);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second.first;
        if (++nodes_ > budget_) return Decision::indeterminate;

        auto local = induced_subgraph(g_, comp);
        auto dfs = dfs_forest(local.graph);
        if (dfs.height <= k) {
            memo_.emplace(std::move(key), std::make_pair(Decision::yes, kUseDfs));
            return Decision::yes;
        }
        if (ceil_log2(static_cast<std::uint64_t>(dfs.height) + 1) > k ||
            degeneracy(local.graph) + 1 > k) {
            memo_.emplace(std::move(key), std::make_pair(Decision::no, -1));
            return Decision::no;
        }

        std::vector<std::pair<int, int>> candidates;
        for (int i = 0; i < local.graph.order(); ++i)
            candidates.emplace_back(-local.graph.degree(i), i);
        std::sort(candidates.begin(), candidates.end());
        bool unknown = false;
        for (auto [neg_degree, i] : candidates) {
            std::vector<int> rest;
            rest.reserve(comp.size() - 1);
            for (int v : comp)
                if (v != comp[i]) rest.push_back(v);
            Decision d = decide(rest, k - 1);
            if (d == Decision::yes) {
                memo_.emplace(std::move(key), std::make_pair(Decision::yes, comp[i]));
                return Decision::yes;
            }
            if (d == Decision::indeterminate) unknown = true;
        }
        if (unknown) return Decision::indeterminate;
        memo_.emplace(std::move(key), std::make_pair(Decision::no, -1));
        return Decision::no;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::map<std::pair<int, std::vector<int>>, std::pair<Decision, int>> memo_;
};

}  // namespace

TreedepthResult treedepth_exact(const Graph& g, int exact_limit) {
    require_size("treedepth_exact", g.order(), std::min(exact_limit, kMaskBits));
    ExactSolver solver(g);
    TreedepthResult result;
    result.treedepth = solver.solve(g.vertex_mask());
    std::vector<int> parent(g.order(), -1);
    solver.build(g.vertex_mask(), -1, parent);
    result.witness = EliminationForest::from_parents(std::move(parent));
    return result;
}

bool verify_elimination_forest(const Graph& g, const EliminationForest& f) {
    if (f.order() != g.order())
        throw ValidationError("forest is defined on " + std::to_string(f.order()) +
                              " vertices, graph has " + std::to_string(g.order()));
    auto checked = EliminationForest::from_parents(f.parent);
    if (checked.height != f.height || checked.roots != f.roots)
        throw ValidationError("forest height or roots inconsistent with parent relation");
    auto depth = f.depths();
    for (auto [u, v] : g.edges()) {
        int lo = depth[u] > depth[v] ? u : v;
        int hi = lo == u ? v : u;
        if (!f.is_ancestor(hi, lo)) return false;
    }
    return true;
}

Coloring centered_coloring_from_forest(const EliminationForest& f) {
    Coloring c;
    auto depth = f.depths();
    c.color.resize(depth.size());
    for (std::size_t v = 0; v < depth.size(); ++v) c.color[v] = depth[v] - 1;
    c.palette = f.height;
    return c;
}

bool verify_centered_coloring(const Graph& g, const Coloring& c, int limit) {
    require_size("verify_centered_coloring", g.order(), std::min(limit, 30));
    c.validate(g.order());
    const int n = g.order();
    std::vector<int> count(c.palette, 0);
    for (Mask set = 1; set < (Mask{1} << n); ++set) {
        if (component_of(g, set, lowest_bit(set)) != set) continue;
        for (Mask m = set; m; m &= m - 1) ++count[c.color[lowest_bit(m)]];
        bool unique = false;
        for (Mask m = set; m; m &= m - 1) {
            int col = c.color[lowest_bit(m)];
            if (count[col] == 1) unique = true;
            count[col] = 0;
        }
        if (!unique) return false;
    }
    return true;
}

bool verify_vertex_ranking(const Graph& g, const Coloring& c, int limit) {
    require_size("verify_vertex_ranking", g.order(), limit);
    c.validate(g.order());
    for (int k = 0; k < c.palette; ++k) {
        std::vector<int> keep;
        for (int v = 0; v < g.order(); ++v)
            if (c.color[v] <= k) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);
        for (const auto& comp : connected_components(sub.graph)) {
            int top = 0;
            for (int v : comp) top += c.color[sub.to_parent[v]] == k;
            if (top > 1) return false;
        }
    }
    return true;
}

DfsBounds dfs_height_bounds(const Graph& g) {
    auto dfs = dfs_forest(g);
    DfsBounds b;
    b.upper = dfs.height;
    b.lower = g.order() ? ceil_log2(static_cast<std::uint64_t>(dfs.height) + 2) : 0;
    b.path_lower = ceil_log2(static_cast<std::uint64_t>(dfs.height) + 1);
    b.witness = EliminationForest::from_parents(std::move(dfs.parent));
    return b;
}

BoundedTreedepth treedepth_at_most(const Graph& g, int k, std::uint64_t budget) {
    BoundedTreedepth result;
    if (k < 0) throw UsageError("tree-depth bound must be non-negative");
    if (g.order() == 0) {
        result.decision = Decision::yes;
        result.witness = EliminationForest::from_parents({});
        return result;
    }
    if (k == 0) {
        result.decision = Decision::no;
        return result;
    }
    BoundedSolver solver(g, budget);
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    result.decision = solver.decide(all, k);
    if (result.decision == Decision::yes) {
        std::vector<int> parent(g.order(), -1);
        solver.build(all, k, -1, parent);
        result.witness = EliminationForest::from_parents(std::move(parent));
    }
    return result;
}

}  // namespace sparsity
