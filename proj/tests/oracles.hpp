#pragma once

// Deliberately naive reference implementations. They share nothing with the library
// beyond the Graph type and are only meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <numeric>
#include <vector>

#include "sparsity/graph.hpp"
#include "sparsity/rational.hpp"

namespace oracle {

using sparsity::Graph;
using sparsity::Rational;
using Mask = std::uint64_t;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

inline std::vector<Mask> components(const std::vector<std::vector<bool>>& a, Mask set) {
    std::vector<Mask> out;
    Mask left = set;
    while (left) {
        int s = __builtin_ctzll(left);
        Mask comp = Mask{1} << s, frontier = comp;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            for (int u = 0; u < static_cast<int>(a.size()); ++u)
                if (a[v][u] && ((set >> u) & 1) && !((comp >> u) & 1)) {
                    comp |= Mask{1} << u;
                    frontier |= Mask{1} << u;
                }
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline bool connected(const std::vector<std::vector<bool>>& a, Mask set) {
    return set && components(a, set).size() == 1;
}

// td by the textbook recursion, no memo, no pruning.
inline int treedepth(const std::vector<std::vector<bool>>& a, Mask set) {
    if (!set) return 0;
    if (__builtin_popcountll(set) == 1) return 1;
    auto comps = components(a, set);
    if (comps.size() > 1) {
        int best = 0;
        for (Mask c : comps) best = std::max(best, treedepth(a, c));
        return best;
    }
    int best = 1 << 20;
    for (Mask m = set; m; m &= m - 1) best = std::min(best, 1 + treedepth(a, set & ~(m & -m)));
    return best;
}

inline int treedepth(const Graph& g) {
    return treedepth(adjacency(g), g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1);
}

// Every connected vertex subset has a color occurring exactly once.
inline bool centered(const std::vector<std::vector<bool>>& a, const std::vector<int>& color) {
    const int n = static_cast<int>(a.size());
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        if (!connected(a, s)) continue;
        std::vector<int> count(n + 1, 0);
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1) ++count[color[v]];
        if (std::find(count.begin(), count.end(), 1) == count.end()) return false;
    }
    return true;
}

// Any path between two vertices of equal color passes a higher color: search for a
// path whose interior stays at or below that color.
inline bool ranking(const std::vector<std::vector<bool>>& a, const std::vector<int>& color) {
    const int n = static_cast<int>(a.size());
    for (int u = 0; u < n; ++u) {
        std::vector<bool> seen(n, false);
        std::vector<int> stack{u};
        seen[u] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!a[v][w] || seen[w]) continue;
                if (w != u && color[w] == color[u]) return false;
                if (color[w] > color[u]) continue;
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return true;
}

// Smallest k such that some map V -> [0, k) satisfies `ok`.
inline int min_palette(int n, const std::function<bool(const std::vector<int>&)>& ok) {
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        for (;;) {
            if (ok(c)) return k;
            int i = 0;
            while (i < n && c[i] == k - 1) c[i++] = 0;
            if (i == n) break;
            ++c[i];
        }
    }
}

inline bool proper(const Graph& g, const std::vector<int>& c) {
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

// Both kinds of coloring are proper, so improper maps are skipped cheaply.
inline int min_centered_palette(const Graph& g) {
    auto a = adjacency(g);
    return min_palette(g.order(),
                       [&](const std::vector<int>& c) { return proper(g, c) && centered(a, c); });
}

inline int min_ranking_palette(const Graph& g) {
    auto a = adjacency(g);
    return min_palette(g.order(),
                       [&](const std::vector<int>& c) { return proper(g, c) && ranking(a, c); });
}

inline Rational max_density(const Graph& g) {
    Rational best(0);
    auto a = adjacency(g);
    const int n = g.order();
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        std::int64_t e = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e += ((s >> u) & 1) && ((s >> v) & 1) && a[u][v];
        best = std::max(best, Rational(e, __builtin_popcountll(s)));
    }
    return best;
}

// Degeneracy as max over vertex subsets of the minimum degree inside.
inline int degeneracy(const Graph& g) {
    auto a = adjacency(g);
    const int n = g.order();
    int best = 0;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        int low = n;
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1)) continue;
            int d = 0;
            for (int u = 0; u < n; ++u) d += ((s >> u) & 1) && a[u][v];
            low = std::min(low, d);
        }
        best = std::max(best, low);
    }
    return best;
}

// Injective maps H -> G preserving edges (and non-edges when induced).
inline std::uint64_t embeddings(const Graph& h, const Graph& g, bool induced) {
    auto ah = adjacency(h), ag = adjacency(g);
    const int k = h.order(), n = g.order();
    std::vector<int> map(k, -1);
    std::vector<bool> used(n, false);
    std::uint64_t count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            ++count;
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                bool eh = ah[i][j], eg = ag[x][map[j]];
                ok = induced ? eh == eg : (!eh || eg);
            }
            if (!ok) continue;
            used[x] = true;
            map[i] = x;
            rec(i + 1);
            used[x] = false;
        }
    };
    rec(0);
    return count;
}

inline std::uint64_t automorphisms(const Graph& h) { return embeddings(h, h, true); }

inline std::uint64_t copies(const Graph& h, const Graph& g, bool induced) {
    return embeddings(h, g, induced) / automorphisms(h);
}

// Every map V(g) -> V(h).
inline bool hom(const Graph& g, const Graph& h) {
    auto ah = adjacency(h);
    const int n = g.order(), m = h.order();
    if (n == 0) return true;
    if (m == 0) return false;
    std::vector<int> map(n, 0);
    for (;;) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!ah[map[u]][map[v]]) {
                ok = false;
                break;
            }
        if (ok) return true;
        int i = 0;
        while (i < n && map[i] == m - 1) map[i++] = 0;
        if (i == n) return false;
        ++map[i];
    }
}

// Shallow-minor density by trying every assignment of vertices to branch sets or
// deletion (restricted growth strings, label 0 = deleted).
inline Rational minor_density(const Graph& g, int r) {
    auto a = adjacency(g);
    const int n = g.order();
    Rational best(0);
    std::vector<int> label(n, 0);
    auto radius_ok = [&](Mask set) {
        if (!connected(a, set)) return false;
        for (int c = 0; c < n; ++c) {
            if (!((set >> c) & 1)) continue;
            Mask reach = Mask{1} << c;
            for (int step = 0; step < r; ++step) {
                Mask next = reach;
                for (int v = 0; v < n; ++v)
                    if ((reach >> v) & 1)
                        for (int u = 0; u < n; ++u)
                            if (a[v][u] && ((set >> u) & 1)) next |= Mask{1} << u;
                reach = next;
            }
            if (reach == set) return true;
        }
        return false;
    };
    std::function<void(int, int)> rec = [&](int v, int sets) {
        if (v == n) {
            if (sets == 0) return;
            std::vector<Mask> branch(sets + 1, 0);
            for (int u = 0; u < n; ++u) branch[label[u]] |= Mask{1} << u;
            for (int i = 1; i <= sets; ++i)
                if (!radius_ok(branch[i])) return;
            std::int64_t e = 0;
            for (int i = 1; i <= sets; ++i)
                for (int j = i + 1; j <= sets; ++j) {
                    bool adj = false;
                    for (int x = 0; x < n && !adj; ++x)
                        for (int y = 0; y < n && !adj; ++y)
                            adj = label[x] == i && label[y] == j && a[x][y];
                    e += adj;
                }
            best = std::max(best, Rational(e, sets));
            return;
        }
        for (int l = 0; l <= sets + 1; ++l) {
            label[v] = l;
            rec(v + 1, std::max(sets, l));
        }
    };
    rec(0, 0);
    return best;
}

// Path-model density: every principal set, every simple path of length at most 2r+1
// per pair, packed exhaustively. Topological models need interiors disjoint from each
// other and from the principal set; immersions need edge-disjoint paths with each
// vertex interior to at most r of them.
inline Rational path_density(const Graph& g, int r, bool immersion) {
    auto a = adjacency(g);
    const int n = g.order();
    Rational best = max_density(g);
    for (Mask principal = 1; principal < (Mask{1} << n); ++principal) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((principal >> v) & 1) members.push_back(v);
        const int k = static_cast<int>(members.size());
        if (k < 2) continue;
        std::vector<std::vector<std::vector<int>>> options;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                std::vector<std::vector<int>> paths;
                std::vector<int> seq{members[i]};
                std::function<void()> walk = [&] {
                    int v = seq.back();
                    if (v == members[j]) {
                        paths.push_back(seq);
                        return;
                    }
                    if (static_cast<int>(seq.size()) > 2 * r + 1) return;
                    for (int u = 0; u < n; ++u)
                        if (a[v][u] && std::find(seq.begin(), seq.end(), u) == seq.end()) {
                            seq.push_back(u);
                            walk();
                            seq.pop_back();
                        }
                };
                walk();
                options.push_back(std::move(paths));
            }
        std::vector<int> load(n, 0);
        std::set<std::pair<int, int>> used;
        int most = 0;
        std::function<void(std::size_t, int)> pack = [&](std::size_t idx, int count) {
            most = std::max(most, count);
            if (idx == options.size() || count + static_cast<int>(options.size() - idx) <= most) return;
            for (const auto& path : options[idx]) {
                bool fits = true;
                for (std::size_t t = 1; t + 1 < path.size(); ++t) {
                    int v = path[t];
                    if (immersion ? load[v] >= r : (load[v] > 0 || ((principal >> v) & 1))) fits = false;
                }
                for (std::size_t t = 0; immersion && t + 1 < path.size(); ++t)
                    if (used.count(std::minmax(path[t], path[t + 1]))) fits = false;
                if (!fits) continue;
                for (std::size_t t = 1; t + 1 < path.size(); ++t) ++load[path[t]];
                for (std::size_t t = 0; immersion && t + 1 < path.size(); ++t)
                    used.insert(std::minmax(path[t], path[t + 1]));
                pack(idx + 1, count + 1);
                for (std::size_t t = 1; t + 1 < path.size(); ++t) --load[path[t]];
                for (std::size_t t = 0; immersion && t + 1 < path.size(); ++t)
                    used.erase(std::minmax(path[t], path[t + 1]));
            }
            pack(idx + 1, count);
        };
        pack(0, 0);
        best = std::max(best, Rational(most, k));
    }
    return best;
}

}  // namespace oracle
