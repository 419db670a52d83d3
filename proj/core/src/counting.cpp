#include "sparsity/counting.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sparsity/error.hpp"
#include "sparsity/parallel.hpp"

namespace sparsity {

const char* to_string(CountMode mode) {
    return mode == CountMode::induced ? "induced" : "subgraph";
}

CountMode parse_count_mode(std::string_view text) {
    if (text == "subgraph") return CountMode::subgraph;
    if (text == "induced") return CountMode::induced;
    throw UsageError("unknown count mode: " + std::string(text));
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count exceeds 64 bits");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count exceeds 64 bits");
    return r;
}

std::vector<std::vector<int>> permutations(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Bit index of the pair (i, j), i < j, among k labeled vertices.
int pair_index(int i, int j, int k) { return i * k - i * (i + 1) / 2 + (j - i - 1); }

}  // namespace

std::uint64_t automorphism_count(const Graph& h, int limit) {
    require_size("automorphism_count", h.order(), limit);
    std::uint64_t count = 0;
    for (const auto& p : permutations(h.order())) {
        bool ok = true;
        for (auto [u, v] : h.edges())
            if (!h.adjacent(p[u], p[v])) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

std::uint64_t count_bruteforce(const Graph& h, const Graph& g, CountMode mode, int pattern_limit,
                               int host_limit) {
    require_size("count_bruteforce (pattern)", h.order(), pattern_limit);
    require_size("count_bruteforce (host)", g.order(), host_limit);
    const int k = h.order(), n = g.order();
    if (k == 0) throw UsageError("pattern must have at least one vertex");
    if (k > n || h.size() > g.size()) return 0;

    // copies[pattern] = copies of H spanning all k labeled vertices of that graph
    const int pairs = k * (k - 1) / 2;
    const auto perms = permutations(k);
    const std::uint64_t aut = automorphism_count(h, pattern_limit);
    std::vector<std::uint64_t> copies(std::size_t{1} << pairs, 0);
    for (std::size_t pattern = 0; pattern < copies.size(); ++pattern) {
        std::uint64_t hits = 0;
        for (const auto& p : perms) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j) {
                    int a = std::min(p[i], p[j]), b = std::max(p[i], p[j]);
                    bool in_g = (pattern >> pair_index(a, b, k)) & 1U;
                    bool in_h = h.adjacent(i, j);
                    ok = mode == CountMode::induced ? in_g == in_h : (!in_h || in_g);
                }
            hits += ok;
        }
        copies[pattern] = hits / aut;
    }

    std::uint64_t total = 0;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::size_t pattern = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.adjacent(pick[i], pick[j])) pattern |= std::size_t{1} << pair_index(i, j, k);
        total = checked_add(total, copies[pattern]);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.size() != b.size()) return std::nullopt;
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    // Map vertices of a in BFS-ish order of decreasing degree so adjacency constraints bite early.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return da[x] > da[y]; });
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto& self, int idx) -> bool {
        if (idx == n) return true;
        const int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || db[w] != da[v]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int u = order[j];
                ok = a.adjacent(u, v) == b.adjacent(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

namespace {

using Vec = std::vector<std::uint64_t>;  // indexed by the mask of used colors

// Counts injective maps of the pattern into a host whose every edge joins an
// ancestor/descendant pair of `forest`. A state at node x fixes where some pattern
// vertices sit on the chain above x (by depth) and which pattern vertices W still
// have to land in the subtree of x. Only sets W that are closed under pattern
// adjacency (modulo already placed vertices) are requested, since incomparable
// subtrees carry no edges between them.
class ForestCounter {
public:
    static constexpr std::uint8_t kFree = 0xFF;

    ForestCounter(const Graph& h, const Graph& host, const EliminationForest& forest,
                  std::vector<int> color_bit, int color_count, CountMode mode)
        : h_(h), host_(host), k_(h.order()), mode_(mode), color_bit_(std::move(color_bit)),
          width_(std::size_t{1} << color_count), children_(host.order()),
          chain_(host.order()), subtree_(host.order(), 1), memo_(host.order()) {
        if (forest.height > 254)
            throw SizeLimitError("count_ltd (forest height)", forest.height, 254);
        hadj_.assign(k_, 0);
        for (auto [u, v] : h.edges()) {
            hadj_[u] |= 1U << v;
            hadj_[v] |= 1U << u;
        }
        for (int v = 0; v < host.order(); ++v)
            if (forest.parent[v] >= 0) children_[forest.parent[v]].push_back(v);
        roots_ = forest.roots;
        for (int r : roots_) build(r, {});
    }

    std::uint64_t count_full() {
        std::vector<std::uint8_t> sigma(k_, kFree);
        Vec result = fold(roots_, sigma, (1U << k_) - 1);
        return result[width_ - 1];
    }

private:
    void build(int x, std::vector<int> chain) {
        chain.push_back(x);
        chain_[x] = chain;
        for (int c : children_[x]) {
            build(c, chain);
            subtree_[x] += subtree_[c];
        }
    }

    Vec unit() const {
        Vec v(width_, 0);
        v[0] = 1;
        return v;
    }

    bool closed(unsigned set, const std::vector<std::uint8_t>& sigma) const {
        unsigned allowed = set;
        for (int i = 0; i < k_; ++i)
            if (sigma[i] != kFree) allowed |= 1U << i;
        for (unsigned m = set; m; m &= m - 1)
            if (hadj_[__builtin_ctz(m)] & ~allowed) return false;
        return true;
    }

    Vec convolve(const Vec& a, const Vec& b) const {
        Vec out(width_, 0);
        for (std::size_t i = 0; i < width_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < width_; ++j)
                if (b[j]) out[i | j] = checked_add(out[i | j], checked_mul(a[i], b[j]));
        }
        return out;
    }

    void accumulate(Vec& into, const Vec& v) const {
        for (std::size_t i = 0; i < width_; ++i) into[i] = checked_add(into[i], v[i]);
    }

    // Distributes W over the given subtrees.
    Vec fold(const std::vector<int>& nodes, const std::vector<std::uint8_t>& sigma, unsigned w) {
        std::unordered_map<unsigned, Vec> acc{{0U, unit()}};
        for (int c : nodes) {
            std::unordered_map<unsigned, Vec> next;
            for (const auto& [placed, vec] : acc) {
                const unsigned rest = w & ~placed;
                // V = empty
                auto [it, fresh] = next.try_emplace(placed, Vec(width_, 0));
                accumulate(it->second, vec);
                for (unsigned v = rest; v; v = (v - 1) & rest) {
                    if (static_cast<int>(__builtin_popcount(v)) > subtree_[c]) continue;
                    if (!closed(v, sigma)) continue;
                    const Vec& sub = solve(c, sigma, v);
                    if (std::all_of(sub.begin(), sub.end(), [](auto x) { return x == 0; })) continue;
                    auto [jt, fresh2] = next.try_emplace(placed | v, Vec(width_, 0));
                    accumulate(jt->second, convolve(vec, sub));
                }
            }
            acc = std::move(next);
        }
        auto it = acc.find(w);
        return it == acc.end() ? Vec(width_, 0) : it->second;
    }

    const Vec& solve(int x, const std::vector<std::uint8_t>& sigma, unsigned w) {
        std::uint64_t key = w;
        for (int i = 0; i < k_; ++i) key |= static_cast<std::uint64_t>(sigma[i]) << (8 + 8 * i);
        if (auto it = memo_[x].find(key); it != memo_[x].end()) return it->second;

        Vec result = fold(children_[x], sigma, w);  // x unused
        const int depth = static_cast<int>(chain_[x].size()) - 1;
        for (unsigned m = w; m; m &= m - 1) {
            const int p = __builtin_ctz(m);
            bool ok = true;
            for (int i = 0; i < k_ && ok; ++i) {
                if (sigma[i] == kFree) continue;
                const bool in_h = (hadj_[p] >> i) & 1U;
                const bool in_g = host_.adjacent(x, chain_[x][sigma[i]]);
                ok = mode_ == CountMode::induced ? in_h == in_g : (!in_h || in_g);
            }
            if (!ok) continue;
            auto next_sigma = sigma;
            next_sigma[p] = static_cast<std::uint8_t>(depth);
            Vec below = fold(children_[x], next_sigma, w & ~(1U << p));
            const std::size_t b = std::size_t{1} << color_bit_[x];
            for (std::size_t i = 0; i < width_; ++i)
                if (below[i]) result[i | b] = checked_add(result[i | b], below[i]);
        }
        return memo_[x].emplace(key, std::move(result)).first->second;
    }

    const Graph& h_;
    const Graph& host_;
    int k_;
    CountMode mode_;
    std::vector<int> color_bit_;
    std::size_t width_;
    std::vector<unsigned> hadj_;
    std::vector<std::vector<int>> children_;
    std::vector<std::vector<int>> chain_;
    std::vector<int> subtree_;
    std::vector<int> roots_;
    std::vector<std::unordered_map<std::uint64_t, Vec>> memo_;
};

std::vector<std::vector<int>> subsets_up_to(int palette, int max_size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int start) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_size) return;
        for (int c = start; c < palette; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

CountResult count_with_coloring(const Graph& h, const Graph& g, CountMode mode,
                                const Coloring& c, const LtdOptions& options) {
    require_size("count_ltd (pattern)", h.order(), kLtdPatternLimit);
    if (h.order() == 0) throw UsageError("pattern must have at least one vertex");
    c.validate(g.order());
    CountResult result;
    result.palette = c.palette;
    result.automorphisms = automorphism_count(h, kLtdPatternLimit);
    if (h.order() > g.order() || h.size() > g.size()) return result;

    const int k = h.order();
    auto sets = subsets_up_to(c.palette, k);
    std::vector<std::uint64_t> partial(sets.size(), 0);
    parallel_for(sets.size(), options.threads, [&](std::size_t idx) {
        const auto& colors = sets[idx];
        std::vector<int> position(c.palette, -1);
        for (int i = 0; i < static_cast<int>(colors.size()); ++i) position[colors[i]] = i;
        std::vector<int> vertices;
        Mask seen = 0;
        for (int v = 0; v < g.order(); ++v)
            if (position[c.color[v]] >= 0) {
                vertices.push_back(v);
                seen |= bit(position[c.color[v]]);
            }
        // every color of the set has to occur, and there must be room for H
        if (popcount(seen) != static_cast<int>(colors.size())) return;
        if (static_cast<int>(vertices.size()) < k) return;
        auto sub = induced_subgraph(g, vertices);
        auto bounded = treedepth_at_most(sub.graph, static_cast<int>(colors.size()),
                                         options.td_budget);
        EliminationForest forest = bounded.decision == Decision::yes
                                       ? *bounded.witness
                                       : dfs_height_bounds(sub.graph).witness;
        std::vector<int> color_bit(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i)
            color_bit[i] = position[c.color[vertices[i]]];
        ForestCounter counter(h, sub.graph, forest, std::move(color_bit),
                              static_cast<int>(colors.size()), mode);
        partial[idx] = counter.count_full();
    });
    for (auto x : partial) {
        result.embeddings = checked_add(result.embeddings, x);
        result.color_sets += x != 0;
    }
    result.count = result.embeddings / result.automorphisms;
    return result;
}

CountResult count_ltd(const Graph& h, const Graph& g, CountMode mode, const LtdOptions& options) {
    require_size("count_ltd (pattern)", h.order(), kLtdPatternLimit);
    if (h.order() == 0) throw UsageError("pattern must have at least one vertex");
    if (g.order() == 0) {
        CountResult empty;
        empty.automorphisms = automorphism_count(h, kLtdPatternLimit);
        return empty;
    }
    auto decomposition = ltd_coloring(g, h.order(), options);
    auto result = count_with_coloring(h, g, mode, decomposition.coloring, options);
    result.rounds = decomposition.rounds_used;
    return result;
}

namespace {

Graph induced(const Graph& g, const std::vector<int>& vertices) {
    return induced_subgraph(g, vertices).graph;
}

}  // namespace

SunflowerCheck verify_sunflower(const Graph& g, const Graph& f, int k, const Sunflower& s,
                                std::uint64_t product_budget) {
    require_size("verify_sunflower (pattern)", f.order(), 8);
    auto fail = [](std::string why) { return SunflowerCheck{Decision::no, std::move(why)}; };
    if (k < 1) throw UsageError("sunflower size k must be at least 1");
    if (static_cast<int>(s.families.size()) != k || static_cast<int>(s.petals.size()) != k)
        return fail("expected " + std::to_string(k) + " families and petals");

    std::vector<int> owner(g.order(), 0);
    auto claim = [&](const std::vector<int>& set, const char* what) -> std::string {
        if (set.empty() && std::string(what) != "center") return std::string(what) + " is empty";
        for (int v : set) {
            if (v < 0 || v >= g.order()) return std::string(what) + " vertex out of range";
            if (owner[v]++) return "sets are not pairwise disjoint (vertex " + std::to_string(v) + ")";
        }
        return {};
    };
    if (auto why = claim(s.center, "center"); !why.empty()) return fail(why);
    for (const auto& family : s.families) {
        if (family.empty()) return fail("empty family");
        for (const auto& set : family)
            if (auto why = claim(set, "petal set"); !why.empty()) return fail(why);
    }

    std::vector<int> part(f.order(), -2);
    for (int v : s.kernel) {
        if (v < 0 || v >= f.order() || part[v] != -2) return fail("K, Y_i do not partition V(F)");
        part[v] = -1;
    }
    for (int i = 0; i < k; ++i)
        for (int v : s.petals[i]) {
            if (v < 0 || v >= f.order() || part[v] != -2)
                return fail("K, Y_i do not partition V(F)");
            part[v] = i;
        }
    if (std::count(part.begin(), part.end(), -2)) return fail("K, Y_i do not partition V(F)");
    for (auto [u, v] : f.edges())
        if (part[u] >= 0 && part[v] >= 0 && part[u] != part[v])
            return fail("F has an edge between Y_" + std::to_string(part[u] + 1) + " and Y_" +
                        std::to_string(part[v] + 1));

    if (!isomorphic(induced(g, s.center), induced(f, s.kernel)))
        return fail("G[C] is not isomorphic to F[K]");
    for (int i = 0; i < k; ++i) {
        Graph petal = induced(f, s.petals[i]);
        for (const auto& set : s.families[i])
            if (!isomorphic(induced(g, set), petal))
                return fail("a set of F_" + std::to_string(i + 1) + " is not isomorphic to Y_" +
                            std::to_string(i + 1));
    }

    std::uint64_t product = 1;
    for (const auto& family : s.families) {
        if (__builtin_mul_overflow(product, family.size(), &product) || product > product_budget)
            return {Decision::indeterminate, "transversal count exceeds budget"};
    }
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
        std::vector<int> vertices = s.center;
        for (int i = 0; i < k; ++i)
            vertices.insert(vertices.end(), s.families[i][pick[i]].begin(),
                            s.families[i][pick[i]].end());
        std::sort(vertices.begin(), vertices.end());
        if (!isomorphic(induced(g, vertices), f)) {
            std::string which;
            for (int i = 0; i < k; ++i) which += (i ? "," : "") + std::to_string(pick[i]);
            return fail("transversal (" + which + ") does not induce F");
        }
        int i = k - 1;
        while (i >= 0 && pick[i] + 1 == s.families[i].size()) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    return {};
}

}  // namespace sparsity
