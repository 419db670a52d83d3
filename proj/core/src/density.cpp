#include "sparsity/density.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "sparsity/catalog.hpp"
#include "sparsity/error.hpp"

namespace sparsity {

namespace {

class MaxFlow {
public:
    explicit MaxFlow(int n) : adj_(n), level_(n), cursor_(n) {}

    void add(int u, int v, std::int64_t cap_uv, std::int64_t cap_vu = 0) {
        adj_[u].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({v, cap_uv});
        adj_[v].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({u, cap_vu});
    }

    std::int64_t run(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(cursor_.begin(), cursor_.end(), 0);
            while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
                flow += pushed;
        }
        return flow;
    }

    // Vertices reachable from s in the residual graph after run().
    std::vector<char> source_side(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int id : adj_[v])
                if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
                    seen[arcs_[id].to] = 1;
                    queue.push_back(arcs_[id].to);
                }
        }
        return seen;
    }

private:
    struct FlowArc {
        int to;
        std::int64_t cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::deque<int> queue{s};
        level_[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int id : adj_[v])
                if (arcs_[id].cap > 0 && level_[arcs_[id].to] < 0) {
                    level_[arcs_[id].to] = level_[v] + 1;
                    queue.push_back(arcs_[id].to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int v, int t, std::int64_t limit) {
        if (v == t) return limit;
        for (auto& i = cursor_[v]; i < adj_[v].size(); ++i) {
            int id = adj_[v][i];
            auto& a = arcs_[id];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            if (std::int64_t pushed = dfs(a.to, t, std::min(limit, a.cap))) {
                a.cap -= pushed;
                arcs_[id ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<FlowArc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> cursor_;
};

std::size_t edges_inside(const Graph& g, const std::vector<int>& vertices) {
    std::vector<char> in(g.order(), 0);
    for (int v : vertices) in[v] = 1;
    std::size_t count = 0;
    for (auto [u, v] : g.edges()) count += in[u] && in[v];
    return count;
}

int limit_or(const DensityOptions& o, int fallback) {
    return o.exact_limit >= 0 ? o.exact_limit : fallback;
}

bool ratio_exceeds(std::int64_t num, std::int64_t den, const Rational& best) {
    // num/den > best, den > 0
    return static_cast<__int128>(num) * best.den() > static_cast<__int128>(best.num()) * den;
}

}  // namespace

DensestSubgraph nabla0(const Graph& g) {
    const int n = g.order();
    const auto m = static_cast<std::int64_t>(g.size());
    if (m == 0) return {Rational(0), n ? std::vector<int>{0} : std::vector<int>{}};

    std::vector<int> best(n);
    for (int v = 0; v < n; ++v) best[v] = v;
    Rational lambda(m, n);
    for (;;) {
        // Maximize den*|E(S)| - num*|S| by a minimum s-t cut (Goldberg).
        const std::int64_t a = lambda.num(), b = lambda.den();
        const std::int64_t big = b * m;
        const int s = n, t = n + 1;
        MaxFlow flow(n + 2);
        for (int v = 0; v < n; ++v) {
            flow.add(s, v, big);
            flow.add(v, t, big + 2 * a - b * g.degree(v));
        }
        for (auto [u, v] : g.edges()) flow.add(u, v, b, b);
        const std::int64_t cut = flow.run(s, t);
        if (cut >= static_cast<std::int64_t>(n) * big) break;
        auto side = flow.source_side(s);
        std::vector<int> set;
        for (int v = 0; v < n; ++v)
            if (side[v]) set.push_back(v);
        Rational next(static_cast<std::int64_t>(edges_inside(g, set)),
                      static_cast<std::int64_t>(set.size()));
        if (!(next > lambda)) break;  // cannot happen with exact arithmetic
        lambda = next;
        best = std::move(set);
    }
    return {lambda, std::move(best)};
}

Rational nabla0_bruteforce(const Graph& g, int limit) {
    require_size("nabla0_bruteforce", g.order(), std::min(limit, 30));
    Rational best(0);
    const int n = g.order();
    for (Mask set = 1; set < (Mask{1} << n); ++set) {
        std::int64_t twice = 0;
        for (Mask m = set; m; m &= m - 1) twice += popcount(g.neighbor_mask(lowest_bit(m)) & set);
        Rational d(twice / 2, popcount(set));
        if (d > best) best = d;
    }
    return best;
}

namespace {

Mask grow_within(const Graph& g, Mask within, Mask start, int steps) {
    Mask reached = start, frontier = start;
    for (int s = 0; s < steps && frontier; ++s) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= g.neighbor_mask(lowest_bit(m));
        next &= within & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

bool connected_mask(const Graph& g, Mask set) {
    return set && grow_within(g, set, bit(lowest_bit(set)), kMaskBits) == set;
}

bool radius_at_most(const Graph& g, Mask set, int r) {
    if (!connected_mask(g, set)) return false;
    for (Mask m = set; m; m &= m - 1)
        if (grow_within(g, set, bit(lowest_bit(m)), r) == set) return true;
    return false;
}

Mask neighborhood(const Graph& g, Mask set) {
    Mask out = 0;
    for (Mask m = set; m; m &= m - 1) out |= g.neighbor_mask(lowest_bit(m));
    return out;
}

std::vector<int> to_list(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(lowest_bit(m));
    return out;
}

Graph quotient(const Graph& g, const std::vector<std::vector<int>>& sets) {
    std::vector<int> owner(g.order(), -1);
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
        for (int v : sets[i]) owner[v] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
            edges.emplace_back(owner[u], owner[v]);
    return Graph(static_cast<int>(sets.size()), std::move(edges));
}

class MinorSearch {
public:
    MinorSearch(const Graph& g, int r, std::uint64_t budget)
        : g_(g), budget_(budget), by_min_(g.order()) {
        const int n = g.order();
        for (Mask set = 1; set < (Mask{1} << n); ++set)
            if (radius_at_most(g, set, r)) by_min_[lowest_bit(set)].push_back(set);
        for (auto& list : by_min_)
            std::stable_sort(list.begin(), list.end(),
                             [](Mask a, Mask b) { return popcount(a) > popcount(b); });
    }

    void seed(Rational density, std::vector<Mask> sets) {
        best_ = density;
        best_sets_ = std::move(sets);
    }

    void run() { search(g_.vertex_mask(), 0, 0); }

    const Rational& best() const { return best_; }
    const std::vector<Mask>& best_sets() const { return best_sets_; }

private:
    void search(Mask unassigned, Mask assigned, std::int64_t edges) {
        if (++nodes_ > budget_) throw BudgetExceeded("shallow minor search exceeded its node budget");
        const auto h = static_cast<std::int64_t>(chosen_.size());
        if (h > 0 && ratio_exceeds(edges, h, best_)) {
            best_ = Rational(edges, h);
            best_sets_ = chosen_;
        }
        if (!unassigned) return;

        // Every future minor edge consumes a distinct edge of G touching `unassigned`.
        std::int64_t reach = 0, inner = 0;
        for (Mask m = unassigned; m; m &= m - 1) {
            Mask nb = g_.neighbor_mask(lowest_bit(m));
            reach += popcount(nb & assigned);
            inner += popcount(nb & unassigned);
        }
        const std::int64_t available = reach + inner / 2;
        bool promising = false;
        for (std::int64_t y = 1; y <= popcount(unassigned) && !promising; ++y) {
            std::int64_t gain = std::min(available, y * h + y * (y - 1) / 2);
            promising = ratio_exceeds(edges + gain, h + y, best_);
        }
        if (!promising) return;

        const int v = lowest_bit(unassigned);
        for (Mask set : by_min_[v]) {
            if ((set & unassigned) != set) continue;
            const Mask nb = neighborhood(g_, set);
            std::int64_t added = 0;
            for (Mask other : chosen_) added += (nb & other) != 0;
            chosen_.push_back(set);
            search(unassigned & ~set, assigned | set, edges + added);
            chosen_.pop_back();
        }
        search(unassigned & ~bit(v), assigned, edges);
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<Mask>> by_min_;
    std::vector<Mask> chosen_;
    Rational best_;
    std::vector<Mask> best_sets_;
};

}  // namespace

MinorResult grad(const Graph& g, int r, const DensityOptions& options) {
    if (r < 0) throw UsageError("depth r must be non-negative");
    auto densest = nabla0(g);
    MinorResult result;
    result.model.depth = r;
    if (r == 0) {
        result.density = densest.density;
        for (int v : densest.vertices) result.model.branch_sets.push_back({v});
        result.minor = quotient(g, result.model.branch_sets);
        return result;
    }
    require_size("grad", g.order(), std::min(limit_or(options, kGradLimit), 30));
    MinorSearch search(g, r, options.budget);
    std::vector<Mask> seed;
    for (int v : densest.vertices) seed.push_back(bit(v));
    search.seed(densest.density, std::move(seed));
    search.run();
    result.density = search.best();
    for (Mask set : search.best_sets()) result.model.branch_sets.push_back(to_list(set));
    result.minor = quotient(g, result.model.branch_sets);
    return result;
}

namespace {

PathModel subgraph_model(const Graph& g, const std::vector<int>& vertices, int depth) {
    PathModel model;
    model.depth = depth;
    model.principal = vertices;
    std::vector<char> in(g.order(), 0);
    for (int v : vertices) in[v] = 1;
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) model.paths.push_back({u, v});
    return model;
}

struct PathOption {
    Mask interior = 0;   // vertices strictly inside the path
    Mask edges = 0;      // edge ids (immersion search only)
    std::vector<int> sequence;
};

struct PairOptions {
    int a, b;
    std::vector<PathOption> options;
};

class PathEnumerator {
public:
    PathEnumerator(const Graph& g, int max_length) : g_(g), max_length_(max_length) {}

    // Simple paths from a to b with 1..max_length edges whose interior avoids `blocked`.
    std::vector<std::vector<int>> between(int a, int b, Mask blocked, int min_length) {
        std::vector<std::vector<int>> out;
        std::vector<int> seq{a};
        rec(a, b, blocked | bit(a), min_length, seq, out);
        return out;
    }

private:
    void rec(int v, int target, Mask used, int min_length, std::vector<int>& seq,
             std::vector<std::vector<int>>& out) {
        const int length = static_cast<int>(seq.size());  // edges after the next step
        for (Mask m = g_.neighbor_mask(v); m; m &= m - 1) {
            int u = lowest_bit(m);
            if (u == target) {
                if (length >= min_length) {
                    seq.push_back(u);
                    out.push_back(seq);
                    seq.pop_back();
                }
                continue;
            }
            // u is interior, so at least one more edge must fit
            if ((used >> u) & 1U || length + 1 > max_length_) continue;
            seq.push_back(u);
            rec(u, target, used | bit(u), min_length, seq, out);
            seq.pop_back();
        }
    }

    const Graph& g_;
    int max_length_;
};

Mask interior_mask(const std::vector<int>& seq) {
    Mask m = 0;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) m |= bit(seq[i]);
    return m;
}

class Packer {
public:
    Packer(std::vector<PairOptions>& pairs, std::uint64_t& nodes, std::uint64_t budget)
        : pairs_(pairs), nodes_(nodes), budget_(budget), choice_(pairs.size(), -1) {}

    // Internally disjoint packing (topological minors): interiors must not overlap.
    // Only packings larger than `floor` are searched for; the floor comes back when
    // none exists.
    int pack_disjoint(Mask capacity, int floor = 0) {
        best_ = floor;
        best_choice_.assign(pairs_.size(), -1);
        disjoint(0, 0, 0, capacity);
        return best_;
    }

    // Edge-disjoint packing with a per-vertex interior load limit (immersions).
    // `incident[v]` holds the ids of the edges at v.
    int pack_immersion(int load_limit, const std::vector<Mask>& incident, int edge_count, int floor = 0) {
        best_ = floor;
        best_choice_.assign(pairs_.size(), -1);
        incident_ = &incident;
        load_.assign(incident.size(), 0);
        open_at_.assign(incident.size(), 0);
        load_limit_ = load_limit;
        edge_count_ = edge_count;
        immersion(0, 0, 0);
        return best_;
    }

    const std::vector<int>& choice() const { return best_choice_; }

private:
    void tick() {
        if (++nodes_ > budget_) throw BudgetExceeded("path packing search exceeded its node budget");
    }

    void record(int count) {
        if (count > best_) {
            best_ = count;
            best_choice_ = choice_;
        }
    }

    void disjoint(std::size_t idx, Mask used, int count, Mask capacity) {
        tick();
        record(count);
        if (idx == pairs_.size()) return;
        int open = 0;
        for (std::size_t j = idx; j < pairs_.size(); ++j)
            for (const auto& opt : pairs_[j].options)
                if (!(opt.interior & used)) {
                    ++open;
                    break;
                }
        if (count + std::min(open, popcount(capacity & ~used)) <= best_) return;
        const auto& opts = pairs_[idx].options;
        for (int i = 0; i < static_cast<int>(opts.size()); ++i) {
            if (opts[i].interior & used) continue;
            choice_[idx] = i;
            disjoint(idx + 1, used | opts[i].interior, count + 1, capacity);
        }
        choice_[idx] = -1;
        disjoint(idx + 1, used, count, capacity);
    }

    void immersion(std::size_t idx, Mask used_edges, int count) {
        tick();
        record(count);
        if (idx == pairs_.size()) return;
        if (count + immersion_bound(idx, used_edges) <= best_) return;
        const auto& opts = pairs_[idx].options;
        for (int i = 0; i < static_cast<int>(opts.size()); ++i) {
            const auto& opt = opts[i];
            if (opt.edges & used_edges) continue;
            bool fits = true;
            for (Mask m = opt.interior; m; m &= m - 1)
                if (load_[lowest_bit(m)] >= load_limit_) fits = false;
            if (!fits) continue;
            for (Mask m = opt.interior; m; m &= m - 1) ++load_[lowest_bit(m)];
            choice_[idx] = i;
            immersion(idx + 1, used_edges | opt.edges, count + 1);
            for (Mask m = opt.interior; m; m &= m - 1) --load_[lowest_bit(m)];
        }
        choice_[idx] = -1;
        immersion(idx + 1, used_edges, count);
    }

    // Paths still possible from pair idx on. Each one needs a free edge at both of
    // its ends and at least its shortest option's worth of free edges.
    int immersion_bound(std::size_t idx, Mask used_edges) {
        shortest_.clear();
        std::fill(open_at_.begin(), open_at_.end(), 0);
        for (std::size_t j = idx; j < pairs_.size(); ++j) {
            int len = kMaskBits + 1;
            for (const auto& opt : pairs_[j].options)
                if (!(opt.edges & used_edges)) len = std::min(len, popcount(opt.edges));
            if (len > kMaskBits) continue;
            shortest_.push_back(len);
            ++open_at_[pairs_[j].a];
            ++open_at_[pairs_[j].b];
        }
        int ends = 0;
        for (std::size_t v = 0; v < open_at_.size(); ++v)
            if (open_at_[v]) ends += std::min(open_at_[v], popcount((*incident_)[v] & ~used_edges));
        std::sort(shortest_.begin(), shortest_.end());
        int free_edges = edge_count_ - popcount(used_edges), fit = 0;
        for (int len : shortest_) {
            if (len > free_edges) break;
            free_edges -= len;
            ++fit;
        }
        return std::min(fit, ends / 2);
    }

    std::vector<PairOptions>& pairs_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::vector<int> choice_;
    std::vector<int> best_choice_;
    int best_ = 0;
    std::vector<int> load_;
    int load_limit_ = 0;
    int edge_count_ = 0;
    const std::vector<Mask>* incident_ = nullptr;
    std::vector<int> open_at_;
    std::vector<int> shortest_;
};

// Largest edge count e with e/k <= density; a packing must beat it to improve.
int needed_floor(const Rational& density, int k) {
    return static_cast<int>(static_cast<__int128>(density.num()) * k / density.den());
}

PathModel assemble(const std::vector<int>& principal, const std::vector<std::vector<int>>& direct,
                   const std::vector<PairOptions>& pairs, const std::vector<int>& choice,
                   int depth) {
    PathModel model;
    model.depth = depth;
    model.principal = principal;
    model.paths = direct;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (choice[i] >= 0) model.paths.push_back(pairs[i].options[choice[i]].sequence);
    std::sort(model.paths.begin(), model.paths.end());
    return model;
}

}  // namespace

PathModelResult top_grad(const Graph& g, int r, const DensityOptions& options) {
    if (r < 0) throw UsageError("depth r must be non-negative");
    require_size("top_grad", g.order(), std::min(limit_or(options, kTopGradLimit), 30));
    const int n = g.order();
    auto densest = nabla0(g);
    PathModelResult result{densest.density, subgraph_model(g, densest.vertices, r)};
    if (r == 0) return result;

    PathEnumerator enumerate(g, 2 * r + 1);
    std::uint64_t nodes = 0;
    for (Mask principal = 1; principal < (Mask{1} << n); ++principal) {
        const int k = popcount(principal);
        if (k < 2) continue;
        std::int64_t inside = 0;
        for (Mask m = principal; m; m &= m - 1)
            inside += popcount(g.neighbor_mask(lowest_bit(m)) & principal);
        inside /= 2;
        const std::int64_t missing = static_cast<std::int64_t>(k) * (k - 1) / 2 - inside;
        const int capacity = n - k;
        if (!ratio_exceeds(inside + std::min<std::int64_t>(missing, capacity), k, result.density))
            continue;

        auto members = to_list(principal);
        std::vector<PairOptions> pairs;
        std::vector<std::vector<int>> direct;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int a = members[i], b = members[j];
                if (g.adjacent(a, b)) {
                    direct.push_back({a, b});
                    continue;
                }
                std::map<Mask, std::vector<int>> minimal;
                for (auto& seq : enumerate.between(a, b, principal, 2))
                    minimal.try_emplace(interior_mask(seq), std::move(seq));
                PairOptions po{a, b, {}};
                for (auto& [mask, seq] : minimal) {
                    bool dominated = false;
                    for (const auto& [other, unused] : minimal)
                        if (other != mask && (other & mask) == other) dominated = true;
                    if (!dominated) po.options.push_back({mask, 0, seq});
                }
                std::stable_sort(po.options.begin(), po.options.end(), [](auto& x, auto& y) {
                    return popcount(x.interior) < popcount(y.interior);
                });
                if (!po.options.empty()) pairs.push_back(std::move(po));
            }
        const auto reachable = static_cast<std::int64_t>(pairs.size());
        if (!ratio_exceeds(inside + std::min<std::int64_t>(reachable, capacity), k, result.density))
            continue;
        Packer packer(pairs, nodes, options.budget);
        const int packed =
            packer.pack_disjoint(g.vertex_mask() & ~principal, needed_floor(result.density, k) - inside);
        if (ratio_exceeds(inside + packed, k, result.density)) {
            result.density = Rational(inside + packed, k);
            result.model = assemble(members, direct, pairs, packer.choice(), r);
        }
    }
    return result;
}

PathModelResult imm_grad(const Graph& g, int r, const DensityOptions& options) {
    if (r < 0) throw UsageError("depth r must be non-negative");
    require_size("imm_grad", g.order(), std::min(limit_or(options, kImmGradLimit), 30));
    require_size("imm_grad (edges)", g.size(), kMaskBits);
    const int n = g.order();
    auto densest = nabla0(g);
    PathModelResult result{densest.density, subgraph_model(g, densest.vertices, r)};
    if (r == 0) return result;

    std::map<Edge, int> edge_id;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) edge_id[g.edges()[i]] = i;
    auto edge_mask = [&](const std::vector<int>& seq) {
        Mask m = 0;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            m |= bit(edge_id.at({std::min(seq[i], seq[i + 1]), std::max(seq[i], seq[i + 1])}));
        return m;
    };

    // Paths between a pair do not depend on the principal set here, so cache them.
    PathEnumerator enumerate(g, 2 * r + 1);
    std::map<std::pair<int, int>, std::vector<PathOption>> cache;
    auto options_for = [&](int a, int b) -> const std::vector<PathOption>& {
        auto [it, inserted] = cache.try_emplace({a, b});
        if (!inserted) return it->second;
        std::vector<PathOption> all;
        for (auto& seq : enumerate.between(a, b, 0, 1))
            all.push_back({interior_mask(seq), edge_mask(seq), std::move(seq)});
        std::stable_sort(all.begin(), all.end(), [](auto& x, auto& y) {
            return x.sequence.size() < y.sequence.size();
        });
        for (std::size_t i = 0; i < all.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
                if (i == j) continue;
                bool subset = (all[j].edges & all[i].edges) == all[j].edges &&
                              (all[j].interior & all[i].interior) == all[j].interior;
                bool equal = all[j].edges == all[i].edges && all[j].interior == all[i].interior;
                dominated = subset && (!equal || j < i);
            }
            if (!dominated) it->second.push_back(all[i]);
        }
        return it->second;
    };

    const auto m = static_cast<std::int64_t>(g.size());
    std::vector<Mask> incident(n, 0);
    for (const auto& [e, id] : edge_id) {
        incident[e.first] |= bit(id);
        incident[e.second] |= bit(id);
    }
    std::uint64_t nodes = 0;
    for (Mask principal = 1; principal < (Mask{1} << n); ++principal) {
        const int k = popcount(principal);
        if (k < 2) continue;
        const std::int64_t pair_count = static_cast<std::int64_t>(k) * (k - 1) / 2;
        if (!ratio_exceeds(std::min(pair_count, m), k, result.density)) continue;
        auto members = to_list(principal);
        std::vector<PairOptions> pairs;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                const auto& opts = options_for(members[i], members[j]);
                if (!opts.empty()) pairs.push_back({members[i], members[j], opts});
            }
        if (!ratio_exceeds(std::min<std::int64_t>(pairs.size(), m), k, result.density)) continue;
        Packer packer(pairs, nodes, options.budget);
        const int packed = packer.pack_immersion(r, incident, static_cast<int>(m),
                                                 std::max(0, needed_floor(result.density, k)));
        if (ratio_exceeds(packed, k, result.density)) {
            result.density = Rational(packed, k);
            result.model = assemble(members, {}, pairs, packer.choice(), r);
        }
    }
    return result;
}

namespace {

struct PathChecks {
    std::string reason;
    std::vector<std::pair<int, int>> endpoints;
};

// Shared structural checks: principal vertices distinct and in range, every path a
// walk along edges of G without repeated vertices, principal endpoints, length at
// most 2*depth+1, and no two paths linking the same pair.
PathChecks basic_path_checks(const Graph& g, const PathModel& model) {
    PathChecks out;
    std::vector<char> principal(g.order(), 0);
    for (int v : model.principal) {
        if (v < 0 || v >= g.order()) return {"principal vertex out of range", {}};
        if (principal[v]) return {"repeated principal vertex", {}};
        principal[v] = 1;
    }
    std::map<std::pair<int, int>, int> seen_pairs;
    for (const auto& path : model.paths) {
        if (path.size() < 2) return {"path with fewer than two vertices", {}};
        if (static_cast<int>(path.size()) - 1 > 2 * model.depth + 1)
            return {"path longer than 2r+1", {}};
        std::vector<int> sorted = path;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return {"path repeats a vertex", {}};
        for (int v : path)
            if (v < 0 || v >= g.order()) return {"path vertex out of range", {}};
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.adjacent(path[i], path[i + 1])) return {"path uses a non-edge", {}};
        if (!principal[path.front()] || !principal[path.back()])
            return {"path endpoint is not a principal vertex", {}};
        auto key = std::minmax(path.front(), path.back());
        if (seen_pairs[{key.first, key.second}]++) return {"two paths link the same pair", {}};
        out.endpoints.emplace_back(key.first, key.second);
    }
    return out;
}

Rational path_density(const PathModel& model) {
    if (model.principal.empty()) return Rational(0);
    return Rational(static_cast<std::int64_t>(model.paths.size()),
                    static_cast<std::int64_t>(model.principal.size()));
}

}  // namespace

ModelCheck check_minor_model(const Graph& g, const MinorModel& model) {
    std::vector<int> owner(g.order(), -1);
    for (int i = 0; i < static_cast<int>(model.branch_sets.size()); ++i) {
        const auto& set = model.branch_sets[i];
        if (set.empty()) return {false, "empty branch set", {}};
        for (int v : set) {
            if (v < 0 || v >= g.order()) return {false, "branch vertex out of range", {}};
            if (owner[v] >= 0) return {false, "branch sets overlap", {}};
            owner[v] = i;
        }
        auto sub = induced_subgraph(g, set);
        if (!is_connected(sub.graph)) return {false, "branch set not connected", {}};
        int radius = kInfinity;
        for (int c = 0; c < sub.graph.order(); ++c) {
            auto dist = bfs_distances(sub.graph, c);
            radius = std::min(radius, *std::max_element(dist.begin(), dist.end()));
        }
        if (radius > model.depth) return {false, "branch set radius exceeds depth", {}};
    }
    std::set<std::pair<int, int>> minor_edges;
    for (auto [u, v] : g.edges())
        if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
            minor_edges.insert(std::minmax(owner[u], owner[v]));
    const auto h = static_cast<std::int64_t>(model.branch_sets.size());
    Rational density = h ? Rational(static_cast<std::int64_t>(minor_edges.size()), h) : Rational(0);
    return {true, "", density};
}

ModelCheck check_topological_model(const Graph& g, const PathModel& model) {
    auto basic = basic_path_checks(g, model);
    if (!basic.reason.empty()) return {false, basic.reason, {}};
    std::vector<char> principal(g.order(), 0), used(g.order(), 0);
    for (int v : model.principal) principal[v] = 1;
    for (const auto& path : model.paths)
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (principal[path[i]]) return {false, "principal vertex interior to a path", {}};
            if (used[path[i]]++) return {false, "paths are not internally disjoint", {}};
        }
    return {true, "", path_density(model)};
}

ModelCheck check_immersion_model(const Graph& g, const PathModel& model) {
    auto basic = basic_path_checks(g, model);
    if (!basic.reason.empty()) return {false, basic.reason, {}};
    std::set<std::pair<int, int>> used_edges;
    std::vector<int> load(g.order(), 0);
    for (const auto& path : model.paths) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!used_edges.insert(std::minmax(path[i], path[i + 1])).second)
                return {false, "paths are not edge disjoint", {}};
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (++load[path[i]] > model.depth)
                return {false, "vertex interior to more than r paths", {}};
    }
    return {true, "", path_density(model)};
}

PathModelResult top_grad_lower_bound(const Graph& g, int r) {
    auto densest = nabla0(g);
    PathModelResult result{densest.density, subgraph_model(g, densest.vertices, r)};
    std::vector<int> principal;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3) principal.push_back(v);
    if (principal.size() < 2) return result;

    std::vector<char> is_principal(g.order(), 0), used(g.order(), 0);
    for (int v : principal) is_principal[v] = 1;
    PathModel model;
    model.depth = r;
    model.principal = principal;
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    for (std::size_t i = 0; i < principal.size(); ++i) {
        const int a = principal[i];
        // One BFS from a through unused non-principal vertices serves every later pair.
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{a};
        dist[a] = 0;
        std::vector<int> reached_principal;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (dist[v] >= 2 * r + 1) continue;
            for (int u : g.neighbors(v)) {
                if (dist[u] >= 0) continue;
                if (is_principal[u]) {
                    if (u > a) {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        reached_principal.push_back(u);
                    }
                    continue;
                }
                if (used[u]) continue;
                dist[u] = dist[v] + 1;
                parent[u] = v;
                queue.push_back(u);
            }
        }
        std::sort(reached_principal.begin(), reached_principal.end());
        for (int b : reached_principal) {
            std::vector<int> seq{b};
            for (int x = parent[b]; x != a; x = parent[x]) seq.push_back(x);
            seq.push_back(a);
            bool free = true;
            for (std::size_t j = 1; j + 1 < seq.size(); ++j) free &= !used[seq[j]];
            if (!free) continue;
            for (std::size_t j = 1; j + 1 < seq.size(); ++j) used[seq[j]] = 1;
            std::reverse(seq.begin(), seq.end());
            model.paths.push_back(std::move(seq));
        }
    }
    std::sort(model.paths.begin(), model.paths.end());
    Rational density = path_density(model);
    if (density >= result.density) result = {density, std::move(model)};
    return result;
}

std::vector<DensityProfileRow> density_profile(std::string_view family_raw, int r,
                                               const std::vector<int>& sizes,
                                               std::uint64_t seed,
                                               const DensityOptions& options) {
    const std::string family(family_raw);
    static const std::regex cliques(R"(^subdivided_cliques(?:\((\d+)\))?$)");
    static const std::regex bounded(R"(^bounded_degree_random(?:\((\d+)\))?$)");
    std::smatch m;
    std::function<Graph(int)> make;
    if (std::regex_match(family, m, cliques)) {
        int p = m[1].matched ? std::stoi(m[1]) : 1;
        make = [p](int s) { return subdivide(complete_graph(s), p); };
    } else if (std::regex_match(family, m, bounded)) {
        int d = m[1].matched ? std::stoi(m[1]) : 3;
        make = [d, seed](int s) { return bounded_degree_graph(s, d, seed); };
    } else if (family == "grids") {
        make = [](int s) { return grid_graph(s, s); };
    } else if (family == "trees") {
        make = [seed](int s) { return random_tree(s, seed); };
    } else {
        throw UsageError("unknown density-profile family: " + family);
    }

    auto log_ratio = [](double edges, double order) {
        if (order <= 1 || edges <= 0) return std::numeric_limits<double>::quiet_NaN();
        return std::log(edges) / std::log(order);
    };
    const int limit = limit_or(options, kTopGradLimit);
    std::vector<DensityProfileRow> rows;
    for (int s : sizes) {
        Graph g = make(s);
        DensityProfileRow row;
        row.family = family;
        row.size = s;
        row.order = g.order();
        row.edges = g.size();
        PathModelResult top = g.order() <= limit ? top_grad(g, r, options) : top_grad_lower_bound(g, r);
        row.exact = g.order() <= limit;
        row.top_density = top.density;
        row.witness_order = static_cast<int>(top.model.principal.size());
        row.witness_edges = top.model.paths.size();
        row.log_density = log_ratio(static_cast<double>(row.edges), row.order);
        row.witness_log_density =
            log_ratio(static_cast<double>(row.witness_edges), row.witness_order);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string density_profile_csv(const std::vector<DensityProfileRow>& rows) {
    std::ostringstream out;
    out << "family,size,order,edges,top_density,exact,witness_order,witness_edges,"
           "log_density,witness_log_density\n";
    auto fmt = [](double x) {
        if (std::isnan(x)) return std::string();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", x);
        return std::string(buf);
    };
    for (const auto& row : rows)
        out << row.family << ',' << row.size << ',' << row.order << ',' << row.edges << ','
            << row.top_density.str() << ',' << (row.exact ? "true" : "false") << ','
            << row.witness_order << ',' << row.witness_edges << ',' << fmt(row.log_density)
            << ',' << fmt(row.witness_log_density) << '\n';
    return out.str();
}

}  // namespace sparsity
