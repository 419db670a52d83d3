#include "sparsity/homomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "sparsity/error.hpp"
#include "sparsity/parallel.hpp"

namespace sparsity {

namespace {

class HomSearch {
public:
    HomSearch(const Graph& g, const Graph& h, std::uint64_t budget)
        : g_(g), h_(h), budget_(budget), map_(g.order(), -1) {}

    Decision run() {
        if (g_.order() == 0) return Decision::yes;
        if (h_.order() == 0) return Decision::no;
        std::vector<Mask> domain(g_.order(), h_.vertex_mask());
        // Vertices with edges can only use vertices with edges.
        Mask active = 0;
        for (int a = 0; a < h_.order(); ++a)
            if (h_.degree(a) > 0) active |= bit(a);
        for (int v = 0; v < g_.order(); ++v)
            if (g_.degree(v) > 0) domain[v] = active;
        try {
            for (const auto& component : connected_components(g_)) {
                std::vector<Mask> local = domain;
                if (!search(component, local, 0)) return Decision::no;
            }
        } catch (const BudgetExceeded&) {
            return Decision::indeterminate;
        }
        return Decision::yes;
    }

    std::vector<int> map() const { return map_; }

private:
    bool search(const std::vector<int>& vars, std::vector<Mask>& domain, std::size_t assigned) {
        if (++nodes_ > budget_) throw BudgetExceeded("homomorphism search budget exhausted");
        if (assigned == vars.size()) return true;
        int best = -1;
        for (int v : vars) {
            if (map_[v] >= 0) continue;
            if (best < 0) {
                best = v;
                continue;
            }
            int dv = popcount(domain[v]), db = popcount(domain[best]);
            if (dv < db || (dv == db && g_.degree(v) > g_.degree(best))) best = v;
        }
        const int v = best;
        for (Mask options = domain[v]; options; options &= options - 1) {
            const int a = lowest_bit(options);
            map_[v] = a;
            std::vector<std::pair<int, Mask>> saved;
            bool alive = true;
            for (int u : g_.neighbors(v)) {
                if (map_[u] >= 0) continue;
                saved.emplace_back(u, domain[u]);
                domain[u] &= h_.neighbor_mask(a);
                if (!domain[u]) {
                    alive = false;
                    break;
                }
            }
            if (alive && search(vars, domain, assigned + 1)) return true;
            for (auto& [u, m] : saved) domain[u] = m;
            map_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> map_;
};

}  // namespace

HomResult hom_exists(const Graph& g, const Graph& h, std::uint64_t budget) {
    require_size("hom_exists (target)", h.order(), kHomTargetLimit);
    require_size("hom_exists (source)", g.order(), kHomSourceLimit);
    HomSearch search(g, h, budget);
    HomResult result;
    result.status = search.run();
    if (result.status == Decision::yes) result.map = search.map();
    return result;
}

bool verify_hom(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != g.order()) return false;
    for (int a : map)
        if (a < 0 || a >= h.order()) return false;
    for (auto [u, v] : g.edges())
        if (!h.adjacent(map[u], map[v])) return false;
    return true;
}

CoreResult core(const Graph& g, int limit, std::uint64_t budget) {
    require_size("core", g.order(), limit);
    const int n = g.order();
    std::vector<int> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    std::vector<int> phi = alive;  // g -> g[alive], in g's ids

    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        auto current = induced_subgraph(g, alive);
        for (std::size_t drop = 0; drop < alive.size(); ++drop) {
            std::vector<int> rest;
            for (std::size_t i = 0; i < alive.size(); ++i)
                if (i != drop) rest.push_back(alive[i]);
            auto target = induced_subgraph(g, rest);
            auto hom = hom_exists(current.graph, target.graph, budget);
            if (hom.status == Decision::indeterminate)
                throw BudgetExceeded("core: homomorphism search budget exhausted");
            if (hom.status == Decision::no) continue;
            // position of each g vertex inside `alive`
            std::vector<int> index(n, -1);
            for (std::size_t i = 0; i < alive.size(); ++i) index[alive[i]] = static_cast<int>(i);
            for (int v = 0; v < n; ++v) phi[v] = target.to_parent[hom.map[index[phi[v]]]];
            alive = std::move(rest);
            shrunk = true;
            break;
        }
    }

    // phi restricted to the core is an automorphism; undo it to get a retraction.
    std::vector<int> index(n, -1);
    for (std::size_t i = 0; i < alive.size(); ++i) index[alive[i]] = static_cast<int>(i);
    std::vector<int> inverse(n, -1);
    for (int v : alive) inverse[phi[v]] = v;
    CoreResult result;
    result.vertices = alive;
    result.core = induced_subgraph(g, alive).graph;
    result.retraction.resize(n);
    for (int v = 0; v < n; ++v) result.retraction[v] = index[inverse[phi[v]]];
    return result;
}

ApproximationCheck t_approximation_check(const Graph& g, const Graph& h, int t,
                                         std::uint64_t budget) {
    if (t < 0) throw UsageError("t must be non-negative");
    auto forward = hom_exists(g, h, budget);
    if (forward.status == Decision::no) return {Decision::no, "g does not map to h", {}};
    ApproximationCheck result;
    if (forward.status == Decision::indeterminate)
        result = {Decision::indeterminate, "g -> h undecided within budget", {}};

    const int n = h.order(), size = std::min(t, n);
    if (size == 0) return result;
    // C(n, size) subsets; refuse absurd enumerations
    long double subsets = 1;
    for (int i = 0; i < size; ++i) subsets = subsets * (n - i) / (i + 1);
    if (subsets > 1e6L) throw SizeLimitError("t_approximation_check (subsets)",
                                             static_cast<std::size_t>(subsets), 1'000'000);
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        auto sub = induced_subgraph(h, pick);
        auto back = hom_exists(sub.graph, g, budget);
        if (back.status == Decision::no)
            return {Decision::no, "a subgraph of h of order " + std::to_string(size) +
                                      " does not map to g", pick};
        if (back.status == Decision::indeterminate && result.status == Decision::yes)
            result = {Decision::indeterminate, "subgraph of h undecided within budget", pick};
        int i = size - 1;
        while (i >= 0 && pick[i] == n - size + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    return result;
}

namespace {

Decision both(Decision a, Decision b) {
    if (a == Decision::no || b == Decision::no) return Decision::no;
    if (a == Decision::indeterminate || b == Decision::indeterminate) return Decision::indeterminate;
    return Decision::yes;
}

}  // namespace

DualReport dual_check(const Graph& f, const Graph& d, const std::vector<Graph>& family,
                      const std::vector<std::string>& names, std::uint64_t budget,
                      unsigned threads) {
    if (!is_connected(f)) throw UsageError("the pattern F must be connected");
    DualReport report;
    auto fd = hom_exists(f, d, budget).status;
    report.pattern_to_dual = fd;
    report.instances.resize(family.size());
    parallel_for(family.size(), threads, [&](std::size_t i) {
        auto& inst = report.instances[i];
        inst.name = i < names.size() ? names[i] : "#" + std::to_string(i);
        inst.pattern_maps = hom_exists(f, family[i], budget).status;
        inst.maps_to_dual = hom_exists(family[i], d, budget).status;
        if (inst.pattern_maps == Decision::indeterminate ||
            inst.maps_to_dual == Decision::indeterminate)
            inst.holds = Decision::indeterminate;
        else
            inst.holds = (inst.pattern_maps == Decision::no) == (inst.maps_to_dual == Decision::yes)
                             ? Decision::yes
                             : Decision::no;
    });
    Decision overall = fd == Decision::yes ? Decision::no
                       : fd == Decision::no ? Decision::yes
                                            : Decision::indeterminate;
    for (const auto& inst : report.instances) overall = both(overall, inst.holds);
    report.holds = overall;
    return report;
}

}  // namespace sparsity
