#include "sparsity/orientation.hpp"

#include <algorithm>

namespace sparsity {

const char* to_string(ArcKind kind) {
    switch (kind) {
        case ArcKind::original: return "original";
        case ArcKind::fraternal: return "fraternal";
        case ArcKind::transitive: return "transitive";
    }
    return "?";
}

Orientation::Orientation(Graph base)
    : base_(std::move(base)), in_(base_.order()), out_(base_.order()) {}

bool Orientation::add_arc(int tail, int head, ArcKind kind, int round) {
    auto [it, inserted] = index_.try_emplace(key(tail, head), arcs_.size());
    if (!inserted) return false;
    arcs_.push_back({tail, head, kind, round});
    out_[tail].push_back(head);
    in_[head].push_back(tail);
    return true;
}

bool Orientation::has_arc(int tail, int head) const {
    auto it = index_.find(key(tail, head));
    return it != index_.end() && arcs_[it->second].tail == tail;
}

int Orientation::max_in_degree() const {
    int best = 0;
    for (const auto& list : in_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

Graph Orientation::underlying() const {
    std::vector<Edge> edges;
    edges.reserve(arcs_.size());
    for (const auto& a : arcs_) edges.emplace_back(a.tail, a.head);
    return Graph(order(), std::move(edges));
}

Orientation degeneracy_orientation(const Graph& g) {
    Orientation o(g);
    std::vector<int> position(g.order());
    auto order = smallest_last_order(g);
    for (int i = 0; i < g.order(); ++i) position[order[i]] = i;
    for (auto [u, v] : g.edges()) {
        // The later-removed endpoint points at the earlier one.
        if (position[u] < position[v])
            o.add_arc(v, u, ArcKind::original, 0);
        else
            o.add_arc(u, v, ArcKind::original, 0);
    }
    return o;
}

}  // namespace sparsity
