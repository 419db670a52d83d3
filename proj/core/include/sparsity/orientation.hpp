#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity {

enum class ArcKind : std::uint8_t { original, fraternal, transitive };

const char* to_string(ArcKind kind);

struct Arc {
    int tail;
    int head;
    ArcKind kind;
    int round;
};

// Orientation of a (possibly augmented) graph. Every undirected pair carries at
// most one arc; arcs remember how and in which augmentation round they appeared.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(Graph base);

    const Graph& base() const noexcept { return base_; }
    int order() const noexcept { return base_.order(); }

    // Adds tail -> head unless the pair {tail, head} already carries an arc.
    bool add_arc(int tail, int head, ArcKind kind, int round);

    bool has_edge(int u, int v) const { return index_.contains(key(u, v)); }
    bool has_arc(int tail, int head) const;
    const Arc& arc_between(int u, int v) const { return arcs_[index_.at(key(u, v))]; }

    std::span<const int> in_neighbors(int v) const { return in_[v]; }
    std::span<const int> out_neighbors(int v) const { return out_[v]; }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int max_in_degree() const;

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    // Underlying undirected graph of all arcs.
    Graph underlying() const;

private:
    std::uint64_t key(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v);
    }

    Graph base_;
    std::vector<Arc> arcs_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<int>> out_;
};

// Acyclic orientation from the smallest-last order: each vertex receives arcs from
// its neighbors still present when it is removed, so the maximum in-degree equals
// the degeneracy.
Orientation degeneracy_orientation(const Graph& g);

}  // namespace sparsity
