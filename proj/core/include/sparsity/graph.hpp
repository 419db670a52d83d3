#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sparsity {

using Edge = std::pair<int, int>;
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Immutable simple undirected graph on dense ids [0, n).
//
// Edges are stored once with u < v, sorted lexicographically. Adjacency lists are
// sorted. Graphs with at most 64 vertices additionally carry per-vertex neighbor
// bitmasks, which the exact searches rely on.
class Graph {
public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate edges collapse; self-loops and
    // out-of-range endpoints throw ValidationError. `labels` is either empty or one
    // distinct token per vertex.
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool adjacent(int u, int v) const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    // Label of `v` when present, otherwise the decimal id.
    std::string label(int v) const;

    bool fits_mask() const noexcept { return n_ <= kMaskBits; }
    // Requires fits_mask().
    Mask neighbor_mask(int v) const { return masks_[v]; }
    Mask vertex_mask() const noexcept;

    // Same vertex count and edge set; labels are ignored.
    bool same_structure(const Graph& other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator==(const Graph& other) const noexcept {
        return same_structure(other) && labels_ == other.labels_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<Mask> masks_;
    std::vector<std::string> labels_;
};

// Reads the edge-list format: one "tokA tokB" per line, '#' comments, blank lines
// ignored. A line holding a single token declares a (possibly isolated) vertex.
// Ids are assigned in first-appearance order and the tokens become labels.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list: emits labels when present, ids otherwise. Vertices are
// introduced in id order, so parsing the output reproduces the same ids.
std::string serialize_edge_list(const Graph& g);

// Replaces every edge by a path with `p` internal vertices. New vertices are
// numbered after the originals, edge by edge in edge order.
Graph subdivide(const Graph& g, int p);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new id -> id in the source graph
};

// Subgraph induced by `vertices` (any order, duplicates ignored); new ids follow
// increasing source id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

// Hop distances from `source`; unreachable vertices get kInfinity.
std::vector<int> bfs_distances(const Graph& g, int source);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Length of a shortest cycle, kInfinity for forests.
int girth(const Graph& g);

// Smallest-last removal order: repeatedly removes a vertex of minimum remaining
// degree (smallest id on ties). Element i is the i-th removed vertex.
std::vector<int> smallest_last_order(const Graph& g);
int degeneracy(const Graph& g);

// Greedy proper coloring that colors vertices in reverse smallest-last order with
// the least free color. Uses at most degeneracy + 1 colors.
std::vector<int> greedy_coloring(const Graph& g);

// Maximum clique as a sorted vertex list (lexicographically first among maxima in
// search order). Refuses graphs with more than `exact_limit` vertices.
std::vector<int> maximum_clique(const Graph& g, int exact_limit = 20);
int clique_number(const Graph& g, int exact_limit = 20);
int chromatic_number(const Graph& g, int exact_limit = 12);

// Proper `k`-coloring if one exists (backtracking, smallest-id color first).
std::vector<int> find_coloring(const Graph& g, int k);

inline int popcount(Mask m) noexcept { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) noexcept { return __builtin_ctzll(m); }
inline Mask bit(int v) noexcept { return Mask{1} << v; }

}  // namespace sparsity
