#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsity/graph.hpp"
#include "sparsity/treedepth.hpp"

namespace sparsity {

// Same vertices, u ~ v iff dist(u, v) == n exactly.
Graph exact_distance_graph(const Graph& g, int n);

// Greedy smallest-last coloring of exact_distance_graph(g, n). n must be odd.
Coloring dn_coloring(const Graph& g, int n);

bool verify_dn_coloring(const Graph& g, int n, const Coloring& c);

// A maximum set of vertices pairwise at odd (finite) distance.
std::vector<int> max_odd_distance_set(const Graph& g, int limit = 30);

struct Cluster {
    std::vector<int> vertices;  // sorted
    int center = 0;
    int radius = 0;             // eccentricity of `center` inside the induced subgraph
};

struct Cover {
    std::vector<Cluster> clusters;
    int r = 1;

    std::vector<int> membership(int n) const;
    int max_membership(int n) const;
};

// Greedy cover: while some vertex v has N_r(v) outside every cluster, take the first
// such v in `order` (default: increasing id) and add the ball of radius 2r around it.
Cover neighborhood_cover(const Graph& g, int r, const std::vector<int>& order = {});

struct CoverVerdict {
    bool valid = true;
    std::string violation;  // empty when valid
    int cluster = -1;       // offending cluster, if any
    int vertex = -1;        // offending vertex, if any
};

// Clusters connected, radius at most 2r from some vertex, every N_r(v) inside a cluster.
CoverVerdict verify_cover(const Graph& g, const Cover& cover);

struct InducedSearch {
    Decision found = Decision::no;
    std::vector<int> witness;  // image of pattern vertex i at position i
};

// Backtracking search for an induced copy of `pattern`.
InducedSearch find_induced_copy(const Graph& g, const Graph& pattern,
                                std::uint64_t budget = 50'000'000);

struct PatternScan {
    std::string pattern;
    InducedSearch result;
};

// Induced P_s, K_t and K_{q,q}. Parameters <= 0 skip that pattern.
std::vector<PatternScan> induced_pattern_scan(const Graph& g, int s, int t, int q,
                                              std::uint64_t budget = 50'000'000);

struct ChoosabilityResult {
    bool choosable = true;
    std::vector<std::vector<int>> bad_lists;  // a list assignment with no proper coloring
};

inline constexpr int kChoosableVertexLimit = 7;
inline constexpr int kChoosableListLimit = 2;

// Exhaustive k-choosability. Lists are k-subsets of a universe of k*|g| colors,
// enumerated with fresh colors introduced in increasing order (one representative
// per renaming class).
ChoosabilityResult is_k_choosable(const Graph& g, int k, int vertex_limit = kChoosableVertexLimit,
                                  int list_limit = kChoosableListLimit);

}  // namespace sparsity
