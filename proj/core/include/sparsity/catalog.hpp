#pragma once

#include <cstdint>
#include <string_view>

#include "sparsity/graph.hpp"

namespace sparsity {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);
Graph hypercube(int dimension);
// Outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();
// Folded 5-cube: 4-bit vectors adjacent iff their XOR has weight 1 or 4.
Graph clebsch_graph();

// Built-in catalog: K_n, P_n, C_n, E_n, K_{a,b} (also K_a,b), star_k, grid(a,b),
// Q_d, Petersen, Clebsch, sub_p(NAME), and disjoint unions NAME+NAME.
// Throws UsageError on unknown names.
Graph named(std::string_view name);

// xoshiro256** seeded through splitmix64. Fixed algorithm so generated corpora are
// reproducible from (family, parameters, seed) on any platform.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);
    std::uint64_t next();
    // Uniform integer in [0, bound) by rejection sampling; bound > 0.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_[4];
};

Graph random_tree(int n, std::uint64_t seed);
// Random edges subject to a maximum degree `d`.
Graph bounded_degree_graph(int n, int d, std::uint64_t seed);
// Random maximal-ish graph of girth at least 5 (edges kept only if they close no
// cycle shorter than 5).
Graph girth5_graph(int n, std::uint64_t seed);
// Stacked planar triangulation: a triangle, then each new vertex lands in a
// uniformly chosen face.
Graph planar_triangulation(int n, std::uint64_t seed);
// Uniform G(n, m) (m capped at n choose 2).
Graph gnm_graph(int n, int m, std::uint64_t seed);

// Generator grammar used by the CLI and corpus tooling:
//   named:NAME | NAME | random_tree(n,seed) | bounded_degree(n,d,seed)
//   | girth5(n,seed) | planar(n,seed) | gnm(n,m,seed)
Graph generate(std::string_view spec);

}  // namespace sparsity
