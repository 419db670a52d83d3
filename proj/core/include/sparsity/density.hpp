#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sparsity/graph.hpp"
#include "sparsity/rational.hpp"

namespace sparsity {

struct DensestSubgraph {
    Rational density;
    std::vector<int> vertices;  // a maximizing vertex set, sorted
};

// Maximum of |E(H)|/|V(H)| over subgraphs H, computed exactly with Goldberg's
// min-cut construction inside a Dinkelbach iteration on the density guess.
DensestSubgraph nabla0(const Graph& g);

// Exhaustive subset maximum; an independent check of nabla0 for small graphs.
Rational nabla0_bruteforce(const Graph& g, int limit = 20);

// Disjoint branch sets, each inducing a connected subgraph of radius at most
// `depth` (radius measured inside the induced subgraph).
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;
    int depth = 0;
};

// Principal vertices plus one path per minor edge, each path listed as the vertex
// sequence from one principal vertex to another.
struct PathModel {
    std::vector<int> principal;
    std::vector<std::vector<int>> paths;
    int depth = 0;
};
using TopoModel = PathModel;
using ImmersionModel = PathModel;

struct MinorResult {
    Rational density;
    MinorModel model;
    Graph minor;  // quotient graph on the branch sets, in model order
};

struct PathModelResult {
    Rational density;
    PathModel model;
};

struct DensityOptions {
    int exact_limit = -1;  // -1 selects the per-measure default (12, 12, 10)
    std::uint64_t budget = 200'000'000;
};

inline constexpr int kGradLimit = 12;
inline constexpr int kTopGradLimit = 12;
inline constexpr int kImmGradLimit = 10;

// Exact maximum density over depth-r shallow minors. r = 0 delegates to nabla0.
// Throws SizeLimitError above the exact limit and BudgetExceeded when the search
// node budget runs out.
MinorResult grad(const Graph& g, int r, const DensityOptions& options = {});

// Exact maximum density over depth-r shallow topological minors: internally
// disjoint paths of length at most 2r+1 whose interiors avoid principal vertices.
PathModelResult top_grad(const Graph& g, int r, const DensityOptions& options = {});

// Exact maximum density over depth-r shallow immersions: edge-disjoint paths of
// length at most 2r+1, no vertex interior to more than r paths.
PathModelResult imm_grad(const Graph& g, int r, const DensityOptions& options = {});

// Independent model checks. `reason` is empty when the model is valid; `density`
// is recomputed from the model.
struct ModelCheck {
    bool valid = false;
    std::string reason;
    Rational density;
};
ModelCheck check_minor_model(const Graph& g, const MinorModel& model);
ModelCheck check_topological_model(const Graph& g, const PathModel& model);
ModelCheck check_immersion_model(const Graph& g, const PathModel& model);

// Certified lower bound on the shallow topological minor density for graphs too
// large for top_grad: principal vertices of degree >= 3, shortest admissible paths
// packed greedily, compared against the densest subgraph.
PathModelResult top_grad_lower_bound(const Graph& g, int r);

struct DensityProfileRow {
    std::string family;
    int size = 0;
    int order = 0;
    std::size_t edges = 0;
    Rational top_density;
    bool exact = false;
    int witness_order = 0;
    std::size_t witness_edges = 0;
    double log_density = 0;          // log||G|| / log|G|, NaN when undefined
    double witness_log_density = 0;  // log||H|| / log|H| for the witness minor H
};

// Families: subdivided_cliques(p), grids, bounded_degree_random(d), trees. `size`
// is the clique order, grid side, or vertex count respectively. Exact values are
// computed within the top_grad limit, certified lower bounds above it.
std::vector<DensityProfileRow> density_profile(std::string_view family, int r,
                                               const std::vector<int>& sizes,
                                               std::uint64_t seed = 1,
                                               const DensityOptions& options = {});

std::string density_profile_csv(const std::vector<DensityProfileRow>& rows);

}  // namespace sparsity
