#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsity/graph.hpp"
#include "sparsity/treedepth.hpp"

namespace sparsity {

inline constexpr int kHomTargetLimit = 64;
inline constexpr int kHomSourceLimit = 200;
inline constexpr std::uint64_t kHomBudget = 20'000'000;

struct HomResult {
    Decision status = Decision::indeterminate;
    std::vector<int> map;  // V(g) -> V(h) when status == yes
};

// Backtracking search for g -> h, component by component, choosing the variable
// with the smallest remaining domain (ties: higher degree, then smaller id) and
// filtering neighbor domains after every assignment. Runs out of `budget` search
// nodes as indeterminate.
HomResult hom_exists(const Graph& g, const Graph& h, std::uint64_t budget = kHomBudget);

bool verify_hom(const Graph& g, const Graph& h, const std::vector<int>& map);

struct CoreResult {
    Graph core;                   // g induced on `vertices`
    std::vector<int> vertices;    // sorted vertex ids of g
    std::vector<int> retraction;  // g -> core (indices into `vertices`), identity on the core
};

// Shrinks g one vertex at a time while a homomorphism into a proper induced
// subgraph exists; the remaining graph is a core.
CoreResult core(const Graph& g, int limit = 12, std::uint64_t budget = kHomBudget);

struct ApproximationCheck {
    Decision status = Decision::yes;
    std::string reason;          // why the answer is not yes
    std::vector<int> witness;    // failing vertex subset of h, if any
};

// h is a t-approximation of g: g -> h, and every subgraph of h of order at most t
// maps to g. It suffices to test induced subgraphs of order min(t, |h|).
ApproximationCheck t_approximation_check(const Graph& g, const Graph& h, int t,
                                         std::uint64_t budget = kHomBudget);

struct DualInstance {
    std::string name;
    Decision pattern_maps = Decision::indeterminate;  // F -> G
    Decision maps_to_dual = Decision::indeterminate;  // G -> D
    Decision holds = Decision::indeterminate;         // (F -/-> G) iff (G -> D)
};

struct DualReport {
    Decision pattern_to_dual = Decision::indeterminate;  // F -> D, must be no
    std::vector<DualInstance> instances;
    Decision holds = Decision::indeterminate;             // conjunction over everything
};

// Checks the duality F -/-> G  <=>  G -> D on each graph of the family. F must be
// connected. Budget exhaustion is reported per instance, never as a violation.
DualReport dual_check(const Graph& f, const Graph& d, const std::vector<Graph>& family,
                      const std::vector<std::string>& names = {},
                      std::uint64_t budget = kHomBudget, unsigned threads = 1);

}  // namespace sparsity
