#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsity/error.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/orientation.hpp"
#include "sparsity/treedepth.hpp"

namespace sparsity {

// Transitive fraternal augmentation. Each round looks at the arcs present when the
// round starts and
//   - adds u -> w for every directed 2-path u -> v -> w (transitive),
//   - collects {u, w} for every pair of in-neighbors u -> v <- w (fraternal); these
//     are oriented at the end of the round towards the endpoint removed first in a
//     smallest-last order of the fraternal edges, which keeps new in-degrees at most
//     the degeneracy of that edge set.
// Pairs that already carry an arc are skipped. Stops early at a fixpoint. Rounds
// continue the numbering of arcs already present. Throws UsageError if `rounds`
// exceeds `round_cap`.
Orientation tf_augment(const Orientation& o, int rounds, int round_cap = 16);

int augmentation_rounds(const Orientation& o);

struct LtdOptions {
    int rounds = 0;                // first round count tried; escalates one round at a time
    int round_cap = 16;            // escalation stops here
    int oracle_limit = 8;          // exact fallback for graphs up to this order
    std::uint64_t td_budget = 2'000'000;
    unsigned threads = 1;
};

struct LtdDecomposition {
    Coloring coloring;
    int p = 0;
    int rounds_used = 0;
    bool verified = false;
};

// Outcome of checking one coloring. `colors` is the lexicographically smallest
// violating subset (decision no), or the smallest undecided one (indeterminate).
struct LtdCheck {
    Decision status = Decision::yes;
    std::vector<int> colors;
};

// Raised when no verified decomposition could be produced.
class LtdFailure : public VerificationFailure {
public:
    LtdFailure(const std::string& what, LtdCheck check)
        : VerificationFailure(what), check_(std::move(check)) {}
    const LtdCheck& check() const noexcept { return check_; }

private:
    LtdCheck check_;
};

// Checks that every set I of at most p colors induces a subgraph of tree-depth at
// most |I|.
LtdCheck verify_ltd(const Graph& g, int p, const Coloring& c, const LtdOptions& options = {});

// Low tree-depth coloring: degeneracy orientation, augmentation, smallest-last
// greedy coloring of the augmented graph, verification; escalates the round count
// on failure and finally falls back to the exact optimum on small graphs.
LtdDecomposition ltd_coloring(const Graph& g, int p, const LtdOptions& options = {});

// Exact chi_p by enumerating colorings up to renaming; a minimum coloring is
// returned through `best` when non-null.
int chi_p_bruteforce(const Graph& g, int p, int limit = 8, Coloring* best = nullptr);

struct ClusterCover {
    std::vector<std::vector<int>> clusters;  // sorted vertex lists, sorted
    int t = 0;
    int palette = 0;                         // colors of the originating decomposition
    std::vector<int> membership;             // clusters containing each vertex

    int max_membership() const;
    // Per-vertex bound binom(palette, min(palette, t)).
    std::uint64_t membership_bound() const;
};

// Clusters are the components of the subgraphs induced by t-subsets of colors (or
// all colors when the palette is smaller), with clusters contained in others
// dropped. Components for smaller color sets lie inside these, so the containment
// pass yields the same family as taking every set of at most t colors.
ClusterCover cluster_cover(const Graph& g, int t, const LtdOptions& options = {});
ClusterCover cluster_cover_from(const Graph& g, int t, const Coloring& c, unsigned threads = 1);

struct CoverCheck {
    Decision status = Decision::yes;  // no: violation found; indeterminate: budget hit
    std::string violation;
    std::vector<int> witness;
};

// Checks the three cover conditions: clusters connected with tree-depth at most t,
// every connected vertex set of order at most t inside a cluster, membership within
// the bound. `budget` caps the number of enumerated connected sets.
CoverCheck verify_cluster_cover(const Graph& g, const ClusterCover& cover,
                                std::uint64_t budget = 5'000'000);

// Every connected vertex set of order 1..max_size, each exactly once (sorted lists).
// Returns false if more than `budget` sets would be produced.
bool enumerate_connected_sets(const Graph& g, int max_size, std::uint64_t budget,
                              std::vector<std::vector<int>>& out);

}  // namespace sparsity
