#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity {

// Rooted forest on [0, n). `height` is the number of vertices on a longest
// root-to-leaf chain.
struct EliminationForest {
    std::vector<int> parent;  // -1 marks a root
    std::vector<int> roots;   // sorted
    int height = 0;

    // Validates that `parent` describes a forest on [0, n) and fills roots/height.
    // Throws ValidationError on cycles or out-of-range parents.
    static EliminationForest from_parents(std::vector<int> parent);

    int order() const noexcept { return static_cast<int>(parent.size()); }
    // Depth of every vertex, roots at depth 1.
    std::vector<int> depths() const;
    // Whether `a` is an ancestor of `b` or equal to it.
    bool is_ancestor(int a, int b) const;
};

// Vertex coloring with a declared palette; colors lie in [0, palette).
struct Coloring {
    std::vector<int> color;
    int palette = 0;

    // Palette is max color + 1. Throws ValidationError on negative colors.
    static Coloring from_colors(std::vector<int> color);
    void validate(int n) const;
};

struct TreedepthResult {
    int treedepth = 0;
    EliminationForest witness;
};

// Exact tree-depth by the component/vertex-deletion recursion, memoized over
// connected vertex subsets. Among minimizing deletion vertices the witness uses the
// smallest id. Refuses graphs larger than `exact_limit` (at most 64).
TreedepthResult treedepth_exact(const Graph& g, int exact_limit = 18);

// True iff every edge of `g` joins an ancestor/descendant pair of `f`.
// Throws ValidationError when `f` is not defined on exactly V(g).
bool verify_elimination_forest(const Graph& g, const EliminationForest& f);

// Colors each vertex by its depth (root = color 0); palette = height.
Coloring centered_coloring_from_forest(const EliminationForest& f);

// Every connected induced subgraph has a color occurring exactly once. Exhaustive
// over vertex subsets, hence the size guard.
bool verify_centered_coloring(const Graph& g, const Coloring& c, int limit = 14);

// For every color k, deleting the vertices colored above k leaves no component with
// two vertices of color k.
bool verify_vertex_ranking(const Graph& g, const Coloring& c, int limit = 14);

struct DfsBounds {
    int lower = 0;       // ceil(log2(h + 2)); informational, exceeds td on long DFS paths
    int path_lower = 0;  // ceil(log2(h + 1)), a valid lower bound from the DFS path
    int upper = 0;       // DFS height h (vertices on the longest root-to-leaf chain)
    EliminationForest witness;
};

// DFS from the smallest id of each component, neighbors in increasing id order.
DfsBounds dfs_height_bounds(const Graph& g);

enum class Decision : std::uint8_t { yes, no, indeterminate };
const char* to_string(Decision d);

struct BoundedTreedepth {
    Decision decision = Decision::indeterminate;
    std::optional<EliminationForest> witness;  // height <= k when decision == yes
};

// Decides td(g) <= k on graphs of any order. Branches on root vertices with
// path/degeneracy lower bounds and a DFS upper bound; `budget` caps the number of
// search nodes, after which the answer is indeterminate.
BoundedTreedepth treedepth_at_most(const Graph& g, int k, std::uint64_t budget = 2'000'000);

// Smallest k with 2^k >= x.
int ceil_log2(std::uint64_t x);

}  // namespace sparsity
