#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsity/decomposition.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/treedepth.hpp"

namespace sparsity {

// subgraph: copies of H (vertex subset plus edge subset forming H), each once.
// induced: vertex subsets S with G[S] isomorphic to H.
enum class CountMode : std::uint8_t { subgraph, induced };
const char* to_string(CountMode mode);
CountMode parse_count_mode(std::string_view text);

inline constexpr int kBruteforcePatternLimit = 5;
inline constexpr int kBruteforceHostLimit = 60;
inline constexpr int kLtdPatternLimit = 7;

std::uint64_t count_bruteforce(const Graph& h, const Graph& g, CountMode mode,
                               int pattern_limit = kBruteforcePatternLimit,
                               int host_limit = kBruteforceHostLimit);

struct CountResult {
    std::uint64_t count = 0;
    std::uint64_t embeddings = 0;    // injective (induced) homomorphisms H -> G
    std::uint64_t automorphisms = 0;
    int palette = 0;
    int rounds = 0;
    std::size_t color_sets = 0;      // color sets that contributed a nonzero term
};

// Counts through a low tree-depth coloring with p = |H|: for every color set J of
// size at most |H|, embeddings whose image uses exactly the colors of J are counted
// by dynamic programming over an elimination forest of G[J]; the sum is divided by
// |Aut(H)|. Throws OverflowError rather than wrapping.
CountResult count_ltd(const Graph& h, const Graph& g, CountMode mode,
                      const LtdOptions& options = {});

// Same dynamic program on a given coloring (must be a valid p-decomposition with
// p >= |H| for the forests to stay shallow; correctness holds for any coloring).
CountResult count_with_coloring(const Graph& h, const Graph& g, CountMode mode,
                                const Coloring& c, const LtdOptions& options = {});

std::uint64_t automorphism_count(const Graph& h, int limit = 8);

// Backtracking isomorphism search; returns a bijection a -> b if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

// Core C with families F_1..F_k of vertex sets of G, and the partition
// (K, Y_1..Y_k) of V(F) they are supposed to realise.
struct Sunflower {
    std::vector<int> center;                              // C, in G
    std::vector<std::vector<std::vector<int>>> families;  // F_i, sets in G
    std::vector<int> kernel;                              // K, in F
    std::vector<std::vector<int>> petals;                 // Y_i, in F
};

struct SunflowerCheck {
    Decision status = Decision::yes;
    std::string violation;  // first failed condition, empty when status is yes
};

// Checks: all sets pairwise disjoint; (K, Y_i) partitions V(F) with no F-edges
// between different Y_i; G[C] ~ F[K]; G[X] ~ F[Y_i] for X in F_i; and every
// transversal C + X_1 + ... + X_k induces a copy of F. The last condition is
// indeterminate when the product of family sizes exceeds `product_budget`.
SunflowerCheck verify_sunflower(const Graph& g, const Graph& f, int k, const Sunflower& s,
                                std::uint64_t product_budget = 10'000);

}  // namespace sparsity
