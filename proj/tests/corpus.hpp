#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sparsity/catalog.hpp"
#include "sparsity/graph.hpp"

namespace corpus {

using sparsity::Graph;

struct Entry {
    std::string name;
    Graph graph;
};

inline Entry make(const std::string& spec) { return {spec, sparsity::generate(spec)}; }

// Small named graphs plus seeded random ones; everything here is at most 18 vertices
// so exact tree-depth applies.
inline std::vector<Entry> small() {
    std::vector<Entry> out;
    for (const char* spec :
         {"K_1", "K_2", "K_3", "K_4", "K_5", "K_6", "P_2", "P_3", "P_4", "P_5", "P_7", "P_10",
          "C_3", "C_4", "C_5", "C_6", "C_7", "C_9", "E_3", "K_{2,3}", "K_{3,3}", "K_{2,4}",
          "star_4", "grid(3,3)", "grid(3,4)", "Q_3", "Petersen", "sub_1(K_4)", "sub_2(K_3)",
          "K_3+K_2", "P_3+C_4", "random_tree(12,3)", "random_tree(16,5)",
          "bounded_degree(14,3,2)", "bounded_degree(12,4,9)", "planar(10,4)", "planar(12,8)",
          "girth5(14,1)", "gnm(9,14,6)", "gnm(11,13,2)", "Clebsch"})
        out.push_back(make(spec));
    return out;
}

// Graphs with at most `limit` vertices from small().
inline std::vector<Entry> up_to(int limit) {
    std::vector<Entry> out;
    for (auto& e : small())
        if (e.graph.order() <= limit) out.push_back(std::move(e));
    return out;
}

// Every labeled graph on n vertices.
inline std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::vector<sparsity::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U) edges.push_back(pairs[i]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

inline Graph random_graph(int n, std::uint64_t seed) {
    sparsity::Xoshiro256 rng(seed);
    const int pairs = n * (n - 1) / 2;
    int m = pairs ? static_cast<int>(rng.below(pairs + 1)) : 0;
    return sparsity::gnm_graph(n, m, seed ^ 0x9e3779b97f4a7c15ULL);
}

}  // namespace corpus
