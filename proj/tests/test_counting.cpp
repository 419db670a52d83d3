#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sparsity/catalog.hpp"
#include "sparsity/counting.hpp"
#include "sparsity/error.hpp"

using namespace sparsity;

namespace {

const std::vector<std::string>& patterns() {
    static const std::vector<std::string> p{"P_3", "P_4", "K_3", "C_4", "K_{1,3}"};
    return p;
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("brute-force examples") {
    for (const auto& e : corpus::up_to(18))
        CHECK(count_bruteforce(complete_graph(2), e.graph, CountMode::subgraph) == e.graph.size());
    CHECK(count_bruteforce(complete_graph(3), complete_graph(4), CountMode::subgraph) == 4);
    CHECK(count_bruteforce(path_graph(3), complete_graph(4), CountMode::subgraph) == 12);
    CHECK(count_bruteforce(path_graph(3), complete_graph(4), CountMode::induced) == 0);
    CHECK(count_bruteforce(cycle_graph(4), complete_graph(4), CountMode::subgraph) == 3);
    CHECK(count_bruteforce(path_graph(3), path_graph(5), CountMode::induced) == 3);
    CHECK_THROWS_AS(count_bruteforce(path_graph(6), complete_graph(8), CountMode::subgraph),
                    SizeLimitError);
}

TEST_CASE("brute force matches the embedding oracle") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = corpus::random_graph(7, seed);
        for (const auto& p : patterns()) {
            auto h = named(p);
            for (auto mode : {CountMode::subgraph, CountMode::induced})
                CHECK_MESSAGE(count_bruteforce(h, g, mode) ==
                                  oracle::copies(h, g, mode == CountMode::induced),
                              p, " seed ", seed);
        }
    }
}

TEST_CASE("automorphisms") {
    CHECK(automorphism_count(complete_graph(4)) == 24);
    CHECK(automorphism_count(path_graph(4)) == 2);
    CHECK(automorphism_count(cycle_graph(5)) == 10);
    CHECK(automorphism_count(named("K_{1,3}")) == 6);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto h = corpus::random_graph(5, seed);
        CHECK(automorphism_count(h) == oracle::automorphisms(h));
    }
    CHECK(isomorphic(cycle_graph(5), named("C_5")));
    CHECK_FALSE(isomorphic(path_graph(4), named("K_{1,3}")));
    auto iso = find_isomorphism(petersen_graph(), petersen_graph());
    REQUIRE(iso);
}

TEST_CASE("ltd counting matches brute force") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto g = gnm_graph(20 + static_cast<int>(seed), 30 + static_cast<int>(seed * 2), seed);
        for (const auto& p : patterns()) {
            auto h = named(p);
            for (auto mode : {CountMode::subgraph, CountMode::induced}) {
                auto res = count_ltd(h, g, mode);
                CHECK_MESSAGE(res.count == count_bruteforce(h, g, mode), p, " seed ", seed);
                CHECK(res.embeddings == res.count * res.automorphisms);
            }
        }
    }
}

TEST_CASE("ltd counting examples") {
    auto petersen = petersen_graph();
    CHECK(count_ltd(complete_graph(3), petersen, CountMode::subgraph).count == 0);
    CHECK(count_ltd(complete_graph(2), petersen, CountMode::subgraph).count == 15);
    CHECK(count_ltd(cycle_graph(5), petersen, CountMode::subgraph).count == 12);
    CHECK(count_ltd(complete_graph(3), complete_graph(4), CountMode::subgraph).count == 4);
    CHECK(count_ltd(path_graph(3), complete_graph(4), CountMode::subgraph).count == 12);
    // larger than the brute-force pattern limit
    CHECK(count_ltd(cycle_graph(6), named("Q_3"), CountMode::subgraph).count == 16);
    CHECK(count_ltd(path_graph(6), path_graph(9), CountMode::induced).count == 4);
    // arbitrary colorings keep the count right
    auto g = grid_graph(3, 3);
    auto rainbow = Coloring::from_colors({0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(count_with_coloring(cycle_graph(4), g, CountMode::subgraph, rainbow).count == 4);
}

TEST_CASE("count invariants") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = corpus::random_graph(8, seed);
        for (const auto& p : patterns()) {
            auto h = named(p);
            auto sub = count_ltd(h, g, CountMode::subgraph).count;
            auto ind = count_ltd(h, g, CountMode::induced).count;
            CHECK(ind <= sub);
            if (h.size() > g.size()) CHECK(sub == 0);
        }
    }
    CHECK(count_ltd(complete_graph(5), complete_graph(4), CountMode::subgraph).count == 0);
    CHECK(count_bruteforce(complete_graph(5), complete_graph(4), CountMode::induced) == 0);
}

TEST_CASE("count modes") {
    CHECK(parse_count_mode("induced") == CountMode::induced);
    CHECK(std::string(to_string(CountMode::subgraph)) == "subgraph");
    CHECK_THROWS_AS(parse_count_mode("minor"), UsageError);
}

TEST_CASE("sunflowers") {
    auto star = named("K_{1,3}");  // center 0, leaves 1..3
    auto k2 = complete_graph(2);
    Sunflower s;
    s.center = {0};
    s.families = {{{1}, {2}, {3}}};
    s.kernel = {0};
    s.petals = {{1}};
    CHECK(verify_sunflower(star, k2, 1, s).status == Decision::yes);

    SUBCASE("petal not attached to the center") {
        auto g = disjoint_union(star, complete_graph(1));  // vertex 4 isolated
        Sunflower bad = s;
        bad.families = {{{1}, {4}}};
        auto check = verify_sunflower(g, k2, 1, bad);
        CHECK(check.status == Decision::no);
        CHECK_FALSE(check.violation.empty());
    }
    SUBCASE("overlapping sets") {
        Sunflower bad = s;
        bad.families = {{{1}, {0}}};
        CHECK(verify_sunflower(star, k2, 1, bad).status == Decision::no);
    }
    SUBCASE("triangles on a common edge") {
        auto k5 = complete_graph(5);
        auto k3 = complete_graph(3);
        Sunflower t;
        t.center = {0, 1};
        t.families = {{{2}, {3}, {4}}};
        t.kernel = {0, 1};
        t.petals = {{2}};
        CHECK(verify_sunflower(k5, k3, 1, t).status == Decision::yes);
        auto diamond = Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
        Sunflower d = t;
        d.families = {{{2}, {3}}};
        CHECK(verify_sunflower(diamond, k3, 1, d).status == Decision::no);
    }
    SUBCASE("two petals must not see each other") {
        auto p3 = path_graph(3);  // kernel {1}, petals {0}, {2}
        Sunflower two;
        two.center = {0};
        two.families = {{{1}, {2}}, {{3}, {4}}};
        two.kernel = {1};
        two.petals = {{0}, {2}};
        auto g = star_graph(4);
        CHECK(verify_sunflower(g, p3, 2, two).status == Decision::yes);
        auto g2 = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}});
        CHECK(verify_sunflower(g2, p3, 2, two).status == Decision::no);
    }
    SUBCASE("budget") {
        auto g = star_graph(12);
        Sunflower big;
        big.center = {0};
        big.kernel = {1};
        big.petals = {{0}, {2}};
        big.families = {{{1}, {2}, {3}, {4}, {5}, {6}}, {{7}, {8}, {9}, {10}, {11}, {12}}};
        CHECK(verify_sunflower(g, path_graph(3), 2, big, 10).status == Decision::indeterminate);
        CHECK(verify_sunflower(g, path_graph(3), 2, big).status == Decision::yes);
    }
}

}  // TEST_SUITE
