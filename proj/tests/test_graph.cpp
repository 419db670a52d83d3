#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sparsity/catalog.hpp"
#include "sparsity/error.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/orientation.hpp"

using namespace sparsity;

TEST_SUITE("graph") {

TEST_CASE("parse edge lists") {
    auto g = parse_edge_list("0 1\n1 2");
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.same_structure(path_graph(3)));

    auto k2 = parse_edge_list("a b\nb a");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.label(0) == "a");

    CHECK_THROWS_AS(parse_edge_list("x x"), ValidationError);

    SUBCASE("comments and blanks") {
        auto h = parse_edge_list("# header\n\n  u v # trailing\nv w\n");
        CHECK(h.order() == 3);
        CHECK(h.adjacent(0, 1));
        CHECK(h.adjacent(1, 2));
    }
    SUBCASE("malformed line reports its number") {
        try {
            parse_edge_list("0 1\n1 2 3\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("single token declares an isolated vertex") {
        auto h = parse_edge_list("a b\nc\n");
        CHECK(h.order() == 3);
        CHECK(h.degree(2) == 0);
    }
}

TEST_CASE("catalog graphs") {
    auto k4 = named("K_4");
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);

    auto clebsch = named("Clebsch");
    CHECK(clebsch.order() == 16);
    CHECK(clebsch.size() == 40);
    for (int v = 0; v < 16; ++v) CHECK(clebsch.degree(v) == 5);
    CHECK(clique_number(clebsch) == 2);  // triangle-free
    CHECK(girth(clebsch) == 4);

    auto petersen = named("Petersen");
    CHECK(petersen.order() == 10);
    CHECK(petersen.size() == 15);
    CHECK(girth(petersen) == 5);

    CHECK(named("named:K_{2,3}").size() == 6);
    CHECK(named("K_2,3").size() == 6);
    CHECK(named("grid(3,4)").size() == 17);
    CHECK(named("Q_3").size() == 12);
    CHECK(named("star_4").order() == 5);
    CHECK(named("K_3+K_2").order() == 5);
    CHECK_THROWS_AS(named("Heawood"), UsageError);
}

TEST_CASE("subdivisions") {
    CHECK(subdivide(complete_graph(3), 0) == complete_graph(3));
    auto c6 = subdivide(complete_graph(3), 1);
    CHECK(c6.order() == 6);
    CHECK(c6.size() == 6);
    CHECK(girth(c6) == 6);
    CHECK(subdivide(complete_graph(4), 2).order() == 16);
    for (const auto& e : corpus::up_to(12))
        for (int p = 0; p <= 4; ++p) {
            auto s = subdivide(e.graph, p);
            CHECK(s.order() == e.graph.order() + p * static_cast<int>(e.graph.size()));
            CHECK(s.size() == (p + 1) * e.graph.size());
        }
}

TEST_CASE("induced subgraphs") {
    std::vector<int> tri{0, 1, 2};
    CHECK(induced_subgraph(complete_graph(4), tri).graph.same_structure(complete_graph(3)));
    std::vector<int> two{0, 2};
    auto iso = induced_subgraph(cycle_graph(5), two);
    CHECK(iso.graph.order() == 2);
    CHECK(iso.graph.size() == 0);
    CHECK(iso.to_parent == std::vector<int>{0, 2});
    std::vector<int> outer{0, 1, 2, 3, 4};
    CHECK(induced_subgraph(petersen_graph(), outer).graph.same_structure(cycle_graph(5)));
    for (const auto& e : corpus::small()) {
        std::vector<int> all(e.graph.order());
        std::iota(all.begin(), all.end(), 0);
        CHECK(induced_subgraph(e.graph, all).graph.same_structure(e.graph));
    }
    std::vector<int> bad{7};
    CHECK_THROWS(induced_subgraph(complete_graph(3), bad));
}

TEST_CASE("distances and components") {
    CHECK(bfs_distances(path_graph(3), 0) == std::vector<int>{0, 1, 2});
    auto g = disjoint_union(complete_graph(2), complete_graph(1));
    CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, kInfinity});
    auto petersen = petersen_graph();
    for (int v = 0; v < 10; ++v) {
        auto d = bfs_distances(petersen, v);
        CHECK(*std::max_element(d.begin(), d.end()) == 2);
    }
    CHECK(connected_components(named("K_3+K_2")).size() == 2);
    CHECK(connected_components(empty_graph(4)).size() == 4);
    CHECK(connected_components(cycle_graph(6)).size() == 1);
}

TEST_CASE("clique and chromatic numbers") {
    CHECK(clique_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(clique_number(petersen_graph()) == 2);
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK_THROWS_AS(chromatic_number(complete_graph(13)), SizeLimitError);
    CHECK_THROWS_AS(clique_number(complete_graph(21)), SizeLimitError);
}

TEST_CASE("degeneracy orientation") {
    auto k3 = degeneracy_orientation(complete_graph(3));
    CHECK(k3.max_in_degree() == 2);
    std::vector<int> in{k3.in_degree(0), k3.in_degree(1), k3.in_degree(2)};
    std::sort(in.begin(), in.end());
    CHECK(in == std::vector<int>{0, 1, 2});
    CHECK(degeneracy_orientation(random_tree(30, 4)).max_in_degree() == 1);
    CHECK(degeneracy_orientation(petersen_graph()).max_in_degree() == 3);
    for (const auto& e : corpus::up_to(10)) {
        auto o = degeneracy_orientation(e.graph);
        CHECK_MESSAGE(o.max_in_degree() == oracle::degeneracy(e.graph), e.name);
        CHECK(o.arc_count() == e.graph.size());
        for (const auto& arc : o.arcs()) {
            CHECK(arc.kind == ArcKind::original);
            CHECK(arc.round == 0);
        }
    }
}

TEST_CASE("edge-list round trip is byte exact") {
    for (const auto& e : corpus::small()) {
        auto text = serialize_edge_list(e.graph);
        auto back = parse_edge_list(text);
        CHECK_MESSAGE(back.same_structure(e.graph), e.name);
        CHECK(serialize_edge_list(back) == text);
    }
    auto labeled = parse_edge_list("b c\nz\nc a\n");
    auto text = serialize_edge_list(labeled);
    CHECK(parse_edge_list(text) == labeled);
    CHECK(serialize_edge_list(clebsch_graph()).find('\n') != std::string::npos);
}

TEST_CASE("generators are reproducible") {
    CHECK(generate("random_tree(10,7)") == generate("random_tree(10, 7)"));
    CHECK(generate("random_tree(10,7)").size() == 9);
    CHECK(is_connected(generate("random_tree(25,1)")));
    CHECK(girth(generate("girth5(20,1)")) >= 5);
    auto bd = generate("bounded_degree(40,4,3)");
    CHECK(bd.max_degree() <= 4);
    auto planar = generate("planar(30,2)");
    CHECK(planar.size() == 3 * 30 - 6);
    CHECK(generate("gnm(10,12,5)").size() == 12);
    CHECK_THROWS_AS(generate("nonsense(3)"), UsageError);
}

}  // TEST_SUITE
