#include <algorithm>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include <matchdeck/graph.hpp>

using namespace matchdeck;

TEST_CASE("edges normalize their endpoints", "[graph]") {
    Edge e(4, 1);
    CHECK(e.u == 1);
    CHECK(e.w == 4);
    CHECK(Edge(1, 4) == e);
    CHECK(Edge(0, 1) < Edge(0, 2));
    CHECK(Edge(0, 2) < Edge(1, 2));
}

TEST_CASE("graph construction and edge multiset", "[graph]") {
    Graph g(4, {{2, 1}, {0, 1}, {1, 2}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.multiplicity(1, 2) == 2);
    CHECK(g.multiplicity(2, 1) == 2);
    CHECK(g.multiplicity(0, 1) == 1);
    CHECK(g.multiplicity(0, 3) == 0);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK_FALSE(g.is_simple());
    CHECK(g.degree(1) == 3);
    CHECK(g.degrees() == std::vector<int>{1, 3, 2, 0});
    CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));

    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("vertex deletion relabels densely", "[graph]") {
    Graph g = cycle_graph(5);
    Graph card = delete_vertex(g, 2);
    CHECK(card.vertex_count() == 4);
    CHECK(card.edge_count() == 3);
    CHECK(is_path_graph(card));

    CHECK_THROWS_AS(delete_vertex(g, 5), std::out_of_range);
}

TEST_CASE("edge deletion removes one parallel copy at a time", "[graph]") {
    Graph g(2, {{0, 1}, {0, 1}});
    Graph once = delete_edge(g, 0, 1);
    CHECK(once.multiplicity(0, 1) == 1);
    Graph twice = delete_edge(once, 1, 0);
    CHECK(twice.edge_count() == 0);
    CHECK_THROWS_AS(delete_edge(twice, 0, 1), std::invalid_argument);
}

TEST_CASE("deleting both endpoints of an edge", "[graph]") {
    Graph g = cycle_graph(6);
    Graph rest = delete_both_endpoints(g, 0, 1);
    CHECK(rest.vertex_count() == 4);
    CHECK(is_path_graph(rest));
}

TEST_CASE("complement is an involution on simple graphs", "[graph]") {
    Graph g = path_graph(5);
    Graph gc = complement(g);
    CHECK(gc.edge_count() == 10 - 4);
    CHECK(complement(gc) == g);
    Graph multi(2, {{0, 1}, {0, 1}});
    CHECK_THROWS_AS(complement(multi), std::invalid_argument);
}

TEST_CASE("disjoint union shifts the second block", "[graph]") {
    Graph u = disjoint_union(cycle_graph(3), path_graph(2));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.has_edge(3, 4));
    CHECK_FALSE(u.has_edge(2, 3));
    CHECK_FALSE(is_connected(u));
}

TEST_CASE("generators produce the expected shapes", "[graph]") {
    CHECK(path_graph(0).vertex_count() == 0);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(6).edge_count() == 5);
    CHECK(cycle_graph(2).multiplicity(0, 1) == 2);
    CHECK(cycle_graph(7).edge_count() == 7);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK_THROWS_AS(cycle_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(-1), std::invalid_argument);
}

TEST_CASE("connected components keep original vertex order", "[graph]") {
    Graph g(7);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(2, 5);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].vertex_count() == 2);  // {0,3}
    CHECK(comps[1].vertex_count() == 3);  // {1,2,5}
    CHECK(comps[2].vertex_count() == 1);  // {4}
    CHECK(comps[3].vertex_count() == 1);  // {6}
    CHECK(comps[1].has_edge(0, 1));
    CHECK(comps[1].has_edge(1, 2));
}

TEST_CASE("relabel permutes endpoints", "[graph]") {
    Graph g = path_graph(3);
    Graph r = relabel(g, {2, 0, 1});
    CHECK(r.has_edge(2, 0));
    CHECK(r.has_edge(0, 1));
    CHECK_THROWS_AS(relabel(g, {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("structural recognizers", "[graph]") {
    CHECK(is_path_graph(path_graph(1)));
    CHECK(is_path_graph(path_graph(9)));
    CHECK_FALSE(is_path_graph(cycle_graph(4)));
    CHECK_FALSE(is_path_graph(disjoint_union(path_graph(2), path_graph(2))));

    CHECK(is_cycle_graph(cycle_graph(2)));
    CHECK(is_cycle_graph(cycle_graph(3)));
    CHECK(is_cycle_graph(relabel(cycle_graph(6), {3, 1, 4, 0, 5, 2})));
    CHECK_FALSE(is_cycle_graph(path_graph(3)));
    Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK_FALSE(is_cycle_graph(two_triangles));
}
