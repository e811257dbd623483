#include <doctest.h>

#include "marklab/constructions.hpp"
#include "marklab/families.hpp"
#include "marklab/graph.hpp"
#include "marklab/io.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace marklab;
namespace fam = marklab::families;

TEST_CASE("build_graph basics")
{
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(k2.num_vertices() == 2);
    CHECK(k2.num_edges() == 1);
    CHECK(k2.degree(0) == 1);
    CHECK(k2.degree(1) == 1);

    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.degree(1) == 2);
    CHECK(p3.has_edge(2, 1));
    CHECK_FALSE(p3.has_edge(0, 2));

    CHECK_THROWS_AS(build_graph(4, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), GraphError);
}

TEST_CASE("duplicate pairs collapse")
{
    Graph g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}, {0, 1}});
    CHECK(g.num_edges() == 2);
    CHECK(validate(g).empty());
}

TEST_CASE("girth of small graphs")
{
    CHECK(girth(cycle(7)) == Girth(7));
    CHECK(girth(fam::path(6)) == Girth::infinite());
    CHECK(girth(fam::random_tree(30, 3)) == Girth::infinite());
    CHECK(girth(lower_bound_graph(2).graph) == Girth(8));
    CHECK(girth(fam::complete(4)) == Girth(3));
    CHECK(girth(fam::cube()) == Girth(4));
    CHECK(girth(fam::dodecahedron()) == Girth(5));
    CHECK(girth(Graph{}) == Girth::infinite());
    CHECK(Girth(3) < Girth::infinite());
    CHECK(Girth::infinite().to_string() == "inf");
    CHECK_THROWS(Girth(2));
}

TEST_CASE("cycle")
{
    Graph c3 = cycle(3);
    CHECK(c3.num_edges() == 3);
    CHECK(girth(c3) == Girth(3));
    Graph c8 = cycle(8);
    for (Vertex v = 0; v < 8; ++v)
        CHECK(c8.degree(v) == 2);
    CHECK_THROWS_AS(cycle(2), GraphError);
}

TEST_CASE("disjoint union")
{
    Graph k2 = build_graph(2, {{0, 1}});
    Graph u = disjoint_union(k2, k2);
    CHECK(u.num_vertices() == 4);
    CHECK(u.num_edges() == 2);
    CHECK(u.has_edge(2, 3));

    Graph g2 = lower_bound_graph(2).graph;
    CHECK(girth(disjoint_union(g2, cycle(7))) == Girth(7));
    CHECK(girth(disjoint_union(g2, cycle(3))) == Girth(3));
}

TEST_CASE("subdivide_each_edge")
{
    Graph c6 = subdivide_each_edge(cycle(3), 1);
    CHECK(c6.num_vertices() == 6);
    CHECK(girth(c6) == Girth(6));
    for (Vertex v = 0; v < 6; ++v)
        CHECK(c6.degree(v) == 2);

    Graph g = fam::wheel(5);
    CHECK(subdivide_each_edge(g, 0) == g);

    Graph k4 = subdivide_each_edge(fam::complete(4), 2);
    CHECK(k4.num_vertices() == 16);
    CHECK(girth(k4) == Girth(9));
}

TEST_CASE("planar girth edge bound")
{
    CHECK_FALSE(planar_girth_edge_bound(fam::complete(5), 3));
    CHECK(planar_girth_edge_bound(cycle(7), 7));
    Graph g2 = lower_bound_graph(2).graph;
    CHECK(g2.num_vertices() == 58);
    CHECK(g2.num_edges() == 64);
    CHECK(planar_girth_edge_bound(g2, 8));
    // K_{3,3} has girth 4 and 9 > 2(6-2) edges.
    CHECK_FALSE(planar_girth_edge_bound(fam::complete_bipartite(3, 3), 4));
}

TEST_CASE("degeneracy")
{
    CHECK(degeneracy(fam::path(5)) == 1);
    CHECK(degeneracy(cycle(9)) == 2);
    CHECK(degeneracy(fam::complete(5)) == 4);
    CHECK(degeneracy(fam::wheel(6)) == 3);
    CHECK(degeneracy(lower_bound_graph(3).graph) == 2);
}

TEST_CASE("edge list parsing")
{
    Graph k2 = parse_edge_list("2 1\n0 1\n");
    CHECK(k2 == build_graph(2, {{0, 1}}));

    Graph commented = parse_edge_list("# a path\n3 2\n\n2 1\n# mid\n1 0\n");
    CHECK(commented == fam::path(3));

    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);

    try {
        parse_edge_list("3 2\n0 1\n\n1 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("parse/emit round trip")
{
    std::string messy = "4 3\n3 2\n1 0\n2 0\n";
    Graph g = parse_edge_list(messy);
    CHECK(emit_edge_list(g) == "4 3\n0 1\n0 2\n2 3\n");
    for (const auto& [name, h] : marklab::testing::small_corpus(14)) {
        CAPTURE(name);
        std::string text = emit_edge_list(h);
        CHECK(emit_edge_list(parse_edge_list(text)) == text);
        CHECK(parse_edge_list(text) == h);
    }
}

TEST_CASE("dot export")
{
    std::string dot = emit_dot(fam::path(2), {"A", "B"}, "P");
    CHECK(dot.find("graph P {") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("class=\"B\"") != std::string::npos);
    CHECK_THROWS(emit_dot(fam::path(2), {"A"}));
}

TEST_CASE("generated graphs validate")
{
    for (const auto& [name, g] : marklab::testing::small_corpus(14)) {
        CAPTURE(name);
        CHECK(validate(g).empty());
    }
    for (const auto& [name, g] : marklab::testing::subdivided_planar_seeds()) {
        CAPTURE(name);
        CHECK(validate(g).empty());
    }
    for (int n = 1; n <= 5; ++n) {
        CHECK(validate(hex_patch(n).graph).empty());
        CHECK(validate(lower_bound_graph(n).graph).empty());
    }
}

TEST_CASE("girth agrees with the edge-deletion oracle")
{
    for (const auto& [name, g] : marklab::testing::small_corpus(14)) {
        CAPTURE(name);
        CHECK(girth(g) == marklab::testing::girth_by_edge_deletion(g));
    }
    for (int i = 0; i < 40; ++i) {
        Graph g = fam::random_graph(8 + i % 20, 0.12, 900 + i);
        CHECK(girth(g) == marklab::testing::girth_by_edge_deletion(g));
    }
}

TEST_CASE("girth scales under subdivision and takes minima under union")
{
    using marklab::testing::small_corpus;
    for (const auto& [name, g] : small_corpus(10)) {
        CAPTURE(name);
        Girth base = girth(g);
        for (int t = 0; t <= 2; ++t)
            CHECK(girth(subdivide_each_edge(g, t)) == (t + 1) * base);
    }
    auto corpus = small_corpus(9);
    for (std::size_t i = 0; i < corpus.size(); i += 3)
        for (std::size_t j = 1; j < corpus.size(); j += 5) {
            const Graph& a = corpus[i].graph;
            const Graph& b = corpus[j].graph;
            CHECK(girth(disjoint_union(a, b)) == std::min(girth(a), girth(b)));
        }
}
