#include <doctest.h>

#include <algorithm>
#include <random>

#include "zf/error.hpp"
#include "zf/families.hpp"
#include "zf/graph.hpp"
#include "zf/graph_io.hpp"

using namespace zf;

namespace {

using Blocks = std::vector<std::vector<VertexId>>;

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng))
                e.push_back({u, v});
    return Graph::from_edge_list(n, e);
}

} // namespace

TEST_CASE("from_edge_list builds the listed edges") {
    const auto p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(1, 0));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK(p3.same_structure(path(3)));

    const auto k1 = Graph::from_edge_list(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    const auto dup = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {2, 3}});
    CHECK(dup.size() == 2);
    CHECK(dup.check_invariants());
}

TEST_CASE("from_edge_list rejects bad ids and loops") {
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InputError);
}

TEST_CASE("default labels are atoms") {
    const auto g = path(2);
    CHECK(g.label(1).str() == "path[1]");
    const auto bare = Graph::from_edge_list(2, {{0, 1}});
    CHECK_FALSE(bare.has_labels());
    CHECK(bare.label(1).as<AtomLabel>() != nullptr);
}

TEST_CASE("graph6 decoding") {
    CHECK(parse_graph6("Bw").same_structure(complete(3)));
    const auto p3 = parse_graph6("Bg");
    CHECK(p3.same_structure(Graph::from_edge_list(3, {{0, 1}, {1, 2}})));
    const auto k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
    CHECK(parse_graph6(">>graph6<<Bw\n").same_structure(complete(3)));
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 encoding") {
    CHECK(emit_graph6(complete(3)) == "Bw");
    CHECK(emit_graph6(path(3)) == "Bg");
    CHECK(emit_graph6(complete(1)) == "@");
    CHECK_THROWS_AS(emit_graph6(empty(63)), BudgetError);
    CHECK_NOTHROW(emit_graph6(empty(62)));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), FormatError);
    CHECK_THROWS_AS(parse_graph6("~"), FormatError);  // multi-byte order form
    CHECK_THROWS_AS(parse_graph6("B"), FormatError);  // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), FormatError); // trailing data
    CHECK_THROWS_AS(parse_graph6("B "), FormatError); // byte below 63
    CHECK_THROWS_AS(parse_graph6("Bx"), FormatError); // padding bits set
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(7);
    for (std::size_t n : {0u, 1u, 2u, 5u, 6u, 7u, 13u, 30u, 62u})
        for (double p : {0.0, 0.3, 0.7, 1.0}) {
            const auto g = random_graph(n, p, rng);
            const auto text = emit_graph6(g);
            const auto back = parse_graph6(text);
            CHECK(back.same_structure(g));
            CHECK(emit_graph6(back) == text);
        }
}

TEST_CASE("edge-list format") {
    const auto g = parse_edge_list("# a path\n3 2\n0 1\n1 2 # tail\n");
    CHECK(g.same_structure(path(3)));
    CHECK(emit_edge_list(g) == "3 2\n0 1\n1 2\n");
    CHECK(parse_edge_list(emit_edge_list(cycle(5))).same_structure(cycle(5)));
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), FormatError);
    CHECK_THROWS(parse_edge_list("3 1\n0 5\n"));
    CHECK_THROWS(parse_edge_list("3 1\n2 2\n"));
}

TEST_CASE("label table") {
    CHECK(emit_label_table(path(2)) == "0\tpath[0]\n1\tpath[1]\n");
}

TEST_CASE("connected components") {
    CHECK(connected_components(path(3)) == Blocks{{0, 1, 2}});
    CHECK(connected_components(empty(3)) == Blocks{{0}, {1}, {2}});
    CHECK(connected_components(Graph::from_edge_list(3, {{0, 1}})) == Blocks{{0, 1}, {2}});
    CHECK(connected_components(Graph::from_edge_list(5, {{4, 1}, {0, 3}})) == Blocks{{0, 3}, {1, 4}, {2}});
    CHECK(isolated_vertices(Graph::from_edge_list(4, {{1, 2}})) == std::vector<VertexId>{0, 3});
    CHECK(is_connected(cycle(4)));
    CHECK_FALSE(is_connected(empty(2)));
}

TEST_CASE("join") {
    const auto f = join(complete(1), path(3));
    CHECK(f.order() == 4);
    CHECK(f.size() == 5);
    CHECK(f.same_structure(fan(3)));
    CHECK(join(complete(1), cycle(3)).same_structure(complete(4)));
    CHECK(join(complete(1), complete(1)).same_structure(complete(2)));
    CHECK(f.label(0).str().rfind("L:", 0) == 0);
    CHECK(f.label(1).str().rfind("R:", 0) == 0);
    CHECK(f.check_invariants());

    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto h = random_graph(1 + i % 7, 0.4, rng);
        const auto j = join(complete(1), h);
        CHECK(j.order() == h.order() + 1);
        CHECK(j.size() == h.size() + h.order());
    }
}

TEST_CASE("disjoint union") {
    const auto u = disjoint_union(path(2), path(2));
    CHECK(u.order() == 4);
    CHECK(u.size() == 2);
    CHECK(connected_components(u).size() == 2);
    CHECK(disjoint_union(complete(1), complete(1)).same_structure(empty(2)));
    const auto pk = disjoint_union(path(3), complete(3));
    CHECK(connected_components(pk) == Blocks{{0, 1, 2}, {3, 4, 5}});
    CHECK(pk.check_invariants());

    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto g = random_graph(1 + i % 6, 0.3, rng), h = random_graph(2 + i % 5, 0.5, rng);
        CHECK(connected_components(disjoint_union(g, h)).size() ==
              connected_components(g).size() + connected_components(h).size());
    }
}

TEST_CASE("induced subgraph and distances") {
    const auto c = cycle(5);
    const std::vector<VertexId> pick{0, 1, 2};
    CHECK(c.induced(pick).same_structure(path(3)));
    const auto d = distance_matrix(c);
    CHECK(d[0][2] == 2);
    CHECK(d[0][4] == 1);
    CHECK(distance_matrix(empty(2))[0][1] == -1);
}

TEST_CASE("labels must be distinct") {
    std::vector<VertexLabel> same(2, VertexLabel::atom("x", 0));
    CHECK_THROWS(path(2).with_labels(same));
}
