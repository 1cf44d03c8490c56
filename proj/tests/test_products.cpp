#include <doctest.h>

#include <algorithm>
#include <set>

#include "zf/error.hpp"
#include "zf/families.hpp"
#include "zf/products.hpp"

using namespace zf;

namespace {

using Ids = std::vector<VertexId>;

bool lex_adjacent(const Graph& g, const Graph& h, VertexId a, VertexId v, VertexId b, VertexId w) {
    return g.adjacent(a, b) || (a == b && h.adjacent(v, w));
}

} // namespace

TEST_CASE("corona of two edges") {
    const auto cg = corona(path(2), path(2));
    CHECK(cg.graph().order() == 6);
    CHECK(cg.graph().size() == 7);
    CHECK(cg.depth() == 1);
    CHECK(cg.copy(1, 1).vertices == Ids{2, 3});
    CHECK(cg.copy(1, 2).vertices == Ids{4, 5});
    CHECK(cg.root_of(3) == VertexId{0});
    CHECK(cg.root_of(4) == VertexId{1});
    CHECK_FALSE(cg.root_of(0).has_value());
    CHECK(cg.graph().label(0).str() == "v_1");
    CHECK(cg.graph().label(5).str() == "u^2_2");
    CHECK(cg.graph().check_invariants());
    CHECK_THROWS_AS(cg.copy(1, 3), InputError);
    CHECK_THROWS_AS(cg.copy(2, 1), InputError);
}

TEST_CASE("corona with a single base vertex is a join") {
    CHECK(corona(complete(1), cycle(4)).graph().same_structure(wheel(4)));
    CHECK(corona(complete(1), path(3)).graph().same_structure(fan(3)));
    for (const auto* spec : {"path:3", "cycle:5", "empty:3", "path:2+empty:1"}) {
        const auto h = make_graph(spec);
        CHECK(corona(complete(1), h).graph().same_structure(join(complete(1), h)));
    }
}

TEST_CASE("iterated corona order identities") {
    CHECK(iterated_corona(path(2), path(2), 2).graph().order() == 18);
    CHECK(iterated_corona(star(4), complete(1), 2).graph().order() == 16);
    const auto g = cycle(4);
    const auto same = iterated_corona(g, path(3), 0);
    CHECK(same.depth() == 0);
    CHECK(same.graph().same_structure(g));
    for (std::size_t n1 = 1; n1 <= 4; ++n1)
        for (std::size_t n2 = 1; n2 <= 4; ++n2)
            for (int k = 0; k <= 3; ++k) {
                if (corona_order(n1, n2, k) > kDefaultConstructionCap)
                    continue;
                const auto cg = iterated_corona(path(n1), path(n2), k);
                CHECK(cg.graph().order() == corona_order(n1, n2, k));
                if (k >= 1) {
                    const auto prev = corona_order(n1, n2, k - 1);
                    std::size_t step = n1 * n2;
                    for (int i = 1; i < k; ++i)
                        step *= n2 + 1;
                    CHECK(cg.graph().order() == prev + step);
                }
            }
}

TEST_CASE("iterated corona structure") {
    const auto cg = iterated_corona(path(2), path(2), 2);
    const auto& g = cg.graph();
    CHECK(g.check_invariants());
    // base + copies at every level cover every vertex exactly once
    std::vector<int> seen(g.order(), 0);
    for (auto v : cg.base_vertices())
        ++seen[v];
    for (const auto& c : cg.copies())
        for (auto v : c.vertices)
            ++seen[v];
    CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
    CHECK(cg.copies_at(1).size() == 2);
    CHECK(cg.copies_at(2).size() == 6);
    for (const auto* c : cg.copies_at(2)) {
        CHECK(c->vertices.size() == 2);
        CHECK(cg.depth_of(c->root) <= 1);
        for (auto v : c->vertices) {
            CHECK(g.adjacent(v, c->root));
            // root plus within-copy neighbor
            CHECK(g.degree(v) == 2);
        }
    }
    // address (j2) = 3 is the base vertex itself, 1..2 are the first-level copy vertices
    const int root_self[] = {3};
    CHECK(cg.copy(2, 1, root_self).root == 0);
    const int first[] = {1};
    CHECK(cg.copy(2, 1, first).root == cg.copy(1, 1).vertices[0]);
    const int bad[] = {4};
    CHECK_THROWS_AS(cg.copy(2, 1, bad), InputError);
    CHECK(g.label(cg.copy(2, 2, first).vertices[1]).str() == "u^2_2.1");
}

TEST_CASE("iterated corona budget") {
    CHECK_THROWS_AS(iterated_corona(path(4), path(4), 5), BudgetError);
    CHECK_THROWS_AS(iterated_corona(path(4), path(4), 2, 50), BudgetError);
}

TEST_CASE("lexicographic product basics") {
    CHECK(lexicographic(path(2), path(2)).graph().same_structure(complete(4)));
    const auto p = lexicographic(path(3), path(2));
    CHECK(p.graph().order() == 6);
    CHECK(p.graph().size() == 11);
    CHECK(p.graph().degree(p.id(1, 0)) == 5);
    const auto k = lexicographic(complete(2), path(3));
    CHECK(k.graph().size() == 13);
    CHECK(k.graph().same_structure(join(path(3), path(3))));
    CHECK(p.graph().check_invariants());
    CHECK(p.graph().label(p.id(2, 1)).str() == "(path[2],path[1])#1");
}

TEST_CASE("lexicographic adjacency and degree identity") {
    for (const auto* gs : {"path:3", "cycle:4", "star:4", "complete:3"})
        for (const auto* hs : {"path:2", "cycle:3", "empty:2", "path:2+path:2"}) {
            const auto g = make_graph(gs), h = make_graph(hs);
            const auto lg = lexicographic(g, h);
            for (VertexId x = 0; x < lg.graph().order(); ++x) {
                const auto a = lg.g_part(x), v = lg.h_part(x);
                CHECK(lg.graph().degree(x) == g.degree(a) * h.order() + h.degree(v));
                for (VertexId y = 0; y < lg.graph().order(); ++y)
                    if (x != y)
                        CHECK(lg.graph().adjacent(x, y) == lex_adjacent(g, h, a, v, lg.g_part(y), lg.h_part(y)));
            }
            // layers are either completely joined or not at all
            for (VertexId a = 0; a < g.order(); ++a)
                for (VertexId b = a + 1; b < g.order(); ++b) {
                    std::size_t links = 0;
                    for (auto x : lg.layer(a))
                        for (auto y : lg.layer(b))
                            links += lg.graph().adjacent(x, y);
                    CHECK((links == 0 || links == h.order() * h.order()));
                }
        }
}

TEST_CASE("layers, columns and components") {
    const auto lg = lexicographic(path(3), path(2));
    CHECK(lg.layer(0) == Ids{0, 1});
    CHECK(lg.graph().induced(lg.layer(0)).size() == 1);
    CHECK(lg.column(0) == Ids{0, 2, 4});
    CHECK(lg.graph().induced(lg.column(0)).same_structure(path(3)));
    CHECK_THROWS_AS(lg.layer(3), InputError);
    CHECK_THROWS_AS(lg.column(2), InputError);

    const auto two = lexicographic(path(3), make_graph("path:2+path:2"));
    CHECK(two.h_component_count() == 2);
    CHECK(two.layer_component(1, 1) == Ids{6, 7});
    CHECK(two.graph().label(7).str() == "(path[1],union[3])#2");
}

TEST_CASE("projections") {
    const auto lg = lexicographic(path(3), path(2));
    const Ids one{lg.id(0, 0)};
    CHECK(lg.project(one, LexGraph::Side::G) == Ids{0});
    CHECK(lg.project(one, LexGraph::Side::H) == Ids{0});
    const auto layer = lg.layer(0);
    CHECK(lg.project(layer, LexGraph::Side::G) == Ids{0});
    CHECK(lg.project(layer, LexGraph::Side::H) == Ids{0, 1});
    CHECK(lg.project(Ids{}, LexGraph::Side::G).empty());
    CHECK(lg.project(Ids{}, LexGraph::Side::H).empty());
}

TEST_CASE("lexicographic product distributes over components of G") {
    const auto g = make_graph("path:2+path:3");
    const auto h = cycle(3);
    const auto whole = lexicographic(g, h).graph();
    const auto parts = disjoint_union(lexicographic(path(2), h).graph(), lexicographic(path(3), h).graph());
    CHECK(whole.same_structure(parts));
}

TEST_CASE("lexicographic budget") {
    CHECK_THROWS_AS(lexicographic(path(70), path(70)), BudgetError);
}
