#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "zf/error.hpp"
#include "zf/families.hpp"
#include "zf/tree_metrics.hpp"

using namespace zf;

namespace {

using Ids = std::vector<VertexId>;

// Two adjacent centers 0 and 1, leaves 2,3 on 0 and 4,5 on 1.
Graph double_star() { return Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

// Center 0 with three legs of length two.
Graph spider222() { return Graph::from_edge_list(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

// Majors 0 and 3 joined through the degree-two vertex 6.
Graph bridged_stars() { return Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 6}, {6, 3}, {3, 4}, {3, 5}}); }

Graph permuted(const Graph& g, std::mt19937& rng) {
    std::vector<VertexId> p(g.order());
    std::iota(p.begin(), p.end(), VertexId{0});
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Edge> e;
    for (const auto& x : g.edges())
        e.push_back({p[x.u], p[x.v]});
    return Graph::from_edge_list(g.order(), e);
}

} // namespace

TEST_CASE("star metrics") {
    const auto m = compute_tree_metrics(star(4));
    CHECK(m.major == Ids{0});
    CHECK(m.terminal_degree(0) == 3);
    CHECK(m.sigma == 3);
    CHECK(m.ex == 1);
    CHECK(m.exterior_degree_two.empty());
    CHECK(m.interior_degree_two.empty());
}

TEST_CASE("path metrics") {
    const auto m = compute_tree_metrics(path(5));
    CHECK(m.major.empty());
    CHECK(m.sigma == 0);
    CHECK(m.ex == 0);
}

TEST_CASE("double star metrics") {
    const auto m = compute_tree_metrics(double_star());
    CHECK(m.sigma == 4);
    CHECK(m.ex == 2);
    CHECK(metric_dimension_tree(double_star()) == 2);
    CHECK(metric_dimension_bruteforce(double_star()) == 2);
    CHECK(zt_hypothesis(double_star()));
}

TEST_CASE("spider metrics") {
    const auto t = spider222();
    const auto m = compute_tree_metrics(t);
    CHECK(m.sigma == 3);
    CHECK(m.ex == 1);
    CHECK(m.exterior_degree_two == Ids{1, 3, 5});
    CHECK(metric_dimension_tree(t) == 2);
    CHECK(metric_dimension_bruteforce(t) == 2);
}

TEST_CASE("interior degree-two vertex") {
    const auto m = compute_tree_metrics(bridged_stars());
    CHECK(m.interior_degree_two == Ids{6});
    CHECK(m.exterior_degree_two.empty());
    CHECK_FALSE(zt_hypothesis(bridged_stars()));
    CHECK(zt_hypothesis(star(4)));
}

TEST_CASE("every leaf of a non-path tree is a terminal of exactly one major vertex") {
    for_each_pruefer_code(7, [](std::span<const int> code) {
        const auto t = tree_from_pruefer(code);
        if (is_path_graph(t))
            return;
        const auto m = compute_tree_metrics(t);
        std::size_t leaves = 0;
        for (VertexId v = 0; v < t.order(); ++v)
            leaves += t.degree(v) == 1;
        CHECK(m.sigma == leaves);
    });
    const auto t = Graph::from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {0, 6}, {0, 7}, {4, 8}, {4, 9}});
    const auto m = compute_tree_metrics(t);
    CHECK(m.major == Ids{0, 2, 4});
    CHECK(m.terminal_degree(0) == 2);
    CHECK(m.terminal_degree(2) == 1);
    CHECK(m.interior_degree_two == Ids{1, 3});
}

TEST_CASE("brute-force metric dimension") {
    CHECK(metric_dimension_bruteforce(path(5)) == 1);
    CHECK(metric_dimension_bruteforce(complete(4)) == 3);
    CHECK(metric_dimension_bruteforce(star(4)) == 2);
    CHECK(metric_dimension_bruteforce(cycle(5)) == 2);
    CHECK(metric_dimension_bruteforce(complete(1)) == 0);
    CHECK_THROWS_AS(metric_dimension_bruteforce(path(11)), BudgetError);
    CHECK(metric_dimension_bruteforce(path(11), 11) == 1);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(compute_tree_metrics(cycle(4)), InputError);
    CHECK_THROWS_AS(zt_hypothesis(empty(2)), InputError);
    CHECK_THROWS_AS(metric_dimension_tree(path(4)), DomainError);
}

TEST_CASE("dimension formula on all small trees") {
    for (std::size_t n = 4; n <= 8; ++n)
        for_each_pruefer_code(n, [](std::span<const int> code) {
            const auto t = tree_from_pruefer(code);
            if (is_path_graph(t))
                return;
            CHECK(metric_dimension_tree(t) == metric_dimension_bruteforce(t));
        });
}

TEST_CASE("metrics are invariant under relabeling") {
    std::mt19937 rng(2024);
    for (std::size_t n = 4; n <= 9; ++n)
        for (int i = 0; i < 40; ++i) {
            std::vector<int> code(n - 2);
            for (auto& c : code)
                c = static_cast<int>(rng() % n);
            const auto t = tree_from_pruefer(code);
            const auto u = permuted(t, rng);
            const auto a = compute_tree_metrics(t), b = compute_tree_metrics(u);
            CHECK(a.sigma == b.sigma);
            CHECK(a.ex == b.ex);
            CHECK(a.major.size() == b.major.size());
            CHECK(a.exterior_degree_two.size() == b.exterior_degree_two.size());
            CHECK(a.interior_degree_two.size() == b.interior_degree_two.size());
            CHECK(zt_hypothesis(a) == zt_hypothesis(b));
        }
}

TEST_CASE("degree-two vertices are partitioned") {
    for_each_pruefer_code(7, [](std::span<const int> code) {
        const auto t = tree_from_pruefer(code);
        const auto m = compute_tree_metrics(t);
        std::size_t deg2 = 0;
        for (VertexId v = 0; v < t.order(); ++v)
            deg2 += t.degree(v) == 2;
        CHECK(m.exterior_degree_two.size() + m.interior_degree_two.size() == deg2);
        std::size_t sum = 0;
        for (auto v : m.major)
            sum += m.terminal_degree(v);
        CHECK(sum == m.sigma);
        CHECK(m.ex <= m.major.size());
    });
}
