#include "zf/tree_metrics.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "zf/families.hpp"

namespace zf {

TreeMetrics compute_tree_metrics(const Graph& t) {
    if (!is_tree(t))
        throw InputError("tree metrics need a tree");
    const std::size_t n = t.order();
    const auto deg = t.degrees();
    const auto dist = distance_matrix(t);

    TreeMetrics m;
    for (VertexId v = 0; v < n; ++v)
        if (deg[v] >= 3)
            m.major.push_back(v);

    // A leaf is terminal for v when v is strictly closer than every other major vertex.
    std::vector<std::pair<VertexId, VertexId>> legs; // (terminal, its major)
    for (VertexId u = 0; u < n; ++u) {
        if (deg[u] != 1)
            continue;
        for (auto v : m.major) {
            bool strict = true;
            for (auto w : m.major)
                if (w != v && dist[u][v] >= dist[u][w])
                    strict = false;
            if (strict) {
                m.terminals[v].push_back(u);
                legs.emplace_back(u, v);
            }
        }
    }
    for (const auto& [v, ts] : m.terminals) {
        m.sigma += ts.size();
        if (!ts.empty())
            ++m.ex;
    }
    for (VertexId x = 0; x < n; ++x) {
        if (deg[x] != 2)
            continue;
        const bool exterior = std::any_of(legs.begin(), legs.end(), [&](const auto& leg) {
            return dist[leg.first][x] + dist[x][leg.second] == dist[leg.first][leg.second];
        });
        (exterior ? m.exterior_degree_two : m.interior_degree_two).push_back(x);
    }
    return m;
}

std::size_t metric_dimension_tree(const Graph& t) {
    if (is_path_graph(t))
        throw DomainError("the sigma - ex formula does not apply to paths");
    const auto m = compute_tree_metrics(t);
    return m.sigma - m.ex;
}

std::size_t metric_dimension_bruteforce(const Graph& g, std::size_t cap) {
    const std::size_t n = g.order();
    if (n == 0)
        throw InputError("metric dimension of the empty graph");
    if (n > cap)
        throw BudgetError("order " + std::to_string(n) + " exceeds metric-dimension cap " + std::to_string(cap));
    if (n > 64 || !is_connected(g))
        throw InputError("metric dimension needs a connected graph with at most 64 vertices");
    if (n == 1)
        return 0;
    const auto dist = distance_matrix(g);
    // Six bits per landmark distance; ten landmarks fit in a word.
    constexpr std::size_t kBits = 6;
    const std::size_t max_landmarks = 64 / kBits;

    std::vector<std::uint64_t> code(n);
    std::vector<int> combo;
    for (std::size_t s = 1; s < n; ++s) {
        if (s > max_landmarks)
            throw BudgetError("too many landmarks for packed distance vectors");
        combo.resize(s);
        for (std::size_t i = 0; i < s; ++i)
            combo[i] = static_cast<int>(i);
        while (true) {
            for (std::size_t x = 0; x < n; ++x) {
                std::uint64_t c = 0;
                for (std::size_t i = 0; i < s; ++i)
                    c = (c << kBits) | static_cast<std::uint64_t>(dist[x][static_cast<std::size_t>(combo[i])]);
                code[x] = c;
            }
            std::sort(code.begin(), code.end());
            if (std::adjacent_find(code.begin(), code.end()) == code.end())
                return s;
            std::size_t i = s;
            while (i > 0 && combo[i - 1] == static_cast<int>(n - s + i - 1))
                --i;
            if (i == 0)
                break;
            ++combo[i - 1];
            for (std::size_t j = i; j < s; ++j)
                combo[j] = combo[j - 1] + 1;
        }
    }
    return n - 1;
}

bool zt_hypothesis(const TreeMetrics& m) {
    if (!m.interior_degree_two.empty())
        return false;
    return std::all_of(m.major.begin(), m.major.end(), [&](VertexId v) { return m.terminal_degree(v) >= 2; });
}

bool zt_hypothesis(const Graph& t) { return zt_hypothesis(compute_tree_metrics(t)); }

} // namespace zf
