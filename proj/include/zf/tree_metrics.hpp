#ifndef ZF_TREE_METRICS_HPP
#define ZF_TREE_METRICS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

inline constexpr std::size_t kDefaultDimensionCap = 10;

struct TreeMetrics {
    std::vector<VertexId> major;                          // degree >= 3
    std::map<VertexId, std::vector<VertexId>> terminals;  // major -> its terminal vertices
    std::size_t sigma = 0;                                // sum of terminal degrees
    std::size_t ex = 0;                                   // exterior major vertices
    std::vector<VertexId> exterior_degree_two;
    std::vector<VertexId> interior_degree_two;

    std::size_t terminal_degree(VertexId v) const {
        auto it = terminals.find(v);
        return it == terminals.end() ? 0 : it->second.size();
    }
};

// Throws InputError unless `t` is a tree.
TreeMetrics compute_tree_metrics(const Graph& t);

// sigma(T) - ex(T); throws DomainError for paths.
std::size_t metric_dimension_tree(const Graph& t);

// Smallest resolving set size by ascending-cardinality subset search over
// BFS distance vectors. Requires a connected graph with order <= cap.
std::size_t metric_dimension_bruteforce(const Graph& g, std::size_t cap = kDefaultDimensionCap);

// No interior degree-two vertices and every major vertex has ter >= 2.
bool zt_hypothesis(const Graph& t);
bool zt_hypothesis(const TreeMetrics& m);

} // namespace zf

#endif // ZF_TREE_METRICS_HPP
