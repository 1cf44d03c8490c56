#ifndef ZF_PRODUCTS_HPP
#define ZF_PRODUCTS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

inline constexpr std::size_t kDefaultConstructionCap = 4096;

// One copy of H attached to a root vertex at corona level `level`.
struct CoronaCopy {
    int level = 1;
    VertexId root = 0;
    int base_index = 1;             // i, 1-based
    std::vector<int> root_address;  // (j2, ..., jl), length level-1
    std::vector<VertexId> vertices; // in H's vertex order
};

// G (.)^k H with provenance. Layout: the vertices of G (.)^{k-1} H keep their
// ids, then the level-k copies follow in root-id order, each contiguous.
class CoronaGraph {
public:
    const Graph& graph() const { return graph_; }
    std::size_t base_order() const { return base_order_; }
    std::size_t attach_order() const { return attach_order_; }
    int depth() const { return depth_; }

    // 0 for base vertices, otherwise the level that introduced the vertex.
    int depth_of(VertexId v) const { return depth_of_[v]; }
    std::optional<VertexId> root_of(VertexId v) const;
    // Position of v inside its copy (0-based), or -1 for base vertices.
    int within_copy_index(VertexId v) const { return within_[v]; }
    const CoronaCopy& copy_containing(VertexId v) const;

    std::span<const CoronaCopy> copies() const { return copies_; }
    std::vector<const CoronaCopy*> copies_at(int level) const;
    // Paper-style address: base index i (1-based) and (j2..jl), 1-based,
    // each in 1..n2+1. Throws InputError on a bad address.
    const CoronaCopy& copy(int level, int base_index, std::span<const int> root_address = {}) const;
    // The copy attached to `root` at `level`.
    const CoronaCopy& copy_of_root(VertexId root, int level) const;

    std::vector<VertexId> base_vertices() const;
    // Every vertex that is not a base vertex.
    std::vector<VertexId> copy_vertices() const;

private:
    friend CoronaGraph iterated_corona(const Graph&, const Graph&, int, std::size_t);

    Graph graph_;
    std::size_t base_order_ = 0;
    std::size_t attach_order_ = 0;
    int depth_ = 0;
    std::vector<int> depth_of_;
    std::vector<int> within_;
    std::vector<int> copy_index_of_; // -1 for base vertices
    std::vector<CoronaCopy> copies_;
    std::vector<std::vector<int>> root_copies_; // root -> copy index per level (level - depth_of(root) - 1)
};

CoronaGraph corona(const Graph& g, const Graph& h, std::size_t cap = kDefaultConstructionCap);
CoronaGraph iterated_corona(const Graph& g, const Graph& h, int k, std::size_t cap = kDefaultConstructionCap);

// n1 * (n2 + 1)^k, saturating at SIZE_MAX.
std::size_t corona_order(std::size_t n1, std::size_t n2, int k);

// G o H with row-major ids: (a, v) -> a * |V(H)| + v.
class LexGraph {
public:
    const Graph& graph() const { return graph_; }
    std::size_t g_order() const { return g_order_; }
    std::size_t h_order() const { return h_order_; }
    std::size_t h_component_count() const { return component_sizes_.size(); }
    std::span<const std::size_t> h_component_sizes() const { return component_sizes_; }
    // 0-based component of an H vertex.
    int h_component_of(VertexId v) const { return h_component_[v]; }
    std::span<const VertexId> h_component(int i) const { return components_[static_cast<std::size_t>(i)]; }

    VertexId id(VertexId a, VertexId v) const { return static_cast<VertexId>(a * h_order_ + v); }
    VertexId g_part(VertexId x) const { return static_cast<VertexId>(x / h_order_); }
    VertexId h_part(VertexId x) const { return static_cast<VertexId>(x % h_order_); }

    // H(a); throws InputError for a bad vertex.
    std::vector<VertexId> layer(VertexId a) const;
    // H_i(a): the part of layer H(a) over component i (0-based).
    std::vector<VertexId> layer_component(VertexId a, int i) const;
    // G(v).
    std::vector<VertexId> column(VertexId v) const;

    enum class Side { G, H };
    std::vector<VertexId> project(std::span<const VertexId> s, Side side) const;

private:
    friend LexGraph lexicographic(const Graph&, const Graph&, std::size_t);

    Graph graph_;
    std::size_t g_order_ = 0;
    std::size_t h_order_ = 0;
    std::vector<int> h_component_;
    std::vector<std::vector<VertexId>> components_;
    std::vector<std::size_t> component_sizes_;
};

LexGraph lexicographic(const Graph& g, const Graph& h, std::size_t cap = kDefaultConstructionCap);

} // namespace zf

#endif // ZF_PRODUCTS_HPP
