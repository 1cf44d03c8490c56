#ifndef ZF_GRAPH_HPP
#define ZF_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zf/error.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

class VertexLabel;
using LabelPtr = std::shared_ptr<const VertexLabel>;

struct AtomLabel {
    std::string family;
    int index = 0;
};

// A vertex of an iterated corona. `base_index` is the 1-based index i of the
// base vertex v_i whose family the vertex belongs to; `subscript` holds
// (j1, j2, ..., jl), empty for base vertices.
struct CoronaLabel {
    LabelPtr base;
    int base_index = 0;
    std::vector<int> subscript;
};

// (a, v) in a lexicographic product; `h_component` is 1-based.
struct PairLabel {
    LabelPtr g;
    LabelPtr h;
    int h_component = 1;
};

// Origin side (0 = left, 1 = right) of a join or disjoint union.
struct SideLabel {
    int side = 0;
    LabelPtr inner;
};

class VertexLabel {
public:
    using Variant = std::variant<AtomLabel, CoronaLabel, PairLabel, SideLabel>;

    VertexLabel() : value_(AtomLabel{"v", 0}) {}
    VertexLabel(Variant v) : value_(std::move(v)) {}

    static VertexLabel atom(std::string family, int index) {
        return VertexLabel(AtomLabel{std::move(family), index});
    }

    const Variant& value() const { return value_; }
    template <class T>
    const T* as() const {
        return std::get_if<T>(&value_);
    }

    // Injective text rendering; used for the label sidecar and distinctness.
    std::string str() const;

    friend bool operator==(const VertexLabel& a, const VertexLabel& b) { return a.str() == b.str(); }

private:
    Variant value_;
};

inline LabelPtr share(VertexLabel l) { return std::make_shared<const VertexLabel>(std::move(l)); }

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph with per-vertex bitset adjacency.
class Graph {
public:
    Graph() = default;

    // Throws InputError on out-of-range ids or loops. Duplicate edges collapse.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
    static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    // Adjacency rows must already be symmetric and irreflexive.
    static Graph from_adjacency(std::vector<VertexSet> rows, std::vector<VertexLabel> labels = {});

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edge_count_; }

    bool adjacent(VertexId u, VertexId v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(VertexId v) const { return adj_[v]; }
    std::size_t degree(VertexId v) const { return adj_[v].count(); }
    std::vector<std::size_t> degrees() const;
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    // Default Atom("v", v) when the graph carries no labels.
    VertexLabel label(VertexId v) const;
    std::span<const VertexLabel> labels() const { return labels_; }
    Graph with_labels(std::vector<VertexLabel> labels) const;
    Graph without_labels() const;

    // Subgraph induced by `vertices`, renumbered in the given order.
    Graph induced(std::span<const VertexId> vertices) const;

    // Adjacency as one word per vertex; requires order() <= 64.
    std::vector<std::uint64_t> masks() const;

    // Structural equality: same order and adjacency; labels are ignored.
    bool same_structure(const Graph& other) const { return adj_ == other.adj_; }

    // Symmetry, irreflexivity and label distinctness.
    bool check_invariants() const;

private:
    std::vector<VertexSet> adj_;
    std::vector<VertexLabel> labels_;
    std::size_t edge_count_ = 0;
};

// Blocks of vertex ids, each sorted, blocks ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<VertexId> isolated_vertices(const Graph& g);

// Disjoint union plus every cross edge; g's vertices come first.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// All-pairs BFS distances; unreachable pairs hold -1.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

} // namespace zf

#endif // ZF_GRAPH_HPP
