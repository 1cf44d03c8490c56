#ifndef ZF_FAMILIES_HPP
#define ZF_FAMILIES_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph empty(std::size_t n);
// K_{1,n-1} on n vertices, center 0.
Graph star(std::size_t n);
// K_1 + C_n; hub is vertex 0.
Graph wheel(std::size_t n);
// K_1 + P_n; hub is vertex 0.
Graph fan(std::size_t n);
Graph tree_from_pruefer(std::span<const int> code);

// A named family instance, written "name:p1,p2,..." (e.g. "path:5",
// "pruefer:0,0", "g6:Bw"). Parts joined by '+' denote a disjoint union.
struct FamilySpec {
    std::string name;
    std::vector<int> params;
    std::string code;               // graph6 payload for "g6"
    std::vector<FamilySpec> parts;  // non-empty for "union"

    std::string str() const;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec parse_family_spec(std::string_view text);
Graph make_graph(const FamilySpec& spec);
inline Graph make_graph(std::string_view text) { return make_graph(parse_family_spec(text)); }

// Visits every Pruefer code of length n-2 over {0..n-1} in lexicographic order.
void for_each_pruefer_code(std::size_t n, const std::function<void(std::span<const int>)>& visit);

// Visits every labeled connected graph on n vertices (edge-subset
// enumeration over the upper triangle, filtered to connected). n <= 8.
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);
bool is_complete_graph(const Graph& g);
bool is_edgeless(const Graph& g);

// Canonical string of a tree's unlabeled shape (center-rooted AHU code);
// equal iff the trees are isomorphic.
std::string tree_shape_key(const Graph& tree);

} // namespace zf

#endif // ZF_FAMILIES_HPP
