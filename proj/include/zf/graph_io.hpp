#ifndef ZF_GRAPH_IO_HPP
#define ZF_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "zf/graph.hpp"

namespace zf {

// graph6 restricted to the one-byte order form (n <= 62). Surrounding
// whitespace and an optional ">>graph6<<" header are accepted on input.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge-list text: "n m" then m lines "u v" (0-based); '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// One "id<TAB>label" line per vertex.
std::string emit_label_table(const Graph& g);

} // namespace zf

#endif // ZF_GRAPH_IO_HPP
