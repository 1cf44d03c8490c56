#ifndef ZF_CONSTRUCTIONS_HPP
#define ZF_CONSTRUCTIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/products.hpp"

namespace zf {

// Output of a constructive witness builder. The set is always replayed
// through the closure before it is returned; `forces` records the outcome
// and `diagnostic` explains a failure.
struct Construction {
    std::vector<VertexId> set;
    bool forces = false;
    std::string diagnostic;

    explicit operator bool() const { return forces; }
};

// Base graph G and attachment graph H recovered from a corona.
Graph corona_base(const CoronaGraph& cg);
Graph corona_attachment(const CoronaGraph& cg);

// B' (forcing basis of G, base ids) plus the image of `h_basis` (ids in H)
// in every copy at every level.
Construction construct_corona_zfs(const CoronaGraph& cg, std::span<const VertexId> g_basis,
                                  std::span<const VertexId> h_basis);

// Edgeless H, depth 1: every copy minus its last vertex.
Construction construct_empty_corona_zfs(const CoronaGraph& cg);

// H with exactly one edge {a, b} and an isolated vertex, depth 1: every copy
// minus b, and the last copy also minus its largest isolated vertex. Size
// n1(n2 - 1) - 1.
Construction construct_single_edge_near_miss(const CoronaGraph& cg);

// A minimum zero forcing set of K1 + H (apex id 0, H vertex j -> j + 1)
// chosen to contain the apex when H has no isolated vertex and to avoid it
// otherwise. Empty `set` with a diagnostic if no such basis exists.
Construction choose_join_basis(const Graph& h, const SolveOptions& opts = {});

// Union over copies of a K1 + H basis (ids as in choose_join_basis), apex
// mapped to the copy's root. Depth 1 only.
Construction construct_join_cover_zfs(const CoronaGraph& cg, std::span<const VertexId> join_basis);
Construction construct_join_cover_zfs(const CoronaGraph& cg, const SolveOptions& opts = {});

// V(G o H) minus (u1, v2^i) for every component i of H; every component
// must have at least two vertices.
Construction construct_lex_upper_zfs(const LexGraph& lg);

// H edgeless with k >= 2 vertices: V(G o H) minus (u, x_k) and (w, x_k) for
// the first edge uw of G.
Construction construct_lex_singletons_zfs(const LexGraph& lg);

// H complete and G not complete: V(G o H) minus (u, v_2) and (w, v_2) for the
// first non-adjacent pair u, w of G.
Construction construct_lex_complete_factor_zfs(const LexGraph& lg);

// A forcing basis of G + K1 (apex id |V(G)|) inside V(G), searched at
// cardinality Z(G + K1).
Construction construct_join_basis_in_g(const Graph& g, const SolveOptions& opts = {});

} // namespace zf

#endif // ZF_CONSTRUCTIONS_HPP
