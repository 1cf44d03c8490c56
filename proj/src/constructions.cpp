#include "zf/constructions.hpp"

#include <algorithm>

#include "zf/families.hpp"

namespace zf {

namespace {

Construction finish(const Graph& g, std::vector<VertexId> set, std::string what) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    Construction c;
    c.forces = is_zero_forcing_set(g, set);
    if (!c.forces)
        c.diagnostic = what + ": closure of the " + std::to_string(set.size()) + "-vertex set leaves " +
                       std::to_string(g.order() - closure_set(g, VertexSet(g.order(), set)).count()) +
                       " vertices white";
    c.set = std::move(set);
    return c;
}

Construction failure(std::string why) {
    Construction c;
    c.diagnostic = std::move(why);
    return c;
}

} // namespace

Graph corona_base(const CoronaGraph& cg) {
    auto base = cg.base_vertices();
    return cg.graph().induced(base).without_labels();
}

Graph corona_attachment(const CoronaGraph& cg) {
    if (cg.copies().empty())
        throw InputError("corona of depth 0 has no attachment copies");
    return cg.graph().induced(cg.copies().front().vertices).without_labels();
}

Construction construct_corona_zfs(const CoronaGraph& cg, std::span<const VertexId> g_basis,
                                  std::span<const VertexId> h_basis) {
    if (cg.depth() < 1)
        return failure("corona depth must be >= 1");
    const Graph g = corona_base(cg), h = corona_attachment(cg);
    for (auto v : g_basis)
        if (v >= g.order())
            return failure("G basis vertex out of range");
    for (auto v : h_basis)
        if (v >= h.order())
            return failure("H basis vertex out of range");
    if (!is_zero_forcing_set(g, g_basis))
        return failure("supplied G basis does not force G");
    if (!is_zero_forcing_set(h, h_basis))
        return failure("supplied H basis does not force H");

    std::vector<VertexId> set(g_basis.begin(), g_basis.end());
    for (const auto& copy : cg.copies())
        for (auto j : h_basis)
            set.push_back(copy.vertices[j]);
    return finish(cg.graph(), std::move(set), "corona basis union");
}

Construction construct_empty_corona_zfs(const CoronaGraph& cg) {
    if (cg.depth() != 1)
        return failure("empty-H construction needs depth 1");
    if (cg.attach_order() < 2)
        return failure("empty-H construction needs n2 >= 2");
    if (!is_edgeless(corona_attachment(cg)))
        return failure("attachment graph is not edgeless");
    std::vector<VertexId> set;
    for (const auto& copy : cg.copies())
        set.insert(set.end(), copy.vertices.begin(), copy.vertices.end() - 1);
    return finish(cg.graph(), std::move(set), "empty-H corona set");
}

Construction construct_single_edge_near_miss(const CoronaGraph& cg) {
    if (cg.depth() != 1)
        return failure("near-miss construction needs depth 1");
    const Graph h = corona_attachment(cg);
    if (h.size() != 1)
        return failure("near-miss construction needs H with exactly one edge");
    const Edge e = h.edges().front();
    const auto isolated = isolated_vertices(h);
    if (isolated.empty())
        return failure("near-miss construction needs an isolated vertex in H");
    const VertexId spare = isolated.back();
    std::vector<VertexId> set;
    const auto copies = cg.copies();
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (VertexId j = 0; j < h.order(); ++j) {
            if (j == e.v || (i + 1 == copies.size() && j == spare))
                continue;
            set.push_back(copies[i].vertices[j]);
        }
    return finish(cg.graph(), std::move(set), "single-edge near-miss set");
}

Construction choose_join_basis(const Graph& h, const SolveOptions& opts) {
    const Graph j = join(complete(1), h);
    const auto z = zero_forcing_number(j, opts).value;
    std::vector<VertexId> all(j.order()), copy_side;
    for (VertexId v = 0; v < j.order(); ++v)
        all[v] = v;
    copy_side.assign(all.begin() + 1, all.end());
    const bool with_apex = isolated_vertices(h).empty();
    std::optional<std::vector<VertexId>> found;
    if (with_apex) {
        const VertexId apex = 0;
        found = find_zero_forcing_set(j, all, std::span<const VertexId>(&apex, 1), z, opts);
    } else {
        found = find_zero_forcing_set(j, copy_side, {}, z, opts);
    }
    if (!found)
        return failure(std::string("no minimum basis of K1 + H ") + (with_apex ? "containing" : "avoiding") +
                       " the apex");
    return finish(j, std::move(*found), "K1 + H basis");
}

Construction construct_join_cover_zfs(const CoronaGraph& cg, std::span<const VertexId> join_basis) {
    if (cg.depth() != 1)
        return failure("join-cover construction needs depth 1");
    std::vector<VertexId> set;
    for (const auto& copy : cg.copies())
        for (auto v : join_basis) {
            if (v > cg.attach_order())
                return failure("join basis vertex out of range");
            set.push_back(v == 0 ? copy.root : copy.vertices[v - 1]);
        }
    return finish(cg.graph(), std::move(set), "join-cover set");
}

Construction construct_join_cover_zfs(const CoronaGraph& cg, const SolveOptions& opts) {
    if (cg.depth() != 1)
        return failure("join-cover construction needs depth 1");
    auto basis = choose_join_basis(corona_attachment(cg), opts);
    if (!basis)
        return basis;
    return construct_join_cover_zfs(cg, basis.set);
}

Construction construct_lex_upper_zfs(const LexGraph& lg) {
    for (auto m : lg.h_component_sizes())
        if (m < 2)
            return failure("lexicographic upper construction needs every H component to have >= 2 vertices");
    VertexSet keep = VertexSet::full(lg.graph().order());
    for (std::size_t i = 0; i < lg.h_component_count(); ++i) {
        const auto comp = lg.h_component(static_cast<int>(i));
        keep.reset(lg.id(0, comp[1]));
    }
    return finish(lg.graph(), keep.to_vector(), "lexicographic upper set");
}

Construction construct_lex_singletons_zfs(const LexGraph& lg) {
    const std::size_t k = lg.h_order();
    if (k < 2 || lg.h_component_count() != k)
        return failure("singleton construction needs an edgeless H with >= 2 vertices");
    const Graph g = lg.graph().induced(lg.column(0)).without_labels();
    const auto edges = g.edges();
    if (edges.empty())
        return failure("singleton construction needs an edge in G");
    VertexSet keep = VertexSet::full(lg.graph().order());
    const auto last = static_cast<VertexId>(k - 1);
    keep.reset(lg.id(edges.front().u, last));
    keep.reset(lg.id(edges.front().v, last));
    return finish(lg.graph(), keep.to_vector(), "singleton-component set");
}

Construction construct_lex_complete_factor_zfs(const LexGraph& lg) {
    if (lg.h_order() < 2 || lg.graph().induced(lg.layer(0)).size() != lg.h_order() * (lg.h_order() - 1) / 2)
        return failure("complete-factor construction needs H complete with >= 2 vertices");
    const Graph g = lg.graph().induced(lg.column(0)).without_labels();
    for (VertexId u = 0; u < g.order(); ++u)
        for (VertexId w = u + 1; w < g.order(); ++w)
            if (!g.adjacent(u, w)) {
                VertexSet keep = VertexSet::full(lg.graph().order());
                keep.reset(lg.id(u, 1));
                keep.reset(lg.id(w, 1));
                return finish(lg.graph(), keep.to_vector(), "complete-factor set");
            }
    return failure("complete-factor construction needs a non-complete G");
}

Construction construct_join_basis_in_g(const Graph& g, const SolveOptions& opts) {
    if (g.order() == 0 || !is_connected(g))
        return failure("G must be connected and non-empty");
    const Graph j = join(g, complete(1));
    const auto z = zero_forcing_number(j, opts).value;
    std::vector<VertexId> pool(g.order());
    for (VertexId v = 0; v < g.order(); ++v)
        pool[v] = v;
    auto found = find_zero_forcing_set(j, pool, {}, z, opts);
    if (!found)
        return failure("no forcing basis of G + K1 avoids the apex");
    return finish(j, std::move(*found), "apex-free basis");
}

} // namespace zf
