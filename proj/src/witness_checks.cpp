#include "zf/witness_checks.hpp"

#include "zf/forcing.hpp"

namespace zf {

CoronaWitnessFacts corona_witness_facts(const CoronaGraph& cg, std::span<const VertexId> s) {
    CoronaWitnessFacts f;
    const VertexSet black(cg.graph().order(), s);
    for (const auto* copy : cg.copies_at(cg.depth())) {
        ++f.copies;
        std::vector<VertexId> local;
        for (std::size_t j = 0; j < copy->vertices.size(); ++j)
            if (black.test(copy->vertices[j]))
                local.push_back(static_cast<VertexId>(j));
        if (!local.empty())
            ++f.copies_hit;
        const Graph h = cg.graph().induced(copy->vertices);
        if (is_zero_forcing_set(h, local))
            ++f.copies_forcing;
    }
    return f;
}

LexWitnessFacts lex_witness_facts(const LexGraph& lg, std::span<const VertexId> s,
                                  std::span<const std::size_t> component_z) {
    LexWitnessFacts f;
    const VertexSet black(lg.graph().order(), s);
    const std::size_t k = lg.h_component_count();
    f.layers = lg.g_order();
    f.components = k;
    std::vector<VertexSet> projections(k, VertexSet(lg.g_order()));
    for (VertexId a = 0; a < lg.g_order(); ++a) {
        std::size_t load = 0;
        std::vector<VertexId> layer_local;
        for (VertexId v = 0; v < lg.h_order(); ++v)
            if (black.test(lg.id(a, v))) {
                ++load;
                layer_local.push_back(v);
            }
        for (std::size_t i = 0; i < k; ++i) {
            ++f.layer_parts;
            std::size_t part = 0;
            for (auto v : lg.h_component(static_cast<int>(i)))
                if (black.test(lg.id(a, v)))
                    ++part;
            if (part > 0) {
                ++f.nonempty_parts;
                projections[i].set(a);
            }
            if (part >= component_z[i])
                ++f.large_enough_parts;
        }
        const Graph layer = lg.graph().induced(lg.layer(a));
        if (is_zero_forcing_set(layer, layer_local))
            ++f.forcing_layers;
        f.max_layer_load = std::max(f.max_layer_load, load);
        if (load == lg.h_order())
            ++f.full_layers;
    }
    for (const auto& p : projections)
        if (p.all())
            ++f.full_projections;
    return f;
}

} // namespace zf
