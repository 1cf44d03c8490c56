#ifndef ZF_WITNESS_CHECKS_HPP
#define ZF_WITNESS_CHECKS_HPP

#include <span>
#include <vector>

#include "zf/products.hpp"

namespace zf {

// Structural facts about a zero forcing set S of G (.)^k H, evaluated on the
// top-level copies (the copies of H attached in the last corona step).
struct CoronaWitnessFacts {
    std::size_t copies = 0;
    std::size_t copies_hit = 0;     // S meets V_i
    std::size_t copies_forcing = 0; // S cap V_i forces H_i on its own
};

CoronaWitnessFacts corona_witness_facts(const CoronaGraph& cg, std::span<const VertexId> s);

// Layer and projection facts about a zero forcing set S of G o H.
struct LexWitnessFacts {
    std::size_t layer_parts = 0;        // pairs (a, i)
    std::size_t nonempty_parts = 0;     // Z_i(a) nonempty
    std::size_t large_enough_parts = 0; // |Z_i(a)| >= Z(H_i)
    std::size_t layers = 0;
    std::size_t forcing_layers = 0;     // Z(a) forces H(a)
    std::size_t max_layer_load = 0;     // max over a of |S cap H(a)|
    std::size_t full_layers = 0;        // layers entirely inside S
    std::size_t components = 0;
    std::size_t full_projections = 0;   // components i with P_G(Z_i) = V(G)

    bool layer_parts_ok() const { return nonempty_parts == layer_parts && large_enough_parts == layer_parts; }
    bool layers_force() const { return forcing_layers == layers; }
    bool has_full_layer() const { return full_layers > 0; }
    bool projections_full() const { return full_projections == components; }
};

// `component_z[i]` is Z of the i-th component of H.
LexWitnessFacts lex_witness_facts(const LexGraph& lg, std::span<const VertexId> s,
                                  std::span<const std::size_t> component_z);

} // namespace zf

#endif // ZF_WITNESS_CHECKS_HPP
