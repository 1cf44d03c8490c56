#ifndef ZF_FORCING_HPP
#define ZF_FORCING_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

inline constexpr std::size_t kDefaultExactCap = 20;

struct Force {
    VertexId forcer = 0;
    VertexId forced = 0;
    friend bool operator==(const Force&, const Force&) = default;
};

// The forcing chain record of one closure run.
struct ForceTrace {
    std::vector<VertexId> initial;
    std::vector<Force> forces;
    std::vector<VertexId> final_set;

    bool covers(std::size_t order) const { return final_set.size() == order; }
};

// Color-change closure with the deterministic schedule: at every step the
// lowest-id black vertex with exactly one white neighbor forces it.
ForceTrace closure(const Graph& g, std::span<const VertexId> initial);
// Final black set only.
VertexSet closure_set(const Graph& g, const VertexSet& initial);
bool is_zero_forcing_set(const Graph& g, std::span<const VertexId> s);

// Word-level closure for order <= 64; adj[v] is v's neighbor mask.
std::uint64_t closure_mask(std::span<const std::uint64_t> adj, std::uint64_t black);

struct TraceCheck {
    bool ok = false;
    // Index of the first illegal force, or forces.size() when the final
    // set disagrees with the replay.
    std::optional<std::size_t> first_bad_step;
};

// Replays `t` on `g`: every force must be legal at its time, and the
// recorded final set must equal initial plus the forced vertices.
TraceCheck verify_trace(const Graph& g, const ForceTrace& t);

struct SolveOptions {
    std::size_t cap = kDefaultExactCap;
    // 0 = OpenMP default, 1 = serial.
    int threads = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ZfsResult {
    std::size_t value = 0;
    std::vector<VertexId> witness;
    ForceTrace trace;
    // Candidate sets examined up to and including the witness, counted in
    // enumeration order (identical for serial and parallel runs).
    std::uint64_t explored = 0;
};

class Timeout : public BudgetError {
public:
    using BudgetError::BudgetError;
};

// Exact Z(G). Ascending cardinality, lexicographic subsets; the witness is
// the lexicographically least minimum zero forcing set.
ZfsResult zero_forcing_number(const Graph& g, const SolveOptions& opts = {});
// Single-threaded reference of the same search.
ZfsResult zero_forcing_number_serial(const Graph& g, const SolveOptions& opts = {});

// Minimum over subsets of `pool`; nullopt when the whole pool does not force.
std::optional<ZfsResult> zero_forcing_number_restricted(const Graph& g, std::span<const VertexId> pool,
                                                        const SolveOptions& opts = {});

// Least-lexicographic zero forcing set of size `size` that contains every
// vertex of `required` and otherwise uses only `pool`.
std::optional<std::vector<VertexId>> find_zero_forcing_set(const Graph& g, std::span<const VertexId> pool,
                                                           std::span<const VertexId> required, std::size_t size,
                                                           const SolveOptions& opts = {});

// Every zero forcing set of exactly `size` vertices, lexicographic order.
std::vector<std::vector<VertexId>> all_zero_forcing_sets_of_size(const Graph& g, std::size_t size,
                                                                 const SolveOptions& opts = {});

std::string trace_to_json(const ForceTrace& t);

} // namespace zf

#endif // ZF_FORCING_HPP
