#ifndef ZF_CLAIMS_HPP
#define ZF_CLAIMS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/grid.hpp"
#include "zf/products.hpp"
#include "zf/tree_metrics.hpp"

namespace zf {

enum class Status { Equal, WithinBound, Sharp, Violation, WitnessOnly, SkippedBudget, Infeasible };
enum class Relation { Eq, Le, Ge, Between, Iff };
enum class ClaimKind { Equality, UpperBound, LowerBound, Iff, Property };

std::string_view to_string(Status s);
std::string_view to_string(Relation r);
std::string_view to_string(ClaimKind k);

struct Budget {
    std::size_t exact_cap = kDefaultExactCap;
    std::size_t construct_cap = kDefaultConstructionCap;
    std::size_t dimension_cap = kDefaultDimensionCap;
    // Instances up to this order also have every minimum witness checked.
    std::size_t enumerate_all_cap = 14;
    double time_limit_s = 30.0;
    // Passed to the exact solver; 0 = OpenMP default.
    int solver_threads = 0;
    // Fill elapsed_ms; off by default so reports are byte-reproducible.
    bool record_timing = false;
};

struct EvaluationRecord {
    std::string id;
    std::string params;
    std::optional<long long> lhs;
    std::optional<long long> rhs;
    std::optional<long long> rhs_upper; // Relation::Between only
    Relation relation = Relation::Eq;
    Status status = Status::SkippedBudget;
    std::vector<VertexId> oracle_witness;
    std::optional<std::vector<VertexId>> constructive_witness;
    std::map<std::string, long long> extra;
    std::string note;
    double elapsed_ms = 0;
};

// What an evaluator reports before the status is derived.
struct Outcome {
    Relation relation = Relation::Eq;
    std::optional<long long> lhs;
    std::optional<long long> rhs;
    std::optional<long long> rhs_upper;
    std::vector<VertexId> oracle_witness;
    std::optional<std::vector<VertexId>> constructive_witness;
    std::map<std::string, long long> extra;
    std::string note;
    bool witness_only = false;
    bool skipped = false;
    bool infeasible = false;
};

// Per-evaluation helpers handed to every evaluator.
class EvalContext {
public:
    explicit EvalContext(const Budget& budget);

    const Budget& budget() const { return budget_; }
    const SolveOptions& solve_options() const { return opts_; }
    bool exact_fits(const Graph& g) const { return g.order() <= budget_.exact_cap; }

    ZfsResult zf(const Graph& g) const { return zero_forcing_number(g, opts_); }
    std::size_t z(const Graph& g) const { return zf(g).value; }
    std::optional<ZfsResult> zf_restricted(const Graph& g, std::span<const VertexId> pool) const {
        return zero_forcing_number_restricted(g, pool, opts_);
    }

private:
    Budget budget_;
    SolveOptions opts_;
};

struct ClaimSpec {
    std::string id;
    ClaimKind kind = ClaimKind::Equality;
    std::string statement;
    std::vector<std::string> slots;
    Grid default_grid;
    // Empty string when the instance lies in the claim's domain, else why not.
    std::function<std::string(const Instance&)> domain;
    std::function<Outcome(const Instance&, const EvalContext&)> evaluate;
    // Added to rhs (and rhs_upper) before the relation check; used to
    // self-test the harness with a deliberately wrong formula.
    long long rhs_offset = 0;
};

class Registry {
public:
    void add(ClaimSpec spec);
    const ClaimSpec* find(std::string_view id) const;
    ClaimSpec& at(std::string_view id);
    std::vector<std::string> ids() const;
    std::span<const ClaimSpec> claims() const { return claims_; }

    // C1..C26.
    static Registry standard();

private:
    std::vector<ClaimSpec> claims_;
};

// Derives the status from an outcome (after applying the claim's rhs offset).
Status derive_status(const Outcome& o);

// Throws InputError for an unknown id or an out-of-domain instance. Budget
// exhaustion is reported through the record status.
EvaluationRecord evaluate_claim(const Registry& reg, std::string_view id, const Instance& instance,
                                const Budget& budget = {});

struct GridSummary {
    std::map<Status, std::size_t> by_status;
    std::size_t out_of_domain = 0;
    std::size_t total() const;
};

struct GridRun {
    std::vector<EvaluationRecord> records;
    GridSummary summary;
};

// Instantiates each claim over `grid` (slots the grid leaves out fall back
// to the claim's default grid) in registry order, then grid order. An empty
// grid yields no records. Out-of-domain points are counted, not evaluated.
// `jobs` > 1 evaluates points concurrently; the record order is unaffected.
GridRun run_grid(const Registry& reg, std::span<const std::string> ids, const Grid& grid, const Budget& budget = {},
                 int jobs = 1);
// Same, over every claim's default grid.
GridRun run_default_grid(const Registry& reg, std::span<const std::string> ids, const Budget& budget = {},
                         int jobs = 1);

// 0 = no violation, 1 = violation, 3 = every record budget-skipped.
int exit_code_for(const GridRun& run);

} // namespace zf

#endif // ZF_CLAIMS_HPP
