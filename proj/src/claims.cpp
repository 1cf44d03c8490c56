#include "zf/claims.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zf/constructions.hpp"
#include "zf/error.hpp"
#include "zf/families.hpp"
#include "zf/witness_checks.hpp"

namespace zf {

std::string_view to_string(Status s) {
    switch (s) {
    case Status::Equal: return "EQUAL";
    case Status::WithinBound: return "WITHIN_BOUND";
    case Status::Sharp: return "SHARP";
    case Status::Violation: return "VIOLATION";
    case Status::WitnessOnly: return "WITNESS_ONLY";
    case Status::SkippedBudget: return "SKIPPED_BUDGET";
    case Status::Infeasible: return "INFEASIBLE";
    }
    return "?";
}

std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::Eq: return "=";
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
    case Relation::Between: return "between";
    case Relation::Iff: return "iff";
    }
    return "?";
}

std::string_view to_string(ClaimKind k) {
    switch (k) {
    case ClaimKind::Equality: return "equality";
    case ClaimKind::UpperBound: return "upper-bound";
    case ClaimKind::LowerBound: return "lower-bound";
    case ClaimKind::Iff: return "iff";
    case ClaimKind::Property: return "property";
    }
    return "?";
}

EvalContext::EvalContext(const Budget& budget) : budget_(budget) {
    opts_.cap = budget.exact_cap;
    opts_.threads = budget.solver_threads;
    if (budget.time_limit_s > 0)
        opts_.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(budget.time_limit_s));
}

namespace {

using LL = long long;

LL ipow(LL b, int e) {
    LL r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// n1 (n2 + 1)^(k - 1)
LL level_factor(std::size_t n1, std::size_t n2, int k) {
    return static_cast<LL>(n1) * ipow(static_cast<LL>(n2) + 1, k - 1);
}

LL as_ll(std::size_t v) { return static_cast<LL>(v); }

std::vector<VertexId> iota_ids(std::size_t n) {
    std::vector<VertexId> v(n);
    std::iota(v.begin(), v.end(), VertexId{0});
    return v;
}

// Every minimum witness when the graph is small enough, else the oracle's.
std::vector<std::vector<VertexId>> minimum_witnesses(const Graph& g, const ZfsResult& r, const EvalContext& ctx) {
    if (g.order() <= ctx.budget().enumerate_all_cap)
        return all_zero_forcing_sets_of_size(g, r.value, ctx.solve_options());
    return {r.witness};
}

std::size_t component_count_nontrivial(const Graph& h) {
    std::size_t a = 0;
    for (const auto& c : connected_components(h))
        if (c.size() > 1)
            ++a;
    return a;
}

bool components_at_least_two(const Graph& h) {
    for (const auto& c : connected_components(h))
        if (c.size() < 2)
            return false;
    return true;
}

std::vector<std::size_t> component_z(const Graph& h, const EvalContext& ctx) {
    std::vector<std::size_t> z;
    for (const auto& c : connected_components(h))
        z.push_back(ctx.z(h.induced(c)));
    return z;
}

LL sum_z_nontrivial(const Graph& h, const EvalContext& ctx) {
    LL s = 0;
    for (const auto& c : connected_components(h))
        if (c.size() > 1)
            s += as_ll(ctx.z(h.induced(c)));
    return s;
}

Graph graph_of(const Instance& in, std::string_view slot) { return make_graph(in.graph(slot)); }

std::string need(bool ok, const char* why) { return ok ? std::string() : std::string(why); }

Grid grid_of(std::string_view text) { return parse_grid(text); }

constexpr std::string_view kG = "G=path:2..4,cycle:3..5,complete:2..4,star:3..4";
constexpr std::string_view kH = "H=path:2..3,complete:2..3,cycle:3,empty:2..3";
constexpr std::string_view kHDisconnected = "H=empty:2..3,path:2+empty:1,path:2+empty:2,path:2+path:2,path:3+empty:1";
constexpr std::string_view kHLex = "H=path:2..3,complete:2..3,cycle:3,path:2+path:2";
constexpr std::string_view kHConnected = "H=path:2..3,complete:2..3,cycle:3";

std::string cat(std::initializer_list<std::string_view> parts) {
    std::string s;
    for (auto p : parts) {
        if (!s.empty())
            s += ';';
        s += p;
    }
    return s;
}

// ---- corona claims -------------------------------------------------------

std::string domain_corona_connected(const Instance& in) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    if (in.integer("k") < 1)
        return "k must be >= 1";
    if (!is_connected(g) || !is_connected(h))
        return "G and H must be connected";
    return {};
}

Outcome eval_c1(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G");
    const auto r = ctx.zf(g);
    const std::size_t n = g.order();
    Outcome o;
    o.relation = Relation::Iff;
    o.lhs = (r.value == 1 ? 1 : 0) | (r.value == n - 1 ? 2 : 0);
    o.rhs = (is_path_graph(g) ? 1 : 0) | (is_complete_graph(g) ? 2 : 0);
    o.oracle_witness = r.witness;
    o.extra = {{"Z", as_ll(r.value)}, {"n", as_ll(n)}};
    return o;
}

Outcome eval_c2(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    const CoronaGraph cg = corona(g, h, ctx.budget().construct_cap);
    const auto r = ctx.zf(cg.graph());
    const bool h_connected = is_connected(h);
    LL ok = 0, checked = 0;
    for (const auto& s : minimum_witnesses(cg.graph(), r, ctx)) {
        const auto f = corona_witness_facts(cg, s);
        ++checked;
        if (f.copies_hit == f.copies && (!h_connected || f.copies_forcing == f.copies))
            ++ok;
    }
    Outcome o;
    o.lhs = ok;
    o.rhs = checked;
    o.oracle_witness = r.witness;
    o.extra = {{"Z", as_ll(r.value)}, {"witnesses", checked}, {"h_connected", h_connected ? 1 : 0}};
    return o;
}

Outcome eval_c3(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    const int k = static_cast<int>(in.integer("k"));
    const CoronaGraph cg = iterated_corona(g, h, k, ctx.budget().construct_cap);
    const auto zg = ctx.zf(g);
    const auto zh = ctx.zf(h);
    Outcome o;
    auto built = construct_corona_zfs(cg, zg.witness, zh.witness);
    if (built)
        o.constructive_witness = built.set;
    else
        o.note = built.diagnostic;
    o.extra = {{"Z_G", as_ll(zg.value)}, {"Z_H", as_ll(zh.value)}};
    if (!ctx.exact_fits(cg.graph())) {
        LL predicted = as_ll(zg.value);
        for (int l = 1; l <= k; ++l)
            predicted += level_factor(g.order(), h.order(), l) * as_ll(zh.value);
        o.lhs = as_ll(built.set.size());
        o.rhs = predicted;
        o.witness_only = built.forces;
        o.skipped = !built.forces;
        return o;
    }
    const auto r = ctx.zf(cg.graph());
    const auto prev = k == 1 ? zg.value : ctx.z(iterated_corona(g, h, k - 1, ctx.budget().construct_cap).graph());
    o.lhs = as_ll(r.value);
    o.rhs = as_ll(prev) + level_factor(g.order(), h.order(), k) * as_ll(zh.value);
    o.oracle_witness = r.witness;
    o.extra["Z_prev"] = as_ll(prev);
    return o;
}

// Iff between "Z(G.^kH) - Z(G.^{k-1}H) equals factor * per_copy" and `holds`.
Outcome corona_difference_iff(const Instance& in, const EvalContext& ctx, LL per_copy, bool holds) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    const int k = static_cast<int>(in.integer("k"));
    const CoronaGraph cg = iterated_corona(g, h, k, ctx.budget().construct_cap);
    if (!ctx.exact_fits(cg.graph()))
        throw BudgetError("corona of order " + std::to_string(cg.graph().order()) + " exceeds the exact cap");
    const auto r = ctx.zf(cg.graph());
    const auto prev = ctx.z(iterated_corona(g, h, k - 1, ctx.budget().construct_cap).graph());
    const LL diff = as_ll(r.value) - as_ll(prev);
    const LL formula = level_factor(g.order(), h.order(), k) * per_copy;
    Outcome o;
    o.relation = Relation::Iff;
    o.lhs = diff == formula ? 1 : 0;
    o.rhs = holds ? 1 : 0;
    o.oracle_witness = r.witness;
    o.extra = {{"Z", as_ll(r.value)}, {"Z_prev", as_ll(prev)}, {"difference", diff}, {"formula", formula}};
    return o;
}

Outcome eval_c4(const Instance& in, const EvalContext& ctx) {
    const Graph h = graph_of(in, "H");
    return corona_difference_iff(in, ctx, 1, is_path_graph(h));
}

Outcome eval_c5(const Instance& in, const EvalContext& ctx) {
    const Graph h = graph_of(in, "H");
    return corona_difference_iff(in, ctx, as_ll(h.order()) - 1, is_complete_graph(h));
}

Outcome single_hub_corona(const Graph& rim, LL expected, const EvalContext& ctx) {
    const CoronaGraph cg = corona(complete(1), rim, ctx.budget().construct_cap);
    const auto r = ctx.zf(cg.graph());
    Outcome o;
    o.lhs = as_ll(r.value);
    o.rhs = expected;
    o.oracle_witness = r.witness;
    return o;
}

Outcome eval_c6(const Instance& in, const EvalContext& ctx) {
    return single_hub_corona(cycle(static_cast<std::size_t>(in.integer("n"))), 3, ctx);
}

Outcome eval_c7(const Instance& in, const EvalContext& ctx) {
    return single_hub_corona(path(static_cast<std::size_t>(in.integer("n"))), 2, ctx);
}

std::string domain_c8(const Instance& in) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    if (in.integer("k") < 1)
        return "k must be >= 1";
    if (!is_connected(g) || g.order() < 2)
        return "G must be connected with >= 2 vertices";
    return need(h.order() >= 2, "H must have >= 2 vertices");
}

Outcome eval_c8(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    const int k = static_cast<int>(in.integer("k"));
    const CoronaGraph cg = iterated_corona(g, h, k, ctx.budget().construct_cap);
    const auto zj = ctx.z(join(complete(1), h));
    Outcome o;
    o.relation = Relation::Le;
    o.rhs = level_factor(g.order(), h.order(), k) * as_ll(zj);
    o.extra = {{"Z_join", as_ll(zj)}};
    std::optional<Construction> built;
    if (k == 1) {
        built = construct_join_cover_zfs(cg, ctx.solve_options());
        if (*built)
            o.constructive_witness = built->set;
        else
            o.note = built->diagnostic;
    }
    if (!ctx.exact_fits(cg.graph())) {
        if (!built || !*built)
            throw BudgetError("corona of order " + std::to_string(cg.graph().order()) + " exceeds the exact cap");
        o.lhs = as_ll(built->set.size());
        o.witness_only = true;
        return o;
    }
    const auto r = ctx.zf(cg.graph());
    o.lhs = as_ll(r.value);
    o.oracle_witness = r.witness;
    return o;
}

std::string domain_c9(const Instance& in) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    if (in.integer("k") < 1)
        return "k must be >= 1";
    if (!is_connected(g) || g.order() < 2)
        return "G must be connected with >= 2 vertices";
    return need(h.order() >= 2 && !is_connected(h), "H must be disconnected with >= 2 vertices");
}

Outcome eval_c9(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    const int k = static_cast<int>(in.integer("k"));
    const CoronaGraph cg = iterated_corona(g, h, k, ctx.budget().construct_cap);
    const LL formula = level_factor(g.order(), h.order(), k) * (as_ll(h.order()) - 1);
    Outcome o;
    o.relation = Relation::Iff;
    o.rhs = is_edgeless(h) ? 1 : 0;
    if (k == 1 && is_edgeless(h)) {
        auto built = construct_empty_corona_zfs(cg);
        if (built)
            o.constructive_witness = built.set;
        else
            o.note = built.diagnostic;
    } else if (k == 1 && h.size() == 1 && !isolated_vertices(h).empty()) {
        auto near = construct_single_edge_near_miss(cg);
        o.extra["near_miss_size"] = as_ll(near.set.size());
        o.extra["near_miss_forces"] = near.forces ? 1 : 0;
        if (near)
            o.constructive_witness = near.set;
        else
            o.note = near.diagnostic;
    }
    if (!ctx.exact_fits(cg.graph()))
        throw BudgetError("corona of order " + std::to_string(cg.graph().order()) + " exceeds the exact cap");
    const auto r = ctx.zf(cg.graph());
    const auto pool = cg.copy_vertices();
    const auto restricted = ctx.zf_restricted(cg.graph(), pool);
    o.lhs = as_ll(r.value) == formula ? 1 : 0;
    o.oracle_witness = r.witness;
    o.extra["Z"] = as_ll(r.value);
    o.extra["Z_restricted"] = restricted ? as_ll(restricted->value) : -1;
    o.extra["formula"] = formula;
    return o;
}

// ---- tree claims ---------------------------------------------------------

std::string domain_non_path_tree(const Instance& in) {
    const Graph t = graph_of(in, "T");
    if (!is_tree(t))
        return "T must be a tree";
    return need(!is_path_graph(t), "T must not be a path");
}

Outcome eval_c10(const Instance& in, const EvalContext& ctx) {
    const Graph t = graph_of(in, "T");
    const auto m = compute_tree_metrics(t);
    Outcome o;
    o.lhs = as_ll(metric_dimension_bruteforce(t, ctx.budget().dimension_cap));
    o.rhs = as_ll(m.sigma) - as_ll(m.ex);
    o.extra = {{"sigma", as_ll(m.sigma)}, {"ex", as_ll(m.ex)}};
    return o;
}

Outcome eval_c11(const Instance& in, const EvalContext& ctx) {
    const Graph t = graph_of(in, "T");
    const auto m = compute_tree_metrics(t);
    const auto dim = metric_dimension_bruteforce(t, ctx.budget().dimension_cap);
    const auto r = ctx.zf(t);
    Outcome o;
    o.relation = Relation::Iff;
    o.lhs = r.value == dim ? 1 : 0;
    o.rhs = zt_hypothesis(m) ? 1 : 0;
    o.oracle_witness = r.witness;
    o.extra = {{"Z", as_ll(r.value)},
               {"dim", as_ll(dim)},
               {"interior_degree_two", as_ll(m.interior_degree_two.size())}};
    return o;
}

std::string domain_c12(const Instance& in) {
    const Graph t = graph_of(in, "T");
    if (in.integer("k") < 1)
        return "k must be >= 1";
    if (!is_tree(t) || t.order() < 3)
        return "T must be a tree with >= 3 vertices";
    return need(zt_hypothesis(t), "T must satisfy the interior/terminal hypothesis");
}

Outcome eval_c12(const Instance& in, const EvalContext& ctx) {
    const Graph t = graph_of(in, "T");
    const int k = static_cast<int>(in.integer("k"));
    const auto m = compute_tree_metrics(t);
    const CoronaGraph cg = iterated_corona(t, complete(1), k, ctx.budget().construct_cap);
    const auto r = ctx.zf(cg.graph());
    Outcome o;
    o.lhs = as_ll(r.value);
    o.rhs = k == 1 ? as_ll(m.sigma) : ipow(2, k - 2) * as_ll(t.order());
    o.oracle_witness = r.witness;
    o.extra = {{"sigma", as_ll(m.sigma)}, {"n", as_ll(t.order())}};
    return o;
}

std::string domain_c13(const Instance& in) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    if (in.integer("k") < 1)
        return "k must be >= 1";
    if (!is_connected(g))
        return "G must be connected";
    const auto alpha = component_count_nontrivial(h);
    const auto beta = isolated_vertices(h).size();
    return need(alpha >= 1 || beta >= 2, "H must have a nontrivial component or >= 2 isolated vertices");
}

Outcome eval_c13(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    const int k = static_cast<int>(in.integer("k"));
    const CoronaGraph cg = iterated_corona(g, h, k, ctx.budget().construct_cap);
    if (!ctx.exact_fits(cg.graph()))
        throw BudgetError("corona of order " + std::to_string(cg.graph().order()) + " exceeds the exact cap");
    const LL alpha = as_ll(component_count_nontrivial(h));
    const LL beta = as_ll(isolated_vertices(h).size());
    const LL f = level_factor(g.order(), h.order(), k);
    const LL sum_z = sum_z_nontrivial(h, ctx);
    Outcome o;
    o.relation = Relation::Le;
    int which = 0;
    if (alpha >= 1 && beta >= 2) {
        which = 1;
        o.rhs = f * sum_z + f * (beta - 1);
    } else if (alpha >= 1 && beta == 0) {
        which = 2;
        const auto prev = k == 1 ? ctx.z(g) : ctx.z(iterated_corona(g, h, k - 1, ctx.budget().construct_cap).graph());
        o.rhs = as_ll(prev) + f * sum_z;
        o.extra["Z_prev"] = as_ll(prev);
    } else if (alpha >= 1 && beta == 1) {
        which = 3;
        o.rhs = f * sum_z + f - 1;
    } else {
        which = 4;
        o.rhs = f * (as_ll(h.order()) - 1);
    }
    const auto r = ctx.zf(cg.graph());
    const auto restricted = ctx.zf_restricted(cg.graph(), cg.copy_vertices());
    o.lhs = as_ll(r.value);
    o.oracle_witness = r.witness;
    o.extra["alpha"] = alpha;
    o.extra["beta"] = beta;
    o.extra["case"] = which;
    o.extra["Z_restricted"] = restricted ? as_ll(restricted->value) : -1;
    return o;
}

// ---- lexicographic claims ------------------------------------------------

std::string domain_nontrivial_pair(const Instance& in) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    return need(g.order() >= 2 && h.order() >= 2, "G and H must both have >= 2 vertices");
}

Outcome eval_c14(const Instance& in, const EvalContext& ctx) {
    const LexGraph lg = lexicographic(graph_of(in, "G"), graph_of(in, "H"), ctx.budget().construct_cap);
    const auto r = ctx.zf(lg.graph());
    Outcome o;
    o.relation = Relation::Ge;
    o.lhs = as_ll(r.value);
    o.rhs = 2;
    o.oracle_witness = r.witness;
    return o;
}

std::string domain_connected_g(const Instance& in) {
    const Graph g = graph_of(in, "G");
    return need(g.order() >= 1 && is_connected(g), "G must be connected");
}

Outcome eval_c15(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G");
    const Graph j = join(g, complete(1));
    const auto r = ctx.zf(j);
    const auto inside = ctx.zf_restricted(j, iota_ids(g.order()));
    Outcome o;
    o.lhs = inside ? as_ll(inside->value) : -1;
    o.rhs = as_ll(r.value);
    o.oracle_witness = inside ? inside->witness : r.witness;
    auto built = construct_join_basis_in_g(g, ctx.solve_options());
    if (built)
        o.constructive_witness = built.set;
    else
        o.note = built.diagnostic;
    return o;
}

std::string domain_lex(const Instance& in) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    if (!is_connected(g))
        return "G must be connected";
    return need(components_at_least_two(h), "every component of H must have >= 2 vertices");
}

struct LexRun {
    LexGraph lg;
    ZfsResult r;
    std::vector<LexWitnessFacts> facts;
};

LexRun lex_run(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
    LexRun run{lexicographic(g, h, ctx.budget().construct_cap), {}, {}};
    run.r = ctx.zf(run.lg.graph());
    const auto cz = component_z(h, ctx);
    for (const auto& s : minimum_witnesses(run.lg.graph(), run.r, ctx))
        run.facts.push_back(lex_witness_facts(run.lg, s, cz));
    return run;
}

template <typename Pred>
Outcome lex_property(const Instance& in, const EvalContext& ctx, Pred pred) {
    const auto run = lex_run(in, ctx);
    Outcome o;
    o.lhs = std::count_if(run.facts.begin(), run.facts.end(), pred);
    o.rhs = as_ll(run.facts.size());
    o.oracle_witness = run.r.witness;
    o.extra = {{"Z", as_ll(run.r.value)}, {"witnesses", as_ll(run.facts.size())}};
    return o;
}

Outcome eval_c16(const Instance& in, const EvalContext& ctx) {
    return lex_property(in, ctx, [](const LexWitnessFacts& f) { return f.layer_parts_ok() && f.layers_force(); });
}

Outcome eval_c17(const Instance& in, const EvalContext& ctx) {
    const auto run = lex_run(in, ctx);
    Outcome o;
    o.relation = Relation::Le;
    std::size_t load = 0;
    for (const auto& f : run.facts)
        load = std::max(load, f.max_layer_load);
    o.lhs = as_ll(load);
    o.rhs = as_ll(run.lg.h_order());
    o.oracle_witness = run.r.witness;
    o.extra = {{"Z", as_ll(run.r.value)}, {"witnesses", as_ll(run.facts.size())}};
    return o;
}

Outcome eval_c18(const Instance& in, const EvalContext& ctx) {
    return lex_property(in, ctx, [](const LexWitnessFacts& f) { return f.has_full_layer(); });
}

Outcome eval_c19(const Instance& in, const EvalContext& ctx) {
    return lex_property(in, ctx, [](const LexWitnessFacts& f) { return f.projections_full(); });
}

Outcome lex_bound(const LexGraph& lg, Relation rel, LL rhs, const Construction* built, const EvalContext& ctx) {
    Outcome o;
    o.relation = rel;
    o.rhs = rhs;
    if (built) {
        if (*built)
            o.constructive_witness = built->set;
        else
            o.note = built->diagnostic;
    }
    if (!ctx.exact_fits(lg.graph())) {
        if (!built || !*built)
            throw BudgetError("product of order " + std::to_string(lg.graph().order()) + " exceeds the exact cap");
        o.lhs = as_ll(built->set.size());
        o.witness_only = true;
        return o;
    }
    const auto r = ctx.zf(lg.graph());
    o.lhs = as_ll(r.value);
    o.oracle_witness = r.witness;
    return o;
}

Outcome eval_c20(const Instance& in, const EvalContext& ctx) {
    const LexGraph lg = lexicographic(graph_of(in, "G"), graph_of(in, "H"), ctx.budget().construct_cap);
    const auto built = construct_lex_upper_zfs(lg);
    const LL rhs = as_ll(lg.g_order() * lg.h_order()) - as_ll(lg.h_component_count());
    return lex_bound(lg, Relation::Le, rhs, &built, ctx);
}

Outcome eval_c21(const Instance& in, const EvalContext& ctx) {
    const LexGraph lg = lexicographic(graph_of(in, "G"), graph_of(in, "H"), ctx.budget().construct_cap);
    const LL rhs = (as_ll(lg.g_order()) - 1) * as_ll(lg.h_component_count()) + as_ll(lg.h_order());
    return lex_bound(lg, Relation::Ge, rhs, nullptr, ctx);
}

std::string domain_c22(const Instance& in) {
    const Graph g = graph_of(in, "G");
    if (!is_connected(g) || g.order() < 2)
        return "G must be connected with >= 2 vertices";
    return need(in.integer("k") >= 2, "k must be >= 2");
}

Outcome eval_c22(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G");
    const auto k = static_cast<std::size_t>(in.integer("k"));
    const LexGraph lg = lexicographic(g, empty(k), ctx.budget().construct_cap);
    const auto built = construct_lex_singletons_zfs(lg);
    return lex_bound(lg, Relation::Le, as_ll(g.order() * k) - 2, &built, ctx);
}

std::string domain_connected_h_n(const Instance& in, LL min_n) {
    const Graph h = graph_of(in, "H");
    if (in.integer("n") < min_n)
        return "n must be >= " + std::to_string(min_n);
    return need(is_connected(h), "H must be connected");
}

Outcome eval_c23(const Instance& in, const EvalContext& ctx) {
    const Graph h = graph_of(in, "H");
    const auto n = static_cast<std::size_t>(in.integer("n"));
    const LexGraph lg = lexicographic(complete(n), h, ctx.budget().construct_cap);
    const auto zh = ctx.z(h);
    const auto r = ctx.zf(lg.graph());
    Outcome o;
    o.lhs = as_ll(r.value);
    o.rhs = as_ll(zh) + (as_ll(n) - 1) * as_ll(h.order());
    o.oracle_witness = r.witness;
    o.extra = {{"Z_H", as_ll(zh)}};
    return o;
}

std::string domain_c24(const Instance& in) {
    const Graph g = graph_of(in, "G");
    if (in.integer("n") < 1)
        return "n must be >= 1";
    if (!is_connected(g))
        return "G must be connected";
    return need(!is_complete_graph(g), "G must not be complete");
}

Outcome eval_c24(const Instance& in, const EvalContext& ctx) {
    const Graph g = graph_of(in, "G");
    const auto n = static_cast<std::size_t>(in.integer("n"));
    const LL m = as_ll(g.order());
    const LexGraph lg = lexicographic(g, complete(n), ctx.budget().construct_cap);
    Outcome o;
    o.relation = Relation::Between;
    o.rhs = m * (as_ll(n) - 1) + 1;
    o.rhs_upper = as_ll(n) * m - 2;
    if (n >= 2) {
        auto built = construct_lex_complete_factor_zfs(lg);
        if (built)
            o.constructive_witness = built.set;
        else
            o.note = built.diagnostic;
    }
    const auto r = ctx.zf(lg.graph());
    o.lhs = as_ll(r.value);
    o.oracle_witness = r.witness;
    return o;
}

// even: n(Z + m) / 2; odd: (n(Z + m) + odd_z * Z + odd_m * m) / 2
Outcome lex_cyclic_family(const Graph& g, const Graph& h, LL odd_z, LL odd_m, const EvalContext& ctx) {
    const LL n = as_ll(g.order()), m = as_ll(h.order());
    const LL zh = as_ll(ctx.z(h));
    const LexGraph lg = lexicographic(g, h, ctx.budget().construct_cap);
    const auto r = ctx.zf(lg.graph());
    Outcome o;
    o.lhs = as_ll(r.value);
    o.rhs = n % 2 == 0 ? n * (zh + m) / 2 : (n * (zh + m) + odd_z * zh + odd_m * m) / 2;
    o.oracle_witness = r.witness;
    o.extra = {{"Z_H", zh}, {"m", m}};
    return o;
}

Outcome eval_c25(const Instance& in, const EvalContext& ctx) {
    const Graph h = graph_of(in, "H");
    const auto n = in.integer("n");
    auto o = lex_cyclic_family(path(static_cast<std::size_t>(n)), h, 1, -1, ctx);
    const LL m = as_ll(h.order());
    if (is_complete_graph(h) && m >= 3)
        o.extra["corollary"] = n % 2 == 0 ? n * (2 * m - 1) / 2 : n * m - (n + 1) / 2;
    return o;
}

Outcome eval_c26(const Instance& in, const EvalContext& ctx) {
    const Graph h = graph_of(in, "H");
    const auto n = in.integer("n");
    auto o = lex_cyclic_family(cycle(static_cast<std::size_t>(n)), h, -1, 1, ctx);
    const LL m = as_ll(h.order());
    if (is_complete_graph(h) && m >= 3)
        o.extra["corollary"] = n % 2 == 0 ? n * (2 * m - 1) / 2 : (n * (2 * m - 1) + 1) / 2;
    return o;
}

ClaimSpec make(std::string id, ClaimKind kind, std::string statement, std::vector<std::string> slots,
               std::string grid, std::function<std::string(const Instance&)> domain,
               std::function<Outcome(const Instance&, const EvalContext&)> evaluate) {
    ClaimSpec c;
    c.id = std::move(id);
    c.kind = kind;
    c.statement = std::move(statement);
    c.slots = std::move(slots);
    c.default_grid = grid_of(grid);
    c.domain = std::move(domain);
    c.evaluate = std::move(evaluate);
    return c;
}

} // namespace

void Registry::add(ClaimSpec spec) {
    if (find(spec.id))
        throw InputError("duplicate claim id " + spec.id);
    claims_.push_back(std::move(spec));
}

const ClaimSpec* Registry::find(std::string_view id) const {
    for (const auto& c : claims_)
        if (c.id == id)
            return &c;
    return nullptr;
}

ClaimSpec& Registry::at(std::string_view id) {
    for (auto& c : claims_)
        if (c.id == id)
            return c;
    throw InputError("unknown claim " + std::string(id));
}

std::vector<std::string> Registry::ids() const {
    std::vector<std::string> out;
    for (const auto& c : claims_)
        out.push_back(c.id);
    return out;
}

Registry Registry::standard() {
    using K = ClaimKind;
    const std::string gh = cat({kG, kH, "k=1..2"});
    Registry r;
    r.add(make("C1", K::Iff, "connected G, n >= 2: Z(G) = 1 iff G = P_n, Z(G) = n - 1 iff G = K_n", {"G"},
               "G=connected:2..5",
               [](const Instance& in) {
                   const Graph g = graph_of(in, "G");
                   return need(g.order() >= 2 && is_connected(g), "G must be connected with >= 2 vertices");
               },
               eval_c1));
    r.add(make("C2", K::Property,
               "every zero forcing set S of G (.) H meets every copy V_i; for connected H, S cap V_i forces H_i",
               {"G", "H"}, cat({kG, kH}),
               [](const Instance& in) {
                   const Graph g = graph_of(in, "G"), h = graph_of(in, "H");
                   if (!is_connected(g) || g.order() < 2)
                       return std::string("G must be connected with >= 2 vertices");
                   return need(h.order() >= 2, "H must have >= 2 vertices");
               },
               eval_c2));
    r.add(make("C3", K::Equality, "Z(G (.)^k H) = Z(G (.)^{k-1} H) + n1 (n2 + 1)^{k-1} Z(H)", {"G", "H", "k"}, gh,
               domain_corona_connected, eval_c3));
    r.add(make("C4", K::Iff, "Z(G (.)^k H) = Z(G (.)^{k-1} H) + n1 (n2 + 1)^{k-1} iff H = P_{n2}",
               {"G", "H", "k"}, gh,
               [](const Instance& in) {
                   auto d = domain_corona_connected(in);
                   return d.empty() ? need(graph_of(in, "H").order() >= 2, "H must have >= 2 vertices") : d;
               },
               eval_c4));
    r.add(make("C5", K::Iff, "Z(G (.)^k H) = Z(G (.)^{k-1} H) + n1 (n2 + 1)^{k-1} (n2 - 1) iff H = K_{n2}",
               {"G", "H", "k"}, gh,
               [](const Instance& in) {
                   auto d = domain_corona_connected(in);
                   return d.empty() ? need(graph_of(in, "H").order() >= 2, "H must have >= 2 vertices") : d;
               },
               eval_c5));
    r.add(make("C6", K::Equality, "Z(W_{1,n}) = 3, n >= 3", {"n"}, "n=3..7",
               [](const Instance& in) { return need(in.integer("n") >= 3, "n must be >= 3"); }, eval_c6));
    r.add(make("C7", K::Equality, "Z(F_{1,n}) = 2, n >= 2", {"n"}, "n=2..7",
               [](const Instance& in) { return need(in.integer("n") >= 2, "n must be >= 2"); }, eval_c7));
    r.add(make("C8", K::UpperBound, "Z(G (.)^k H) <= n1 (n2 + 1)^{k-1} Z(K1 (.) H)", {"G", "H", "k"}, gh,
               domain_c8, eval_c8));
    r.add(make("C9", K::Iff, "disconnected H: Z(G (.)^k H) = n1 (n2 + 1)^{k-1} (n2 - 1) iff H is edgeless",
               {"G", "H", "k"}, cat({kG, kHDisconnected, "k=1..2"}), domain_c9, eval_c9));
    r.add(make("C10", K::Equality, "non-path tree: dim(T) = sigma(T) - ex(T)", {"T"}, "T=tree:4..7",
               domain_non_path_tree, eval_c10));
    r.add(make("C11", K::Iff,
               "tree: Z(T) = dim(T) iff no interior degree-two vertex and every major vertex has ter >= 2", {"T"},
               "T=tree:4..7", domain_non_path_tree, eval_c11));
    r.add(make("C12", K::Equality, "Z(T (.)^k K1) = sigma(T) for k = 1, 2^{k-2} n for k >= 2", {"T", "k"},
               "T=tree-shapes:4..7;k=1..2", domain_c12, eval_c12));
    r.add(make("C13", K::UpperBound, "Z(G (.)^k H) upper bound by alpha (nontrivial components) and beta (isolated)",
               {"G", "H", "k"}, cat({kG, kHDisconnected, "k=1..2"}), domain_c13, eval_c13));
    r.add(make("C14", K::LowerBound, "nontrivial G, H: Z(G o H) >= 2", {"G", "H"}, cat({kG, kH}),
               domain_nontrivial_pair, eval_c14));
    r.add(make("C15", K::Equality, "connected G: some minimum zero forcing set of G + K1 lies inside V(G)", {"G"},
               std::string(kG), domain_connected_g, eval_c15));
    r.add(make("C16", K::Property, "Z_i(a) nonempty, |Z_i(a)| >= Z(H_i), and Z(a) forces H(a)", {"G", "H"},
               cat({kG, kHLex}), domain_lex, eval_c16));
    r.add(make("C17", K::UpperBound, "alpha(a) <= sum m_i", {"G", "H"}, cat({kG, kHLex}), domain_lex, eval_c17));
    r.add(make("C18", K::Property, "some layer H(x) lies entirely in a forcing basis", {"G", "H"}, cat({kG, kHLex}),
               domain_lex, eval_c18));
    r.add(make("C19", K::Property, "P_G(Z_i) = V(G) for every component i", {"G", "H"}, cat({kG, kHLex}),
               domain_lex, eval_c19));
    r.add(make("C20", K::UpperBound, "Z(G o H) <= n sum m_i - k", {"G", "H"}, cat({kG, kHLex}), domain_lex,
               eval_c20));
    r.add(make("C21", K::LowerBound, "Z(G o H) >= (n - 1) k + sum m_i", {"G", "H"}, cat({kG, kHLex}), domain_lex,
               eval_c21));
    r.add(make("C22", K::UpperBound, "H = k >= 2 singletons: Z(G o H) <= n k - 2", {"G", "k"},
               cat({kG, "k=2..3"}), domain_c22, eval_c22));
    r.add(make("C23", K::Equality, "connected H of order m: Z(K_n o H) = Z(H) + (n - 1) m", {"n", "H"},
               "n=2..4;H=path:2..4,complete:2..3,cycle:3..4,star:4",
               [](const Instance& in) { return domain_connected_h_n(in, 1); }, eval_c23));
    r.add(make("C24", K::Property, "connected non-complete G of order m: m(n - 1) + 1 <= Z(G o K_n) <= n m - 2",
               {"G", "n"}, "G=path:3..4,cycle:4..5,star:3..4;n=2..3", domain_c24, eval_c24));
    r.add(make("C25", K::Equality, "Z(P_n o H) = n(Z(H) + m)/2 (n even), (n(Z(H) + m) + Z(H) - m)/2 (n odd)",
               {"n", "H"}, cat({"n=3..5", kHConnected}),
               [](const Instance& in) { return domain_connected_h_n(in, 3); }, eval_c25));
    r.add(make("C26", K::Equality, "Z(C_n o H) = n(Z(H) + m)/2 (n even), (n(m + Z(H)) + m - Z(H))/2 (n odd)",
               {"n", "H"}, cat({"n=4..5", kHConnected}),
               [](const Instance& in) { return domain_connected_h_n(in, 4); }, eval_c26));
    return r;
}

Status derive_status(const Outcome& o) {
    if (o.infeasible)
        return Status::Infeasible;
    if (o.skipped || !o.lhs || !o.rhs)
        return Status::SkippedBudget;
    if (o.witness_only)
        return Status::WitnessOnly;
    const LL l = *o.lhs, r = *o.rhs;
    switch (o.relation) {
    case Relation::Eq:
    case Relation::Iff: return l == r ? Status::Equal : Status::Violation;
    case Relation::Le: return l < r ? Status::WithinBound : l == r ? Status::Sharp : Status::Violation;
    case Relation::Ge: return l > r ? Status::WithinBound : l == r ? Status::Sharp : Status::Violation;
    case Relation::Between: {
        const LL hi = o.rhs_upper.value_or(r);
        if (l < r || l > hi)
            return Status::Violation;
        return l == r || l == hi ? Status::Sharp : Status::WithinBound;
    }
    }
    return Status::Violation;
}

EvaluationRecord evaluate_claim(const Registry& reg, std::string_view id, const Instance& instance,
                                const Budget& budget) {
    const ClaimSpec* spec = reg.find(id);
    if (!spec)
        throw InputError("unknown claim " + std::string(id));
    for (const auto& slot : spec->slots)
        if (!instance.has(slot))
            throw InputError(spec->id + " needs slot " + slot);
    if (auto why = spec->domain(instance); !why.empty())
        throw InputError(spec->id + " out of domain (" + instance.str() + "): " + why);

    EvaluationRecord rec;
    rec.id = spec->id;
    rec.params = instance.str();
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        const EvalContext ctx(budget);
        o = spec->evaluate(instance, ctx);
    } catch (const BudgetError& e) {
        o = Outcome{};
        o.skipped = true;
        o.note = e.what();
    }
    if (o.rhs)
        *o.rhs += spec->rhs_offset;
    if (o.rhs_upper)
        *o.rhs_upper += spec->rhs_offset;
    rec.status = derive_status(o);
    rec.lhs = o.lhs;
    rec.rhs = o.rhs;
    rec.rhs_upper = o.rhs_upper;
    rec.relation = o.relation;
    rec.oracle_witness = std::move(o.oracle_witness);
    rec.constructive_witness = std::move(o.constructive_witness);
    rec.extra = std::move(o.extra);
    rec.note = std::move(o.note);
    if (budget.record_timing)
        rec.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

std::size_t GridSummary::total() const {
    std::size_t t = 0;
    for (const auto& [s, n] : by_status)
        t += n;
    return t;
}

namespace {

GridRun run_tasks(const Registry& reg, std::span<const std::string> ids, const Grid& grid, const Budget& budget,
                  int jobs) {
    for (const auto& id : ids)
        if (!reg.find(id))
            throw InputError("unknown claim " + id);

    struct Task {
        const ClaimSpec* spec;
        Instance instance;
    };
    std::vector<Task> tasks;
    GridRun run;
    for (const auto& spec : reg.claims()) {
        if (std::find(ids.begin(), ids.end(), spec.id) == ids.end())
            continue;
        for (auto& inst : expand(grid, spec.slots, spec.default_grid)) {
            if (!spec.domain(inst).empty()) {
                ++run.summary.out_of_domain;
                continue;
            }
            tasks.push_back({&spec, std::move(inst)});
        }
    }

    Budget inner = budget;
    if (jobs > 1)
        inner.solver_threads = 1;
    run.records.resize(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 1 ? jobs : 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            run.records[i] = evaluate_claim(reg, tasks[i].spec->id, tasks[i].instance, inner);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    for (const auto& rec : run.records)
        ++run.summary.by_status[rec.status];
    return run;
}

} // namespace

GridRun run_grid(const Registry& reg, std::span<const std::string> ids, const Grid& grid, const Budget& budget,
                 int jobs) {
    if (grid.empty()) {
        for (const auto& id : ids)
            if (!reg.find(id))
                throw InputError("unknown claim " + id);
        return {};
    }
    return run_tasks(reg, ids, grid, budget, jobs);
}

GridRun run_default_grid(const Registry& reg, std::span<const std::string> ids, const Budget& budget, int jobs) {
    return run_tasks(reg, ids, Grid{}, budget, jobs);
}

int exit_code_for(const GridRun& run) {
    const auto& s = run.summary.by_status;
    if (auto it = s.find(Status::Violation); it != s.end() && it->second > 0)
        return 1;
    if (!run.records.empty()) {
        auto it = s.find(Status::SkippedBudget);
        if (it != s.end() && it->second == run.records.size())
            return 3;
    }
    return 0;
}

} // namespace zf
