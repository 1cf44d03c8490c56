#include <doctest.h>

#include <algorithm>

#include "zf/claims.hpp"
#include "zf/constructions.hpp"
#include "zf/error.hpp"
#include "zf/families.hpp"
#include "zf/report.hpp"
#include "zf/witness_checks.hpp"

using namespace zf;

namespace {

using Ids = std::vector<VertexId>;

const Registry& registry() {
    static const Registry r = Registry::standard();
    return r;
}

EvaluationRecord eval(std::string_view id, std::string_view params, const Budget& b = {}) {
    return evaluate_claim(registry(), id, parse_instance(params), b);
}

std::vector<std::string> ids(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }

Outcome outcome(Relation rel, long long lhs, long long rhs, std::optional<long long> hi = std::nullopt) {
    Outcome o;
    o.relation = rel;
    o.lhs = lhs;
    o.rhs = rhs;
    o.rhs_upper = hi;
    return o;
}

} // namespace

TEST_CASE("registry holds C1..C26 in order") {
    const auto all = registry().ids();
    REQUIRE(all.size() == 26);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(all[i] == "C" + std::to_string(i + 1));
    for (const auto& c : registry().claims()) {
        CHECK_FALSE(c.statement.empty());
        CHECK_FALSE(c.slots.empty());
        CHECK(c.domain);
        CHECK(c.evaluate);
    }
}

TEST_CASE("status algebra") {
    CHECK(derive_status(outcome(Relation::Eq, 3, 3)) == Status::Equal);
    CHECK(derive_status(outcome(Relation::Eq, 3, 4)) == Status::Violation);
    CHECK(derive_status(outcome(Relation::Iff, 1, 0)) == Status::Violation);
    CHECK(derive_status(outcome(Relation::Le, 2, 3)) == Status::WithinBound);
    CHECK(derive_status(outcome(Relation::Le, 3, 3)) == Status::Sharp);
    CHECK(derive_status(outcome(Relation::Le, 4, 3)) == Status::Violation);
    CHECK(derive_status(outcome(Relation::Ge, 4, 3)) == Status::WithinBound);
    CHECK(derive_status(outcome(Relation::Ge, 2, 3)) == Status::Violation);
    CHECK(derive_status(outcome(Relation::Between, 7, 7, 7)) == Status::Sharp);
    CHECK(derive_status(outcome(Relation::Between, 6, 5, 8)) == Status::WithinBound);
    CHECK(derive_status(outcome(Relation::Between, 9, 5, 8)) == Status::Violation);
    Outcome skipped;
    skipped.skipped = true;
    CHECK(derive_status(skipped) == Status::SkippedBudget);
    auto w = outcome(Relation::Le, 5, 5);
    w.witness_only = true;
    CHECK(derive_status(w) == Status::WitnessOnly);
    Outcome inf;
    inf.infeasible = true;
    CHECK(derive_status(inf) == Status::Infeasible);
}

TEST_CASE("evaluate_claim examples") {
    const auto c3 = eval("C3", "G=path:2;H=path:2;k=1");
    CHECK(c3.lhs == 3);
    CHECK(c3.rhs == 3);
    CHECK(c3.status == Status::Equal);
    CHECK(c3.oracle_witness.size() == 3);
    REQUIRE(c3.constructive_witness.has_value());
    CHECK(c3.constructive_witness->size() == 3);

    const auto c6 = eval("C6", "n=3");
    CHECK(c6.lhs == 3);
    CHECK(c6.rhs == 3);
    CHECK(c6.status == Status::Equal);

    const auto c24 = eval("C24", "G=path:3;n=3");
    CHECK(c24.rhs == 7);
    CHECK(c24.rhs_upper == 7);
    CHECK(c24.lhs == 7);
    CHECK(c24.status == Status::Sharp);
}

TEST_CASE("evaluate_claim errors") {
    CHECK_THROWS_AS(eval("C99", "n=3"), InputError);
    CHECK_THROWS_AS(eval("C6", "n=2"), InputError);   // out of domain
    CHECK_THROWS_AS(eval("C3", "G=path:2;H=path:2"), InputError); // missing slot
    CHECK_THROWS_AS(eval("C3", "G=path:2;H=empty:2;k=1"), InputError);
}

TEST_CASE("budget exhaustion is a status, not an exception") {
    Budget tight;
    tight.exact_cap = 5;
    const auto r = eval("C14", "G=path:3;H=path:2", tight);
    CHECK(r.status == Status::SkippedBudget);
    CHECK_FALSE(r.lhs.has_value());
    CHECK_FALSE(r.note.empty());

    const auto w = eval("C3", "G=path:4;H=path:2;k=2");
    CHECK(w.status == Status::WitnessOnly);
    CHECK(w.lhs == w.rhs);
    CHECK(w.lhs == 17);
    CHECK(w.oracle_witness.empty());

    const auto u = eval("C20", "G=path:3;H=path:2", tight);
    CHECK(u.status == Status::WitnessOnly);
    CHECK(u.lhs == 5);
}

TEST_CASE("run_grid examples") {
    const auto g = parse_grid("G=path:2..3;H=path:2,complete:3;k=1");
    const auto run = run_grid(registry(), ids({"C3"}), g);
    REQUIRE(run.records.size() == 4);
    for (const auto& r : run.records)
        CHECK((r.status == Status::Equal || r.status == Status::Violation));
    CHECK(run.records[0].params == "G=path:2;H=path:2;k=1");
    CHECK(run.records[1].params == "G=path:2;H=complete:3;k=1");

    const auto c14 = run_grid(registry(), ids({"C14"}), parse_grid("G=path:2..4;H=path:2..3"));
    CHECK(c14.records.size() == 6);
    for (const auto& r : c14.records)
        CHECK(*r.lhs >= 2);

    CHECK(run_grid(registry(), ids({"C3"}), Grid{}).records.empty());
    CHECK_THROWS_AS(run_grid(registry(), ids({"C42"}), g), InputError);
    CHECK_THROWS_AS(parse_grid("G"), InputError);
}

TEST_CASE("records follow registry order regardless of the id list order") {
    const auto run = run_grid(registry(), ids({"C7", "C6"}), parse_grid("n=3..4"));
    REQUIRE(run.records.size() == 4);
    CHECK(run.records[0].id == "C6");
    CHECK(run.records[3].id == "C7");
}

TEST_CASE("out-of-domain points are counted") {
    const auto run = run_grid(registry(), ids({"C6"}), parse_grid("n=1..4"));
    CHECK(run.records.size() == 2);
    CHECK(run.summary.out_of_domain == 2);
}

TEST_CASE("perturbed rhs turns every record into a violation") {
    auto reg = Registry::standard();
    reg.at("C3").rhs_offset = 1;
    const auto run = run_grid(reg, ids({"C3"}), parse_grid("G=path:2..3,cycle:3;H=path:2;k=1"));
    REQUIRE(run.records.size() == 3);
    for (const auto& r : run.records)
        CHECK(r.status == Status::Violation);
    CHECK(exit_code_for(run) == 1);
}

TEST_CASE("exit codes") {
    GridRun none;
    CHECK(exit_code_for(none) == 0);
    Budget tight;
    tight.exact_cap = 3;
    const auto skipped = run_grid(registry(), ids({"C14"}), parse_grid("G=path:2;H=path:2..3"), tight);
    CHECK(exit_code_for(skipped) == 3);
    const auto ok = run_grid(registry(), ids({"C7"}), parse_grid("n=2..3"));
    CHECK(exit_code_for(ok) == 0);
}

TEST_CASE("parallel grid evaluation gives identical reports") {
    const auto g = parse_grid("G=path:2..3,cycle:4;H=path:2,empty:2;k=1..2");
    const auto a = run_grid(registry(), ids({"C8", "C14", "C20"}), g, {}, 1);
    const auto b = run_grid(registry(), ids({"C8", "C14", "C20"}), g, {}, 3);
    CHECK(report_json(a.records) == report_json(b.records));
    CHECK(report_csv(a.records) == report_csv(b.records));
}

TEST_CASE("report formats") {
    const auto run = run_grid(registry(), ids({"C6"}), parse_grid("n=3"));
    CHECK(report_csv(run.records) == "id,params,lhs,rhs,relation,status,elapsed_ms\nC6,n=3,3,3,=,EQUAL,0\n");
    const auto json = report_json(run.records);
    for (const char* field : {"\"id\"", "\"params\"", "\"lhs\"", "\"rhs\"", "\"relation\"", "\"status\"",
                              "\"oracle_witness\"", "\"constructive_witness\"", "\"elapsed_ms\""})
        CHECK(json.find(field) != std::string::npos);
    CHECK(report_text(run).find("EQUAL=1") != std::string::npos);
}

TEST_CASE("disconnected H reports both minima") {
    const auto r = eval("C9", "G=path:2;H=empty:2;k=1");
    CHECK(r.extra.at("Z") == 2);
    CHECK(r.extra.at("Z_restricted") == 2);
    CHECK(r.status == Status::Equal);
    const auto near = eval("C9", "G=path:2;H=path:2+empty:1;k=1");
    CHECK(near.extra.at("near_miss_size") == 3);
    CHECK(near.extra.at("near_miss_forces") == 1);
    CHECK(near.status == Status::Equal);
    const auto c13 = eval("C13", "G=path:3;H=path:2+path:2;k=1");
    CHECK(c13.extra.at("case") == 2);
    CHECK(c13.extra.count("Z_restricted") == 1);
}

TEST_CASE("corona construction") {
    const auto cg = corona(path(2), path(2));
    const auto b = construct_corona_zfs(cg, Ids{0}, Ids{0});
    CHECK(b.forces);
    CHECK(b.set.size() == 3);
    const auto cg2 = iterated_corona(path(2), path(2), 2);
    const auto b2 = construct_corona_zfs(cg2, Ids{0}, Ids{0});
    CHECK(b2.forces);
    CHECK(b2.set.size() == 9);
    const auto k3 = corona(complete(3), complete(2));
    const auto b3 = construct_corona_zfs(k3, Ids{0, 1}, Ids{1});
    CHECK(b3.forces);
    CHECK(b3.set.size() == 5);
    const auto bad = construct_corona_zfs(cg, Ids{0}, Ids{});
    CHECK_FALSE(bad.forces);
    CHECK_FALSE(bad.diagnostic.empty());
}

TEST_CASE("empty-H corona construction") {
    const auto a = construct_empty_corona_zfs(corona(path(2), empty(2)));
    CHECK(a.forces);
    CHECK(a.set.size() == 2);
    const auto b = construct_empty_corona_zfs(corona(path(3), empty(3)));
    CHECK(b.forces);
    CHECK(b.set.size() == 6);
    const auto c = construct_empty_corona_zfs(corona(complete(2), empty(2)));
    CHECK(c.set.size() == 2);
    CHECK_FALSE(construct_empty_corona_zfs(corona(path(2), path(2))).forces);
}

TEST_CASE("near-miss construction forces") {
    const auto n = construct_single_edge_near_miss(corona(path(2), make_graph("path:2+empty:1")));
    CHECK(n.forces);
    CHECK(n.set.size() == 3);
}

TEST_CASE("join-cover construction") {
    const auto a = construct_join_cover_zfs(corona(path(2), cycle(3)));
    CHECK(a.forces);
    CHECK(a.set.size() == 6);
    const auto b = construct_join_cover_zfs(corona(path(2), empty(3)));
    CHECK(b.forces);
    CHECK(b.set.size() == 4);
    const auto c = construct_join_cover_zfs(corona(complete(2), path(2)));
    CHECK(c.forces);
    CHECK(c.set.size() == 4);
}

TEST_CASE("lexicographic upper construction") {
    const auto a = construct_lex_upper_zfs(lexicographic(complete(2), complete(2)));
    CHECK(a.forces);
    CHECK(a.set.size() == 3);
    const auto b = construct_lex_upper_zfs(lexicographic(path(3), path(2)));
    CHECK(b.forces);
    CHECK(b.set.size() == 5);
    const auto c = construct_lex_upper_zfs(lexicographic(path(3), make_graph("path:2+path:2")));
    CHECK(c.forces);
    CHECK(c.set.size() == 10);
    CHECK_FALSE(construct_lex_upper_zfs(lexicographic(path(3), empty(2))).forces);
}

TEST_CASE("other lexicographic constructions") {
    const auto s = construct_lex_singletons_zfs(lexicographic(path(3), empty(2)));
    CHECK(s.forces);
    CHECK(s.set.size() == 4);
    const auto k = construct_lex_complete_factor_zfs(lexicographic(cycle(4), complete(3)));
    CHECK(k.forces);
    CHECK(k.set.size() == 10);
    CHECK_FALSE(construct_lex_complete_factor_zfs(lexicographic(complete(3), complete(2))).forces);
}

TEST_CASE("apex-free join basis") {
    const auto p2 = construct_join_basis_in_g(path(2));
    CHECK(p2.forces);
    CHECK(p2.set == Ids{0, 1});
    const auto c4 = construct_join_basis_in_g(cycle(4));
    CHECK(c4.forces);
    CHECK(c4.set.size() == 3);
    CHECK(std::all_of(c4.set.begin(), c4.set.end(), [](VertexId v) { return v < 4; }));
    const auto p4 = construct_join_basis_in_g(path(4));
    CHECK(p4.forces);
    CHECK(p4.set.size() == 2);
}

TEST_CASE("witness facts") {
    const auto cg = corona(path(2), path(2));
    const auto f = corona_witness_facts(cg, Ids{0, 2, 4});
    CHECK(f.copies == 2);
    CHECK(f.copies_hit == 2);
    CHECK(f.copies_forcing == 2);

    const auto lg = lexicographic(path(3), path(2));
    const std::size_t cz[] = {1};
    const auto l = lex_witness_facts(lg, Ids{0, 1, 2, 4}, cz);
    CHECK(l.layer_parts_ok());
    CHECK(l.layers_force());
    CHECK(l.has_full_layer());
    CHECK(l.projections_full());
    CHECK(l.max_layer_load == 2);
}
