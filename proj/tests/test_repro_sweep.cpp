#include "ptc/repro.hpp"
#include "ptc/sweep.hpp"

#include <doctest.h>

#include <cmath>

using namespace ptc;

TEST_CASE("reproduce table")
{
    ReproReport r = reproduce_paper_determinants(50);
    REQUIRE(r.rows.size() == 9);
    CHECK(r.height_rescale == Rational(1));
    CHECK(r.ok());

    int flagged_display = 0;
    for (auto const& row : r.rows) {
        if (row.flag == ReproFlag::curve_display_mismatch)
            ++flagged_display;
        if (row.flag == ReproFlag::paper_inconsistent) {
            CHECK(row.instance == "F2_a2b2 T=1");
            CHECK(row.points == std::vector<std::string>{"P1", "P2", "P3"});
            CHECK(row.note == "points are dependent: P1 + 2*P2 + P3 = O");
        } else {
            CHECK(row.match);
            CHECK(row.rel_err < 1e-12);
        }
    }
    CHECK(flagged_display == 2);
}

TEST_CASE("reproduce at lower precision")
{
    ReproReport r = reproduce_paper_determinants(30);
    CHECK(r.ok());
}

TEST_CASE("reproduce csv layout")
{
    std::string csv = to_csv(reproduce_paper_determinants(50));
    CHECK(csv.rfind("section,instance,points,claimed,computed,rel_err,match\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
    CHECK(csv.find("paper-inconsistent") != std::string::npos);
    CHECK(csv == to_csv(reproduce_paper_determinants(50)));
}

TEST_CASE("small relations")
{
    Curve E(0, -225, 64);
    auto rel = find_small_relation(E, {CurvePoint(0, 8), CurvePoint(15, 8), CurvePoint(Rational(64, 225), Rational(512, 3375))});
    REQUIRE(rel);
    CHECK(*rel == std::vector<int>{1, 2, 1});
    CHECK_FALSE(find_small_relation(E, {CurvePoint(0, 8), CurvePoint(15, 8)}));
}

TEST_CASE("sweep alpha 2..12")
{
    SweepSpec spec;
    spec.family = FamilyId::F1_a2c2;
    spec.kind = ParamKind::alpha;
    spec.lo = 2;
    spec.hi = 12;
    spec.digits = 30;
    SweepResult r = run_sweep(spec);
    REQUIRE(r.records.size() == 11);
    CHECK(r.records[0].param == "2");
    CHECK(r.records[0].report->rank_lower_bound == 3);
    CHECK(r.independent + r.not_independent + r.indeterminate + r.errors == 11);
}

TEST_CASE("sweep skips degenerate values")
{
    SweepSpec spec;
    spec.family = FamilyId::F1_a2c2;
    spec.kind = ParamKind::alpha;
    spec.lo = -1;
    spec.hi = 2;
    spec.digits = 20;
    SweepResult r = run_sweep(spec);
    CHECK(r.skipped_degenerate == 3);
    CHECK(r.records.size() == 1);

    spec.hi = 1;
    CHECK_THROWS_AS(run_sweep(spec), empty_sweep);
}

TEST_CASE("sweep T matches the T = 1 instance")
{
    SweepSpec spec;
    spec.family = FamilyId::F2_a2b2;
    spec.kind = ParamKind::T;
    spec.lo = 1;
    spec.hi = 5;
    spec.digits = 30;
    SweepResult r = run_sweep(spec);
    REQUIRE(r.records.size() == 5);
    CHECK(r.records[0].instance->curve == construct(FamilyId::F2_a2b2, ParamKind::T, 1).curve);
    CHECK(std::fabs(r.records[0].report->det.to_double() - 7.34210213314542) < 1e-10);
}

TEST_CASE("sweep output does not depend on the worker count")
{
    SweepSpec spec;
    spec.family = FamilyId::F5_b2c2;
    spec.kind = ParamKind::t;
    spec.lo = Rational(1, 7);
    spec.hi = 3;
    spec.step = Rational(2, 7);
    spec.digits = 30;
    spec.jobs = 1;
    std::string one = to_json(run_sweep(spec), 30).dump();
    spec.jobs = 4;
    std::string four = to_json(run_sweep(spec), 30).dump();
    CHECK(one == four);
}

TEST_CASE("sweep over triple generators")
{
    SweepSpec spec;
    spec.family = FamilyId::F6_frey_ac;
    spec.kind = ParamKind::triple;
    spec.lo = 2;
    spec.hi = 4;
    spec.digits = 20;
    auto params = sweep_parameters(spec);
    // (2,1) (3,2) (4,1) (4,3)
    REQUIRE(params.size() == 4);
    CHECK(*params[0].triple == PythTriple{3, 4, 5});
    CHECK(*params[3].triple == PythTriple{7, 24, 25});
    SweepResult r = run_sweep(spec);
    CHECK(r.records.size() == 4);
    CHECK(r.errors == 0);
}
