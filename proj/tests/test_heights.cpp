#include "support.hpp"

#include "ptc/heights.hpp"

#include <doctest.h>

#include <cmath>

using namespace ptc;

namespace {

double dist(Real const& a, Real const& b)
{
    return std::fabs((a - b).to_double());
}

/* Points of infinite order with small coordinates. */
std::vector<std::pair<Curve, CurvePoint>> sample_points(int count, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Curve, CurvePoint>> out;
    auto families = std::array{FamilyId::F1_a2c2, FamilyId::F2_a2b2, FamilyId::F3_b2a2, FamilyId::F4_c2b2,
                               FamilyId::F5_b2c2};
    while (static_cast<int>(out.size()) < count) {
        auto f = families[out.size() % families.size()];
        FamilyInstance inst = random_short_instance(f, rng, 7);
        CurvePoint P = inst.points[rng() % inst.points.size()].point;
        if (as_oracle(inst.curve).order(as_oracle(P)) == 0)
            out.emplace_back(inst.curve, P);
    }
    return out;
}

}  // namespace

TEST_CASE("naive height")
{
    CHECK(naive_height(CurvePoint(1, 0), 30).is_zero());
    CHECK(dist(naive_height(CurvePoint(Rational(25, 9), 0), 30), log_real(Rational(25), 30)) < 1e-30);
    CHECK(dist(naive_height(CurvePoint(Rational(-55, 64), 0), 30), log_real(Rational(64), 30)) < 1e-30);
    CHECK_THROWS(naive_height(CurvePoint::infinity(), 30));
}

TEST_CASE("torsion has height zero")
{
    CHECK(canonical_height(Curve(0, -1, 0), CurvePoint(0, 0), 50).value.is_zero());
    CHECK(canonical_height(Curve(0, 0, 1), CurvePoint(2, 3), 50).value.is_zero());
    CHECK(canonical_height(Curve(0, 0, 1), CurvePoint::infinity(), 50).value.is_zero());
}

TEST_CASE("heights against the naive limit")
{
    // h(2^k P) / 4^k converges to h^ with error O(4^-k)
    Curve E(0, -225, 64);
    CurvePoint P(0, 8);
    Real h = canonical_height(E, P, 30).value;
    CurvePoint Q = P;
    for (int k = 0; k < 6; ++k)
        Q = double_point(E, Q);
    double approx = naive_height(Q, 30).to_double() / std::pow(4.0, 6);
    CHECK(std::fabs(approx - h.to_double()) < 2e-2);
    CHECK(h.to_double() > 0);
}

TEST_CASE("quadraticity")
{
    for (auto const& [E, P] : sample_points(20, 101)) {
        CanonicalHeight h(E, 50);
        Real h1 = h(P).value, h2 = h(double_point(E, P)).value, h3 = h(scalar_mul(E, 3, P)).value;
        CHECK(dist(h2, Real(Rational(4), 50) * h1) < 1e-40);
        CHECK(dist(h3, Real(Rational(9), 50) * h1) < 1e-40);
        CHECK(dist(h(negate(E, P)).value, h1) < 1e-45);
    }
}

TEST_CASE("parallelogram law and bilinearity")
{
    std::mt19937_64 rng(103);
    for (int i = 0; i < 10; ++i) {
        FamilyInstance inst = random_short_instance(FamilyId::F5_b2c2, rng, 6);
        Curve const& E = inst.curve;
        CanonicalHeight h(E, 50);
        CurvePoint P = inst.at("P1"), Q = inst.at("P4"), R = inst.at("P2");
        Real lhs = h(add(E, P, Q)).value + h(subtract(E, P, Q)).value;
        Real rhs = Real(Rational(2), 50) * (h(P).value + h(Q).value);
        CHECK(dist(lhs, rhs) < 1e-40);

        CHECK(dist(h.pairing(add(E, P, Q), R), h.pairing(P, R) + h.pairing(Q, R)) < 1e-40);
        CHECK(dist(h.pairing(P, Q), h.pairing(Q, P)) < 1e-45);
        CHECK(dist(h.pairing(P, P), h(P).value) < 1e-45);
        CHECK(dist(h.pairing(P, negate(E, P)), -h(P).value) < 1e-45);
    }
}

TEST_CASE("model invariance")
{
    for (auto const& [E, P] : sample_points(10, 107)) {
        IntegralModel M = integralize(E);
        CHECK(dist(canonical_height(E, P, 50).value, canonical_height(M.curve, map_point(M, P), 50).value) < 1e-40);

        // a non-minimal integral model: (x, y) -> (4x, 8y) on the integral curve
        Curve const& C = M.curve;
        Curve S(C.a2() * Rational(4), C.a4() * Rational(16), C.a6() * Rational(64));
        CurvePoint Q = map_point(M, P);
        CurvePoint Ps(Q.x() * Rational(4), Q.y() * Rational(8));
        REQUIRE(S.contains(Ps));
        CHECK(dist(canonical_height(E, P, 50).value, canonical_height(S, Ps, 50).value) < 1e-40);

        // and a rational model that integralizes back to M
        Curve R(E.a2() / Rational(4), E.a4() / Rational(16), E.a6() / Rational(64));
        CurvePoint Pr(P.x() / Rational(4), P.y() / Rational(8));
        CHECK(dist(canonical_height(E, P, 50).value, canonical_height(R, Pr, 50).value) < 1e-40);
    }
}

TEST_CASE("naive and canonical heights stay close")
{
    for (auto const& [E, P] : sample_points(8, 109)) {
        CanonicalHeight h(E, 30);
        CurvePoint Q = P;
        double first = 0;
        for (int k = 0; k < 4; ++k) {
            double gap = std::fabs(h(Q).value.to_double() - naive_height(Q, 30).to_double());
            if (k == 0)
                first = gap;
            // the gap is bounded along the doubling sequence, not growing like 4^k
            CHECK(gap < first + 2 * std::log(std::fabs(Real(discriminant(E), 20).to_double()) + 10) + 20);
            Q = double_point(E, Q);
        }
    }
}

TEST_CASE("determinant")
{
    RealMatrix I{{Real(Rational(2), 30), Real(Rational(1), 30)}, {Real(Rational(1), 30), Real(Rational(3), 30)}};
    CHECK(dist(determinant(I), Real(Rational(5), 30)) < 1e-28);

    // 5x5 Hilbert-style matrix against exact rational elimination
    RealMatrix H;
    for (int i = 0; i < 5; ++i) {
        H.emplace_back();
        for (int j = 0; j < 5; ++j)
            H.back().push_back(Real(Rational(1, i + j + 1), 40));
    }
    Rational exact(1, 266716800000L);
    CHECK(std::fabs(determinant(H).to_double() / Real(exact, 40).to_double() - 1) < 1e-20);
}

TEST_CASE("regulator of the alpha = 2 points")
{
    Curve E(0, -Rational(55, 64).pow(2), Rational(73, 64).pow(2));
    std::vector<CurvePoint> pts{CurvePoint(0, Rational(73, 64)), CurvePoint(Rational(-55, 64), Rational(73, 64)),
                                CurvePoint(1, Rational(5, 4))};
    RegulatorReport r = regulator(E, pts, 50, Real::from_string("1e-4", 50));
    CHECK(r.independent());
    CHECK(r.rank_lower_bound == 3);
    CHECK(std::fabs(r.det.to_double() - 73.3583597733868) < 1e-12);

    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(dist(r.gram[i][j], r.gram[j][i]) < 1e-49);
    // leading minors
    CHECK(r.gram[0][0].sign() > 0);
    CHECK((r.gram[0][0] * r.gram[1][1] - r.gram[0][1] * r.gram[1][0]).sign() > 0);
}

TEST_CASE("regulator with a dependent point")
{
    Curve E(0, -225, 64);
    CurvePoint P1(0, 8), P2(15, 8), P3(Rational(64, 225), Rational(512, 3375));
    CHECK(add(E, add(E, P1, double_point(E, P2)), P3).is_infinity());

    RegulatorReport r = regulator(E, {P1, P2, P3}, 50, Real::from_string("1e-4", 50));
    CHECK_FALSE(r.independent());
    CHECK(r.verdict == Independence::not_independent);
    CHECK(r.rank_lower_bound == 2);
    CHECK(std::fabs(r.det.to_double()) < 1e-40);

    RegulatorReport t = regulator(Curve(0, 0, 1), {CurvePoint(2, 3)}, 30, Real::from_string("1e-4", 30));
    CHECK_FALSE(t.independent());
    CHECK(t.rank_lower_bound == 0);
}

TEST_CASE("low precision gives indeterminate, never dependent")
{
    Curve E(0, -225, 64);
    CurvePoint P1(0, 8), P2(15, 8), P3(Rational(64, 225), Rational(512, 3375));
    // threshold below the error bound at 10 digits
    RegulatorReport r = regulator(E, {P1, P2, P3}, 10, Real::from_string("1e-30", 10));
    CHECK(r.verdict == Independence::indeterminate);
}
