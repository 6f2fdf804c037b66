#include "ptc/torsion.hpp"

#include <algorithm>

namespace ptc {

std::string_view certificate_name(CertificateKind k)
{
    switch (k) {
    case CertificateKind::non_integral_coordinates: return "non_integral_coordinates";
    case CertificateKind::y_not_dividing_d: return "y_not_dividing_d";
    case CertificateKind::mazur_exhaustion: return "mazur_exhaustion";
    }
    return "unknown";
}

OrderVerdict point_order(Curve const& E, CurvePoint const& P)
{
    if (!E.contains(P))
        throw point_not_on_curve();
    CurvePoint Q = P;
    for (int n = 1; n <= mazur_bound; ++n) {
        if (Q.is_infinity())
            return OrderVerdict::finite_order(n);
        Q = add(E, Q, P);
    }
    return OrderVerdict::infinite(CertificateKind::mazur_exhaustion);
}

std::optional<OrderVerdict> lemma2_nonintegrality_certificate(IntegralModel const& M, CurvePoint const& P)
{
    CurvePoint Q = map_point(M, P);
    if (Q.is_infinity() || (Q.x().is_integral() && Q.y().is_integral()))
        return std::nullopt;
    return OrderVerdict::infinite(CertificateKind::non_integral_coordinates);
}

std::optional<OrderVerdict> lemma2_nonintegrality_certificate(Curve const& E, CurvePoint const& P)
{
    if (!E.is_integral())
        throw curve_not_integral();
    return lemma2_nonintegrality_certificate(IntegralModel{E, E, 1}, P);
}

namespace {

Integer eval_cubic(Integer const& a2, Integer const& a4, Integer const& a6, Integer const& x)
{
    return Integer(((x + a2) * x + a4) * x + a6);
}

Integer floor_div(Integer const& a, long b)
{
    Integer q;
    mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
    return q;
}

}  // namespace

std::vector<Integer> integer_roots_of_cubic(Integer const& a2, Integer const& a4, Integer const& a6)
{
    auto g = [&](Integer const& x) { return eval_cubic(a2, a4, a6, x); };
    // Cauchy bound on the roots
    Integer bound = abs(a2);
    for (Integer v : {Integer(abs(a4)), Integer(abs(a6))})
        if (v > bound)
            bound = v;
    bound += 1;
    std::vector<Integer> roots;

    // monotone search on [lo, hi]
    auto search = [&](Integer lo, Integer hi) {
        if (lo > hi)
            return;
        Integer glo = g(lo), ghi = g(hi);
        if (glo == 0)
            roots.push_back(lo);
        if (ghi == 0)
            roots.push_back(hi);
        if (sgn(glo) * sgn(ghi) >= 0)
            return;
        while (hi - lo > 1) {
            Integer mid = floor_div(Integer(lo + hi), 2);
            Integer gm = g(mid);
            if (gm == 0) {
                roots.push_back(mid);
                return;
            }
            if (sgn(gm) == sgn(glo))
                lo = mid;
            else
                hi = mid;
        }
    };
    auto scan = [&](Integer lo, Integer hi) {
        for (Integer x = lo < -bound ? Integer(-bound) : lo; x <= hi && x <= bound; ++x)
            if (g(x) == 0)
                roots.push_back(x);
    };

    // critical points of g: 3x^2 + 2 a2 x + a4 = 0
    Integer disc = 4 * a2 * a2 - 12 * a4;
    if (disc <= 0) {
        search(-bound, bound);
    } else {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        // true critical points lie in [(-2a2 -+ (s+1))/6, (-2a2 -+ s)/6]
        Integer c1lo = floor_div(Integer(-2 * a2 - s - 1), 6) - 1;
        Integer c1hi = floor_div(Integer(-2 * a2 - s), 6) + 2;
        Integer c2lo = floor_div(Integer(-2 * a2 + s), 6) - 1;
        Integer c2hi = floor_div(Integer(-2 * a2 + s + 1), 6) + 2;
        if (c1hi >= c2lo) {
            search(-bound, c1lo);
            scan(c1lo, c2hi);
            search(c2hi, bound);
        } else {
            search(-bound, c1lo);
            scan(c1lo, c1hi);
            search(c1hi, c2lo);
            scan(c2lo, c2hi);
            search(c2hi, bound);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

bool point_less(CurvePoint const& p, CurvePoint const& q)
{
    if (p.is_infinity() || q.is_infinity())
        return p.is_infinity() && !q.is_infinity();
    if (p.x() != q.x())
        return p.x() < q.x();
    return p.y() < q.y();
}

}  // namespace

std::vector<CurvePoint> nagell_lutz_torsion(IntegralModel const& M, factor_budget const& budget)
{
    Curve const& E = M.curve;
    if (!E.is_integral())
        throw curve_not_integral();
    Integer a2 = E.a2().num(), a4 = E.a4().num(), a6 = E.a6().num();
    Integer D = discriminant(E).num();

    std::vector<CurvePoint> candidates;
    for (auto const& x : integer_roots_of_cubic(a2, a4, a6))
        candidates.emplace_back(Rational(x), Rational(0));
    for (auto const& y : positive_divisors(D, budget)) {
        for (auto const& x : integer_roots_of_cubic(a2, a4, Integer(a6 - y * y))) {
            candidates.emplace_back(Rational(x), Rational(y));
            candidates.emplace_back(Rational(x), Rational(Integer(-y)));
        }
    }

    std::vector<CurvePoint> out{CurvePoint::infinity()};
    for (auto const& P : candidates)
        if (point_order(E, P).finite)
            out.push_back(P);
    std::sort(out.begin(), out.end(), point_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<CurvePoint> torsion_points(Curve const& E, factor_budget const& budget)
{
    IntegralModel M = integralize(E);
    std::vector<CurvePoint> out;
    for (auto const& P : nagell_lutz_torsion(M, budget))
        out.push_back(unmap_point(M, P));
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

std::optional<OrderVerdict> remark_divisibility_certificate(FamilyId f, PythTriple const& T)
{
    if (is_short_family(f))
        throw parameter_kind_mismatch("divisibility certificate applies to F6 and F7 only");
    if (!T.is_primitive())
        throw non_primitive_triple("not a primitive Pythagorean triple: " + T.to_string());

    Integer const& gated = f == FamilyId::F6_frey_ac ? T.b : T.a;
    if (mpz_even_p(gated.get_mpz_t()))
        return std::nullopt;

    Integer D = closed_form_discriminant(f, T);
    Integer abc = T.a * T.b * T.c;
    if (mpz_divisible_p(D.get_mpz_t(), abc.get_mpz_t()))
        return std::nullopt;
    return OrderVerdict::infinite(CertificateKind::y_not_dividing_d);
}

PositiveRankCertificate certify_positive_rank(FamilyId f, PythTriple const& T)
{
    if (!T.is_primitive())
        throw non_primitive_triple("not a primitive Pythagorean triple: " + T.to_string());
    FamilyInstance inst = construct(f, T);
    CurvePoint const& W = inst.at(witness_name(f));
    IntegralModel M = integralize(inst.curve);
    std::optional<OrderVerdict> v = lemma2_nonintegrality_certificate(M, W);
    return {f, T, W, v ? *v : point_order(inst.curve, W)};
}

}  // namespace ptc
