#include "ptc/curve.hpp"

#include "ptc/factor.hpp"

namespace ptc {

std::string CurvePoint::to_string() const
{
    if (is_infinity())
        return "infinity";
    return "(" + x().to_string() + ", " + y().to_string() + ")";
}

Curve::Curve(Rational a2, Rational a4, Rational a6)
    : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6))
{
    if (discriminant(a2_, a4_, a6_).is_zero())
        throw singular_curve();
}

Rational Curve::rhs(Rational const& x) const
{
    return ((x + a2_) * x + a4_) * x + a6_;
}

bool Curve::contains(CurvePoint const& p) const
{
    return p.is_infinity() || p.y() * p.y() == rhs(p.x());
}

bool Curve::is_integral() const
{
    return a2_.is_integral() && a4_.is_integral() && a6_.is_integral();
}

CurvePoint Curve::point(Rational x, Rational y) const
{
    CurvePoint p(std::move(x), std::move(y));
    if (!contains(p))
        throw point_not_on_curve();
    return p;
}

std::string Curve::to_string() const
{
    return "y^2 = x^3 + (" + a2_.to_string() + ")x^2 + (" + a4_.to_string() + ")x + (" +
           a6_.to_string() + ")";
}

Rational discriminant(Rational const& a, Rational const& b, Rational const& c)
{
    return Rational(-4) * a.pow(3) * c + a * a * b * b + Rational(18) * a * b * c -
           Rational(4) * b.pow(3) - Rational(27) * c * c;
}

Rational discriminant(Curve const& E)
{
    return discriminant(E.a2(), E.a4(), E.a6());
}

CurvePoint negate(Curve const&, CurvePoint const& P)
{
    if (P.is_infinity())
        return P;
    return {P.x(), -P.y()};
}

CurvePoint add(Curve const& E, CurvePoint const& P, CurvePoint const& Q)
{
    if (P.is_infinity())
        return Q;
    if (Q.is_infinity())
        return P;

    Rational slope;
    if (P.x() == Q.x()) {
        if ((P.y() + Q.y()).is_zero())
            return CurvePoint::infinity();
        // tangent
        Rational const& x = P.x();
        slope = (Rational(3) * x * x + Rational(2) * E.a2() * x + E.a4()) / (Rational(2) * P.y());
    } else {
        slope = (Q.y() - P.y()) / (Q.x() - P.x());
    }
    Rational x3 = slope * slope - E.a2() - P.x() - Q.x();
    Rational y3 = -(P.y() + slope * (x3 - P.x()));
    return {std::move(x3), std::move(y3)};
}

CurvePoint subtract(Curve const& E, CurvePoint const& P, CurvePoint const& Q)
{
    return add(E, P, negate(E, Q));
}

CurvePoint double_point(Curve const& E, CurvePoint const& P)
{
    return add(E, P, P);
}

CurvePoint scalar_mul(Curve const& E, Integer const& n, CurvePoint const& P)
{
    if (n < 0)
        return negate(E, scalar_mul(E, Integer(-n), P));
    CurvePoint acc;
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = double_point(E, acc);
        if (mpz_tstbit(n.get_mpz_t(), i))
            acc = add(E, acc, P);
    }
    return acc;
}

namespace {

unsigned ceil_div(unsigned a, unsigned b)
{
    return (a + b - 1) / b;
}

}  // namespace

IntegralModel integralize(Curve const& E)
{
    Integer l;
    mpz_lcm(l.get_mpz_t(), E.a2().den().get_mpz_t(), E.a4().den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), E.a6().den().get_mpz_t());

    Integer u = 1;
    if (l != 1) {
        for (auto const& [p, e] : factorize(l)) {
            auto need = [&](Rational const& a, unsigned w) {
                if (a.is_zero())
                    return 0u;
                unsigned v = mpz_divisible_p(a.den().get_mpz_t(), p.get_mpz_t()) ? valuation(a.den(), p) : 0;
                return ceil_div(v, w);
            };
            unsigned k = std::max({need(E.a2(), 2), need(E.a4(), 4), need(E.a6(), 6)});
            Integer pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
            u *= pk;
        }
    }
    Rational u2 = Rational(u).pow(2);
    Curve integral(E.a2() * u2, E.a4() * u2.pow(2), E.a6() * u2.pow(3));
    return {E, std::move(integral), u};
}

CurvePoint map_point(IntegralModel const& M, CurvePoint const& P)
{
    if (!M.source.contains(P))
        throw point_not_on_curve();
    if (P.is_infinity())
        return P;
    Rational u(M.u);
    return {P.x() * u.pow(2), P.y() * u.pow(3)};
}

CurvePoint unmap_point(IntegralModel const& M, CurvePoint const& P)
{
    if (!M.curve.contains(P))
        throw point_not_on_curve();
    if (P.is_infinity())
        return P;
    Rational u(M.u);
    return {P.x() / u.pow(2), P.y() / u.pow(3)};
}

}  // namespace ptc
