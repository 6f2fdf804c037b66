#include "ptc/heights.hpp"

#include "ptc/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ptc {

namespace {

/* Scoped mpfr_t at a fixed precision. */
class mp {
  public:
    explicit mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    mp(mp const&) = delete;
    mp& operator=(mp const&) = delete;
    ~mp() { mpfr_clear(v_); }
    operator mpfr_ptr() { return v_; }
    operator mpfr_srcptr() const { return v_; }
    mpfr_ptr operator->() { return v_; }
    mpfr_srcptr operator->() const { return v_; }

  private:
    mpfr_t v_;
};

void set_rational(mpfr_ptr r, Rational const& q)
{
    mpfr_set_q(r, q.raw().get_mpq_t(), MPFR_RNDN);
}

size_t bit_size(Rational const& q)
{
    return std::max(mpz_sizeinbase(q.raw().get_num_mpz_t(), 2), mpz_sizeinbase(q.raw().get_den_mpz_t(), 2));
}

/* Smallest real root of x^3 + a2 x^2 + a4 x + a6 (Cardano / trigonometric form). */
void min_real_root(mpfr_ptr out, Rational const& a2, Rational const& a4, Rational const& a6)
{
    mpfr_prec_t prec = 256 + 4 * static_cast<mpfr_prec_t>(std::max({bit_size(a2), bit_size(a4), bit_size(a6)}));
    Rational a = a2, b = a4, c = a6;
    Rational p = b - a * a / Rational(3);
    Rational q = Rational(2) * a.pow(3) / Rational(27) - a * b / Rational(3) + c;
    Rational disc = Rational(4) * p.pow(3) + Rational(27) * q * q;  // < 0: three real roots

    mp s(prec), t(prec), u(prec), pi(prec);
    if (disc.sign() < 0) {
        // s_k = 2 sqrt(-p/3) cos(theta/3 - 2 pi k/3), theta = acos((3q/2p) sqrt(-3/p))
        set_rational(t, -p / Rational(3));
        mpfr_sqrt(t, t, MPFR_RNDN);
        mpfr_set_inf(s, 1);
        for (unsigned k = 0; k < 3; ++k) {
            set_rational(u, Rational(3) * q / (Rational(2) * p));
            mpfr_div(u, u, t, MPFR_RNDN);
            if (mpfr_cmp_si(u, 1) > 0)
                mpfr_set_si(u, 1, MPFR_RNDN);
            if (mpfr_cmp_si(u, -1) < 0)
                mpfr_set_si(u, -1, MPFR_RNDN);
            mpfr_acos(u, u, MPFR_RNDN);
            mpfr_div_ui(u, u, 3, MPFR_RNDN);
            mpfr_const_pi(pi, MPFR_RNDN);
            mpfr_mul_ui(pi, pi, 2 * k, MPFR_RNDN);
            mpfr_div_ui(pi, pi, 3, MPFR_RNDN);
            mpfr_sub(u, u, pi, MPFR_RNDN);
            mpfr_cos(u, u, MPFR_RNDN);
            mpfr_mul(u, t, u, MPFR_RNDN);
            mpfr_mul_ui(u, u, 2, MPFR_RNDN);
            mpfr_min(s, s, u, MPFR_RNDN);
        }
    } else {
        // one real root: cbrt(-q/2 + sqrt(disc/108)) + cbrt(-q/2 - sqrt(disc/108))
        set_rational(t, disc / Rational(108));
        mpfr_sqrt(t, t, MPFR_RNDN);
        set_rational(u, -q / Rational(2));
        mpfr_add(s, u, t, MPFR_RNDN);
        mpfr_cbrt(s, s, MPFR_RNDN);
        mpfr_sub(u, u, t, MPFR_RNDN);
        mpfr_cbrt(u, u, MPFR_RNDN);
        mpfr_add(s, s, u, MPFR_RNDN);
    }
    set_rational(t, a / Rational(3));
    mpfr_sub(s, s, t, MPFR_RNDN);
    mpfr_set(out, s, MPFR_RNDN);
}

}  // namespace

Real naive_height(CurvePoint const& P, int digits)
{
    if (P.is_infinity())
        throw std::invalid_argument("naive height of the point at infinity");
    Integer n = abs(P.x().num());
    Integer const& d = P.x().den();
    return log_real(n > d ? n : d, digits);
}

CanonicalHeight::CanonicalHeight(Curve const& E, int digits, factor_budget const& budget)
    : model_(integralize(E)), digits_(digits)
{
    if (digits < 1)
        throw precision_unachievable("precision must be at least one digit");
    Curve const& C = model_.curve;
    bad_primes_ = prime_divisors(Integer(2 * discriminant(C).num()), budget);

    // translate so that every real point has x >= 1
    mp root(64);
    {
        mpfr_prec_t prec = 256 + 4 * static_cast<mpfr_prec_t>(
                                     std::max({bit_size(C.a2()), bit_size(C.a4()), bit_size(C.a6())}));
        mpfr_set_prec(root, prec);
        min_real_root(root, C.a2(), C.a4(), C.a6());
        mpfr_floor(root, root);
        mpfr_get_z(shift_.get_mpz_t(), root, MPFR_RNDD);
        shift_ -= 2;
    }

    Rational r(shift_);
    Rational A2 = C.a2() + Rational(3) * r;
    Rational A4 = C.a4() + Rational(2) * C.a2() * r + Rational(3) * r * r;
    Rational A6 = C.rhs(r);
    b2_ = Rational(4) * A2;
    b4_ = Rational(2) * A4;
    b6_ = Rational(4) * A6;
    b8_ = Rational(4) * A2 * A6 - A4 * A4;
}

bool CanonicalHeight::nonsingular_reduction(CurvePoint const& Q, Integer const& p) const
{
    if (Q.is_infinity())
        return true;
    Rational const& x = Q.x();
    if (mpz_divisible_p(x.den().get_mpz_t(), p.get_mpz_t()))
        return true;
    Curve const& C = model_.curve;
    Rational dfdx = (Rational(3) * x + Rational(2) * C.a2()) * x + C.a4();
    Rational two_y = Rational(2) * Q.y();
    auto divisible = [&](Rational const& v) {
        return v.is_zero() || mpz_divisible_p(v.num().get_mpz_t(), p.get_mpz_t());
    };
    return !(divisible(dfdx) && divisible(two_y));
}

Real CanonicalHeight::archimedean(CurvePoint const& Q) const
{
    int extra = static_cast<int>(std::ceil(std::log10(0.7 * static_cast<double>(bit_size(Q.x())) + 1.0))) + 3;
    int wd = digits_ + guard_digits + extra;
    mpfr_prec_t prec = bits_for_digits(wd);

    mp x(prec), b2(prec), b4(prec), b6(prec), b8(prec);
    mp phi(prec), den(prec), z(prec), acc(prec), term(prec), x4(prec);
    set_rational(x, Q.x() - Rational(shift_));
    set_rational(b2, b2_);
    set_rational(b4, b4_);
    set_rational(b6, b6_);
    set_rational(b8, b8_);

    mpfr_log(acc, x, MPFR_RNDN);
    mpfr_div_2ui(acc, acc, 1, MPFR_RNDN);

    double bound = std::log1p(std::fabs(b4_.raw().get_d()) + 2 * std::fabs(b6_.raw().get_d()) +
                              std::fabs(b8_.raw().get_d()));
    bound = std::max(bound, 1.0);
    double target = std::pow(10.0, -wd);
    double rounding = 0.0;
    double unit = std::ldexp(1.0, -static_cast<int>(prec) + 4);

    int n = 0;
    for (;; ++n) {
        if (std::ldexp(bound, -2 * n) / 6.0 < target)
            break;
        if (n > 100000)
            throw precision_unachievable("archimedean series did not converge");
        // phi = x^4 - b4 x^2 - 2 b6 x - b8,  den = 4x^3 + b2 x^2 + 2 b4 x + b6
        mpfr_sqr(phi, x, MPFR_RNDN);
        mpfr_sub(phi, phi, b4, MPFR_RNDN);
        mpfr_mul(phi, phi, x, MPFR_RNDN);
        mpfr_sub(phi, phi, b6, MPFR_RNDN);
        mpfr_sub(phi, phi, b6, MPFR_RNDN);
        mpfr_mul(phi, phi, x, MPFR_RNDN);
        mpfr_sub(phi, phi, b8, MPFR_RNDN);

        mpfr_mul_ui(den, x, 4, MPFR_RNDN);
        mpfr_add(den, den, b2, MPFR_RNDN);
        mpfr_mul(den, den, x, MPFR_RNDN);
        mpfr_add(den, den, b4, MPFR_RNDN);
        mpfr_add(den, den, b4, MPFR_RNDN);
        mpfr_mul(den, den, x, MPFR_RNDN);
        mpfr_add(den, den, b6, MPFR_RNDN);

        mpfr_sqr(x4, x, MPFR_RNDN);
        mpfr_sqr(x4, x4, MPFR_RNDN);
        mpfr_div(z, phi, x4, MPFR_RNDN);
        if (mpfr_sgn(z) <= 0)
            throw precision_unachievable("archimedean series left the real locus");
        mpfr_log(term, z, MPFR_RNDN);

        double lz = std::fabs(mpfr_get_d(term, MPFR_RNDN));
        bound = std::max(bound, 2.0 * lz);
        rounding += std::ldexp(std::max(lz, 1.0) * unit, -2 * n);

        mpfr_div_2ui(term, term, static_cast<unsigned long>(2 * n + 3), MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);

        if (mpfr_zero_p(den))
            break;  // 2^(n+1) Q = O: the remaining terms vanish
        mpfr_div(x, phi, den, MPFR_RNDN);
    }

    Real out(digits_ + extra);
    mpfr_set_prec(out.get(), prec);
    mpfr_set(out.get(), acc, MPFR_RNDN);
    out.set_error(std::ldexp(bound, -2 * n) / 6.0 + rounding + std::fabs(mpfr_get_d(acc, MPFR_RNDN)) * unit);
    return out;
}

HeightValue CanonicalHeight::operator()(CurvePoint const& P) const
{
    Curve const& E = model_.source;
    if (!E.contains(P))
        throw point_not_on_curve();
    if (P.is_infinity() || point_order(E, P).finite) {
        Real zero(digits_);
        zero.set_error(0.0);
        return {zero, digits_};
    }

    Curve const& C = model_.curve;
    CurvePoint P0 = map_point(model_, P);

    std::vector<CurvePoint> multiples{CurvePoint::infinity(), P0};
    auto multiple = [&](size_t k) -> CurvePoint const& {
        while (multiples.size() <= k)
            multiples.push_back(add(C, multiples.back(), P0));
        return multiples[k];
    };

    Integer m = 1;
    for (auto const& p : bad_primes_) {
        size_t k = 1;
        while (!nonsingular_reduction(multiple(k), p)) {
            if (++k > static_cast<size_t>(max_component_multiple))
                throw precision_unachievable("component group search exceeded at p = " + p.get_str());
        }
        mpz_lcm_ui(m.get_mpz_t(), m.get_mpz_t(), k);
    }
    CurvePoint Q = m.fits_ulong_p() && m.get_ui() < multiples.size() ? multiples[m.get_ui()] : scalar_mul(C, m, P0);

    int wd = digits_ + guard_digits;
    Real lam = archimedean(Q);
    Real lden = log_real(Q.x().den(), wd);
    Real two(Rational(2), wd);
    Real m2(Rational(Integer(m * m)), wd);
    Real h = (two * lam + lden) / m2;

    Real out(digits_);
    mpfr_set(out.get(), h.get(), MPFR_RNDN);
    out.set_error(h.error() + out.ulp());
    return {out, digits_};
}

Real CanonicalHeight::pairing(CurvePoint const& P, CurvePoint const& Q) const
{
    Curve const& E = model_.source;
    Real sum = (*this)(add(E, P, Q)).value;
    Real half(Rational(1, 2), digits_);
    return (sum - (*this)(P).value - (*this)(Q).value) * half;
}

HeightValue canonical_height(Curve const& E, CurvePoint const& P, int digits)
{
    return CanonicalHeight(E, digits)(P);
}

Real height_pairing(Curve const& E, CurvePoint const& P, CurvePoint const& Q, int digits)
{
    return CanonicalHeight(E, digits).pairing(P, Q);
}

Real determinant(RealMatrix const& M)
{
    size_t n = M.size();
    int digits = n ? M[0][0].digits() : 50;
    if (n == 0)
        return Real(Rational(1), digits);

    if (n <= 4) {
        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), size_t{0});
        Real det(digits);
        do {
            // parity by counting inversions
            int inv = 0;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    inv += perm[i] > perm[j];
            Real term = M[0][perm[0]];
            for (size_t i = 1; i < n; ++i)
                term = term * M[i][perm[i]];
            det = inv % 2 ? det - term : det + term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    }

    RealMatrix A = M;
    Real det(Rational(1), digits);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (mpfr_cmpabs(A[r][col].get(), A[piv][col].get()) > 0)
                piv = r;
        if (A[piv][col].is_zero())
            return Real(digits);
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det = det * A[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            Real f = A[r][col] / A[col][col];
            for (size_t c = col; c < n; ++c)
                A[r][c] = A[r][c] - f * A[col][c];
        }
    }
    return det;
}

std::string_view independence_name(Independence v)
{
    switch (v) {
    case Independence::independent: return "independent";
    case Independence::not_independent: return "not_independent";
    case Independence::indeterminate: return "indeterminate";
    }
    return "unknown";
}

namespace {

Independence classify(Real const& det, Real const& epsilon)
{
    double eps = epsilon.to_double();
    if (!(eps > 1e3 * det.error()))
        return Independence::indeterminate;
    return mpfr_cmp_d(det.abs().get(), eps) > 0 ? Independence::independent : Independence::not_independent;
}

RealMatrix submatrix(RealMatrix const& G, std::vector<size_t> const& idx)
{
    RealMatrix S;
    for (size_t i : idx) {
        S.emplace_back();
        for (size_t j : idx)
            S.back().push_back(G[i][j]);
    }
    return S;
}

}  // namespace

RegulatorReport regulator(CanonicalHeight const& h, std::vector<CurvePoint> const& points, Real const& epsilon)
{
    if (points.empty())
        throw std::invalid_argument("regulator needs at least one point");
    Curve const& E = h.curve();
    for (auto const& P : points)
        if (!E.contains(P))
            throw point_not_on_curve();

    size_t n = points.size();
    std::vector<Real> diag;
    for (auto const& P : points)
        diag.push_back(h(P).value);

    Real half(Rational(1, 2), h.digits());
    RealMatrix gram(n, std::vector<Real>(n, Real(h.digits())));
    for (size_t i = 0; i < n; ++i) {
        gram[i][i] = diag[i];
        for (size_t j = i + 1; j < n; ++j) {
            Real s = h(add(E, points[i], points[j])).value;
            gram[i][j] = (s - diag[i] - diag[j]) * half;
            gram[j][i] = gram[i][j];
        }
    }

    Real det = determinant(gram);
    Independence verdict = classify(det, epsilon);
    int bound = 0;
    if (verdict == Independence::independent) {
        bound = static_cast<int>(n);
    } else {
        std::vector<size_t> chosen;
        for (size_t i = 0; i < n; ++i) {
            chosen.push_back(i);
            if (classify(determinant(submatrix(gram, chosen)), epsilon) != Independence::independent)
                chosen.pop_back();
        }
        bound = static_cast<int>(chosen.size());
    }
    return {E, points, std::move(gram), std::move(det), h.digits(), epsilon, verdict, bound};
}

RegulatorReport regulator(Curve const& E, std::vector<CurvePoint> const& points, int digits, Real const& epsilon)
{
    return regulator(CanonicalHeight(E, digits), points, epsilon);
}

}  // namespace ptc
