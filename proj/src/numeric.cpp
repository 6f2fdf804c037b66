#include "ptc/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace ptc {

Rational::Rational(Integer const& num, Integer const& den)
{
    if (den == 0)
        throw zero_denominator();
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
}

Rational& Rational::operator/=(Rational const& o)
{
    if (o.is_zero())
        throw zero_denominator();
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(unsigned e) const
{
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(std::move(r));
}

std::string Rational::to_string() const
{
    if (is_integral())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational rational_reduce(Integer const& num, Integer const& den)
{
    return Rational(num, den);
}

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("malformed integer");
    Integer v(std::string(s), 10);
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer n = parse_integer(s.substr(0, slash));
        Integer d = parse_integer(s.substr(slash + 1));
        return Rational(n, d);
    }

    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        Integer ev = parse_integer(s.substr(e + 1));
        if (!ev.fits_slong_p() || abs(ev) > 100000)
            throw std::invalid_argument("exponent out of range");
        exp10 = ev.get_si();
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed decimal");
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s))
            throw std::invalid_argument("malformed rational");
        digits = std::string(s);
    }
    if (digits.empty())
        digits = "0";
    Integer n(digits, 10);
    if (neg)
        n = -n;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
    return exp10 >= 0 ? Rational(Integer(n * p)) : Rational(n, p);
}

mpfr_prec_t bits_for_digits(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil((digits + guard_digits) * 3.3219280948873623)) + 8;
}

Real::Real(int digits) : digits_(digits)
{
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_zero(v_, 1);
}

Real::Real(Rational const& q, int digits) : Real(digits)
{
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
    err_ = q.is_integral() && mpfr_integer_p(v_) ? 0.0 : ulp();
}

Real::Real(Real const& o) : digits_(o.digits_), err_(o.err_)
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : Real(o) {}

Real& Real::operator=(Real const& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
        err_ = o.err_;
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        std::swap(digits_, o.digits_);
        std::swap(err_, o.err_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_string(std::string const& s, int digits)
{
    Real r(digits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(r.v_))
        throw std::invalid_argument("malformed real: " + s);
    r.err_ = r.ulp();
    return r;
}

double Real::ulp() const
{
    if (mpfr_zero_p(v_) || !mpfr_number_p(v_))
        return std::ldexp(1.0, -static_cast<int>(mpfr_get_prec(v_)));
    long e = mpfr_get_exp(v_) - static_cast<long>(mpfr_get_prec(v_));
    return std::ldexp(1.0, static_cast<int>(std::max(e, -1000L)));
}

std::string Real::to_string(int sig) const
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", sig, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

Real Real::operator-() const
{
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const
{
    Real r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

namespace {

Real result_for(Real const& a, Real const& b)
{
    return Real(std::min(a.digits(), b.digits()));
}

double magnitude(Real const& a)
{
    return std::fabs(a.to_double());
}

}  // namespace

Real operator+(Real const& a, Real const& b)
{
    Real r = result_for(a, b);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.err_ = a.err_ + b.err_ + r.ulp();
    return r;
}

Real operator-(Real const& a, Real const& b)
{
    Real r = result_for(a, b);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.err_ = a.err_ + b.err_ + r.ulp();
    return r;
}

Real operator*(Real const& a, Real const& b)
{
    Real r = result_for(a, b);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.err_ = magnitude(a) * b.err_ + magnitude(b) * a.err_ + a.err_ * b.err_ + r.ulp();
    return r;
}

Real operator/(Real const& a, Real const& b)
{
    if (b.is_zero())
        throw zero_denominator();
    Real r = result_for(a, b);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    double bb = magnitude(b) - b.err_;
    r.err_ = bb > 0 ? (a.err_ + magnitude(r) * b.err_) / bb + r.ulp()
                    : std::numeric_limits<double>::infinity();
    return r;
}

Real log_real(Integer const& n, int digits)
{
    if (n <= 0)
        throw non_positive_log();
    return log_real(Rational(n), digits);
}

Real log_real(Rational const& q, int digits)
{
    if (q.sign() <= 0)
        throw non_positive_log();
    // log of a b-bit integer is about 0.7 b; keep the absolute error at 10^-digits
    size_t size = std::max(mpz_sizeinbase(q.raw().get_num_mpz_t(), 2),
                           mpz_sizeinbase(q.raw().get_den_mpz_t(), 2));
    int extra = static_cast<int>(std::ceil(std::log10(static_cast<double>(size) + 1.0))) + 1;

    Real r(digits);
    mpfr_t t, u;
    mpfr_prec_t prec = bits_for_digits(digits + extra);
    mpfr_init2(t, prec);
    mpfr_init2(u, prec);
    auto unit = [prec](mpfr_srcptr x) {
        return mpfr_zero_p(x) ? 0.0 : std::ldexp(1.0, static_cast<int>(mpfr_get_exp(x) - prec));
    };
    mpfr_set_z(t, q.raw().get_num_mpz_t(), MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_set_z(u, q.raw().get_den_mpz_t(), MPFR_RNDN);
    mpfr_log(u, u, MPFR_RNDN);
    double err = unit(t) + unit(u);
    mpfr_sub(t, t, u, MPFR_RNDN);
    err += unit(t);
    mpfr_set(r.get(), t, MPFR_RNDN);
    mpfr_clear(t);
    mpfr_clear(u);
    r.set_error(q == Rational(1) ? 0.0 : err + r.ulp());
    return r;
}

}  // namespace ptc
