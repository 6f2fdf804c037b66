#ifndef PTC_NUMERIC_HPP_
#define PTC_NUMERIC_HPP_

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ptc {

/* Arbitrary-precision signed integer. */
using Integer = mpz_class;

struct zero_denominator : std::domain_error {
    zero_denominator() : std::domain_error("zero denominator") {}
};

struct non_positive_log : std::domain_error {
    non_positive_log() : std::domain_error("logarithm of a non-positive value") {}
};

/* Exact rational number, always in lowest terms with a positive
 * denominator.  Arithmetic results are canonical as produced by GMP.
 */
class Rational {
  public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(Integer const& v) : q_(v) {}
    Rational(Integer const& num, Integer const& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    mpq_class const& raw() const { return q_; }

    bool is_integral() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(Rational const& o) { q_ += o.q_; return *this; }
    Rational& operator-=(Rational const& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(Rational const& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(Rational const& o);

    friend Rational operator+(Rational a, Rational const& b) { return a += b; }
    friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
    friend Rational operator/(Rational a, Rational const& b) { return a /= b; }

    friend bool operator==(Rational const& a, Rational const& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational pow(unsigned e) const;

    /* "num/den", or "num" when integral. */
    std::string to_string() const;

  private:
    mpq_class q_;
};

/* Canonical form of num/den; throws zero_denominator. */
Rational rational_reduce(Integer const& num, Integer const& den);

inline bool is_integral(Rational const& q) { return q.is_integral(); }

/* Accepts "n", "p/q" and decimal strings ("-4.9", "1e-3", "2.5E+2"),
 * converted exactly.  Throws std::invalid_argument on malformed input.
 */
Rational parse_rational(std::string_view s);

/* Guard digits carried by every composite real computation. */
inline constexpr int guard_digits = 10;

/* Real number at a decimal precision, with an error radius.
 *
 * The value is stored with enough bits for `digits` decimal digits plus
 * guard digits; `error()` bounds |stored - exact| for the quantity the
 * value approximates.  Arithmetic propagates the radii (sums add,
 * products use the first-order bound plus the cross term) and adds one
 * rounding unit per operation.
 */
class Real {
  public:
    explicit Real(int digits = 50);
    Real(Rational const& q, int digits);
    Real(Real const& o);
    Real(Real&& o) noexcept;
    Real& operator=(Real const& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from_string(std::string const& s, int digits);

    int digits() const { return digits_; }
    double error() const { return err_; }
    void set_error(double e) { err_ = e; }
    void widen_error(double e) { err_ += e; }

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /* `sig` significant decimal digits, plain notation when reasonable. */
    std::string to_string(int sig) const;
    std::string to_string() const { return to_string(digits_); }

    Real operator-() const;
    friend Real operator+(Real const& a, Real const& b);
    friend Real operator-(Real const& a, Real const& b);
    friend Real operator*(Real const& a, Real const& b);
    friend Real operator/(Real const& a, Real const& b);
    Real& operator+=(Real const& o) { return *this = *this + o; }
    Real& operator-=(Real const& o) { return *this = *this - o; }
    Real& operator*=(Real const& o) { return *this = *this * o; }
    Real& operator/=(Real const& o) { return *this = *this / o; }

    Real abs() const;

    /* One unit in the last stored place, as a double. */
    double ulp() const;

  private:
    mpfr_t v_;
    int digits_;
    double err_ = 0.0;
};

/* Bits needed to hold `digits` decimal digits plus guard digits. */
mpfr_prec_t bits_for_digits(int digits);

/* Natural logarithm of a positive rational, |error| <= 10^-digits.
 * Evaluated as log|num| - log(den) so no rounding enters before the log.
 */
Real log_real(Rational const& q, int digits);
Real log_real(Integer const& n, int digits);

}  // namespace ptc

#endif /* PTC_NUMERIC_HPP_ */
