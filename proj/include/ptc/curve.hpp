#ifndef PTC_CURVE_HPP_
#define PTC_CURVE_HPP_

#include "ptc/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ptc {

struct singular_curve : std::invalid_argument {
    singular_curve() : std::invalid_argument("singular curve: discriminant is zero") {}
};

struct point_not_on_curve : std::invalid_argument {
    point_not_on_curve() : std::invalid_argument("point is not on the curve") {}
};

/* Affine rational point or the point at infinity. */
class CurvePoint {
  public:
    CurvePoint() = default;  // infinity
    CurvePoint(Rational x, Rational y) : xy_{{std::move(x), std::move(y)}} {}

    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !xy_.has_value(); }
    Rational const& x() const { return xy_->x; }
    Rational const& y() const { return xy_->y; }

    friend bool operator==(CurvePoint const&, CurvePoint const&) = default;

    std::string to_string() const;

  private:
    struct affine {
        Rational x, y;
        friend bool operator==(affine const&, affine const&) = default;
    };
    std::optional<affine> xy_;
};

/* y^2 = x^3 + a2 x^2 + a4 x + a6 over Q.  Construction rejects singular
 * models.
 */
class Curve {
  public:
    Curve(Rational a2, Rational a4, Rational a6);

    Rational const& a2() const { return a2_; }
    Rational const& a4() const { return a4_; }
    Rational const& a6() const { return a6_; }

    /* x^3 + a2 x^2 + a4 x + a6 */
    Rational rhs(Rational const& x) const;
    bool contains(CurvePoint const& p) const;
    bool is_integral() const;

    /* Checked affine point constructor. */
    CurvePoint point(Rational x, Rational y) const;

    friend bool operator==(Curve const&, Curve const&) = default;

    std::string to_string() const;

  private:
    Rational a2_, a4_, a6_;
};

/* Cubic discriminant -4a^3c + a^2b^2 + 18abc - 4b^3 - 27c^2 with
 * (a,b,c) = (a2,a4,a6).  The Weierstrass discriminant is 16 times this.
 */
Rational discriminant(Rational const& a2, Rational const& a4, Rational const& a6);
Rational discriminant(Curve const& E);

CurvePoint negate(Curve const& E, CurvePoint const& P);
CurvePoint add(Curve const& E, CurvePoint const& P, CurvePoint const& Q);
CurvePoint subtract(Curve const& E, CurvePoint const& P, CurvePoint const& Q);
CurvePoint double_point(Curve const& E, CurvePoint const& P);
CurvePoint scalar_mul(Curve const& E, Integer const& n, CurvePoint const& P);

/* Rescaling (x,y) -> (u^2 x, u^3 y) onto a model with integer coefficients. */
struct IntegralModel {
    Curve source;
    Curve curve;
    Integer u;
};

IntegralModel integralize(Curve const& E);

/* Throws point_not_on_curve when P is not on the source curve. */
CurvePoint map_point(IntegralModel const& M, CurvePoint const& P);

/* Inverse of map_point, for points of the integral curve. */
CurvePoint unmap_point(IntegralModel const& M, CurvePoint const& P);

}  // namespace ptc

#endif /* PTC_CURVE_HPP_ */
