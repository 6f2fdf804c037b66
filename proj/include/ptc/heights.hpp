#ifndef PTC_HEIGHTS_HPP_
#define PTC_HEIGHTS_HPP_

#include "ptc/factor.hpp"
#include "ptc/curve.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ptc {

struct precision_unachievable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* log max(|num x|, |den x|) of an affine point. */
Real naive_height(CurvePoint const& P, int digits);

struct HeightValue {
    Real value;
    int digits;
};

/*
 * Canonical (Neron-Tate) height on one curve.
 *
 * Normalization: h^(P) ~ log max(|num x|, |den x|), i.e. twice the sum of
 * Tate-normalized local heights (local heights with
 * lambda(2P) = 4 lambda(P) - log|2y(P)|).  With this convention
 * h^(P) - naive_height(P) stays bounded.
 *
 * Evaluation on the integral model M:
 *   - m = smallest positive integer with mP in the subgroup of points with
 *     non-singular reduction at every prime dividing 2*D (or mP = O, in
 *     which case P is torsion and h^(P) = 0);
 *   - at such a point every non-archimedean local height is
 *     (1/2) max(0, log|x|_p), so their sum is (1/2) log den(x(mP));
 *   - the archimedean local height uses Tate's series after the integer
 *     translation x -> x - r that moves all real points to x >= 1:
 *       lambda = (1/2) log x + (1/8) sum_{n>=0} 4^-n log z(2^n Q),
 *       z = 1 - b4/x^2 - 2 b6/x^3 - b8/x^4;
 *   - h^(P) = (2 lambda_inf(mP) + log den(x(mP))) / m^2.
 * Translation and rescaling leave the total unchanged, so the result is
 * independent of the model.
 */
class CanonicalHeight {
  public:
    CanonicalHeight(Curve const& E, int digits, factor_budget const& budget = {});

    Curve const& curve() const { return model_.source; }
    int digits() const { return digits_; }

    /* Height of a point on curve(); Infinity and torsion points give 0. */
    HeightValue operator()(CurvePoint const& P) const;

    /* (h^(P+Q) - h^(P) - h^(Q)) / 2 */
    Real pairing(CurvePoint const& P, CurvePoint const& Q) const;

    /* Largest multiple searched per bad prime before giving up. */
    static constexpr int max_component_multiple = 720;

  private:
    Real archimedean(CurvePoint const& Q) const;
    bool nonsingular_reduction(CurvePoint const& Q, Integer const& p) const;

    IntegralModel model_;
    int digits_;
    std::vector<Integer> bad_primes_;
    Integer shift_;
    // b-invariants of the translated integral model
    Rational b2_, b4_, b6_, b8_;
};

HeightValue canonical_height(Curve const& E, CurvePoint const& P, int digits);
Real height_pairing(Curve const& E, CurvePoint const& P, CurvePoint const& Q, int digits);

using RealMatrix = std::vector<std::vector<Real>>;

/* Leibniz expansion for n <= 4, partial-pivot elimination beyond. */
Real determinant(RealMatrix const& M);

enum class Independence { independent, not_independent, indeterminate };

std::string_view independence_name(Independence v);

struct RegulatorReport {
    Curve curve;
    std::vector<CurvePoint> points;
    RealMatrix gram;
    Real det;
    int digits;
    Real epsilon;
    Independence verdict;
    /* Size of the point list when independent, otherwise of a greedily
     * chosen subset whose Gram determinant clears epsilon.
     */
    int rank_lower_bound;

    bool independent() const { return verdict == Independence::independent; }
};

/* Default independence threshold. */
inline constexpr std::string_view default_epsilon = "1e-4";

/* Gram matrix of the height pairing and its determinant.  The verdict is
 * indeterminate unless epsilon exceeds 10^3 times the determinant's error
 * bound.
 */
RegulatorReport regulator(Curve const& E, std::vector<CurvePoint> const& points, int digits,
                          Real const& epsilon);
RegulatorReport regulator(CanonicalHeight const& h, std::vector<CurvePoint> const& points,
                          Real const& epsilon);

}  // namespace ptc

#endif /* PTC_HEIGHTS_HPP_ */
