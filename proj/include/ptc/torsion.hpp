#ifndef PTC_TORSION_HPP_
#define PTC_TORSION_HPP_

#include "ptc/factor.hpp"
#include "ptc/families.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ptc {

struct curve_not_integral : std::invalid_argument {
    curve_not_integral() : std::invalid_argument("curve does not have integer coefficients") {}
};

struct non_primitive_triple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* Largest order of a rational torsion point (Mazur). */
inline constexpr int mazur_bound = 12;

enum class CertificateKind { non_integral_coordinates, y_not_dividing_d, mazur_exhaustion };

std::string_view certificate_name(CertificateKind k);

struct OrderVerdict {
    bool finite = false;
    int order = 0;  // valid when finite
    CertificateKind certificate = CertificateKind::mazur_exhaustion;  // valid when !finite

    static OrderVerdict finite_order(int n) { return {true, n, CertificateKind::mazur_exhaustion}; }
    static OrderVerdict infinite(CertificateKind k) { return {false, 0, k}; }

    friend bool operator==(OrderVerdict const&, OrderVerdict const&) = default;
};

/* First n in 1..12 with nP = O, else infinite order. */
OrderVerdict point_order(Curve const& E, CurvePoint const& P);

/* Nagell-Lutz shortcut: a point of the integral model with a non-integer
 * coordinate has infinite order.  The point is given on M.source and mapped
 * first.  Returns nullopt when both coordinates are integers.
 */
std::optional<OrderVerdict> lemma2_nonintegrality_certificate(IntegralModel const& M, CurvePoint const& P);

/* Same, for a point on a curve that must already be integral
 * (throws curve_not_integral otherwise).
 */
std::optional<OrderVerdict> lemma2_nonintegrality_certificate(Curve const& E, CurvePoint const& P);

/* Integer roots of x^3 + a2 x^2 + a4 x + a6, ascending, each once. */
std::vector<Integer> integer_roots_of_cubic(Integer const& a2, Integer const& a4, Integer const& a6);

/* Every rational torsion point of the integral curve, Infinity first, then
 * ordered by (x, y).  Candidates are the y = 0 roots and the integer points
 * with y | D; each is kept only if point_order finds a finite order.
 */
std::vector<CurvePoint> nagell_lutz_torsion(IntegralModel const& M, factor_budget const& budget = {});

/* Torsion of an arbitrary rational curve, computed on its integral model and
 * mapped back.
 */
std::vector<CurvePoint> torsion_points(Curve const& E, factor_budget const& budget = {});

/* F6/F7 divisibility argument on P2 = (-b^2, abc) resp. (-a^2, abc):
 * under the parity gate (b odd for F6, a odd for F7), abc not dividing D
 * means infinite order.  nullopt when the gate fails or abc | D.
 */
std::optional<OrderVerdict> remark_divisibility_certificate(FamilyId f, PythTriple const& T);

struct PositiveRankCertificate {
    FamilyId family;
    PythTriple triple;
    CurvePoint witness;
    OrderVerdict verdict;

    bool ok() const { return !verdict.finite; }
};

/* Witness point of the family at a primitive triple, certified by the
 * non-integrality shortcut or by Mazur exhaustion.  Throws
 * non_primitive_triple.
 */
PositiveRankCertificate certify_positive_rank(FamilyId f, PythTriple const& T);

}  // namespace ptc

#endif /* PTC_TORSION_HPP_ */
