#ifndef PTC_FAMILIES_HPP_
#define PTC_FAMILIES_HPP_

#include "ptc/curve.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptc {

struct degenerate_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parameter_kind_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PythTriple {
    Integer a, b, c;

    bool is_pythagorean() const { return a > 0 && b > 0 && c > 0 && a * a + b * b == c * c; }
    bool is_primitive() const;
    std::string to_string() const;

    friend bool operator==(PythTriple const&, PythTriple const&) = default;
};

/* Generator precondition failures, reported one at a time. */
struct mn_precondition_error : std::invalid_argument {
    enum class reason { ordering, not_coprime, both_odd };
    reason why;
    mn_precondition_error(reason r, std::string const& msg) : std::invalid_argument(msg), why(r) {}
};

/* (m^2 - n^2, 2mn, m^2 + n^2) for m > n > 0 coprime of opposite parity. */
PythTriple ppt_from_mn(Integer const& m, Integer const& n);

/* All primitive triples with c <= limit, legs ordered a < b, sorted by (c, a). */
std::vector<PythTriple> enumerate_ppts(long limit);

/* Parametrized rational triple a = t^2 - 1, b = 2t, c = t^2 + 1. */
struct RationalTriple {
    Rational a, b, c, t;
};

RationalTriple triple_from_t(Rational const& t);

enum class FamilyId { F1_a2c2, F2_a2b2, F3_b2a2, F4_c2b2, F5_b2c2, F6_frey_ac, F7_frey_bc };

inline constexpr std::array<FamilyId, 7> all_families{
    FamilyId::F1_a2c2, FamilyId::F2_a2b2, FamilyId::F3_b2a2, FamilyId::F4_c2b2,
    FamilyId::F5_b2c2, FamilyId::F6_frey_ac, FamilyId::F7_frey_bc};

std::string_view family_name(FamilyId f);
FamilyId parse_family(std::string_view s);

/* F1..F5: y^2 = x^3 - A^2 x + B^2 with A, B two of the triple entries. */
bool is_short_family(FamilyId f);

enum class ParamKind { t, alpha, T, m, u, triple };

std::string_view param_name(ParamKind k);
ParamKind parse_param_kind(std::string_view s);

struct ParamBinding {
    ParamKind kind = ParamKind::t;
    Rational value;                  // unused for ParamKind::triple
    std::optional<PythTriple> triple;
};

struct NamedPoint {
    std::string name;
    CurvePoint point;
};

struct FamilyInstance {
    FamilyId family;
    ParamBinding param;
    Curve curve;
    std::vector<NamedPoint> points;

    /* Throws std::out_of_range for unknown names. */
    CurvePoint const& at(std::string_view name) const;
    bool has(std::string_view name) const;
};

/* Short family at a rational t (F1..F5). */
FamilyInstance construct(FamilyId f, Rational const& t);

/* Any family at a positive integer Pythagorean triple.  F1..F5 produce the
 * integral model y^2 = x^3 - A^2 x + B^2.
 */
FamilyInstance construct(FamilyId f, PythTriple const& T);

/* Front-end dispatch: t for F1..F5, alpha for F1, T for F2, m for F3,
 * u for F4.  Throws parameter_kind_mismatch otherwise.
 */
FamilyInstance construct(FamilyId f, ParamKind kind, Rational const& value);

struct AlphaSubstitution {
    Rational t, v;  // 1 + 4t^2 = v^2
};

/* t = (alpha^2 - 1)/(4 alpha); F1 at this t also carries R = (1, v). */
AlphaSubstitution substitute_alpha(Rational const& alpha);

struct PointSubstitution {
    Rational t;
    CurvePoint extra;
};

/* t = 4T^3 with extra point (-4T^2, 2T(16T^6 - 1)) on F2. */
PointSubstitution substitute_T(Rational const& T);

/* t = 1/m - m/2 with extra point (-1, 1/m^2 - m^2/4) on F3. */
PointSubstitution substitute_m(Rational const& m);

/* t = (u^2 - 2u - 1)/(u^2 + 1) with extra point (1, t(-u^2 - 2u + 1)/(u^2 + 1)) on F4. */
PointSubstitution substitute_u(Rational const& u);

/* Name of the point whose non-integrality certifies positive rank. */
std::string_view witness_name(FamilyId f);

/* Closed-form discriminant of F6 (a^4c^4(b^4 + 4a^2c^2)) or F7
 * (b^4c^4(a^4 + 4b^2c^2)).
 */
Integer closed_form_discriminant(FamilyId f, PythTriple const& T);

/* The point set used for the instance's height-matrix determinant. */
std::vector<std::string> regulator_point_names(FamilyInstance const& inst);

}  // namespace ptc

#endif /* PTC_FAMILIES_HPP_ */
