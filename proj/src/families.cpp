#include "ptc/families.hpp"

#include <algorithm>
#include <numeric>

namespace ptc {

bool PythTriple::is_primitive() const
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return is_pythagorean() && g == 1;
}

std::string PythTriple::to_string() const
{
    return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
}

PythTriple ppt_from_mn(Integer const& m, Integer const& n)
{
    using R = mn_precondition_error::reason;
    if (!(m > n && n > 0))
        throw mn_precondition_error(R::ordering, "ppt_from_mn requires m > n > 0");
    Integer g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    if (g != 1)
        throw mn_precondition_error(R::not_coprime, "ppt_from_mn requires gcd(m, n) = 1");
    if (mpz_odd_p(m.get_mpz_t()) && mpz_odd_p(n.get_mpz_t()))
        throw mn_precondition_error(R::both_odd, "ppt_from_mn requires m, n not both odd");
    return {m * m - n * n, 2 * m * n, m * m + n * n};
}

std::vector<PythTriple> enumerate_ppts(long limit)
{
    std::vector<PythTriple> out;
    for (long m = 2; m * m + 1 <= limit; ++m) {
        for (long n = 1; n < m && m * m + n * n <= limit; ++n) {
            if (std::gcd(m, n) != 1 || (m - n) % 2 == 0)
                continue;
            PythTriple t = ppt_from_mn(m, n);
            if (t.a > t.b)
                swap(t.a, t.b);
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end(), [](PythTriple const& x, PythTriple const& y) {
        if (int k = cmp(x.c, y.c))
            return k < 0;
        return cmp(x.a, y.a) < 0;
    });
    return out;
}

RationalTriple triple_from_t(Rational const& t)
{
    if (t.is_zero())
        throw degenerate_parameter("t = 0 makes the leg b = 2t vanish");
    if (t == Rational(1) || t == Rational(-1))
        throw degenerate_parameter("t = " + t.to_string() + " makes the leg a = t^2 - 1 vanish");
    Rational t2 = t * t;
    return {t2 - Rational(1), Rational(2) * t, t2 + Rational(1), t};
}

namespace {

struct family_info {
    FamilyId id;
    std::string_view name;
};

constexpr std::array<family_info, 7> family_table{{
    {FamilyId::F1_a2c2, "F1_a2c2"},
    {FamilyId::F2_a2b2, "F2_a2b2"},
    {FamilyId::F3_b2a2, "F3_b2a2"},
    {FamilyId::F4_c2b2, "F4_c2b2"},
    {FamilyId::F5_b2c2, "F5_b2c2"},
    {FamilyId::F6_frey_ac, "F6_frey_ac"},
    {FamilyId::F7_frey_bc, "F7_frey_bc"},
}};

constexpr std::array<std::string_view, 6> param_names{"t", "alpha", "T", "m", "u", "triple"};

// (A, B) of y^2 = x^3 - A^2 x + B^2 for the short families
std::pair<Rational, Rational> short_coefficients(FamilyId f, Rational const& a, Rational const& b,
                                                 Rational const& c)
{
    switch (f) {
    case FamilyId::F1_a2c2: return {a, c};
    case FamilyId::F2_a2b2: return {a, b};
    case FamilyId::F3_b2a2: return {b, a};
    case FamilyId::F4_c2b2: return {c, b};
    case FamilyId::F5_b2c2: return {b, c};
    default: throw parameter_kind_mismatch("not a short family");
    }
}

Curve checked_curve(Rational a2, Rational a4, Rational a6)
{
    try {
        return Curve(std::move(a2), std::move(a4), std::move(a6));
    } catch (singular_curve const&) {
        throw degenerate_parameter("parameter makes the discriminant vanish");
    }
}

FamilyInstance short_instance(FamilyId f, ParamBinding param, Rational const& a, Rational const& b,
                              Rational const& c)
{
    auto [A, B] = short_coefficients(f, a, b, c);
    if (A.is_zero() || B.is_zero())
        throw degenerate_parameter("parameter makes a triple entry vanish");
    Curve E = checked_curve(0, -(A * A), B * B);
    Rational k = B / A;

    FamilyInstance inst{f, std::move(param), E, {}};
    bool first = f == FamilyId::F1_a2c2;
    inst.points.push_back({first ? "P" : "P1", E.point(0, B)});
    inst.points.push_back({first ? "Q" : "P2", E.point(A, B)});
    inst.points.push_back({first ? "W" : "P3", E.point(k * k, k * k * k)});
    return inst;
}

FamilyInstance frey_instance(FamilyId f, PythTriple const& T)
{
    Rational a(T.a), b(T.b), c(T.c);
    // F6: y^2 = x(x - a^2)(x + c^2); F7 swaps the roles of a and b
    Rational const& p = f == FamilyId::F6_frey_ac ? a : b;
    Rational const& q = f == FamilyId::F6_frey_ac ? b : a;
    Curve E = checked_curve(q * q, -(p * p * c * c), 0);
    Rational pc = p * c, abc = a * b * c;
    Rational k = pc / q;

    FamilyInstance inst{f, ParamBinding{ParamKind::triple, 0, T}, E, {}};
    inst.points.push_back({"P1", E.point(k * k, k * k * k)});
    inst.points.push_back({"P2", E.point(-(q * q), abc)});
    inst.points.push_back({"P3", E.point(pc, abc)});
    inst.points.push_back({"P4", E.point(-pc, abc)});
    return inst;
}

}  // namespace

std::string_view family_name(FamilyId f)
{
    for (auto const& e : family_table)
        if (e.id == f)
            return e.name;
    throw std::invalid_argument("unknown family id");
}

FamilyId parse_family(std::string_view s)
{
    for (auto const& e : family_table)
        if (e.name == s || e.name.substr(0, 2) == s)
            return e.id;
    throw std::invalid_argument("unknown family: " + std::string(s));
}

bool is_short_family(FamilyId f)
{
    return f != FamilyId::F6_frey_ac && f != FamilyId::F7_frey_bc;
}

std::string_view param_name(ParamKind k)
{
    return param_names[static_cast<size_t>(k)];
}

ParamKind parse_param_kind(std::string_view s)
{
    for (size_t i = 0; i < param_names.size(); ++i)
        if (param_names[i] == s)
            return static_cast<ParamKind>(i);
    throw std::invalid_argument("unknown parameter kind: " + std::string(s));
}

CurvePoint const& FamilyInstance::at(std::string_view name) const
{
    for (auto const& p : points)
        if (p.name == name)
            return p.point;
    throw std::out_of_range("no point named " + std::string(name));
}

bool FamilyInstance::has(std::string_view name) const
{
    return std::any_of(points.begin(), points.end(), [&](NamedPoint const& p) { return p.name == name; });
}

namespace {

std::optional<Rational> rational_cube_root(Rational const& q)
{
    Integer n = q.num(), d = q.den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) || !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3))
        return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace

FamilyInstance construct(FamilyId f, Rational const& t)
{
    if (!is_short_family(f))
        throw parameter_kind_mismatch(std::string(family_name(f)) + " takes a Pythagorean triple");
    RationalTriple rt = triple_from_t(t);
    FamilyInstance inst = short_instance(f, {ParamKind::t, t, std::nullopt}, rt.a, rt.b, rt.c);
    if (f == FamilyId::F5_b2c2)
        inst.points.push_back({"P4", inst.curve.point(2, t * t - Rational(3))});
    if (f == FamilyId::F2_a2b2) {
        // t = 4T^3 carries the extra point of the T front-end
        if (auto T = rational_cube_root(t / Rational(4))) {
            CurvePoint extra = substitute_T(*T).extra;
            inst.points.push_back({"P4", inst.curve.point(extra.x(), extra.y())});
        }
    }
    return inst;
}

FamilyInstance construct(FamilyId f, PythTriple const& T)
{
    if (!T.is_pythagorean())
        throw degenerate_parameter("not a positive Pythagorean triple: " + T.to_string());
    if (!is_short_family(f))
        return frey_instance(f, T);
    return short_instance(f, {ParamKind::triple, 0, T}, Rational(T.a), Rational(T.b), Rational(T.c));
}

AlphaSubstitution substitute_alpha(Rational const& alpha)
{
    if (alpha.is_zero() || alpha == Rational(1) || alpha == Rational(-1))
        throw degenerate_parameter("alpha = " + alpha.to_string() + " is degenerate (alpha must avoid 0, 1, -1)");
    Rational a2 = alpha * alpha;
    AlphaSubstitution s{(a2 - Rational(1)) / (Rational(4) * alpha), (a2 + Rational(1)) / (Rational(2) * alpha)};
    triple_from_t(s.t);
    return s;
}

PointSubstitution substitute_T(Rational const& T)
{
    if (T.is_zero())
        throw degenerate_parameter("T = 0 is degenerate");
    Rational t = Rational(4) * T.pow(3);
    triple_from_t(t);
    Rational y = Rational(2) * T * (Rational(16) * T.pow(6) - Rational(1));
    return {t, CurvePoint(Rational(-4) * T * T, y)};
}

PointSubstitution substitute_m(Rational const& m)
{
    if (m.is_zero())
        throw degenerate_parameter("m = 0 is degenerate");
    Rational t = Rational(1) / m - m / Rational(2);
    triple_from_t(t);
    return {t, CurvePoint(-1, Rational(1) / (m * m) - m * m / Rational(4))};
}

PointSubstitution substitute_u(Rational const& u)
{
    Rational d = u * u + Rational(1);
    Rational t = (u * u - Rational(2) * u - Rational(1)) / d;
    triple_from_t(t);
    Rational alpha = (-(u * u) - Rational(2) * u + Rational(1)) / d;
    return {t, CurvePoint(1, t * alpha)};
}

FamilyInstance construct(FamilyId f, ParamKind kind, Rational const& value)
{
    auto mismatch = [&] {
        return parameter_kind_mismatch("family " + std::string(family_name(f)) +
                                       " does not take parameter " + std::string(param_name(kind)));
    };
    auto with_extra = [&](FamilyId want, PointSubstitution const& s, std::string name) {
        if (f != want)
            throw mismatch();
        FamilyInstance inst = construct(f, s.t);
        inst.param = {kind, value, std::nullopt};
        if (!inst.has(name))
            inst.points.push_back({std::move(name), inst.curve.point(s.extra.x(), s.extra.y())});
        return inst;
    };

    switch (kind) {
    case ParamKind::t:
        return construct(f, value);
    case ParamKind::alpha: {
        if (f != FamilyId::F1_a2c2)
            throw mismatch();
        AlphaSubstitution s = substitute_alpha(value);
        FamilyInstance inst = construct(f, s.t);
        inst.param = {kind, value, std::nullopt};
        // order P, Q, R before the non-integrality witness
        inst.points.insert(inst.points.begin() + 2, {"R", inst.curve.point(1, s.v)});
        return inst;
    }
    case ParamKind::T: return with_extra(FamilyId::F2_a2b2, substitute_T(value), "P4");
    case ParamKind::m: return with_extra(FamilyId::F3_b2a2, substitute_m(value), "P4");
    case ParamKind::u: return with_extra(FamilyId::F4_c2b2, substitute_u(value), "P4");
    case ParamKind::triple: break;
    }
    throw mismatch();
}

std::string_view witness_name(FamilyId f)
{
    switch (f) {
    case FamilyId::F1_a2c2: return "W";
    case FamilyId::F6_frey_ac:
    case FamilyId::F7_frey_bc: return "P1";
    default: return "P3";
    }
}

Integer closed_form_discriminant(FamilyId f, PythTriple const& T)
{
    Integer const& a = T.a;
    Integer const& b = T.b;
    Integer const& c = T.c;
    if (f == FamilyId::F6_frey_ac) {
        Integer ac = a * c;
        return Integer(ac * ac * ac * ac * (b * b * b * b + 4 * ac * ac));
    }
    if (f == FamilyId::F7_frey_bc) {
        Integer bc = b * c;
        return Integer(bc * bc * bc * bc * (a * a * a * a + 4 * bc * bc));
    }
    throw parameter_kind_mismatch("closed-form discriminant exists only for F6 and F7");
}

std::vector<std::string> regulator_point_names(FamilyInstance const& inst)
{
    switch (inst.param.kind) {
    case ParamKind::alpha: return {"P", "Q", "R"};
    case ParamKind::T: return {"P2", "P3", "P4"};
    case ParamKind::m: return {"P1", "P3", "P4"};
    case ParamKind::u: return {"P1", "P2", "P4"};
    case ParamKind::t:
        if (inst.family == FamilyId::F5_b2c2)
            return {"P1", "P3"};
        break;
    case ParamKind::triple: break;
    }
    std::vector<std::string> names;
    for (auto const& p : inst.points)
        names.push_back(p.name);
    return names;
}

}  // namespace ptc
