#ifndef PTC_TESTS_SUPPORT_HPP_
#define PTC_TESTS_SUPPORT_HPP_

#include "oracle.hpp"

#include "ptc/curve.hpp"
#include "ptc/families.hpp"

#include <random>

inline oracle::cubic as_oracle(ptc::Curve const& E)
{
    return {E.a2().raw(), E.a4().raw(), E.a6().raw()};
}

inline oracle::pt as_oracle(ptc::CurvePoint const& P)
{
    if (P.is_infinity())
        return {};
    return oracle::affine(P.x().raw(), P.y().raw());
}

inline ptc::Rational as_rational(mpq_class const& q)
{
    return ptc::Rational(q);
}

/* A random admissible instance of a short family, drawn through t. */
inline ptc::FamilyInstance random_short_instance(ptc::FamilyId f, std::mt19937_64& rng, long hi)
{
    for (;;) {
        try {
            return ptc::construct(f, as_rational(oracle::random_rational(rng, hi)));
        } catch (std::invalid_argument const&) {
        }
    }
}

#endif
