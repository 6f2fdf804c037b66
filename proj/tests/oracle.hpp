// Test-side reference implementations, written directly on GMP types and
// sharing no code with the library.
#ifndef PTC_TESTS_ORACLE_HPP_
#define PTC_TESTS_ORACLE_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

namespace oracle {

struct pt {
    bool inf = true;
    mpq_class x, y;
};

inline pt affine(mpq_class x, mpq_class y)
{
    pt p;
    p.inf = false;
    p.x = x;
    p.y = y;
    p.x.canonicalize();
    p.y.canonicalize();
    return p;
}

inline bool same(pt const& p, pt const& q)
{
    if (p.inf || q.inf)
        return p.inf == q.inf;
    return p.x == q.x && p.y == q.y;
}

struct cubic {
    mpq_class a2, a4, a6;

    mpq_class f(mpq_class const& x) const { return x * x * x + a2 * x * x + a4 * x + a6; }
    bool on(pt const& p) const { return p.inf || p.y * p.y == f(p.x); }

    pt add(pt const& p, pt const& q) const
    {
        if (p.inf)
            return q;
        if (q.inf)
            return p;
        mpq_class lambda;
        if (p.x == q.x) {
            if (p.y + q.y == 0)
                return pt{};
            lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4) / (2 * p.y);
        } else {
            lambda = (q.y - p.y) / (q.x - p.x);
        }
        mpq_class x3 = lambda * lambda - a2 - p.x - q.x;
        mpq_class y3 = lambda * (p.x - x3) - p.y;
        return affine(x3, y3);
    }

    pt neg(pt const& p) const { return p.inf ? p : affine(p.x, -p.y); }

    pt mul(long n, pt const& p) const
    {
        pt acc;
        pt base = n < 0 ? neg(p) : p;
        for (long k = 0; k < (n < 0 ? -n : n); ++k)
            acc = add(acc, base);
        return acc;
    }

    /* smallest n <= 12 with nP = O, or 0 */
    int order(pt const& p) const
    {
        pt acc;
        for (int n = 1; n <= 12; ++n) {
            acc = add(acc, p);
            if (acc.inf)
                return n;
        }
        return 0;
    }

    /* -4a^3c + a^2b^2 + 18abc - 4b^3 - 27c^2 */
    mpq_class disc() const
    {
        return -4 * a2 * a2 * a2 * a6 + a2 * a2 * a4 * a4 + 18 * a2 * a4 * a6 - 4 * a4 * a4 * a4 - 27 * a6 * a6;
    }
};

inline long gcd3(long a, long b, long c)
{
    auto g = [](long u, long v) {
        while (v) {
            long t = u % v;
            u = v;
            v = t;
        }
        return u < 0 ? -u : u;
    };
    return g(g(a, b), c);
}

/* Primitive triples with c <= limit by scanning legs, sorted by (c, a). */
inline std::vector<std::array<long, 3>> brute_ppts(long limit)
{
    std::vector<std::array<long, 3>> out;
    for (long c = 1; c <= limit; ++c)
        for (long a = 1; a < c; ++a)
            for (long b = a + 1; b < c; ++b)
                if (a * a + b * b == c * c && gcd3(a, b, c) == 1)
                    out.push_back({a, b, c});
    return out;
}

/* Torsion points with |x| <= 100 found by direct search; Infinity included. */
inline std::vector<pt> brute_torsion(cubic const& E)
{
    std::vector<pt> out{pt{}};
    for (long x = -100; x <= 100; ++x) {
        mpq_class v = E.f(mpq_class(x));
        if (v < 0)
            continue;
        mpz_class n = v.get_num();
        if (!mpz_perfect_square_p(n.get_mpz_t()))
            continue;
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        for (int s : {-1, 1}) {
            if (r == 0 && s == 1)
                continue;
            pt p = affine(mpq_class(x), mpq_class(s * r));
            if (E.order(p) > 0)
                out.push_back(p);
        }
    }
    return out;
}

/* Random rational with numerator in [-hi, hi] and denominator in [1, hi]. */
inline mpq_class random_rational(std::mt19937_64& rng, long hi)
{
    std::uniform_int_distribution<long> num(-hi, hi), den(1, hi);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace oracle

#endif
