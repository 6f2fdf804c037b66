#include "ptc/factor.hpp"

#include <algorithm>
#include <map>

namespace ptc {

namespace {

using clock = std::chrono::steady_clock;

struct integer_less {
    bool operator()(Integer const& a, Integer const& b) const { return cmp(a, b) < 0; }
};
using prime_map = std::map<Integer, unsigned, integer_less>;

bool is_probable_prime(Integer const& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

/* Brent's variant of Pollard rho.  Returns a nontrivial factor of the
 * composite n, retrying with new constants until the deadline passes.
 */
Integer brent_factor(Integer const& n, clock::time_point deadline)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto f = [&](Integer const& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
            if (clock::now() > deadline)
                throw factorization_budget_exceeded();
        } while (g == 1);

        if (g == n) {
            // backtrack one step at a time
            do {
                ys = f(ys);
                Integer d = abs(Integer(x - ys));
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
        if (clock::now() > deadline)
            throw factorization_budget_exceeded();
    }
}

void split(Integer const& n, prime_map& out, clock::time_point deadline)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = brent_factor(n, deadline);
    split(d, out, deadline);
    split(Integer(n / d), out, deadline);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(Integer const& n, factor_budget const& budget)
{
    if (n == 0)
        throw std::domain_error("factorize(0)");
    auto deadline = clock::now() + budget.time;
    Integer rest = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;

    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e)
            out.emplace_back(Integer(p), e);
    };
    strip(2);
    for (unsigned long p = 3; p <= budget.trial_bound; p += 2) {
        if (rest == 1)
            break;
        if (Integer(p) * p > rest)
            break;
        strip(p);
    }
    if (rest == 1)
        return out;

    prime_map big;
    if (Integer(budget.trial_bound) * budget.trial_bound >= rest || is_probable_prime(rest))
        ++big[rest];
    else
        split(rest, big, deadline);
    for (auto& [p, e] : big)
        out.emplace_back(p, e);
    std::sort(out.begin(), out.end(),
              [](auto const& a, auto const& b) { return cmp(a.first, b.first) < 0; });
    return out;
}

std::vector<Integer> prime_divisors(Integer const& n, factor_budget const& budget)
{
    std::vector<Integer> out;
    for (auto& [p, e] : factorize(n, budget))
        out.push_back(p);
    return out;
}

std::vector<Integer> positive_divisors(Integer const& n, factor_budget const& budget)
{
    std::vector<Integer> divs{1};
    for (auto& [p, e] : factorize(n, budget)) {
        size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end(), [](Integer const& a, Integer const& b) { return cmp(a, b) < 0; });
    return divs;
}

unsigned valuation(Integer const& n, Integer const& p)
{
    if (n == 0)
        throw std::domain_error("valuation(0)");
    Integer m = n;
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

}  // namespace ptc
