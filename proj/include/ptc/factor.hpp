#ifndef PTC_FACTOR_HPP_
#define PTC_FACTOR_HPP_

#include "ptc/numeric.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ptc {

struct factorization_budget_exceeded : std::runtime_error {
    factorization_budget_exceeded()
        : std::runtime_error("factorization time budget exceeded") {}
};

struct factor_budget {
    unsigned long trial_bound = 1000000;
    std::chrono::milliseconds time{10000};
};

/* Prime factorization of |n| (n != 0) as (prime, exponent) pairs sorted by
 * prime.  Trial division up to `trial_bound`, then Pollard-Brent rho on the
 * cofactor until `time` runs out.
 */
std::vector<std::pair<Integer, unsigned>> factorize(Integer const& n,
                                                   factor_budget const& budget = {});

/* Distinct primes dividing |n|. */
std::vector<Integer> prime_divisors(Integer const& n, factor_budget const& budget = {});

/* All positive divisors of |n|, ascending. */
std::vector<Integer> positive_divisors(Integer const& n, factor_budget const& budget = {});

/* p-adic valuation of a nonzero integer. */
unsigned valuation(Integer const& n, Integer const& p);

}  // namespace ptc

#endif /* PTC_FACTOR_HPP_ */
