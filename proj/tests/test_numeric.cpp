#include "oracle.hpp"

#include "ptc/numeric.hpp"

#include <doctest.h>

#include <cmath>

using namespace ptc;

TEST_CASE("rational_reduce")
{
    CHECK(rational_reduce(8, 64) == Rational(1, 8));
    CHECK(rational_reduce(-55, -64).to_string() == "55/64");
    CHECK(rational_reduce(73, 64).to_string() == "73/64");
    CHECK(rational_reduce(6, -4).to_string() == "-3/2");
    CHECK_THROWS_AS(rational_reduce(1, 0), zero_denominator);
    CHECK_THROWS_AS(Rational(Integer(3), Integer(0)), zero_denominator);
}

TEST_CASE("reduce is idempotent")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational q = Rational(oracle::random_rational(rng, 1000));
        CHECK(rational_reduce(q.num(), q.den()) == q);
        CHECK(q.den() > 0);
    }
}

TEST_CASE("is_integral")
{
    CHECK_FALSE(is_integral(Rational(25, 9)));
    CHECK(is_integral(Rational(15)));
    CHECK(is_integral(Rational(0)));
    CHECK(is_integral(Rational(30, 2)));
}

TEST_CASE("field axioms on random operands")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Rational a(oracle::random_rational(rng, 500)), b(oracle::random_rational(rng, 500)),
            c(oracle::random_rational(rng, 500));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rational(0));
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("7/29") == Rational(7, 29));
    CHECK(parse_rational("-49/10") == Rational(-49, 10));
    CHECK(parse_rational("-4.9") == Rational(-49, 10));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("1e-4") == Rational(1, 10000));
    CHECK(parse_rational("2.5E2") == Rational(250));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(parse_rational("4/-6") == Rational(-2, 3));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("serialization")
{
    CHECK(Rational(-3, 6).to_string() == "-1/2");
    CHECK(Rational(4).to_string() == "4");
    CHECK(Rational(0).to_string() == "0");
}

TEST_CASE("log_real")
{
    CHECK(log_real(Rational(1), 50).is_zero());

    Real l4 = log_real(Rational(4), 50);
    Real l2 = log_real(Rational(2), 50);
    CHECK(std::fabs((l4 - l2 - l2).to_double()) < 1e-55);

    Real ref = Real::from_string("5.41610040220442013199200914029742668834618382418253434729468", 60);
    Real l225 = log_real(Rational(225), 50);
    CHECK(std::fabs((l225 - ref).to_double()) < 1e-50);
    CHECK(l225.error() < 1e-50);

    // large argument: 10^30 + 7
    Real big = log_real(Rational(Integer("1000000000000000000000000000007")), 50);
    Real big_ref = Real::from_string("69.0775527898213705205397436405379262280330446588631892809998", 60);
    CHECK(std::fabs((big - big_ref).to_double()) < 1e-48);

    // log(p/q) = log p - log q
    Real lq = log_real(Rational(25, 9), 50);
    Real diff = lq - log_real(Rational(25), 50) + log_real(Rational(9), 50);
    CHECK(std::fabs(diff.to_double()) < 1e-55);

    CHECK_THROWS_AS(log_real(Rational(0), 50), non_positive_log);
    CHECK_THROWS_AS(log_real(Rational(-3, 2), 50), non_positive_log);
}

TEST_CASE("real error bounds compose")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        Rational p(oracle::random_rational(rng, 10000)), q(oracle::random_rational(rng, 10000));
        if (p.sign() <= 0 || q.sign() <= 0)
            continue;
        Real a = log_real(p, 30), b = log_real(q, 30);
        Real s = a + b, d = a - b;
        CHECK(s.error() >= a.error() + b.error());
        CHECK(d.error() >= a.error() + b.error());

        // reference at doubled precision
        Real s_ref = log_real(p * q, 60), d_ref = log_real(p / q, 60);
        CHECK(std::fabs((s - s_ref).to_double()) <= s.error() + s_ref.error());
        CHECK(std::fabs((d - d_ref).to_double()) <= d.error() + d_ref.error());
        CHECK(s.error() < 1e-30);
    }
}

TEST_CASE("real formatting")
{
    Real x = Real::from_string("73.358359773386762851", 20);
    CHECK(x.to_string(15) == "73.3583597733868");
    CHECK(Real(Rational(1, 4), 10).to_string(5) == "0.25");
}
