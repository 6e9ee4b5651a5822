#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "lsob/gammafn.hpp"
#include "lsob/precision.hpp"
#include "test_support.hpp"

using lsob::bigfloat;
using lsob::gamma_ratio;
using lsob::log_gamma;
using lsob::scoped_precision;

TEST_CASE("log_gamma at integer anchors") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-15));
}

TEST_CASE("log_gamma(10.5) matches the shifted-Stirling oracle to 30 digits at 40-digit work") {
    scoped_precision guard(40);
    bigfloat main_path = log_gamma(bigfloat("10.5"));
    bigfloat reference;
    {
        scoped_precision oracle_guard(80);
        reference = test_support::oracle_log_gamma(bigfloat("10.5"));
    }
    bigfloat err = abs(main_path - reference) / abs(reference);
    CHECK(err < bigfloat("1e-30"));
}

TEST_CASE("log_gamma rejects the closed half-line and non-finite input") {
    CHECK_THROWS_AS(log_gamma(0.0), lsob::domain_error);
    CHECK_THROWS_AS(log_gamma(-2.5), lsob::domain_error);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::quiet_NaN()), lsob::domain_error);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()), lsob::domain_error);
}

TEST_CASE("log_gamma functional equation over x in {0.5, ..., 50.5}") {
    scoped_precision guard(64);
    bigfloat tol = lsob::rel_tol<bigfloat>(3);
    for (int i = 0; i <= 50; ++i) {
        bigfloat x = bigfloat(i) + bigfloat(1) / 2;
        bigfloat lhs = exp(log_gamma(x + 1));
        bigfloat rhs = x * exp(log_gamma(x));
        CHECK(abs(lhs - rhs) / rhs < tol);
    }
    // double path as well
    for (int i = 0; i <= 50; ++i) {
        double x = i + 0.5;
        double lhs = std::exp(log_gamma(x + 1.0));
        double rhs = x * std::exp(log_gamma(x));
        CHECK(std::abs(lhs - rhs) / rhs < 1e-13);
    }
}

TEST_CASE("gamma_ratio small-argument anchors") {
    CHECK(gamma_ratio(3, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(gamma_ratio(2, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gamma_ratio approaches n^(1-alpha)") {
    // n = 1e6, alpha = 0.5: ratio * n^(alpha-1) within 1e-5 of 1
    scoped_precision guard(64);
    bigfloat r = gamma_ratio(1000000, bigfloat("0.5"));
    bigfloat scaled = r * pow(bigfloat(1000000), bigfloat("-0.5"));
    CHECK(abs(scaled - 1) < bigfloat("1e-5"));
}

TEST_CASE("gamma_ratio first-order Stirling correction bound for n >= 100") {
    scoped_precision guard(64);
    for (double alpha : {-0.5, 0.5, 1.5, 2.5}) {
        for (long n : {100L, 1000L, 10000L}) {
            bigfloat a(alpha);
            bigfloat scaled = gamma_ratio(n, a) * pow(bigfloat(n), a - 1);
            bigfloat bound = 2 * abs(a) * abs(a - 1) / bigfloat(n);
            CHECK(abs(scaled - 1) <= bound + bigfloat("1e-30"));
        }
    }
}

TEST_CASE("gamma_ratio argument validation") {
    CHECK_THROWS_AS(gamma_ratio(0, 0.5), lsob::domain_error);
    CHECK_THROWS_AS(gamma_ratio(1, -1.0), lsob::domain_error);
    CHECK_THROWS_AS(gamma_ratio(1, std::numeric_limits<double>::quiet_NaN()),
                    lsob::domain_error);
}

TEST_CASE("precision type enforces its floor and selects the native engine") {
    CHECK_THROWS_AS(lsob::precision(14), lsob::domain_error);
    CHECK(lsob::precision(16).native());
    CHECK_FALSE(lsob::precision(64).native());
}
