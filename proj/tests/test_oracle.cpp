#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsob/laguerre.hpp"
#include "lsob/oracle.hpp"
#include "test_support.hpp"

using lsob::bigfloat;
using lsob::scoped_precision;
namespace orc = lsob::oracle;
using params = lsob::sobolev::params<bigfloat>;

TEST_CASE("gram entries") {
    scoped_precision guard(64);
    {
        params p{bigfloat(0), bigfloat(1), bigfloat(1), bigfloat(0)};
        auto g = orc::sobolev_gram(2, p);
        CHECK(abs(g.entries[0][0] - 2) < bigfloat("1e-60")); // Gamma(1) + M
    }
    {
        params p{bigfloat(0), bigfloat(1), bigfloat(1), bigfloat(1)};
        auto g = orc::sobolev_gram(2, p);
        CHECK(abs(g.entries[1][1] - 4) < bigfloat("1e-60")); // Gamma(3) + 1 + 1
    }
    {
        params p{bigfloat(0), bigfloat(2), bigfloat(0), bigfloat(1)};
        auto g = orc::sobolev_gram(3, p);
        CHECK(abs(g.entries[2][3] - 168) < bigfloat("1e-55")); // Gamma(6) + 6 * 2^3
    }
}

TEST_CASE("gram size guard and positive definiteness certificate") {
    scoped_precision guard(64);
    params p{bigfloat(0), bigfloat(1), bigfloat(1), bigfloat(1)};
    CHECK_THROWS_AS(orc::sobolev_gram(61, p), lsob::domain_error);
    auto g = orc::sobolev_gram(20, p); // Cholesky certifies this
    CHECK(g.size() == 21);
}

TEST_CASE("first orthogonal polynomial with a pure mass term") {
    scoped_precision guard(64);
    params p{bigfloat(0), bigfloat(1), bigfloat(1), bigfloat(0)};
    auto basis = orc::gram_schmidt_monic(orc::sobolev_gram(4, p));
    // Shat_1 = x - 1
    CHECK(abs(basis.rows[1][1] - 1) < bigfloat("1e-60"));
    CHECK(abs(basis.rows[1][0] + 1) < bigfloat("1e-58"));
    CHECK(abs(basis.norms_sq[1] - 1) < bigfloat("1e-58"));
    CHECK(abs(orc::oracle_eval(basis, 1, bigfloat(0)) + 1) < bigfloat("1e-58"));
    CHECK(abs(orc::oracle_eval(basis, 0, bigfloat("42.5")) - 1) == 0);
}

TEST_CASE("classical limit reproduces monic Laguerre coefficients") {
    scoped_precision guard(64);
    params p{bigfloat("0.5"), bigfloat(1), bigfloat(0), bigfloat(0)};
    auto basis = orc::gram_schmidt_monic(orc::sobolev_gram(10, p));

    // expand monic Laguerre polynomials in the power basis by the recurrence
    std::vector<std::vector<bigfloat>> lag(11, std::vector<bigfloat>(11, bigfloat(0)));
    lag[0][0] = 1;
    lag[1][0] = -(p.alpha + 1);
    lag[1][1] = 1;
    for (long k = 1; k < 10; ++k) {
        auto rc = lsob::laguerre::recurrence_coeffs(k, p.alpha);
        for (long j = 0; j <= k; ++j) {
            lag[k + 1][j + 1] += lag[k][j];
            lag[k + 1][j] -= rc.beta * lag[k][j];
            lag[k + 1][j] -= rc.gamma * lag[k - 1][j];
        }
    }
    bigfloat tol = lsob::rel_tol<bigfloat>(10);
    for (long n = 0; n <= 10; ++n) {
        bigfloat scale(0);
        for (long j = 0; j <= n; ++j) scale = std::max(scale, abs(lag[n][j]));
        for (long j = 0; j <= n; ++j)
            CHECK(abs(basis.rows[n][j] - lag[n][j]) / scale < tol);
    }
}

TEST_CASE("rows are exactly monic and mutually orthogonal under the gram") {
    scoped_precision guard(96);
    params p{bigfloat("1.5"), bigfloat("0.5"), bigfloat(10), bigfloat("0.1")};
    auto g = orc::sobolev_gram(25, p);
    auto basis = orc::gram_schmidt_monic(g);
    bigfloat tol = lsob::rel_tol<bigfloat>(14);
    for (long n = 0; n <= 25; ++n)
        CHECK(basis.rows[n][static_cast<std::size_t>(n)] == 1); // monic bit-exactly
    for (long i = 0; i <= 25; ++i) {
        for (long j = 0; j < i; ++j) {
            bigfloat ip = orc::gram_inner(g, basis.rows[i].coeffs(), basis.rows[j].coeffs());
            CHECK(abs(ip) / sqrt(basis.norms_sq[i] * basis.norms_sq[j]) < tol);
        }
    }
}

TEST_CASE("derivative evaluation differentiates the coefficient row") {
    scoped_precision guard(64);
    params p{bigfloat(0), bigfloat(1), bigfloat(1), bigfloat(1)};
    auto basis = orc::gram_schmidt_monic(orc::sobolev_gram(6, p));
    bigfloat h("1e-20");
    bigfloat x("1.3");
    bigfloat fd =
        (orc::oracle_eval(basis, 5, x + h) - orc::oracle_eval(basis, 5, x - h)) / (2 * h);
    bigfloat d = orc::oracle_eval_derivative(basis, 5, x);
    CHECK(abs(fd - d) / abs(d) < bigfloat("1e-35"));
}
