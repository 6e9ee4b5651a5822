// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Christoffel–Darboux (Dirichlet) kernels for the Laguerre weight and their
// partial derivatives on the diagonal, each available through two independent
// routes: orthonormal summation (default, overflow-free) and the closed
// determinant-style forms built from monic values and derivatives.
//
// Indexing convention: kernel_xy(n, ...) is the kernel of order n as defined
// by its sum over degrees 0..n.  The diagonal family kernel_cc /
// kernel_partials_cc exposes the order-(n-1) kernel under parameter n, since
// every consumer works with K_{n-1}(c,c) alongside degree-n polynomials.

#ifndef LSOB_KERNELS_HPP
#define LSOB_KERNELS_HPP

#include <vector>

#include "lsob/laguerre.hpp"
#include "lsob/precision.hpp"

namespace lsob::kernels {

enum class method { summed, closed_form };

/// Diagonal kernel values of order n-1 at (c,c).  K01 == K10 by symmetry of
/// the kernel in its two arguments.
template <class R>
struct kernel_values_cc {
    long n; // kernel order is n-1
    R K;
    R K01;
    R K10;
    R K11;
    method how;
};

/// Lemma-style predicted magnitudes for the order-(n-1) diagonal kernels:
/// K and K01 share pi^-1 e^c c^(-1/2-alpha) n^(1/2); K11 carries
/// (1/3) pi^-1 e^c c^(-3/2-alpha) n^(3/2).
template <class R>
struct kernel_asymptotics {
    R K_pred;
    R K01_pred;
    R K11_pred;
};

template <class R>
kernel_asymptotics<R> kernel_asymptotic_prediction(long n, const R& alpha, const R& c) {
    if (!(c > R(0)))
        throw domain_error("kernel_asymptotic_prediction: c must be positive");
    R p = laguerre::pi_value<R>();
    R base = m::exp(c) / p;
    R k_pred = base * m::pow(c, -R(1) / R(2) - alpha) * m::sqrt(R(n));
    R k11_pred = base / R(3) * m::pow(c, -R(3) / R(2) - alpha) * m::pow(R(n), R(3) / R(2));
    return {k_pred, k_pred, k11_pred};
}

/// Orthonormal values and derivative values at c together with prefix-summed
/// diagonal kernels: K[j] = K_j(c,c), K01[j] = K_j^(0,1)(c,c),
/// K11[j] = K_j^(1,1)(c,c) for j = 0..n_max.  One forward pass serves every
/// kernel order at once, which is what the large-n trend sweeps rely on.
template <class R>
struct cc_sweep {
    R alpha;
    R c;
    std::vector<R> val;  // l~_k(c)
    std::vector<R> dval; // l~'_k(c)
    std::vector<R> K, K01, K11;
};

template <class R>
cc_sweep<R> make_cc_sweep(long n_max, const R& alpha, const R& c) {
    auto pair = laguerre::eval_orthonormal_with_derivative(n_max, alpha, c);
    cc_sweep<R> s{alpha, c, std::move(pair.val), std::move(pair.dval), {}, {}, {}};
    std::size_t count = s.val.size();
    s.K.resize(count);
    s.K01.resize(count);
    s.K11.resize(count);
    R accK(0), acc01(0), acc11(0);
    for (std::size_t k = 0; k < count; ++k) {
        accK += s.val[k] * s.val[k];
        acc01 += s.val[k] * s.dval[k];
        acc11 += s.dval[k] * s.dval[k];
        s.K[k] = accK;
        s.K01[k] = acc01;
        s.K11[k] = acc11;
    }
    return s;
}

/// K_n(x,y): summed form by default, Christoffel–Darboux quotient (confluent
/// form on the diagonal) as the closed route.  Both are assembled from
/// orthonormal sequences so no Gamma factor is ever formed.
template <class R>
R kernel_xy(long n, const R& alpha, const R& x, const R& y, method how = method::summed) {
    if (n < 0)
        throw domain_error("kernel_xy: n must be >= 0");
    if (how == method::summed) {
        auto sx = laguerre::eval_orthonormal_seq(n, alpha, x);
        if (x == y) {
            R acc(0);
            for (const auto& v : sx.values) acc += v * v;
            return acc;
        }
        auto sy = laguerre::eval_orthonormal_seq(n, alpha, y);
        R acc(0);
        for (std::size_t k = 0; k < sx.values.size(); ++k) acc += sx.values[k] * sy.values[k];
        return acc;
    }
    R a_next = m::sqrt(laguerre::recurrence_coeffs(n + 1, alpha).gamma);
    if (x == y) {
        auto p = laguerre::eval_orthonormal_with_derivative(n + 1, alpha, x);
        std::size_t j = static_cast<std::size_t>(n);
        return a_next * (p.dval[j + 1] * p.val[j] - p.dval[j] * p.val[j + 1]);
    }
    auto sx = laguerre::eval_orthonormal_seq(n + 1, alpha, x);
    auto sy = laguerre::eval_orthonormal_seq(n + 1, alpha, y);
    std::size_t j = static_cast<std::size_t>(n);
    return a_next * (sx.values[j + 1] * sy.values[j] - sx.values[j] * sy.values[j + 1]) /
           (x - y);
}

/// K_{n-1}(c,c) by summation of squared orthonormal values.  Valid for any
/// real c (the Taylor-local identities behind the closed forms do not need
/// c > 0); the asymptotic predictions do.
template <class R>
R kernel_cc(long n, const R& alpha, const R& c, method how = method::summed) {
    if (n < 1)
        throw domain_error("kernel_cc: n must be >= 1");
    return kernel_xy(n - 1, alpha, c, c, how);
}

namespace detail {

/// Monic values and first three derivatives of Lhat_n and Lhat_{n-1} at c,
/// via Hahn shifts into alpha+1..alpha+3.
template <class R>
struct monic_jet {
    R v_n, v_n1;    // values at degrees n, n-1
    R d1_n, d1_n1;  // first derivatives
    R d2_n, d2_n1;  // second derivatives
    R d3_n, d3_n1;  // third derivatives
};

template <class R>
monic_jet<R> eval_monic_jet(long n, const R& alpha, const R& c) {
    auto s0 = laguerre::eval_monic_seq<R>(n, alpha, c);
    auto s1 = laguerre::eval_monic_seq<R>(n - 1, alpha + R(1), c);
    auto s2 = (n >= 2) ? laguerre::eval_monic_seq<R>(n - 2, alpha + R(2), c)
                       : laguerre::laguerre_seq<R>{laguerre::basis::monic, {R(1)}, {}};
    auto s3 = (n >= 3) ? laguerre::eval_monic_seq<R>(n - 3, alpha + R(3), c)
                       : laguerre::laguerre_seq<R>{laguerre::basis::monic, {R(1)}, {}};
    auto at = [](const auto& seq, long j) -> R {
        return j < 0 ? R(0) : seq.values[static_cast<std::size_t>(j)];
    };
    auto falling = [](long nn, long k) {
        R f(1);
        for (long j = 0; j < k; ++j) f *= R(nn - j);
        return f;
    };
    monic_jet<R> jet{};
    jet.v_n = at(s0, n);
    jet.v_n1 = at(s0, n - 1);
    jet.d1_n = falling(n, 1) * at(s1, n - 1);
    jet.d1_n1 = falling(n - 1, 1) * at(s1, n - 2);
    jet.d2_n = falling(n, 2) * at(s2, n - 2);
    jet.d2_n1 = falling(n - 1, 2) * at(s2, n - 3);
    jet.d3_n = falling(n, 3) * at(s3, n - 3);
    jet.d3_n1 = falling(n - 1, 3) * at(s3, n - 4);
    return jet;
}

} // namespace detail

/// Diagonal kernel of order n-1 with its (0,1), (1,0) and (1,1) partials.
/// summed: prefix sums of orthonormal values/derivatives (overflow-free).
/// closed_form: the confluent form for K plus the second/third-derivative
/// expressions over Gamma(n) Gamma(n+alpha) for the partials; limited to
/// degrees whose monic values stay in range of the working type.
template <class R>
kernel_values_cc<R> kernel_partials_cc(long n, const R& alpha, const R& c,
                                       method how = method::summed) {
    if (n < 1)
        throw domain_error("kernel_partials_cc: n must be >= 1");
    if (!(alpha > R(-1)))
        throw domain_error("kernel_partials_cc: alpha must be > -1");

    if (how == method::summed) {
        auto sweep = make_cc_sweep(n - 1, alpha, c);
        std::size_t j = static_cast<std::size_t>(n - 1);
        return {n, sweep.K[j], sweep.K01[j], sweep.K01[j], sweep.K11[j], how};
    }

    auto jet = detail::eval_monic_jet(n, alpha, c);
    R norm = m::exp(laguerre::log_norm_sq(n - 1, alpha)); // Gamma(n) Gamma(n+alpha)
    if (!m::isfinite(norm))
        throw overflow_error("kernel_partials_cc: closed form norm overflow at degree " +
                                 std::to_string(n),
                             n);
    R K = (jet.d1_n * jet.v_n1 - jet.d1_n1 * jet.v_n) / norm;
    R K01 = (jet.v_n1 * jet.d2_n - jet.v_n * jet.d2_n1) / (R(2) * norm);
    R K11 = (jet.v_n1 * jet.d3_n + R(3) * jet.d1_n1 * jet.d2_n - jet.v_n * jet.d3_n1 -
             R(3) * jet.d1_n * jet.d2_n1) /
            (R(6) * norm);
    if (!m::isfinite(K) || !m::isfinite(K01) || !m::isfinite(K11))
        throw overflow_error("kernel_partials_cc: closed form overflow at degree " +
                                 std::to_string(n),
                             n);
    return {n, K, K01, K01, K11, how};
}

/// Mixed kernel column K_{n-1}^(0,1)(x, c) = sum_{k<n} l~_k(x) l~'_k(c); the
/// kernel-expansion branch of the Sobolev evaluator needs it for x near c.
/// Complex x is allowed; c stays real.
template <class V>
V kernel_column_01(long n, const real_of_t<V>& alpha, const V& x, const real_of_t<V>& c) {
    using R = real_of_t<V>;
    if (n < 1)
        throw domain_error("kernel_column_01: n must be >= 1");
    auto dc = laguerre::eval_orthonormal_with_derivative(n - 1, alpha, c);
    auto vx = laguerre::detail::orthonormal_values(n - 1, alpha, x);
    V acc{R(0)};
    for (long k = 0; k < n; ++k)
        acc += vx[static_cast<std::size_t>(k)] * V(dc.dval[static_cast<std::size_t>(k)]);
    return acc;
}

/// Mixed kernel K_{n-1}(x, c) = sum_{k<n} l~_k(x) l~_k(c).
template <class V>
V kernel_column(long n, const real_of_t<V>& alpha, const V& x, const real_of_t<V>& c) {
    using R = real_of_t<V>;
    if (n < 1)
        throw domain_error("kernel_column: n must be >= 1");
    auto sc = laguerre::detail::orthonormal_values(n - 1, alpha, c);
    auto vx = laguerre::detail::orthonormal_values(n - 1, alpha, x);
    V acc{R(0)};
    for (long k = 0; k < n; ++k)
        acc += vx[static_cast<std::size_t>(k)] * V(sc[static_cast<std::size_t>(k)]);
    return acc;
}

} // namespace lsob::kernels

#endif
