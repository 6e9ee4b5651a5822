// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Monic and orthonormal Laguerre polynomials for the weight x^alpha e^(-x)
// on (0, inf): forward recurrences, Hahn derivatives, ratio recurrence for
// arguments off the positive semiaxis, and the leading-order Perron / Fejér
// estimates in overflow-safe form.

#ifndef LSOB_LAGUERRE_HPP
#define LSOB_LAGUERRE_HPP

#include <string>
#include <vector>

#include "lsob/complexnum.hpp"
#include "lsob/gammafn.hpp"
#include "lsob/precision.hpp"

namespace lsob::laguerre {

/// Three-term recurrence row: x Lhat_n = Lhat_{n+1} + beta_n Lhat_n + gamma_n Lhat_{n-1}.
template <class R>
struct recurrence_row {
    R beta;  // 2n + alpha + 1
    R gamma; // n (n + alpha)
};

template <class R>
recurrence_row<R> recurrence_coeffs(long n, const R& alpha) {
    require_finite(alpha, "recurrence_coeffs alpha");
    return {R(2 * n) + alpha + R(1), R(n) * (R(n) + alpha)};
}

/// ln ||Lhat_n||^2 = ln(Gamma(n+1) Gamma(n+alpha+1)); requires alpha > -1.
template <class R>
R log_norm_sq(long n, const R& alpha) {
    if (!(alpha > R(-1)))
        throw domain_error("log_norm_sq: alpha must be > -1");
    return log_gamma(R(n) + R(1)) + log_gamma(R(n) + alpha + R(1));
}

enum class basis { monic, orthonormal };

/// Values of Lhat_0..Lhat_n (or their orthonormal counterparts) at one point,
/// with log-norm bookkeeping: orthonormal value * exp(log_norms[k]) recovers
/// the monic value.
template <class V>
struct laguerre_seq {
    basis kind;
    std::vector<V> values;
    std::vector<real_of_t<V>> log_norms; // 0.5 * ln(Gamma(k+1) Gamma(k+alpha+1))
};

namespace detail {

// Same quantity as log_norm_sq/2 but accumulated through the norm recurrence
// ||Lhat_k||^2 = gamma_k ||Lhat_{k-1}||^2: one lgamma plus a log per degree
// instead of two lgammas per degree.
template <class R>
std::vector<R> half_log_norms(long n_max, const R& alpha) {
    std::vector<R> ln(static_cast<std::size_t>(n_max) + 1);
    R acc = log_gamma(alpha + R(1)); // ln ||Lhat_0||^2
    ln[0] = acc / R(2);
    for (long k = 1; k <= n_max; ++k) {
        acc += m::log(recurrence_coeffs(k, alpha).gamma);
        ln[static_cast<std::size_t>(k)] = acc / R(2);
    }
    return ln;
}

/// Orthonormal values at a real or complex argument (shared recurrence body).
template <class V>
std::vector<V> orthonormal_values(long n_max, const real_of_t<V>& alpha, const V& x) {
    using R = real_of_t<V>;
    if (n_max < 0)
        throw domain_error("orthonormal_values: n_max must be >= 0");
    if (!(alpha > R(-1)))
        throw domain_error("orthonormal_values: alpha must be > -1");
    std::vector<V> vals(static_cast<std::size_t>(n_max) + 1);
    vals[0] = V(m::exp(-log_gamma(alpha + R(1)) / R(2)));
    V prev{R(0)};
    for (long k = 0; k < n_max; ++k) {
        auto rc = recurrence_coeffs(k, alpha);
        R a_k = (k == 0) ? R(0) : m::sqrt(rc.gamma);
        R a_k1 = m::sqrt(recurrence_coeffs(k + 1, alpha).gamma);
        V next = ((x - V(rc.beta)) * vals[static_cast<std::size_t>(k)] - V(a_k) * prev) / V(a_k1);
        prev = vals[static_cast<std::size_t>(k)];
        vals[static_cast<std::size_t>(k + 1)] = next;
    }
    return vals;
}

} // namespace detail

/// Monic values by the forward three-term recurrence.  Fails loudly when a
/// value leaves the representable range; large-degree callers use the
/// orthonormal or ratio forms instead.
template <class V>
laguerre_seq<V> eval_monic_seq(long n_max, const real_of_t<V>& alpha, const V& x) {
    using R = real_of_t<V>;
    if (n_max < 0)
        throw domain_error("eval_monic_seq: n_max must be >= 0");
    require_finite(alpha, "eval_monic_seq alpha");
    if (!value_finite(x))
        throw domain_error("eval_monic_seq: non-finite x");

    laguerre_seq<V> seq{basis::monic, {}, {}};
    seq.values.resize(static_cast<std::size_t>(n_max) + 1);
    seq.values[0] = V(R(1));
    if (n_max >= 1) seq.values[1] = x - V(alpha + R(1));
    for (long k = 1; k < n_max; ++k) {
        auto rc = recurrence_coeffs(k, alpha);
        V next = (x - V(rc.beta)) * seq.values[static_cast<std::size_t>(k)] -
                 V(rc.gamma) * seq.values[static_cast<std::size_t>(k - 1)];
        if (!value_finite(next))
            throw overflow_error("eval_monic_seq: value overflow at degree " +
                                     std::to_string(k + 1),
                                 k + 1);
        seq.values[static_cast<std::size_t>(k + 1)] = next;
    }
    if (alpha > R(-1)) seq.log_norms = detail::half_log_norms(n_max, alpha);
    return seq;
}

/// Orthonormal values l~_k(x) = Lhat_k(x)/||Lhat_k|| by the symmetric
/// recurrence x l~_k = a_{k+1} l~_{k+1} + beta_k l~_k + a_k l~_{k-1},
/// a_k = sqrt(gamma_k).  Intermediates stay polynomially bounded at fixed
/// x > 0, so degrees up to 10^6 are safe in double.
template <class R>
laguerre_seq<R> eval_orthonormal_seq(long n_max, const R& alpha, const R& x) {
    if (n_max < 0)
        throw domain_error("eval_orthonormal_seq: n_max must be >= 0");
    if (!(alpha > R(-1)))
        throw domain_error("eval_orthonormal_seq: alpha must be > -1");
    require_finite(x, "eval_orthonormal_seq x");

    laguerre_seq<R> seq{basis::orthonormal, detail::orthonormal_values(n_max, alpha, x),
                        detail::half_log_norms(n_max, alpha)};
    return seq;
}

/// Orthonormal values together with derivative values l~'_k(x).
/// The derivative comes from Hahn's identity in orthonormal form:
/// l~'_k = sqrt(k) * l~_{k-1} at parameter alpha+1.
template <class R>
struct orthonormal_pair {
    std::vector<R> val;  // l~_k(x), k = 0..n_max
    std::vector<R> dval; // l~'_k(x)
    std::vector<R> log_norms;
};

template <class R>
orthonormal_pair<R> eval_orthonormal_with_derivative(long n_max, const R& alpha, const R& x) {
    auto base = eval_orthonormal_seq(n_max, alpha, x);
    orthonormal_pair<R> out{std::move(base.values), {}, std::move(base.log_norms)};
    out.dval.assign(static_cast<std::size_t>(n_max) + 1, R(0));
    if (n_max >= 1) {
        auto shifted = eval_orthonormal_seq(n_max - 1, alpha + R(1), x);
        for (long k = 1; k <= n_max; ++k)
            out.dval[static_cast<std::size_t>(k)] =
                m::sqrt(R(k)) * shifted.values[static_cast<std::size_t>(k - 1)];
    }
    return out;
}

namespace detail {

template <class V>
void require_off_positive_axis(const V& x, const char* who) {
    using R = real_of_t<V>;
    bool on_axis;
    if constexpr (is_cplx<V>::value)
        on_axis = (x.im == R(0) && x.re >= R(0));
    else
        on_axis = (x >= R(0));
    if (on_axis)
        throw domain_error(std::string(who) + ": x must lie off the positive real semiaxis");
}

} // namespace detail

/// Lhat_{n-1}(x)/Lhat_n(x) via the ratio recurrence
/// r_{k+1} = (x - beta_k) - gamma_k / r_k, r_1 = x - (alpha+1); returns 1/r_n.
/// Overflow-free for every n; x must lie off the positive real semiaxis.
template <class V>
V eval_ratio(long n, const real_of_t<V>& alpha, const V& x) {
    using R = real_of_t<V>;
    if (n < 1)
        throw domain_error("eval_ratio: n must be >= 1");
    detail::require_off_positive_axis(x, "eval_ratio");
    V r = x - V(alpha + R(1));
    for (long k = 1; k < n; ++k) {
        if (magnitude(r) == R(0))
            throw domain_error("eval_ratio: hit a polynomial zero at degree " + std::to_string(k));
        auto rc = recurrence_coeffs(k, alpha);
        r = (x - V(rc.beta)) - V(rc.gamma) / r;
    }
    if (magnitude(r) == R(0))
        throw domain_error("eval_ratio: hit a polynomial zero at degree " + std::to_string(n));
    return V(R(1)) / r;
}

/// All ratios Lhat_{n-1}(x)/Lhat_n(x), n = 1..n_max, from one forward pass.
template <class V>
std::vector<V> eval_ratio_seq(long n_max, const real_of_t<V>& alpha, const V& x) {
    using R = real_of_t<V>;
    if (n_max < 1)
        throw domain_error("eval_ratio_seq: n_max must be >= 1");
    detail::require_off_positive_axis(x, "eval_ratio_seq");
    std::vector<V> out(static_cast<std::size_t>(n_max) + 1);
    V r = x - V(alpha + R(1));
    out[1] = V(R(1)) / r;
    for (long k = 1; k < n_max; ++k) {
        if (magnitude(r) == R(0))
            throw domain_error("eval_ratio_seq: hit a polynomial zero at degree " +
                               std::to_string(k));
        auto rc = recurrence_coeffs(k, alpha);
        r = (x - V(rc.beta)) - V(rc.gamma) / r;
        out[static_cast<std::size_t>(k + 1)] = V(R(1)) / r;
    }
    return out;
}

/// k-th derivative of the monic polynomial via iterated Hahn identity:
/// [Lhat_n]^(k) = (n!/(n-k)!) Lhat_{n-k} at parameter alpha+k; zero for k > n.
template <class V>
V derivative_monic(long n, long k, const real_of_t<V>& alpha, const V& x) {
    using R = real_of_t<V>;
    if (k < 0)
        throw domain_error("derivative_monic: derivative order must be >= 0");
    if (k > n) return V(R(0));
    R falling(1);
    for (long j = 0; j < k; ++j) falling *= R(n - j);
    auto seq = eval_monic_seq<V>(n - k, alpha + R(k), x);
    return V(falling) * seq.values[static_cast<std::size_t>(n - k)];
}

template <class R>
R pi_value() {
    return m::atan2(R(0), R(-1));
}

/// p = 1 Perron term for the non-monic normalization L_n^(alpha) on the cut
/// plane:  (1/2) pi^(-1/2) e^(x/2) (-x)^(-alpha/2-1/4) n^(alpha/2-1/4)
/// exp(2 sqrt(-n x)).  Relative error O(n^(-1/2)).  (-x)^(1/2) is real and
/// positive for x < 0, principal branch otherwise.
template <class V>
V perron_estimate(long n, const real_of_t<V>& alpha, const V& x) {
    using R = real_of_t<V>;
    using C = cplx<R>;
    if (n < 1)
        throw domain_error("perron_estimate: n must be >= 1");
    detail::require_off_positive_axis(x, "perron_estimate");

    C z;
    if constexpr (is_cplx<V>::value)
        z = x;
    else
        z = C(x);
    C minus_x = -z;
    R p = pi_value<R>();
    C value = C(R(1) / R(2)) * C(m::pow(p, R(-0.5))) * exp(z / R(2)) *
              pow(minus_x, -alpha / R(2) - R(1) / R(4)) *
              C(m::pow(R(n), alpha / R(2) - R(1) / R(4))) *
              exp(C(R(2)) * sqrt(C(R(n)) * minus_x));
    if constexpr (is_cplx<V>::value)
        return value;
    else
        return value.re; // imaginary part is exactly zero on the real branch
}

/// sigma^alpha(x) = pi^(-1/2) e^(x/2) x^(-alpha/2-1/4) and
/// phi_n^alpha(x) = 2 sqrt(n x) - alpha pi/2 - pi/4, both for x > 0.
template <class R>
struct oscillatory_phase {
    R sigma;
    R phase;
};

template <class R>
oscillatory_phase<R> oscillatory_data(long n, const R& alpha, const R& x) {
    if (!(x > R(0)))
        throw domain_error("oscillatory_data: x must be positive");
    R p = pi_value<R>();
    R sigma = m::pow(p, R(-0.5)) * m::exp(x / R(2)) * m::pow(x, -alpha / R(2) - R(1) / R(4));
    R phase = R(2) * m::sqrt(R(n) * x) - alpha * p / R(2) - p / R(4);
    return {sigma, phase};
}

/// p = 1 Fejér-type estimate for the monic polynomial on (0, inf),
/// (-1)^n Gamma(n+1) n^(alpha/2-1/4) sigma^alpha(x) cos phi_n^alpha(x),
/// carried as log-amplitude + sign + phase since Gamma(n+1) overflows
/// native floats at n >= 171.  Estimate value = sign * exp(log_amplitude)
/// * cos(phase.phase).
template <class R>
struct fejer_data {
    R log_amplitude; // ln Gamma(n+1) + (alpha/2 - 1/4) ln n + ln sigma^alpha(x)
    int sign;        // (-1)^n
    oscillatory_phase<R> phase;
};

template <class R>
fejer_data<R> fejer_estimate(long n, const R& alpha, const R& x) {
    if (n < 0)
        throw domain_error("fejer_estimate: n must be >= 0");
    auto ph = oscillatory_data(n, alpha, x);
    R log_n_term = (n == 0) ? R(0) : (alpha / R(2) - R(1) / R(4)) * m::log(R(n));
    R log_amp = log_gamma(R(n) + R(1)) + log_n_term + m::log(ph.sigma);
    return {log_amp, (n % 2 == 0) ? 1 : -1, ph};
}

} // namespace lsob::laguerre

#endif
