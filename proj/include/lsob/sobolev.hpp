// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0
//
// The discrete Sobolev inner product
//   <f,g>_S = int_0^inf f g x^alpha e^(-x) dx + M f(c) g(c) + N f'(c) g'(c)
// with mass point c > 0, and the degree-n monic orthogonal polynomials
// Shat_n it induces: values and derivative at c (2x2 determinant solve on
// kernel data), connection coefficients onto the two top Laguerre degrees,
// pointwise evaluation, norms, and the normalized large-n machinery.
//
// Scaling policy: every large-n path works with orthonormal Laguerre data
// plus log-norm offsets, so A1, A0, B1/n, B0 stay O(1)..O(n) and remain
// representable in native doubles up to n ~ 10^6.  Monic-scale outputs
// exponentiate the log-norm only at the surface.

#ifndef LSOB_SOBOLEV_HPP
#define LSOB_SOBOLEV_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "lsob/kernels.hpp"
#include "lsob/polynomial.hpp"
#include "lsob/quadrature.hpp"

namespace lsob::sobolev {

template <class R>
struct params {
    R alpha; // > -1
    R c;     // > 0: the mass point sits inside the oscillatory region
    R M;     // >= 0
    R N;     // >= 0

    void validate() const {
        require_finite(alpha, "params alpha");
        require_finite(c, "params c");
        require_finite(M, "params M");
        require_finite(N, "params N");
        if (!(alpha > R(-1)))
            throw domain_error("sobolev params: alpha must be > -1");
        // With both masses off the product is classical and c only enters
        // through the (x-c)^2 shift, so any real c is acceptable there.
        if (!(c > R(0)) && (M > R(0) || N > R(0)))
            throw domain_error("sobolev params: c must be > 0 when a point mass is present");
        if (M < R(0) || N < R(0))
            throw domain_error("sobolev params: M and N must be >= 0");
    }
};

enum class ip_method { moments, quadrature };

namespace detail {

template <class R>
R moment_sum(const polynomial<R>& h, const R& alpha) {
    R acc(0);
    for (std::size_t k = 0; k < h.coeffs().size(); ++k)
        acc += h.coeffs()[k] * quadrature::weight_moment(static_cast<long>(k), alpha);
    return acc;
}

template <class R>
R integral_part(const polynomial<R>& f, const polynomial<R>& g, const R& alpha, ip_method how,
                long rule_points) {
    if (how == ip_method::moments) return moment_sum(f * g, alpha);
    long deg = static_cast<long>(f.degree() + g.degree());
    long m = rule_points >= 1 ? rule_points : deg / 2 + 1;
    if (2 * m - 1 < deg)
        throw overflow_error("inner_product: quadrature rule of " + std::to_string(m) +
                                 " points cannot integrate degree " + std::to_string(deg),
                             deg);
    auto q = quadrature::gauss_laguerre(m, alpha);
    return quadrature::integrate([&](const R& x) { return f(x) * g(x); }, q);
}

} // namespace detail

/// Full Sobolev inner product of two power-basis polynomials.  The moments
/// route sums exact Gamma moments of the weight (exact up to rounding); the
/// quadrature route uses a Gauss–Laguerre rule of sufficient exactness (an
/// explicit rule_points that is too small is rejected).
template <class R>
R inner_product(const polynomial<R>& f, const polynomial<R>& g, const params<R>& p,
                ip_method how = ip_method::moments, long rule_points = -1) {
    p.validate();
    R base = detail::integral_part(f, g, p.alpha, how, rule_points);
    R fd = f.derivative()(p.c), gd = g.derivative()(p.c);
    return base + p.M * f(p.c) * g(p.c) + p.N * fd * gd;
}

/// k-iterated Christoffel inner product <f,g>_[k] = int (x-c)^k f g w dx,
/// k in {1, 2}.
template <class R>
R christoffel_inner(const polynomial<R>& f, const polynomial<R>& g, int k, const params<R>& p,
                    ip_method how = ip_method::moments, long rule_points = -1) {
    if (k != 1 && k != 2)
        throw domain_error("christoffel_inner: k must be 1 or 2");
    require_finite(p.alpha, "christoffel alpha");
    if (!(p.alpha > R(-1)))
        throw domain_error("christoffel_inner: alpha must be > -1");
    polynomial<R> shift(std::vector<R>{-p.c, R(1)});
    polynomial<R> weighted = f * shift;
    if (k == 2) weighted = weighted * shift;
    return detail::integral_part(weighted, g, p.alpha, how, rule_points);
}

/// Per-degree connection data in normalized (orthonormal + log-norm) scale.
/// s_over_h and ds_over_h are Shat_n(c)/h_n and [Shat_n]'(c)/h_n with
/// h_n = ||Lhat_n||; rho is ||Shat_n||_S^2 / ||Lhat_n||^2 = 1 + B1/gamma_n.
template <class R>
struct conn_state {
    long n;
    R A1, A0, B1, B0;
    R s_over_h, ds_over_h;
    R denom; // shared 2x2 determinant denominator; positive for M, N >= 0
    R rho;
};

/// Computes the degree-n connection data from a diagonal-kernel sweep built
/// to n_max >= n.  The 2x2 system solved is the stationarity condition that
/// pins Shat_n(c), [Shat_n]'(c) against the order-(n-1) kernels.
template <class R>
conn_state<R> connection_state(const kernels::cc_sweep<R>& sweep, long n, const params<R>& p) {
    if (n < 1)
        throw domain_error("connection_state: n must be >= 1");
    if (static_cast<std::size_t>(n) >= sweep.val.size())
        throw domain_error("connection_state: sweep too short for requested degree");

    std::size_t ni = static_cast<std::size_t>(n);
    const R &u = sweep.val[ni], &up = sweep.dval[ni];
    const R &um = sweep.val[ni - 1], &ump = sweep.dval[ni - 1];
    const R &K = sweep.K[ni - 1], &K01 = sweep.K01[ni - 1], &K11 = sweep.K11[ni - 1];

    R one(1);
    R D = (one + p.M * K) * (one + p.N * K11) - p.M * p.N * K01 * K01;
    if (!(D > R(0)))
        throw consistency_error("connection_state: non-positive determinant");
    R s = (u * (one + p.N * K11) - p.N * K01 * up) / D;
    R ds = ((one + p.M * K) * up - p.M * K01 * u) / D;

    R gamma_n = laguerre::recurrence_coeffs(n, p.alpha).gamma;
    R rt = m::sqrt(gamma_n); // h_n / h_{n-1}
    conn_state<R> st{};
    st.n = n;
    st.s_over_h = s;
    st.ds_over_h = ds;
    st.denom = D;
    st.A1 = -(p.M * s * um + p.N * ds * ump) * rt;
    st.A0 = -(p.N * ds * um) * rt;
    st.B1 = (p.M * s * u + p.N * ds * up) * gamma_n;
    st.B0 = (p.N * ds * u) * gamma_n;
    st.rho = one + st.B1 / gamma_n;
    return st;
}

/// ||Shat_n||_S^2 / ||Lhat_n||^2; defined for n = 0 too.
template <class R>
R norm_ratio(const kernels::cc_sweep<R>& sweep, long n, const params<R>& p) {
    if (n == 0) return R(1) + p.M / m::exp(log_gamma(p.alpha + R(1)));
    return connection_state(sweep, n, p).rho;
}

/// Monic-scale Shat_n(c), [Shat_n]'(c) and the shared determinant
/// denominator.  The internal computation is normalized; the log-norm is
/// exponentiated only here, so the native-double instantiation overflows for
/// degrees beyond roughly 150 while the mpfr one does not.
template <class R>
struct values_at_c {
    long n;
    R S_c;
    R dS_c;
    R denom;
};

template <class R>
values_at_c<R> sobolev_values_at_c(long n, const params<R>& p) {
    p.validate();
    if (n < 1)
        throw domain_error("sobolev_values_at_c: n must be >= 1");
    auto sweep = kernels::make_cc_sweep(n, p.alpha, p.c);
    auto st = connection_state(sweep, n, p);
    R h = m::exp(laguerre::log_norm_sq(n, p.alpha) / R(2));
    if (!m::isfinite(h))
        throw overflow_error("sobolev_values_at_c: monic scale overflow at degree " +
                                 std::to_string(n),
                             n);
    return {n, st.s_over_h * h, st.ds_over_h * h, st.denom};
}

template <class R>
struct connection_coeffs_t {
    long n;
    R A1, A0, B1, B0;
};

/// The quadruple (A1, A0, B1, B0) of the degree-n connection formula
/// (x-c)^2 Shat_n = A(n;x) Lhat_n + B(n;x) Lhat_{n-1} with
/// A(n;x) = (x-c)^2 + A1 (x-c) + A0 and B(n;x) = B1 (x-c) + B0.
template <class R>
connection_coeffs_t<R> connection_coeffs(long n, const params<R>& p) {
    p.validate();
    if (n < 1)
        throw domain_error("connection_coeffs: n must be >= 1");
    auto sweep = kernels::make_cc_sweep(n, p.alpha, p.c);
    auto st = connection_state(sweep, n, p);
    return {n, st.A1, st.A0, st.B1, st.B0};
}

/// ln ||Shat_n||_S^2 in the Lemma form ||Lhat_n||^2 + B1(n;c) ||Lhat_{n-1}||^2
/// = ||Lhat_n||^2 (1 + B1/gamma_n); defined for n >= 0.
template <class R>
R log_sobolev_norm_sq(long n, const params<R>& p) {
    p.validate();
    if (n < 0)
        throw domain_error("log_sobolev_norm_sq: n must be >= 0");
    if (n == 0) return m::log(m::exp(log_gamma(p.alpha + R(1))) + p.M);
    auto sweep = kernels::make_cc_sweep(n, p.alpha, p.c);
    auto st = connection_state(sweep, n, p);
    if (!(st.rho > R(0)))
        throw consistency_error("sobolev_norm_sq: non-positive norm at degree " +
                                std::to_string(n));
    return laguerre::log_norm_sq(n, p.alpha) + m::log(st.rho);
}

/// ||Shat_n||_S^2, strictly positive; a non-positive or overflowing result
/// is reported rather than returned.
template <class R>
R sobolev_norm_sq(long n, const params<R>& p) {
    R v = m::exp(log_sobolev_norm_sq(n, p));
    if (!m::isfinite(v))
        throw overflow_error("sobolev_norm_sq: overflow at degree " + std::to_string(n), n);
    return v;
}

/// Shat_n(x) for real or complex x.  Away from the mass point the connection
/// quotient [A(n;x) Lhat_n + B(n;x) Lhat_{n-1}]/(x-c)^2 is used; inside
/// |x-c| <= eps_switch = 1e-3 max(1,|c|) the kernel-expansion form
/// Shat_n(x) = Lhat_n(x) - M Shat_n(c) K_{n-1}(x,c) - N [Shat_n]'(c)
/// K^(0,1)_{n-1}(x,c) takes over, since the quotient loses ~6 digits there.
template <class V>
V eval_sobolev(long n, const params<real_of_t<V>>& p, const V& x) {
    using R = real_of_t<V>;
    p.validate();
    if (n < 0)
        throw domain_error("eval_sobolev: n must be >= 0");
    if (n == 0) return V(R(1));

    auto monic = laguerre::eval_monic_seq<V>(n, p.alpha, x);
    const V& Ln = monic.values[static_cast<std::size_t>(n)];
    if (p.M == R(0) && p.N == R(0)) return Ln;

    auto sweep = kernels::make_cc_sweep(n, p.alpha, p.c);
    auto st = connection_state(sweep, n, p);
    R eps_switch = R(1) / R(1000) * std::max(R(1), m::abs(p.c));
    V dx = x - V(p.c);

    if (magnitude(dx) > eps_switch) {
        const V& Lnm1 = monic.values[static_cast<std::size_t>(n - 1)];
        V A = dx * dx + V(st.A1) * dx + V(st.A0);
        V B = V(st.B1) * dx + V(st.B0);
        return (A * Ln + B * Lnm1) / (dx * dx);
    }

    R h = m::exp(laguerre::log_norm_sq(n, p.alpha) / R(2));
    if (!m::isfinite(h))
        throw overflow_error("eval_sobolev: monic scale overflow at degree " +
                                 std::to_string(n),
                             n);
    V kcol = kernels::kernel_column(n, p.alpha, x, p.c);
    V kcol01 = kernels::kernel_column_01(n, p.alpha, x, p.c);
    return Ln - V(p.M * st.s_over_h * h) * kcol - V(p.N * st.ds_over_h * h) * kcol01;
}

/// Outer relative ratio Shat_n(x)/Lhat_n(x) off the positive semiaxis,
/// assembled from the connection quotient and the Laguerre ratio recurrence;
/// overflow-free at every n.  Identically 1 when M = N = 0.
template <class V>
V relative_asymptotics(long n, const params<real_of_t<V>>& p, const V& x) {
    using R = real_of_t<V>;
    p.validate();
    if (n < 2)
        throw domain_error("relative_asymptotics: n must be >= 2");
    laguerre::detail::require_off_positive_axis(x, "relative_asymptotics");

    auto sweep = kernels::make_cc_sweep(n, p.alpha, p.c);
    auto st = connection_state(sweep, n, p);
    V dx = x - V(p.c);
    V ratio = laguerre::eval_ratio(n, p.alpha, x);
    return (V(R(1)) + V(st.A1) / dx + V(st.A0) / (dx * dx)) +
           (V(st.B1) / dx + V(st.B0) / (dx * dx)) * ratio;
}

/// A degree-n member of the family as a value: monic by construction,
/// evaluated through the connection data, with optional power-basis
/// coefficients attached (typically from the reference basis) for Horner
/// evaluation instead.
template <class R>
class sobolev_polynomial {
public:
    sobolev_polynomial(long n, params<R> p) : n_(n), p_(std::move(p)) { p_.validate(); }
    sobolev_polynomial(long n, params<R> p, polynomial<R> coeffs)
        : n_(n), p_(std::move(p)), coeffs_(std::move(coeffs)) {
        p_.validate();
        if (static_cast<long>(coeffs_->degree()) != n)
            throw domain_error("sobolev_polynomial: coefficient row has wrong degree");
    }

    long degree() const { return n_; }
    const params<R>& parameters() const { return p_; }
    bool has_coefficients() const { return coeffs_.has_value(); }
    const polynomial<R>& coefficients() const {
        if (!coeffs_) throw domain_error("sobolev_polynomial: no power-basis coefficients");
        return *coeffs_;
    }

    template <class V>
    V operator()(const V& x) const {
        if (coeffs_) return (*coeffs_)(x);
        return eval_sobolev(n_, p_, x);
    }

private:
    long n_;
    params<R> p_;
    std::optional<polynomial<R>> coeffs_;
};

/// Normalized coefficient trends for convergence inspection:
/// (n, A1, A0 n^(1/4), B1/n, B0 n^(-3/4)).
template <class R>
struct coeff_trend_row {
    long n;
    R A1;
    R A0_n14;
    R B1_over_n;
    R B0_nm34;
};

template <class R>
std::vector<coeff_trend_row<R>> coeff_asymptotics(const std::vector<long>& n_list,
                                                  const params<R>& p) {
    p.validate();
    std::vector<coeff_trend_row<R>> rows;
    if (n_list.empty()) return rows;
    long n_max = 0;
    for (long n : n_list) {
        if (n < 2) throw domain_error("coeff_asymptotics: entries must be >= 2");
        n_max = std::max(n_max, n);
    }
    auto sweep = kernels::make_cc_sweep(n_max, p.alpha, p.c);
    rows.reserve(n_list.size());
    for (long n : n_list) {
        auto st = connection_state(sweep, n, p);
        R rn(n);
        rows.push_back({n, st.A1, st.A0 * m::pow(rn, R(0.25)), st.B1 / rn,
                        st.B0 * m::pow(rn, R(-0.75))});
    }
    return rows;
}

} // namespace lsob::sobolev

#endif
