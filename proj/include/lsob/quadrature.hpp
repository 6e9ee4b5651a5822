// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Gauss–Laguerre rules by Golub–Welsch: eigen-decomposition of the symmetric
// Jacobi matrix built from the three-term recurrence, with only the first
// eigenvector component tracked for the weights.

#ifndef LSOB_QUADRATURE_HPP
#define LSOB_QUADRATURE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lsob/gammafn.hpp"
#include "lsob/laguerre.hpp"
#include "lsob/precision.hpp"

namespace lsob::quadrature {

/// Gauss rule for the weight x^alpha e^(-x) on (0, inf).
/// Nodes ascending and strictly positive; weights strictly positive with
/// total mass Gamma(alpha+1); exact for polynomials of degree <= 2m-1.
template <class R>
struct rule {
    R alpha;
    std::vector<R> nodes;
    std::vector<R> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Analytic moment of the weight: integral of x^k = Gamma(alpha+k+1).
template <class R>
R weight_moment(long k, const R& alpha) {
    if (k < 0)
        throw domain_error("weight_moment: k must be >= 0");
    if (!(alpha > R(-1)))
        throw domain_error("weight_moment: alpha must be > -1");
    return m::exp(log_gamma(alpha + R(k) + R(1)));
}

namespace detail {

template <class R>
R hypot2(const R& a, const R& b) {
    R aa = m::abs(a), ab = m::abs(b);
    if (aa > ab) {
        R q = ab / aa;
        return aa * m::sqrt(R(1) + q * q);
    }
    if (ab == R(0)) return R(0);
    R q = aa / ab;
    return ab * m::sqrt(R(1) + q * q);
}

template <class R>
R sign_like(const R& magnitude, const R& sign_source) {
    return sign_source >= R(0) ? m::abs(magnitude) : -m::abs(magnitude);
}

/// Implicit-shift QL sweep over a symmetric tridiagonal matrix, rotating a
/// single row vector z along (the first eigenvector components).  d and e are
/// modified in place; on return d holds eigenvalues in no particular order.
template <class R>
void imtql_first_row(std::vector<R>& d, std::vector<R>& e, std::vector<R>& z, const R& tol) {
    const long n = static_cast<long>(d.size());
    const long max_sweeps = 100;
    e.resize(static_cast<std::size_t>(n), R(0)); // e[n-1] is a sentinel zero

    for (long l = 0; l < n; ++l) {
        long iter = 0;
        while (true) {
            long m = l;
            for (; m < n - 1; ++m) {
                R dd = m::abs(d[m]) + m::abs(d[m + 1]);
                if (m::abs(e[m]) <= tol * dd) break;
            }
            if (m == l) break;
            if (iter++ >= max_sweeps)
                throw convergence_error(
                    "gauss_laguerre: QL iteration stalled at off-diagonal index " +
                        std::to_string(l),
                    l);
            R g = (d[l + 1] - d[l]) / (R(2) * e[l]);
            R r = hypot2(g, R(1));
            g = d[m] - d[l] + e[l] / (g + sign_like(r, g));
            R s(1), c(1), p(0);
            bool underflow_restart = false;
            for (long i = m - 1; i >= l; --i) {
                R f = s * e[i];
                R b = c * e[i];
                r = hypot2(f, g);
                e[i + 1] = r;
                if (r == R(0)) {
                    d[i + 1] -= p;
                    e[m] = R(0);
                    underflow_restart = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + R(2) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (underflow_restart) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = R(0);
        }
    }
}

} // namespace detail

/// m-point Gauss–Laguerre rule.  Jacobi matrix: diagonal beta_k = 2k+alpha+1,
/// off-diagonal sqrt(gamma_{k+1}) = sqrt((k+1)(k+1+alpha)); weights are
/// Gamma(alpha+1) times the squared first eigenvector components.
template <class R>
rule<R> gauss_laguerre(long m, const R& alpha) {
    if (m < 1)
        throw domain_error("gauss_laguerre: m must be >= 1");
    if (!(alpha > R(-1)))
        throw domain_error("gauss_laguerre: alpha must be > -1");

    std::vector<R> d(static_cast<std::size_t>(m));
    std::vector<R> e(static_cast<std::size_t>(m), R(0));
    for (long k = 0; k < m; ++k) {
        d[static_cast<std::size_t>(k)] = laguerre::recurrence_coeffs(k, alpha).beta;
        if (k + 1 < m)
            e[static_cast<std::size_t>(k)] =
                m::sqrt(laguerre::recurrence_coeffs(k + 1, alpha).gamma);
    }
    std::vector<R> z(static_cast<std::size_t>(m), R(0));
    z[0] = R(1);

    R tol = rel_tol<R>(4);
    detail::imtql_first_row(d, e, z, tol);

    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    rule<R> out{alpha, {}, {}};
    out.nodes.reserve(d.size());
    out.weights.reserve(d.size());
    R mass = weight_moment(0, alpha);
    for (std::size_t idx : order) {
        out.nodes.push_back(d[idx]);
        out.weights.push_back(mass * z[idx] * z[idx]);
    }

    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
        bool ordered = (i == 0) ? out.nodes[i] > R(0) : out.nodes[i] > out.nodes[i - 1];
        if (!ordered || !(out.weights[i] > R(0)))
            throw consistency_error("gauss_laguerre: node/weight invariants violated");
    }
    return out;
}

/// Sum of weights[i] * f(nodes[i]); failures carry the offending node index.
template <class R, class F>
R integrate(F&& f, const rule<R>& q) {
    R acc(0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        R v;
        try {
            v = f(q.nodes[i]);
        } catch (const std::exception& ex) {
            throw evaluation_error(std::string("integrate: integrand failed: ") + ex.what(),
                                   static_cast<long>(i));
        }
        if (!m::isfinite(v))
            throw evaluation_error("integrate: non-finite integrand value",
                                   static_cast<long>(i));
        acc += q.weights[i] * v;
    }
    return acc;
}

} // namespace lsob::quadrature

#endif
