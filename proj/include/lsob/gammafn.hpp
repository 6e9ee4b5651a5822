// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef LSOB_GAMMAFN_HPP
#define LSOB_GAMMAFN_HPP

#include "lsob/precision.hpp"

namespace lsob {

/// ln Gamma(x) for x > 0 at the working precision of R.
template <class R>
R log_gamma(const R& x) {
    require_finite(x, "log_gamma argument");
    if (x <= R(0))
        throw domain_error("log_gamma: argument must be positive");
    return m::lgamma(x);
}

/// Gamma(n+1)/Gamma(n+alpha) via log-gamma differences.
/// Satisfies gamma_ratio(n, alpha) * n^(alpha-1) -> 1 as n -> infinity.
template <class R>
R gamma_ratio(long n, const R& alpha) {
    require_finite(alpha, "gamma_ratio alpha");
    if (n < 1)
        throw domain_error("gamma_ratio: n must be >= 1");
    if (R(n) + alpha <= R(0))
        throw domain_error("gamma_ratio: n + alpha must be positive");
    return m::exp(log_gamma(R(n) + R(1)) - log_gamma(R(n) + alpha));
}

} // namespace lsob

#endif
