// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef LSOB_COMPLEXNUM_HPP
#define LSOB_COMPLEXNUM_HPP

#include <type_traits>

#include "lsob/precision.hpp"

namespace lsob {

/// Minimal complex number over a configurable-precision real.
/// std::complex<T> is only specified for the builtin floating types, so the
/// handful of operations needed here are spelled out for any real R.
template <class R>
struct cplx {
    R re{};
    R im{};

    cplx() = default;
    cplx(R r) : re(std::move(r)) {}
    cplx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    friend cplx operator+(const cplx& a, const cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend cplx operator-(const cplx& a, const cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend cplx operator-(const cplx& a) { return {-a.re, -a.im}; }
    friend cplx operator*(const cplx& a, const cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend cplx operator*(const R& s, const cplx& a) { return {s * a.re, s * a.im}; }
    friend cplx operator*(const cplx& a, const R& s) { return s * a; }
    friend cplx operator/(const cplx& a, const R& s) { return {a.re / s, a.im / s}; }
    friend cplx operator/(const cplx& a, const cplx& b) {
        // Smith's rule keeps intermediate magnitudes balanced.
        if (m::abs(b.re) >= m::abs(b.im)) {
            R r = b.im / b.re;
            R d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        R r = b.re / b.im;
        R d = b.re * r + b.im;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }
    cplx& operator+=(const cplx& b) { return *this = *this + b; }
    cplx& operator-=(const cplx& b) { return *this = *this - b; }
    cplx& operator*=(const cplx& b) { return *this = *this * b; }
    cplx& operator/=(const cplx& b) { return *this = *this / b; }

    friend bool operator==(const cplx& a, const cplx& b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
R abs(const cplx<R>& z) {
    // Scaled to dodge overflow in the double instantiation.
    R ar = m::abs(z.re), ai = m::abs(z.im);
    if (ar == R(0) && ai == R(0)) return R(0);
    if (ar >= ai) {
        R q = ai / ar;
        return ar * m::sqrt(R(1) + q * q);
    }
    R q = ar / ai;
    return ai * m::sqrt(R(1) + q * q);
}

template <class R>
R arg(const cplx<R>& z) {
    return m::atan2(z.im, z.re);
}

template <class R>
cplx<R> conj(const cplx<R>& z) {
    return {z.re, -z.im};
}

/// Principal branch log (cut on the negative real axis).
template <class R>
cplx<R> log(const cplx<R>& z) {
    return {m::log(abs(z)), arg(z)};
}

template <class R>
cplx<R> exp(const cplx<R>& z) {
    R e = m::exp(z.re);
    return {e * m::cos(z.im), e * m::sin(z.im)};
}

/// Principal branch square root.
template <class R>
cplx<R> sqrt(const cplx<R>& z) {
    if (z.im == R(0) && z.re >= R(0)) return {m::sqrt(z.re), R(0)};
    R r = abs(z);
    R u = m::sqrt((r + z.re) / R(2));
    R v = m::sqrt((r - z.re) / R(2));
    if (z.im < R(0)) v = -v;
    return {u, v};
}

/// z^p on the principal branch.
template <class R>
cplx<R> pow(const cplx<R>& z, const R& p) {
    return exp(p * log(z));
}

template <class V>
struct is_cplx : std::false_type {};
template <class R>
struct is_cplx<cplx<R>> : std::true_type {};

/// Underlying real type of a scalar (identity for reals).
template <class V>
struct real_of {
    using type = V;
};
template <class R>
struct real_of<cplx<R>> {
    using type = R;
};
template <class V>
using real_of_t = typename real_of<V>::type;

/// |v| for real or complex v, as the underlying real type.
template <class V>
real_of_t<V> magnitude(const V& v) {
    if constexpr (is_cplx<V>::value)
        return abs(v);
    else
        return m::abs(v);
}

template <class V>
bool value_finite(const V& v) {
    if constexpr (is_cplx<V>::value)
        return m::isfinite(v.re) && m::isfinite(v.im);
    else
        return m::isfinite(v);
}

} // namespace lsob

#endif
