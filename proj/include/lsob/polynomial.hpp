// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef LSOB_POLYNOMIAL_HPP
#define LSOB_POLYNOMIAL_HPP

#include <vector>

#include "lsob/complexnum.hpp"
#include "lsob/precision.hpp"

namespace lsob {

/// Dense power-basis polynomial, coefficients in ascending degree order.
template <class R>
class polynomial {
public:
    polynomial() : coeffs_(1, R(0)) {}
    explicit polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.assign(1, R(0));
    }

    static polynomial constant(R v) { return polynomial(std::vector<R>{std::move(v)}); }
    static polynomial monomial(std::size_t degree, R lead = R(1)) {
        std::vector<R> c(degree + 1, R(0));
        c[degree] = std::move(lead);
        return polynomial(std::move(c));
    }

    const std::vector<R>& coeffs() const { return coeffs_; }
    R& operator[](std::size_t k) { return coeffs_[k]; }
    const R& operator[](std::size_t k) const { return coeffs_[k]; }

    /// Degree of the stored representation (trailing zeros not trimmed).
    std::size_t degree() const { return coeffs_.size() - 1; }

    template <class V>
    V operator()(const V& x) const {
        V acc(coeffs_.back());
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;)
            acc = acc * x + V(coeffs_[k]);
        return acc;
    }

    polynomial derivative() const {
        if (coeffs_.size() == 1) return polynomial();
        std::vector<R> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = R(static_cast<long>(k)) * coeffs_[k];
        return polynomial(std::move(d));
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        std::vector<R> c(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return polynomial(std::move(c));
    }

    friend polynomial operator+(const polynomial& a, const polynomial& b) {
        std::vector<R> c(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return polynomial(std::move(c));
    }

    friend polynomial operator-(const polynomial& a, const polynomial& b) {
        std::vector<R> c(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return polynomial(std::move(c));
    }

    friend polynomial operator*(const R& s, const polynomial& a) {
        std::vector<R> c = a.coeffs_;
        for (auto& v : c) v *= s;
        return polynomial(std::move(c));
    }

private:
    std::vector<R> coeffs_;
};

} // namespace lsob

#endif
