// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Independent ground truth: monomials orthogonalized against the exact
// Sobolev moment Gram matrix by classical Gram–Schmidt with a
// reorthogonalization pass, at whatever (high) precision the caller has
// configured.  Everything downstream that claims exactness is checked
// against this basis.

#ifndef LSOB_ORACLE_HPP
#define LSOB_ORACLE_HPP

#include <string>
#include <vector>

#include "lsob/polynomial.hpp"
#include "lsob/sobolev.hpp"

namespace lsob::oracle {

/// Moment Gram matrix of the Sobolev inner product on the monomial basis:
/// G[i][j] = Gamma(alpha+i+j+1) + M c^(i+j) + N i j c^(i+j-2), the derivative
/// term vanishing when i*j = 0.  Symmetric positive definite for alpha > -1,
/// M, N >= 0.
template <class R>
struct gram {
    sobolev::params<R> p;
    std::vector<std::vector<R>> entries; // (n_max+1) x (n_max+1)

    std::size_t size() const { return entries.size(); }
};

namespace detail {

/// Cholesky success is the positive-definiteness certificate.
template <class R>
void require_positive_definite(const std::vector<std::vector<R>>& a) {
    std::size_t n = a.size();
    std::vector<std::vector<R>> L(n, std::vector<R>(n, R(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            R sum = a[i][j];
            for (std::size_t k = 0; k < j; ++k) sum -= L[i][k] * L[j][k];
            if (i == j) {
                if (!(sum > R(0)))
                    throw consistency_error(
                        "sobolev_gram: matrix is not positive definite (pivot " +
                        std::to_string(i) + ")");
                L[i][j] = m::sqrt(sum);
            } else {
                L[i][j] = sum / L[j][j];
            }
        }
    }
}

} // namespace detail

template <class R>
gram<R> sobolev_gram(long n_max, const sobolev::params<R>& p) {
    p.validate();
    if (n_max < 0)
        throw domain_error("sobolev_gram: n_max must be >= 0");
    if (n_max > 60)
        throw domain_error("sobolev_gram: n_max capped at 60 (monomial conditioning)");

    std::size_t size = static_cast<std::size_t>(n_max) + 1;
    gram<R> g{p, std::vector<std::vector<R>>(size, std::vector<R>(size))};
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            R entry = m::exp(log_gamma(p.alpha + R(static_cast<long>(i + j)) + R(1)));
            entry += p.M * m::pow(p.c, R(static_cast<long>(i + j)));
            if (i > 0 && j > 0)
                entry += p.N * R(static_cast<long>(i)) * R(static_cast<long>(j)) *
                         m::pow(p.c, R(static_cast<long>(i + j - 2)));
            g.entries[i][j] = entry;
        }
    }
    detail::require_positive_definite(g.entries);
    return g;
}

/// <p, q>_S for coefficient vectors against a Gram matrix.
template <class R>
R gram_inner(const gram<R>& g, const std::vector<R>& pc, const std::vector<R>& qc) {
    R acc(0);
    for (std::size_t i = 0; i < pc.size() && i < g.size(); ++i) {
        if (pc[i] == R(0)) continue;
        R row(0);
        for (std::size_t j = 0; j < qc.size() && j < g.size(); ++j)
            row += g.entries[i][j] * qc[j];
        acc += pc[i] * row;
    }
    return acc;
}

/// Monic orthogonal basis rows in the power basis plus squared norms.
/// Row n always has leading coefficient exactly 1: projections only ever
/// subtract lower-degree content.
template <class R>
struct orthobasis {
    sobolev::params<R> p;
    std::vector<polynomial<R>> rows;
    std::vector<R> norms_sq;

    long n_max() const { return static_cast<long>(rows.size()) - 1; }
};

/// Classical Gram–Schmidt with one reorthogonalization pass.  The basis is
/// meant to be built at twice the consumer precision; the post-condition
/// check certifies residual orthogonality at the consumer scale,
/// 10^-(digits/2 - 14) relative, which the verification dot products can
/// still resolve through their own cancellation.
template <class R>
orthobasis<R> gram_schmidt_monic(const gram<R>& g) {
    const std::size_t size = g.size();
    orthobasis<R> basis{g.p, {}, {}};
    basis.rows.reserve(size);
    basis.norms_sq.reserve(size);

    // w[j] = G * row_j, cached so each projection costs O(size)
    std::vector<std::vector<R>> w;
    w.reserve(size);
    auto apply_gram = [&](const std::vector<R>& v) {
        std::vector<R> out(size, R(0));
        for (std::size_t i = 0; i < size; ++i) {
            R acc(0);
            for (std::size_t j = 0; j < size; ++j) acc += g.entries[i][j] * v[j];
            out[i] = acc;
        }
        return out;
    };
    auto dot = [&](const std::vector<R>& a, const std::vector<R>& b) {
        R acc(0);
        for (std::size_t i = 0; i < size; ++i) acc += a[i] * b[i];
        return acc;
    };

    std::vector<std::vector<R>> rows_full;
    rows_full.reserve(size);
    for (std::size_t n = 0; n < size; ++n) {
        std::vector<R> r(size, R(0));
        r[n] = R(1);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < n; ++j) {
                R coef = dot(r, w[j]) / basis.norms_sq[j];
                const auto& rj = rows_full[j];
                for (std::size_t k = 0; k <= j; ++k) r[k] -= coef * rj[k];
            }
        }
        w.push_back(apply_gram(r));
        R nsq = dot(r, w.back());
        if (!(nsq > R(0)))
            throw consistency_error("gram_schmidt_monic: non-positive norm at degree " +
                                    std::to_string(n));
        basis.norms_sq.push_back(nsq);
        rows_full.push_back(std::move(r));
    }

    // loss-of-orthogonality post-check at the consumer (half) precision
    R tol = m::pow10<R>(-static_cast<int>(digits_of<R>() / 2) + 14);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            R off = m::abs(dot(rows_full[i], w[j])) /
                    m::sqrt(basis.norms_sq[i] * basis.norms_sq[j]);
            if (off > tol)
                throw consistency_error("gram_schmidt_monic: loss of orthogonality at pair (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }

    // store rows trimmed to their true degree
    for (std::size_t n = 0; n < size; ++n) {
        rows_full[n].resize(n + 1);
        basis.rows.emplace_back(std::move(rows_full[n]));
    }
    return basis;
}

/// Gram matrix and basis built at twice the current working precision (the
/// ground-truth convention: the oracle must dominate the error budget of
/// whatever it certifies).  Parameter values are padded, not re-parsed, so
/// both precisions agree on the exact inner product being orthogonalized.
template <class R>
struct reference {
    gram<R> g;
    orthobasis<R> basis;
};

template <class R>
reference<R> reference_basis(long n_max, const sobolev::params<R>& p) {
    if constexpr (std::is_same_v<R, double>) {
        auto g = sobolev_gram(n_max, p);
        auto basis = gram_schmidt_monic(g);
        return {std::move(g), std::move(basis)};
    } else {
        unsigned twice = 2 * digits_of<R>();
        scoped_precision hi(twice);
        sobolev::params<R> wide{at_precision(p.alpha, twice), at_precision(p.c, twice),
                                at_precision(p.M, twice), at_precision(p.N, twice)};
        auto g = sobolev_gram(n_max, wide);
        auto basis = gram_schmidt_monic(g);
        return {std::move(g), std::move(basis)};
    }
}

/// Horner evaluation of basis row n.
template <class R>
R oracle_eval(const orthobasis<R>& basis, long n, const R& x) {
    if (n < 0 || n > basis.n_max())
        throw domain_error("oracle_eval: degree out of range");
    return basis.rows[static_cast<std::size_t>(n)](x);
}

template <class R>
R oracle_eval_derivative(const orthobasis<R>& basis, long n, const R& x) {
    if (n < 0 || n > basis.n_max())
        throw domain_error("oracle_eval_derivative: degree out of range");
    return basis.rows[static_cast<std::size_t>(n)].derivative()(x);
}

} // namespace lsob::oracle

#endif
