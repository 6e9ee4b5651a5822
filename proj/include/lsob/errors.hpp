// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef LSOB_ERRORS_HPP
#define LSOB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsob {

/// Argument outside the mathematical domain of an operation (e.g. alpha <= -1,
/// x on the positive real semiaxis where a branch cut lies).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A value left the representable range of the working scalar.  Carries the
/// polynomial degree at which the evaluation blew up, when known.
class overflow_error : public std::runtime_error {
public:
    overflow_error(const std::string& what, long degree = -1)
        : std::runtime_error(what), degree_(degree) {}
    long degree() const noexcept { return degree_; }

private:
    long degree_;
};

/// An iterative scheme failed to converge; carries the stuck index.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, long index = -1)
        : std::runtime_error(what), index_(index) {}
    long index() const noexcept { return index_; }

private:
    long index_;
};

/// An internal consistency check failed (e.g. a norm that must be positive
/// came out non-positive); signals numerical breakdown, not a caller bug.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation of a user-supplied callable failed at a quadrature node.
class evaluation_error : public std::runtime_error {
public:
    evaluation_error(const std::string& what, long node_index)
        : std::runtime_error(what), node_index_(node_index) {}
    long node_index() const noexcept { return node_index_; }

private:
    long node_index_;
};

} // namespace lsob

#endif
