// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef LSOB_PRECISION_HPP
#define LSOB_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>

#include "lsob/errors.hpp"

namespace lsob {

/// Arbitrary-precision real with runtime-selected precision.  Expression
/// templates are off so values behave like plain numbers; results of mixed
/// operations take the larger operand precision.
using bigfloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

/// Working precision in significant decimal digits.  15–17 digits select
/// native double arithmetic, anything larger selects mpfr.
struct precision {
    unsigned digits;

    explicit precision(unsigned d) : digits(d) {
        if (d < 15)
            throw domain_error("precision: decimal_digits must be >= 15");
    }

    bool native() const noexcept { return digits <= 17; }
};

/// Sets the mpfr default precision for the current scope and restores the
/// previous value on exit.
class scoped_precision {
public:
    explicit scoped_precision(unsigned digits10)
        : saved_(bigfloat::default_precision()) {
        bigfloat::default_precision(digits10);
    }
    ~scoped_precision() { bigfloat::default_precision(saved_); }
    scoped_precision(const scoped_precision&) = delete;
    scoped_precision& operator=(const scoped_precision&) = delete;

private:
    unsigned saved_;
};

/// Significant decimal digits carried by values of type R.
template <class R>
unsigned digits_of() {
    if constexpr (std::is_same_v<R, double>)
        return 16;
    else
        return static_cast<unsigned>(bigfloat::default_precision());
}

// Math function dispatch: the wrappers make an unqualified call inside a
// template so <cmath> handles double and ADL finds the boost overloads for
// bigfloat.
namespace m {

#define LSOB_MATH_WRAP1(name)                    \
    template <class R>                           \
    R name(const R& x) {                         \
        using std::name;                         \
        return name(x);                          \
    }

LSOB_MATH_WRAP1(abs)
LSOB_MATH_WRAP1(cos)
LSOB_MATH_WRAP1(exp)
LSOB_MATH_WRAP1(floor)
LSOB_MATH_WRAP1(lgamma)
LSOB_MATH_WRAP1(log)
LSOB_MATH_WRAP1(sin)
LSOB_MATH_WRAP1(sqrt)

#undef LSOB_MATH_WRAP1

template <class R>
R atan2(const R& y, const R& x) {
    using std::atan2;
    return atan2(y, x);
}

template <class R>
R pow(const R& base, const R& e) {
    using std::pow;
    return pow(base, e);
}

template <class R>
bool isfinite(const R& x) {
    if constexpr (std::is_same_v<R, double>) {
        return std::isfinite(x);
    } else {
        using boost::multiprecision::isinf;
        using boost::multiprecision::isnan;
        return !isnan(x) && !isinf(x);
    }
}

/// 10^(-k) at the working precision of R.
template <class R>
R pow10(int e) {
    return pow(R(10), R(e));
}

} // namespace m

/// Throws if x is NaN or infinite.  Module boundaries reject non-finite
/// values instead of propagating them; silent NaNs wreck trend tests.
template <class R>
const R& require_finite(const R& x, const char* what) {
    if (!m::isfinite(x))
        throw domain_error(std::string("non-finite value rejected: ") + what);
    return x;
}

/// Relative tolerance 10^(-(digits-slack)) for the working type.
template <class R>
R rel_tol(int slack) {
    return m::pow10<R>(-static_cast<int>(digits_of<R>()) + slack);
}

/// Value-preserving copy carried at the given precision.  Results of mpfr
/// arithmetic inherit operand precision, so raising a value's precision is
/// what lets later arithmetic on it run wider.  No-op for double.
template <class R>
R at_precision(const R& v, [[maybe_unused]] unsigned digits10) {
    if constexpr (std::is_same_v<R, double>) {
        return v;
    } else {
        R out = v;
        out.precision(digits10);
        return out;
    }
}

} // namespace lsob

#endif
