// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Named verification suites aggregating each module's invariants, plus the
// reporting types shared by the CLI and the acceptance runner.  Suites are
// deterministic given (precision, seed, params).

#ifndef LSOB_VERIFY_HPP
#define LSOB_VERIFY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsob/oracle.hpp"
#include "lsob/sobolev.hpp"

namespace lsob::verify {

struct check_result {
    std::string name;
    bool pass;
    double measured;  // the worst value observed for this check
    double threshold; // what it was compared against
};

struct report {
    std::string suite;
    std::vector<check_result> checks;
    std::string extra_json; // optional machine-readable addendum

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct options {
    unsigned digits = 64;   // working precision for the exact-identity suites
    std::uint64_t seed = 1;
    // When set, the sobolev/recurrence suites run on this configuration only
    // instead of the built-in grid.
    std::optional<sobolev::params<double>> config;
};

/// suite in {core, kernels, sobolev, recurrence, asymptotics, all}.
report run_suite(const std::string& suite, const options& opts);

std::string report_text(const report& rep);
std::string report_csv(const report& rep, const options& opts);
std::string report_json(const report& rep, const options& opts);

/// The standard parameter grid used by the sobolev/recurrence suites:
/// alpha in {-0.5, 0, 1.5} x c in {0.5, 1, 4} x (M,N) in
/// {(1,0), (0,1), (1,1), (10,0.1)}.
std::vector<sobolev::params<double>> standard_grid();

/// Serialized verdict for the five-term display variants, suitable for
/// writing to a .json artifact.
std::string lambda_variant_report_json(unsigned digits);

// ---------------------------------------------------------------------------
// Measurement primitives shared between the suites and the acceptance runner.
// All are deterministic given their arguments.
// ---------------------------------------------------------------------------

/// Worst deviations of the main computational path from the reference basis
/// over a parameter grid.
struct grid_agreement {
    double values_at_c; // |S(c)-ref|/||S||, |S'(c)-ref|/||S||
    double norms;       // relative deviation of the norm identity
    double connection;  // scaled connection residual at seeded points
    double five_term;   // scaled five-term residual, projection coefficients
};

/// Holds one reference basis per grid configuration (built at twice the
/// given precision) so orthogonality and agreement checks share the work.
class grid_session {
public:
    struct entry {
        sobolev::params<bigfloat> p;
        oracle::reference<bigfloat> ref;
    };

    grid_session(std::vector<sobolev::params<double>> grid, unsigned digits, long n_max);

    double orthogonality_worst() const;
    grid_agreement agreement_worst(std::uint64_t seed) const;
    const std::vector<entry>& entries() const { return entries_; }

private:
    std::vector<entry> entries_;
    unsigned digits_;
    long n_max_;
};

/// Summed vs closed-form kernels and partials over 2 <= n <= 60.
double worst_dual_kernels(unsigned digits);

/// Windowed medians of the diagonal-kernel ratios against their predicted
/// magnitudes, for windows [N, 1.2N] at a small and a large N.
struct kernel_trend_point {
    double alpha, c;
    double k_med_small, k_med_large;
    double k01_med_small, k01_med_large;
    double k11_med_small, k11_med_large;
};
std::vector<kernel_trend_point> kernel_trend_medians(long n_small, long n_large);

/// Windowed medians of |Shat_n(x)/Lhat_n(x) - 1| at N in {1e2, 1e3, 1e4}.
std::array<double, 3> ratio_trend_medians(const sobolev::params<double>& p, double x_re,
                                          double x_im);

/// Windowed medians of the normalized connection coefficients at
/// N in {1e2, 1e3, 1e4}.
struct coeff_trend_summary {
    double a0_med[3];  // |A0| n^(1/4)
    double b0_med[3];  // |B0| n^(-3/4)
    double a1_med[3];  // A1
    double b1n_med[3]; // B1/n
};
coeff_trend_summary coeff_trend_medians(const sobolev::params<double>& p);

/// Deviations of the normalized five-term coefficients from 1 at a single n.
struct lambda_norm_devs {
    double p1, z0, m1, m2;
};
lambda_norm_devs lambda_trend_devs(const sobolev::params<double>& p, long n);

/// Quadrature moment exactness and moments-vs-quadrature inner products.
struct quadrature_agreement_result {
    double moments;
    double inner_products;
};
quadrature_agreement_result quadrature_agreement(unsigned digits, std::uint64_t seed);

} // namespace lsob::verify

#endif
