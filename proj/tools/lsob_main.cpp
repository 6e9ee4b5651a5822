// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: numeric tables, asymptotic-ratio tables, and the
// verification suites.  All state comes in through flags; identical flags
// (and seed) produce byte-identical CSV/JSON.
//
// Exit codes: 0 all checks passed / table written, 1 a verification check
// failed, 2 usage or domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lsob/kernels.hpp"
#include "lsob/laguerre.hpp"
#include "lsob/oracle.hpp"
#include "lsob/recurrence.hpp"
#include "lsob/sobolev.hpp"
#include "lsob/table.hpp"
#include "lsob/verify.hpp"

namespace {

namespace lag = lsob::laguerre;
namespace ker = lsob::kernels;
namespace sob = lsob::sobolev;
namespace rec = lsob::recurrence;
namespace io = lsob::io;

struct cli_config {
    double alpha = 0.0;
    double c = 1.0;
    double M = 1.0;
    double N = 1.0;
    long n_max = 20;
    std::vector<long> n_list;
    unsigned precision = 64;
    std::string format; // empty: csv for tables, plain text for verify
    std::string out;
    std::uint64_t seed = 1;
    double x_re = -1.0;
    double x_im = 0.0;
    std::string what;
    std::string suite = "all";
};

void emit(const io::table& t, const cli_config& cfg) {
    bool json = cfg.format == "json";
    std::string payload = json ? io::to_json(t) + "\n" : io::to_csv(t);
    if (cfg.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
    f << payload;
}

void echo_params(io::table& t, const cli_config& cfg) {
    t.param("alpha", io::format_param(cfg.alpha));
    t.param("c", io::format_param(cfg.c));
    t.param("M", io::format_param(cfg.M));
    t.param("N", io::format_param(cfg.N));
    t.param("precision", std::to_string(cfg.precision));
    t.param("seed", std::to_string(cfg.seed));
}

template <class R>
sob::params<R> params_of(const cli_config& cfg) {
    sob::params<R> p{R(cfg.alpha), R(cfg.c), R(cfg.M), R(cfg.N)};
    p.validate();
    return p;
}

template <class R>
io::table table_laguerre(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n", "beta", "gamma", "log_norm_sq", "ortho_at_c", "ortho_deriv_at_c"};
    auto pair = lag::eval_orthonormal_with_derivative(cfg.n_max, p.alpha, p.c);
    unsigned d = cfg.precision;
    for (long n = 0; n <= cfg.n_max; ++n) {
        auto rc = lag::recurrence_coeffs(n, p.alpha);
        t.add_row({io::format_integer(n), io::format_number(rc.beta, d),
                   io::format_number(rc.gamma, d),
                   io::format_number(lag::log_norm_sq(n, p.alpha), d),
                   io::format_number(pair.val[static_cast<std::size_t>(n)], d),
                   io::format_number(pair.dval[static_cast<std::size_t>(n)], d)});
    }
    return t;
}

template <class R>
io::table table_kernels(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n", "K", "K01", "K11", "K_pred", "K01_pred", "K11_pred"};
    auto sweep = ker::make_cc_sweep(cfg.n_max, p.alpha, p.c);
    unsigned d = cfg.precision;
    for (long n = 1; n <= cfg.n_max; ++n) {
        auto pred = ker::kernel_asymptotic_prediction(n, p.alpha, p.c);
        std::size_t j = static_cast<std::size_t>(n - 1);
        t.add_row({io::format_integer(n), io::format_number(sweep.K[j], d),
                   io::format_number(sweep.K01[j], d), io::format_number(sweep.K11[j], d),
                   io::format_number(pred.K_pred, d), io::format_number(pred.K01_pred, d),
                   io::format_number(pred.K11_pred, d)});
    }
    return t;
}

template <class R>
io::table table_connection(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n", "A1", "A0", "B1", "B0"};
    auto sweep = ker::make_cc_sweep(cfg.n_max, p.alpha, p.c);
    unsigned d = cfg.precision;
    for (long n = 1; n <= cfg.n_max; ++n) {
        auto st = sob::connection_state(sweep, n, p);
        t.add_row({io::format_integer(n), io::format_number(st.A1, d),
                   io::format_number(st.A0, d), io::format_number(st.B1, d),
                   io::format_number(st.B0, d)});
    }
    return t;
}

template <class R>
io::table table_values_at_c(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n", "S_c", "dS_c", "denom"};
    auto sweep = ker::make_cc_sweep(cfg.n_max, p.alpha, p.c);
    unsigned d = cfg.precision;
    for (long n = 1; n <= cfg.n_max; ++n) {
        auto st = sob::connection_state(sweep, n, p);
        R h = lsob::m::exp(lag::log_norm_sq(n, p.alpha) / R(2));
        if (!lsob::m::isfinite(h))
            throw lsob::overflow_error("values_at_c: monic scale overflow at degree " +
                                           std::to_string(n) +
                                           " (raise --precision to use the mpfr engine)",
                                       n);
        t.add_row({io::format_integer(n), io::format_number(st.s_over_h * h, d),
                   io::format_number(st.ds_over_h * h, d), io::format_number(st.denom, d)});
    }
    return t;
}

template <class R>
io::table table_norms(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n", "norm_sq", "log_norm_sq"};
    unsigned d = cfg.precision;
    for (long n = 0; n <= cfg.n_max; ++n) {
        R lognorm = sob::log_sobolev_norm_sq(n, p);
        R value = lsob::m::exp(lognorm);
        t.add_row({io::format_integer(n), io::format_number(value, d),
                   io::format_number(lognorm, d)});
    }
    return t;
}

template <class R>
io::table table_lambda(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    if (cfg.n_max > 56)
        throw lsob::domain_error("lambda table: n-max capped at 56 by the reference basis");
    if (cfg.precision <= 17)
        throw lsob::domain_error(
            "lambda table: the projection column needs the extended engine; pass --precision 64");
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n", "proj_p1", "proj_0", "proj_m1", "proj_m2",
                 "published_p1", "published_0", "published_m1", "published_m2"};
    auto ref = lsob::oracle::reference_basis(cfg.n_max + 2, p);
    unsigned d = cfg.precision;
    for (long n = 2; n <= cfg.n_max; ++n) {
        auto proj = rec::five_term_projection(n, p, ref.g, ref.basis);
        auto published = rec::five_term_published(n, p);
        t.add_row({io::format_integer(n), io::format_number(proj.l_p1, d),
                   io::format_number(proj.l_0, d), io::format_number(proj.l_m1, d),
                   io::format_number(proj.l_m2, d), io::format_number(published.l_p1, d),
                   io::format_number(published.l_0, d), io::format_number(published.l_m1, d),
                   io::format_number(published.l_m2, d)});
    }
    return t;
}

std::vector<long> effective_n_list(const cli_config& cfg) {
    if (!cfg.n_list.empty()) {
        auto sorted = cfg.n_list;
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] <= sorted[i - 1])
                throw lsob::domain_error("--n-list entries must be strictly ascending");
        return sorted;
    }
    return {100, 1000, 10000};
}

template <class R>
io::table asym_kernels(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    auto ns = effective_n_list(cfg);
    long top = static_cast<long>(1.2 * static_cast<double>(ns.back()));
    auto sweep = ker::make_cc_sweep(top + 1, p.alpha, p.c);
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n",         "K_ratio",     "K01_ratio",     "K11_ratio",
                 "K_ratio_med", "K01_ratio_med", "K11_ratio_med"};
    unsigned d = cfg.precision;
    for (long N : ns) {
        long hi = static_cast<long>(1.2 * static_cast<double>(N));
        std::vector<R> rk, r01, r11;
        for (long n = N; n <= hi; ++n) {
            auto pred = ker::kernel_asymptotic_prediction(n, p.alpha, p.c);
            rk.push_back(sweep.K[n - 1] / pred.K_pred);
            r01.push_back(sweep.K01[n - 1] / pred.K01_pred);
            r11.push_back(sweep.K11[n - 1] / pred.K11_pred);
        }
        auto med = [](std::vector<R> v) {
            std::size_t mid = v.size() / 2;
            std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
            return v[mid];
        };
        t.add_row({io::format_integer(N), io::format_number(rk.front(), d),
                   io::format_number(r01.front(), d), io::format_number(r11.front(), d),
                   io::format_number(med(rk), d), io::format_number(med(r01), d),
                   io::format_number(med(r11), d)});
    }
    return t;
}

template <class R>
io::table asym_coeffs(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    auto ns = effective_n_list(cfg);
    long top = static_cast<long>(1.2 * static_cast<double>(ns.back()));
    auto sweep = ker::make_cc_sweep(top + 1, p.alpha, p.c);
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n", "A1", "A0_n14", "B1_over_n", "B0_nm34", "A1_med", "A0_n14_med",
                 "B1_over_n_med", "B0_nm34_med"};
    unsigned d = cfg.precision;
    for (long N : ns) {
        long hi = static_cast<long>(1.2 * static_cast<double>(N));
        std::vector<R> a1, a0, b1, b0;
        for (long n = N; n <= hi; ++n) {
            auto st = sob::connection_state(sweep, n, p);
            R rn(n);
            a1.push_back(st.A1);
            a0.push_back(lsob::m::abs(st.A0) * lsob::m::pow(rn, R(0.25)));
            b1.push_back(st.B1 / rn);
            b0.push_back(lsob::m::abs(st.B0) * lsob::m::pow(rn, R(-0.75)));
        }
        auto med = [](std::vector<R> v) {
            std::size_t mid = v.size() / 2;
            std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
            return v[mid];
        };
        t.add_row({io::format_integer(N), io::format_number(a1.front(), d),
                   io::format_number(a0.front(), d), io::format_number(b1.front(), d),
                   io::format_number(b0.front(), d), io::format_number(med(a1), d),
                   io::format_number(med(a0), d), io::format_number(med(b1), d),
                   io::format_number(med(b0), d)});
    }
    return t;
}

template <class R>
io::table asym_ratio(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    auto ns = effective_n_list(cfg);
    long top = static_cast<long>(1.2 * static_cast<double>(ns.back()));
    auto sweep = ker::make_cc_sweep(top + 1, p.alpha, p.c);
    lsob::cplx<R> x{R(cfg.x_re), R(cfg.x_im)};
    auto rseq = lag::eval_ratio_seq(top, p.alpha, x);
    io::table t;
    echo_params(t, cfg);
    t.param("x_re", io::format_param(cfg.x_re));
    t.param("x_im", io::format_param(cfg.x_im));
    t.columns = {"n", "abs_ratio_minus_1", "abs_ratio_minus_1_med"};
    unsigned d = cfg.precision;
    for (long N : ns) {
        long hi = static_cast<long>(1.2 * static_cast<double>(N));
        std::vector<R> vals;
        for (long n = N; n <= hi; ++n) {
            auto st = sob::connection_state(sweep, n, p);
            lsob::cplx<R> dx = x - lsob::cplx<R>{p.c, R(0)};
            lsob::cplx<R> one{R(1), R(0)};
            lsob::cplx<R> v = (one + lsob::cplx<R>{st.A1, R(0)} / dx +
                               lsob::cplx<R>{st.A0, R(0)} / (dx * dx)) +
                              (lsob::cplx<R>{st.B1, R(0)} / dx +
                               lsob::cplx<R>{st.B0, R(0)} / (dx * dx)) *
                                  rseq[static_cast<std::size_t>(n)];
            vals.push_back(abs(v - one));
        }
        auto med = [](std::vector<R> v) {
            std::size_t mid = v.size() / 2;
            std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
            return v[mid];
        };
        t.add_row({io::format_integer(N), io::format_number(vals.front(), d),
                   io::format_number(med(vals), d)});
    }
    return t;
}

template <class R>
io::table asym_lambda(const cli_config& cfg) {
    auto p = params_of<R>(cfg);
    auto ns = effective_n_list(cfg);
    for (long n : ns)
        if (n < 2) throw lsob::domain_error("lambda asymptotics need n >= 2");
    auto rows = rec::lambda_asymptotics(ns, p);
    io::table t;
    echo_params(t, cfg);
    t.columns = {"n", "p1_over_4n", "l0_over_6n2", "m1_over_4n3", "m2_over_n4"};
    unsigned d = cfg.precision;
    for (const auto& r : rows) {
        t.add_row({io::format_integer(r.n), io::format_number(r.p1_norm, d),
                   io::format_number(r.z0_norm, d), io::format_number(r.m1_norm, d),
                   io::format_number(r.m2_norm, d)});
    }
    return t;
}

template <class R>
io::table build_table(const cli_config& cfg) {
    if (cfg.what == "laguerre") return table_laguerre<R>(cfg);
    if (cfg.what == "kernels") return table_kernels<R>(cfg);
    if (cfg.what == "connection") return table_connection<R>(cfg);
    if (cfg.what == "values_at_c") return table_values_at_c<R>(cfg);
    if (cfg.what == "lambda") return table_lambda<R>(cfg);
    if (cfg.what == "norms") return table_norms<R>(cfg);
    throw lsob::domain_error("unknown table kind: " + cfg.what);
}

template <class R>
io::table build_asymptotics(const cli_config& cfg) {
    if (cfg.what == "kernels") return asym_kernels<R>(cfg);
    if (cfg.what == "coeffs") return asym_coeffs<R>(cfg);
    if (cfg.what == "ratio") return asym_ratio<R>(cfg);
    if (cfg.what == "lambda") return asym_lambda<R>(cfg);
    throw lsob::domain_error("unknown asymptotics kind: " + cfg.what);
}

int run_verify(const cli_config& cfg, bool params_given) {
    lsob::verify::options opts;
    opts.digits = cfg.precision;
    opts.seed = cfg.seed;
    if (params_given) {
        sob::params<double> p{cfg.alpha, cfg.c, cfg.M, cfg.N};
        p.validate();
        opts.config = p;
    }
    auto rep = lsob::verify::run_suite(cfg.suite, opts);
    std::string payload;
    if (cfg.format == "json")
        payload = lsob::verify::report_json(rep, opts) + "\n";
    else if (cfg.format == "csv")
        payload = lsob::verify::report_csv(rep, opts);

    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
        f << payload;
        std::cout << lsob::verify::report_text(rep);
    } else if (!payload.empty()) {
        std::cout << payload; // structured report requested on stdout
    } else {
        std::cout << lsob::verify::report_text(rep);
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre-Sobolev orthogonal polynomial tables and verification"};
    app.require_subcommand(1);
    cli_config cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "weight exponent, > -1");
        sub->add_option("--c", cfg.c, "mass point, > 0 once a mass is present");
        sub->add_option("--M", cfg.M, "function-value mass, >= 0");
        sub->add_option("--N", cfg.N, "derivative-value mass, >= 0");
        sub->add_option("--precision", cfg.precision,
                        "working decimal digits (<= 17 selects native double)");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out, "output path (stdout when omitted)");
        sub->add_option("--seed", cfg.seed, "seed for any randomized points");
    };

    auto* table_cmd = app.add_subcommand("table", "emit per-degree quantities");
    add_common(table_cmd);
    table_cmd->add_option("--what", cfg.what, "laguerre|kernels|connection|values_at_c|lambda|norms")
        ->required();
    table_cmd->add_option("--n-max", cfg.n_max, "largest degree");

    auto* asym_cmd = app.add_subcommand("asymptotics", "emit normalized-ratio trend tables");
    add_common(asym_cmd);
    asym_cmd->add_option("--what", cfg.what, "kernels|coeffs|ratio|lambda")->required();
    asym_cmd->add_option("--n-list", cfg.n_list, "ascending window anchors")->delimiter(',');
    asym_cmd->add_option("--x-re", cfg.x_re, "evaluation point, real part");
    asym_cmd->add_option("--x-im", cfg.x_im, "evaluation point, imaginary part");

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    add_common(verify_cmd);
    verify_cmd
        ->add_option("--suite", cfg.suite, "core|kernels|sobolev|recurrence|asymptotics|all")
        ->check(CLI::IsMember({"core", "kernels", "sobolev", "recurrence", "asymptotics", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (asym_cmd->parsed() && asym_cmd->count("--precision") == 0)
            cfg.precision = 16; // trend sweeps default to the native engine
        lsob::precision prec(cfg.precision);

        if (table_cmd->parsed()) {
            io::table t = prec.native() ? build_table<double>(cfg) : [&] {
                lsob::scoped_precision guard(cfg.precision);
                return build_table<lsob::bigfloat>(cfg);
            }();
            emit(t, cfg);
            return 0;
        }
        if (asym_cmd->parsed()) {
            io::table t = prec.native() ? build_asymptotics<double>(cfg) : [&] {
                lsob::scoped_precision guard(cfg.precision);
                return build_asymptotics<lsob::bigfloat>(cfg);
            }();
            emit(t, cfg);
            return 0;
        }
        bool params_given = verify_cmd->count("--alpha") || verify_cmd->count("--c") ||
                            verify_cmd->count("--M") || verify_cmd->count("--N");
        return run_verify(cfg, params_given);
    } catch (const lsob::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
