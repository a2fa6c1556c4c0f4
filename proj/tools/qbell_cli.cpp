// qbell command-line front end: sweeps, verification, CSV emission.
//
// Exit codes: 0 success, 1 verification/check failure, 2 invalid arguments,
// 3 budget exceeded.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbell/bell.hpp"
#include "qbell/classical.hpp"
#include "qbell/continuum.hpp"
#include "qbell/errors.hpp"
#include "qbell/local_models.hpp"
#include "qbell/optimize.hpp"
#include "qbell/states.hpp"
#include "qbell/verify.hpp"

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::int64_t> default_d_grid() {
    std::vector<std::int64_t> d;
    for (std::int64_t p = 2; p <= (1 << 14); p *= 2) {
        d.push_back(p);
    }
    d.push_back(1000);
    d.push_back(10000);
    d.push_back(100000);
    std::sort(d.begin(), d.end());
    return d;
}

class OutputFile {
  public:
    explicit OutputFile(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw qbell::Error("cannot open output file: " + path);
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

int cmd_sweep_violation(const std::vector<std::int64_t>& d_list, double tol, int max_iter,
                        const std::string& output) {
    OutputFile out(output);
    out.stream() << "d,A_optimal,A_approximate,eigenvalue,iterations,residual\n";
    std::vector<int> ds;
    ds.reserve(d_list.size());
    for (std::int64_t d : d_list) {
        ds.push_back(static_cast<int>(d));
    }
    for (const qbell::ViolationPoint& p : qbell::violation_sweep(ds, tol, max_iter)) {
        out.stream() << p.d << ',' << fmt(p.a_optimal) << ',' << fmt(p.a_approximate) << ','
                     << fmt(p.eigenvalue) << ',' << p.iterations << ',' << fmt(p.residual) << "\n";
    }
    return 0;
}

int cmd_sweep_entropy(const std::vector<std::int64_t>& d_list, bool bits, bool approx_only,
                      double tol, int max_iter, const std::string& output) {
    OutputFile out(output);
    out.stream() << "d,entropy_optimal,entropy_approx,ratio_optimal,ratio_approx\n";
    const double unit = bits ? M_LN2 : 1.0;
    for (std::int64_t d : d_list) {
        const double log_d = std::log(static_cast<double>(d));
        const double ratio_approx = qbell::approximate_entropy_ratio(d);
        const double e_approx = ratio_approx * log_d / unit;
        double e_opt = std::nan("");
        double ratio_opt = std::nan("");
        if (!approx_only) {
            if (d > (1 << 20)) {
                throw qbell::BudgetExceededError(
                    "sweep-entropy: optimal-state column capped at d = 2^20; pass --approx-only");
            }
            const qbell::EigenResult r = qbell::optimal_state(static_cast<int>(d), tol, max_iter);
            const double e = qbell::entropy(r.eigenvector);
            ratio_opt = e / log_d;
            e_opt = e / unit;
        }
        out.stream() << d << ',' << fmt(e_opt) << ',' << fmt(e_approx) << ',' << fmt(ratio_opt) << ','
                     << fmt(ratio_approx) << "\n";
    }
    return 0;
}

int cmd_sweep_continuum(const std::vector<double>& deltas, double epsilon, double target,
                        bool gauss_legendre, const std::string& output) {
    OutputFile out(output);
    out.stream() << "delta,M_f,I_delta_closed,epsilon\n";
    qbell::QuadratureSpec spec;
    spec.target_abs_err = target;
    if (gauss_legendre) {
        spec.scheme = qbell::QuadratureScheme::gauss_legendre;
    }
    for (double delta : deltas) {
        const double m = qbell::m_functional(qbell::make_ansatz(delta), spec);
        const double closed = qbell::i_delta_closed_form(delta, epsilon);
        out.stream() << fmt(delta) << ',' << fmt(m) << ',' << fmt(closed) << ',' << fmt(epsilon) << "\n";
    }
    return 0;
}

int cmd_lhv(std::int64_t d) {
    const qbell::LhvMinimum m = qbell::lhv_minimum(static_cast<int>(d));
    std::cout << "min=" << m.min_value << " witness=(a1=" << m.witness.a1 << ",a2=" << m.witness.a2
              << ",b1=" << m.witness.b1 << ",b2=" << m.witness.b2 << ")\n";
    return 0;
}

void write_table(const qbell::JointDistribution& jd, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw qbell::Error("cannot open output file: " + path);
    }
    for (int k = 0; k < jd.dim(); ++k) {
        for (int l = 0; l < jd.dim(); ++l) {
            out << (l > 0 ? "," : "") << fmt(jd.clamped(k, l));
        }
        out << "\n";
    }
}

int cmd_chsh(int trials, std::uint64_t seed, const std::string& tables_prefix) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
        const qbell::ChshCheck c = qbell::chsh_identity_check(qbell::random_local_quadruple(rng));
        worst = std::max(worst, std::abs(c.residual));
    }
    const qbell::SettingQuad quad = qbell::quantum_quadruple(qbell::uniform_state(2));
    if (!tables_prefix.empty()) {
        write_table(quad.p11, tables_prefix + "a1b1.csv");
        write_table(quad.p12, tables_prefix + "a1b2.csv");
        write_table(quad.p21, tables_prefix + "a2b1.csv");
        write_table(quad.p22, tables_prefix + "a2b2.csv");
    }
    const qbell::ChshCheck opt = qbell::chsh_identity_check(quad);
    std::cout << "local_trials=" << trials << " max_residual=" << fmt(worst) << "\n";
    std::cout << "quantum_optimum S=" << fmt(opt.s) << " lhs=" << fmt(opt.lhs)
              << " residual=" << fmt(opt.residual) << "\n";
    const bool ok = worst <= 1e-12 && std::abs(opt.s - 2.0 * std::sqrt(2.0)) <= 1e-10;
    std::cout << (ok ? "chsh-correspondence: ok" : "chsh-correspondence: FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qbell: maximal quantum violations of the two-setting d-outcome Bell inequality"};
    app.require_subcommand(1);

    std::vector<std::int64_t> d_list = default_d_grid();
    double tol = 1e-12;
    int max_iter = 100000;
    std::string output;

    CLI::App* sv = app.add_subcommand("sweep-violation",
                                      "Minimal Bell value per d for optimal and approximate states (CSV)");
    sv->add_option("--d", d_list, "outcome counts")->delimiter(',');
    sv->add_option("--tol", tol, "power-iteration residual tolerance");
    sv->add_option("--max-iter", max_iter, "power-iteration cap");
    sv->add_option("-o,--output", output, "output CSV path (default stdout)");

    std::vector<std::int64_t> ed_list = default_d_grid();
    bool bits = false;
    bool approx_only = false;
    CLI::App* se = app.add_subcommand("sweep-entropy", "Entanglement entropy per d (CSV)");
    se->add_option("--d", ed_list, "outcome counts")->delimiter(',');
    se->add_flag("--bits", bits, "report entropies in bits instead of nats");
    se->add_flag("--approx-only", approx_only, "skip the optimal-state columns (emit nan)");
    se->add_option("--tol", tol, "power-iteration residual tolerance");
    se->add_option("--max-iter", max_iter, "power-iteration cap");
    se->add_option("-o,--output", output, "output CSV path (default stdout)");

    std::vector<double> deltas = {0.2, 0.1, 0.05, 0.02, 0.01};
    double epsilon = 0.5;
    double target = 1e-7;
    bool gauss_legendre = false;
    CLI::App* sc = app.add_subcommand("sweep-continuum", "Continuum functional M(f_delta) per delta (CSV)");
    sc->add_option("--delta", deltas, "ansatz exponents")->delimiter(',');
    sc->add_option("--epsilon", epsilon, "epsilon for the closed-form bound");
    sc->add_option("--target", target, "quadrature absolute error target");
    sc->add_flag("--gauss-legendre", gauss_legendre,
                 "use Gauss-Legendre with the cosine substitution (adequate for delta >= 0.1 only)");
    sc->add_option("-o,--output", output, "output CSV path (default stdout)");

    std::uint64_t seed = 42;
    CLI::App* ver = app.add_subcommand("verify", "Run the full invariant suite");
    ver->add_option("--seed", seed, "RNG seed for randomized checks");

    std::int64_t lhv_d = 3;
    CLI::App* lhv = app.add_subcommand("lhv", "Exhaustive deterministic-strategy minimum");
    lhv->add_option("--d", lhv_d, "outcome count (<= 40)");

    int chsh_trials = 100;
    std::string tables_prefix;
    CLI::App* chsh = app.add_subcommand("chsh", "Check the affine CHSH correspondence at d=2");
    chsh->add_option("--trials", chsh_trials, "number of random local behaviours");
    chsh->add_option("--seed", seed, "RNG seed");
    chsh->add_option("--tables", tables_prefix,
                     "write the four quantum-optimum outcome tables to <prefix>aXbY.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sv->parsed()) {
            return cmd_sweep_violation(d_list, tol, max_iter, output);
        }
        if (se->parsed()) {
            return cmd_sweep_entropy(ed_list, bits, approx_only, tol, max_iter, output);
        }
        if (sc->parsed()) {
            return cmd_sweep_continuum(deltas, epsilon, target, gauss_legendre, output);
        }
        if (ver->parsed()) {
            const int failures = qbell::run_verification(std::cout, seed);
            std::cout << (failures == 0 ? "verify: all checks passed" : "verify: FAILED") << "\n";
            return failures == 0 ? 0 : 1;
        }
        if (lhv->parsed()) {
            return cmd_lhv(lhv_d);
        }
        if (chsh->parsed()) {
            return cmd_chsh(chsh_trials, seed, tables_prefix);
        }
    } catch (const qbell::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qbell::ParameterOutOfRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qbell::InvalidDimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
