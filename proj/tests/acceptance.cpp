// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qbell/bell.hpp"
#include "qbell/classical.hpp"
#include "qbell/continuum.hpp"
#include "qbell/local_models.hpp"
#include "qbell/optimize.hpp"
#include "qbell/random.hpp"
#include "qbell/special.hpp"
#include "qbell/states.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int number, const std::string& name, bool ok, double seconds, const std::string& detail = "") {
    std::printf("[%s] %2d %-28s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), seconds,
                detail.empty() ? "" : " ", detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++g_failures;
    }
}

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& fn) {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report(number, name, ok, seconds, detail);
}

constexpr double kA2 = 0.79289321881345247560;  // (3 - sqrt 2)/2

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string run_command(const std::string& cmd, int& exit_code) {
    std::string output;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        exit_code = -1;
        return output;
    }
    char buf[4096];
    while (std::fgets(buf, sizeof(buf), pipe) != nullptr) {
        output += buf;
    }
    exit_code = pclose(pipe);
    return output;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::string(argv[i]) == "--cli") {
            cli_path = argv[i + 1];
        }
    }

    criterion(1, "d2_headline_value", [](std::string& detail) {
        const qbell::EigenResult r = qbell::optimal_state(2);
        const double a2 = 2.0 - r.eigenvalue;
        const double maxent = qbell::closed_form(qbell::uniform_state(2));
        detail = "A2=" + sci(a2);
        return r.converged && std::abs(a2 - kA2) <= 1e-10 && std::abs(maxent - kA2) <= 1e-10;
    });

    criterion(2, "oracle_equivalence", [](std::string& detail) {
        std::mt19937_64 rng(20240214);
        double worst = 0.0;
        for (int d = 2; d <= 8; ++d) {
            for (int rep = 0; rep < 100; ++rep) {
                const qbell::SchmidtState s = qbell::random_schmidt_state(rng, d);
                worst = std::max(worst, std::abs(qbell::bell_value(s) - qbell::closed_form(s)));
            }
        }
        detail = "max|diff|=" + sci(worst);
        return worst <= 1e-10;
    });

    criterion(3, "classical_bound", [](std::string&) {
        for (int d : {1, 2, 3, 4, 8}) {
            const qbell::LhvMinimum m = qbell::lhv_minimum(d);
            if (m.min_value != 1 || qbell::lhv_value(m.witness) != 1) {
                return false;
            }
        }
        return true;
    });

    criterion(4, "chsh_correspondence", [](std::string& detail) {
        std::mt19937_64 rng(77);
        double worst = 0.0;
        for (int rep = 0; rep < 100; ++rep) {
            const qbell::ChshCheck c = qbell::chsh_identity_check(qbell::random_local_quadruple(rng));
            worst = std::max(worst, std::abs(c.residual));
        }
        const qbell::ChshCheck opt =
            qbell::chsh_identity_check(qbell::quantum_quadruple(qbell::uniform_state(2)));
        detail = "max|res|=" + sci(worst) + " S=" + std::to_string(opt.s);
        return worst <= 1e-12 && std::abs(opt.s - 2.0 * std::sqrt(2.0)) <= 1e-10
            && std::abs(opt.residual) <= 1e-12;
    });

    criterion(5, "tightness_trend", [](std::string& detail) {
        std::vector<int> grid;
        for (int d = 2; d <= (1 << 14); d *= 2) {
            grid.push_back(d);
        }
        grid.push_back(100000);
        const auto pts = qbell::violation_sweep(grid, 1e-10, 400000);
        double prev = 10.0;
        for (const qbell::ViolationPoint& p : pts) {
            if (!(p.a_optimal > 0.0) || !(p.a_optimal < prev)) {
                detail = "monotonicity broken at d=" + std::to_string(p.d);
                return false;
            }
            if (p.a_approximate < p.a_optimal - 1e-12) {
                detail = "approximate below optimal at d=" + std::to_string(p.d);
                return false;
            }
            prev = p.a_optimal;
        }
        detail = "A(100000)=" + std::to_string(pts.back().a_optimal);
        return true;
    });

    criterion(6, "toeplitz_performance_path", [](std::string& detail) {
        std::mt19937_64 rng(5150);
        for (int d : {1, 2, 3, 5, 16, 128, 1000, 2048, 4096}) {
            const qbell::ToeplitzKernel k(d);
            std::vector<double> v(static_cast<std::size_t>(d));
            double nv = 0.0;
            for (double& x : v) {
                x = 2.0 * qbell::uniform01(rng) - 1.0;
                nv += x * x;
            }
            nv = std::sqrt(nv);
            const std::vector<double> a = qbell::matvec_naive(k, v);
            const std::vector<double> b = qbell::matvec_fft(k, v);
            for (int i = 0; i < d; ++i) {
                if (std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) > 1e-10 * nv) {
                    detail = "matvec mismatch at d=" + std::to_string(d);
                    return false;
                }
            }
        }
        const qbell::EigenResult r = qbell::optimal_state(100000, 1e-9, 400000);
        detail = "residual=" + sci(r.residual) + " iters=" + std::to_string(r.iterations);
        return r.converged && r.residual <= 1e-9;
    });

    criterion(7, "continuum_limit", [](std::string& detail) {
        qbell::QuadratureSpec spec;
        spec.target_abs_err = 1e-7;
        double prev = 0.0;
        for (double delta : {0.2, 0.1, 0.05, 0.02}) {
            const double m = qbell::m_functional(qbell::make_ansatz(delta), spec);
            if (m > 2.0 + spec.target_abs_err || m <= prev) {
                detail = "M sequence broken at delta=" + std::to_string(delta);
                return false;
            }
            prev = m;
        }
        for (double eps : {0.1, 0.25, 0.5}) {
            if (std::abs(qbell::i_delta_closed_form(1e-8, eps) - 2.0) > 1e-6) {
                detail = "closed-form limit broken at eps=" + std::to_string(eps);
                return false;
            }
        }
        qbell::QuadratureSpec chain_spec;
        chain_spec.target_abs_err = 1e-8;
        const qbell::ChainCheckResult r = qbell::i_delta_chain_check(0.1, 0.25, chain_spec);
        detail = "M(0.02)=" + std::to_string(prev)
               + " |mid-closed|=" + sci(std::abs(r.middle_bound - r.middle_closed_form));
        return std::abs(r.middle_bound - r.middle_closed_form) <= 1e-6 && r.i_delta >= r.corner_integral
            && r.corner_integral >= r.middle_bound;
    });

    criterion(8, "entropy_asymptote", [](std::string& detail) {
        const auto pts = qbell::entropy_ratio_sweep({100, 1000, 10000, 100000, 1000000, 10000000});
        double prev = 2.0;
        for (const auto& [d, ratio] : pts) {
            if (!(ratio > 0.5) || !(ratio < prev)) {
                detail = "ratio sequence broken at d=" + std::to_string(d);
                return false;
            }
            prev = ratio;
        }
        detail = "ratio(1e7)=" + std::to_string(pts.back().second);
        return true;
    });

    criterion(9, "special_functions", [](std::string&) {
        const double euler = 0.57721566490153286061;
        if (std::abs(qbell::special::digamma(1.0) + euler) > 1e-12) {
            return false;
        }
        if (std::abs(qbell::special::digamma(0.5) + euler + 2.0 * M_LN2) > 1e-12) {
            return false;
        }
        for (double z : {0.1, 0.5, 1.5, 7.3}) {
            if (std::abs(qbell::special::digamma(z + 1.0) - qbell::special::digamma(z) - 1.0 / z) > 1e-13) {
                return false;
            }
        }
        for (double z : {0.2, 0.35, 0.5, 0.8}) {
            const double lhs = qbell::special::gamma_fn(z) * qbell::special::gamma_fn(1.0 - z);
            if (std::abs(lhs - M_PI / std::sin(M_PI * z)) > 1e-12 * std::abs(lhs)) {
                return false;
            }
        }
        return true;
    });

    criterion(10, "determinism", [&cli_path](std::string& detail) {
        if (cli_path.empty()) {
            detail = "no --cli path given";
            return false;
        }
        int code1 = 0;
        int code2 = 0;
        const std::string log1 = run_command(cli_path + " verify --seed 42", code1);
        const std::string log2 = run_command(cli_path + " verify --seed 42", code2);
        if (code1 != 0 || code2 != 0) {
            detail = "verify exited nonzero";
            return false;
        }
        if (log1 != log2 || log1.empty()) {
            detail = "verify logs differ between runs";
            return false;
        }
        const std::string csv_a = "acceptance_sweep_a.csv";
        const std::string csv_b = "acceptance_sweep_b.csv";
        int code3 = 0;
        int code4 = 0;
        run_command(cli_path + " sweep-violation --d 2,4,8,16 -o " + csv_a, code3);
        run_command(cli_path + " sweep-violation --d 2,4,8,16 -o " + csv_b, code4);
        const std::string a = read_file(csv_a);
        const std::string b = read_file(csv_b);
        std::remove(csv_a.c_str());
        std::remove(csv_b.c_str());
        if (code3 != 0 || code4 != 0 || a.empty() || a != b) {
            detail = "sweep CSVs differ between runs";
            return false;
        }
        detail = "verify log " + std::to_string(log1.size()) + " bytes, CSV " + std::to_string(a.size())
               + " bytes";
        return true;
    });

    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                g_failures);
    return g_failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
