// Command-line surface for the weight-decision toolkit: single-pair
// decisions, region sweeps, curve dumps, zero-weight tables, query
// estimates and brute-force verification runs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "wdp/decider.hpp"
#include "wdp/region.hpp"
#include "wdp/scalar_math.hpp"
#include "wdp/simulator.hpp"
#include "wdp/zero_weight.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUndecidable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFail = 3;

void print_scheme(const wdp::Scheme& s) {
    std::printf("decidable: m=%d\n", s.m);
    std::printf("  mu1   = %.17g\n", s.mu1);
    std::printf("  mu2   = %.17g\n", s.mu2);
    std::printf("  c1^2  = %.17g\n", s.c1_sq);
    std::printf("  c2^2  = %.17g\n", s.c2_sq);
}

// Chains a found scheme into the state-vector certifier when the weights
// admit an exact rational form. Returns an exit code.
int chain_verification(const wdp::Scheme& scheme, const wdp::WeightPair& w,
                       wdp::VerifyMode mode, double tolerance, int samples,
                       std::uint64_t seed) {
    const auto rational = wdp::rationalize_weights(w.rho, w.rho_prime);
    if (!rational) {
        std::printf(
            "verify: weights are not rational with denominator <= 20; "
            "skipping state-vector check\n");
        return kExitOk;
    }
    const auto report =
        wdp::verify_scheme(scheme, w, rational->r, rational->r_prime,
                           rational->n_inputs, mode, tolerance, samples, seed);
    std::fputs(report.to_text().c_str(), stdout);
    return report.passed() ? kExitOk : kExitVerifyFail;
}

int cmd_decide(double rho, double rho_prime, int m, double tolerance,
               bool verify, wdp::VerifyMode mode, int samples,
               std::uint64_t seed) {
    const wdp::WeightPair w(rho, rho_prime);
    wdp::DecideDiagnostics diag{};
    const wdp::Decision d = wdp::decide_fixed_m(m, w, &diag);
    const bool boundary = std::abs(diag.margin) < tolerance;
    if (const auto* s = std::get_if<wdp::Scheme>(&d)) {
        print_scheme(*s);
        if (boundary) {
            std::printf("diagnostic: boundary-uncertain (margin %.3g within "
                        "tolerance %.3g)\n",
                        diag.margin, tolerance);
        }
        if (verify) {
            return chain_verification(*s, w, mode, 1e-8, samples, seed);
        }
        return kExitOk;
    }
    std::printf("undecidable at m=%d (fast and general paths exhausted)\n", m);
    if (boundary) {
        std::printf("diagnostic: boundary-uncertain (margin %.3g within "
                    "tolerance %.3g)\n",
                    diag.margin, tolerance);
    }
    return kExitUndecidable;
}

int cmd_min_iterations(double rho, double rho_prime, int m_max) {
    const wdp::WeightPair w(rho, rho_prime);
    const auto scheme = wdp::min_iterations_pair(w, m_max);
    if (!scheme) {
        std::printf("no scheme found with m <= %d (cap, not impossibility)\n",
                    m_max);
        return kExitUndecidable;
    }
    print_scheme(*scheme);
    return kExitOk;
}

int cmd_region(int resolution, int m_max, const std::string& out) {
    const wdp::RegionGrid grid = wdp::compute_region_grid(resolution, m_max);
    {
        std::ofstream csv(out + ".csv", std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write " + out + ".csv");
        wdp::write_region_csv(grid, csv);
    }
    {
        std::ofstream pgm(out + ".pgm", std::ios::binary);
        if (!pgm) throw std::runtime_error("cannot write " + out + ".pgm");
        wdp::write_region_pgm(grid, pgm);
    }
    std::printf("wrote %s.csv and %s.pgm (%dx%d, m_max=%d)\n", out.c_str(),
                out.c_str(), resolution, resolution, m_max);
    return kExitOk;
}

int cmd_curve(double rho, double rho_prime, int m, int samples,
              const std::string& out) {
    if (samples < 2) throw CLI::ValidationError("--samples must be >= 2");
    const wdp::WeightPair w(rho, rho_prime);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + out);
        os = &file;
    }
    *os << "mu,a,b\n";
    char buf[96];
    for (int i = 0; i < samples; ++i) {
        const double mu = static_cast<double>(i) / (samples - 1);
        const wdp::CurvePoint p = wdp::curve_point(m, w, mu);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.mu, p.a, p.b);
        *os << buf;
    }
    return kExitOk;
}

int cmd_zero(const std::vector<int>& ms, std::optional<double> rho) {
    if (rho) {
        const int m = wdp::min_iterations_zero(*rho);
        const auto scheme = wdp::zero_scheme(*rho, m);
        std::printf("rho=%.17g: m_min=%d mu1=%.17g\n", *rho, m,
                    scheme->mu1);
        return kExitOk;
    }
    std::vector<int> table = ms.empty() ? std::vector<int>{1, 2, 3, 4, 5, 10}
                                        : ms;
    std::printf("m,rho_min\n");
    for (int m : table) {
        std::printf("%d,%.17g\n", m, wdp::min_weight_zero(m));
    }
    return kExitOk;
}

int cmd_estimate(double rho, double rho_prime, long n_inputs, int m_max) {
    const wdp::WeightPair w(rho, rho_prime);
    const wdp::QueryEstimates est = wdp::query_estimates(w, n_inputs);
    std::printf("m_classical_det  = %.17g\n", est.classical_det);
    std::printf("m_classical_prob = %.17g\n", est.classical_prob);
    std::printf("m_quantum        = %.17g\n", est.quantum);
    const auto scheme = wdp::min_iterations_pair(w, m_max);
    if (scheme) {
        std::printf("m_min (numeric)  = %d\n", scheme->m);
    } else {
        std::printf("m_min (numeric)  = none found with m <= %d\n", m_max);
    }
    return kExitOk;
}

int cmd_verify(int n_inputs, int r, int r_prime, std::optional<int> m,
               wdp::VerifyMode mode, double tolerance, int samples,
               std::uint64_t seed, const std::string& out) {
    wdp::VerificationReport report;
    if (r_prime == 0 || r == 0) {
        const int rr = std::max(r, r_prime);
        const double rho = static_cast<double>(rr) / n_inputs;
        const int mm = m ? *m : wdp::min_iterations_zero(rho);
        const auto scheme = wdp::zero_scheme(rho, mm);
        if (!scheme) {
            std::printf("undecidable: rho=%.17g below rho_min(%d)=%.17g\n",
                        rho, mm, wdp::min_weight_zero(mm));
            return kExitUndecidable;
        }
        report = wdp::verify_scheme(*scheme, rr, n_inputs, mode, tolerance,
                                    samples, seed);
    } else {
        const wdp::WeightPair w(static_cast<double>(r) / n_inputs,
                                static_cast<double>(r_prime) / n_inputs);
        std::optional<wdp::Scheme> scheme;
        if (m) {
            wdp::Decision d = wdp::decide_fixed_m(*m, w);
            if (auto* s = std::get_if<wdp::Scheme>(&d)) scheme = *s;
        } else {
            scheme = wdp::min_iterations_pair(w);
        }
        if (!scheme) {
            std::printf("undecidable: no scheme for r=%d r'=%d N=%d\n", r,
                        r_prime, n_inputs);
            return kExitUndecidable;
        }
        report = wdp::verify_scheme(*scheme, w, r, r_prime, n_inputs, mode,
                                    tolerance, samples, seed);
    }
    std::fputs(report.to_text().c_str(), stdout);
    if (!out.empty()) {
        std::ofstream os(out, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + out);
        os << report.to_json() << "\n";
    }
    return report.passed() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sure-success weight decision toolkit"};
    app.require_subcommand(1);

    double rho = 0.0, rho_prime = 0.0, tolerance = 1e-9;
    int m = 0, m_max = 64, resolution = 128, samples = 1001;
    int n_inputs = 0, r = 0, r_prime = 0;
    std::uint64_t seed = 12345;
    std::string out, mode_name = "per_t";
    bool verify_flag = false;
    std::vector<int> m_list;

    auto mode_of = [&]() {
        return mode_name == "exhaustive" ? wdp::VerifyMode::exhaustive
                                         : wdp::VerifyMode::per_t;
    };

    auto* decide = app.add_subcommand("decide", "decide a pair at fixed m");
    decide->add_option("--rho", rho)->required();
    decide->add_option("--rho-prime", rho_prime)->required();
    decide->add_option("--m", m)->required();
    decide->add_option("--tolerance", tolerance);
    decide->add_flag("--verify", verify_flag);
    decide->add_option("--mode", mode_name)
        ->check(CLI::IsMember({"per_t", "exhaustive"}));
    decide->add_option("--samples", samples);
    decide->add_option("--seed", seed);

    auto* min_it =
        app.add_subcommand("min-iterations", "smallest m for a pair");
    min_it->add_option("--rho", rho)->required();
    min_it->add_option("--rho-prime", rho_prime)->required();
    min_it->add_option("--m-max", m_max);

    auto* region = app.add_subcommand("region", "min-m sweep over the square");
    region->add_option("--resolution", resolution);
    region->add_option("--m-max", m_max)->default_val(8);
    region->add_option("--out", out)->required();
    region->add_option("--seed", seed);

    auto* curve = app.add_subcommand("curve", "dump the (A,B) curve as CSV");
    curve->add_option("--rho", rho)->required();
    curve->add_option("--rho-prime", rho_prime)->required();
    curve->add_option("--m", m)->required();
    curve->add_option("--samples", samples);
    curve->add_option("--out", out);

    auto* zero = app.add_subcommand("zero", "zero-weight thresholds");
    zero->add_option("--m", m_list);
    auto* zero_rho = zero->add_option("--rho", rho);

    auto* estimate =
        app.add_subcommand("estimate", "classical vs quantum query counts");
    estimate->add_option("--rho", rho)->required();
    estimate->add_option("--rho-prime", rho_prime)->required();
    estimate->add_option("--n-inputs", n_inputs)->default_val(1000);
    estimate->add_option("--m-max", m_max);

    auto* verify =
        app.add_subcommand("verify", "state-vector certification run");
    verify->add_option("--n-inputs", n_inputs)->required();
    verify->add_option("--r", r)->required();
    verify->add_option("--r-prime", r_prime)->required();
    auto* verify_m = verify->add_option("--m", m);
    verify->add_option("--mode", mode_name)
        ->check(CLI::IsMember({"per_t", "exhaustive"}));
    verify->add_option("--tolerance", tolerance)->default_val(1e-8);
    verify->add_option("--samples", samples)->default_val(0);
    verify->add_option("--seed", seed);
    verify->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (decide->parsed()) {
            return cmd_decide(rho, rho_prime, m, tolerance, verify_flag,
                              mode_of(), decide->count("--samples") ? samples
                                                                    : 0,
                              seed);
        }
        if (min_it->parsed()) return cmd_min_iterations(rho, rho_prime, m_max);
        if (region->parsed()) return cmd_region(resolution, m_max, out);
        if (curve->parsed()) return cmd_curve(rho, rho_prime, m, samples, out);
        if (zero->parsed()) {
            return cmd_zero(m_list, zero_rho->count()
                                        ? std::optional<double>(rho)
                                        : std::nullopt);
        }
        if (estimate->parsed()) {
            return cmd_estimate(rho, rho_prime, n_inputs, m_max);
        }
        if (verify->parsed()) {
            return cmd_verify(n_inputs, r, r_prime,
                              verify_m->count() ? std::optional<int>(m)
                                                : std::nullopt,
                              mode_of(), tolerance, samples, seed, out);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
