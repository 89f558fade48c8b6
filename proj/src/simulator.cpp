#include "wdp/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wdp {

// ---------------------------------------------------------------------------
// BooleanOracle

BooleanOracle BooleanOracle::zero(int n_inputs) {
    if (n_inputs < 1) throw std::domain_error("oracle: n_inputs < 1");
    return BooleanOracle{n_inputs,
                         std::vector<std::uint8_t>(n_inputs, 0)};
}

BooleanOracle BooleanOracle::first_ones(int n_inputs, int r) {
    if (r < 0 || r > n_inputs) throw std::domain_error("oracle: bad weight");
    BooleanOracle f = zero(n_inputs);
    for (int x = 0; x < r; ++x) f.truth_table[x] = 1;
    return f;
}

BooleanOracle BooleanOracle::from_support(int n_inputs,
                                          const std::vector<int>& ones) {
    BooleanOracle f = zero(n_inputs);
    for (int x : ones) {
        if (x < 0 || x >= n_inputs) throw std::domain_error("oracle: bad index");
        f.truth_table[x] = 1;
    }
    return f;
}

int BooleanOracle::ones() const {
    return static_cast<int>(
        std::count(truth_table.begin(), truth_table.end(), 1));
}

double BooleanOracle::weight() const {
    return static_cast<double>(ones()) / n_inputs;
}

BooleanOracle BooleanOracle::xor_with(const BooleanOracle& other) const {
    if (other.n_inputs != n_inputs) {
        throw std::domain_error("oracle xor: size mismatch");
    }
    BooleanOracle out = *this;
    for (int x = 0; x < n_inputs; ++x) out.truth_table[x] ^= other.truth_table[x];
    return out;
}

std::string BooleanOracle::bits() const {
    std::string s(truth_table.size(), '0');
    for (std::size_t i = 0; i < truth_table.size(); ++i) {
        if (truth_table[i]) s[i] = '1';
    }
    return s;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n_anc_, int n_inputs_)
    : n_anc(n_anc_), n_inputs(n_inputs_),
      amp(static_cast<std::size_t>(n_anc_) * n_inputs_ * 2) {
    if (n_anc_ < 1 || n_inputs_ < 1) {
        throw std::domain_error("state: bad dimensions");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& c : amp) s += std::norm(c);
    return std::sqrt(s);
}

std::complex<double> StateVector::inner(const StateVector& other) const {
    if (other.amp.size() != amp.size()) {
        throw std::domain_error("inner: dimension mismatch");
    }
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        s += std::conj(amp[i]) * other.amp[i];
    }
    return s;
}

void StateVector::axpy(std::complex<double> c, const StateVector& other) {
    if (other.amp.size() != amp.size()) {
        throw std::domain_error("axpy: dimension mismatch");
    }
    for (std::size_t i = 0; i < amp.size(); ++i) amp[i] += c * other.amp[i];
}

void StateVector::scale(std::complex<double> c) {
    for (auto& a : amp) a *= c;
}

StateVector build_beta(double mu, int ancilla_index, int n_anc, int n_inputs) {
    if (ancilla_index < 0 || ancilla_index >= n_anc) {
        throw std::out_of_range("build_beta: ancilla index");
    }
    if (!(mu >= 0.0 && mu <= 1.0)) {
        throw std::domain_error("build_beta: mu outside [0,1]");
    }
    StateVector s(n_anc, n_inputs);
    const double minus_amp = std::sqrt(mu / n_inputs);
    for (int x = 0; x < n_inputs; ++x) {
        s.at(ancilla_index, x, StateVector::kMinus) = minus_amp;
    }
    s.at(ancilla_index, 0, StateVector::kPlus) = std::sqrt(1.0 - mu);
    return s;
}

ReflectionSet ReflectionSet::from_mus(const std::vector<double>& mus,
                                      int n_inputs) {
    ReflectionSet out;
    out.mus = mus;
    const int n = static_cast<int>(mus.size());
    for (int i = 0; i < n; ++i) {
        out.betas.push_back(build_beta(mus[i], i, n, n_inputs));
    }
    return out;
}

StateVector apply_oracle(const BooleanOracle& f, const StateVector& s) {
    if (f.n_inputs != s.n_inputs) {
        throw std::domain_error("apply_oracle: dimension mismatch");
    }
    StateVector out = s;
    for (int a = 0; a < s.n_anc; ++a) {
        for (int x = 0; x < s.n_inputs; ++x) {
            if (f.truth_table[x]) {
                out.at(a, x, StateVector::kMinus) =
                    -out.at(a, x, StateVector::kMinus);
            }
        }
    }
    return out;
}

StateVector apply_q(const BooleanOracle& f, const ReflectionSet& refl,
                    const StateVector& s) {
    StateVector u = apply_oracle(f, s);
    StateVector out = u;
    out.scale(-1.0);
    for (const StateVector& beta : refl.betas) {
        out.axpy(2.0 * beta.inner(u), beta);
    }
    return out;
}

StateVector final_state_closed_form(const BooleanOracle& f,
                                    const ReflectionSet& refl, int i, int m) {
    if (i < 0 || i >= refl.n_anc()) {
        throw std::out_of_range("final_state_closed_form: index");
    }
    if (m < 0) throw std::domain_error("final_state_closed_form: m < 0");
    const double rho = f.weight();
    // Diagonal cosine matrix: only the i-th column contributes.
    const double y = 1.0 - 2.0 * rho * refl.mus[i];
    const double r_m1 = cheb_u(m, y);      // R^(m+1) diagonal entry
    const double r_m = cheb_u(m - 1, y);   // R^(m) diagonal entry
    StateVector out = refl.betas[i];
    out.scale(r_m1);
    out.axpy(-r_m, apply_oracle(f, refl.betas[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

StateVector final_state(const BooleanOracle& f, const ReflectionSet& refl,
                        const std::vector<double>& c, int m) {
    StateVector beta(refl.n_anc(), f.n_inputs);
    for (int i = 0; i < refl.n_anc(); ++i) beta.axpy(c[i], refl.betas[i]);
    for (int k = 0; k < m; ++k) beta = apply_q(f, refl, beta);
    return beta;
}

// Admissible overlaps t of f (+) g over weights r, r'; ascending.
std::vector<int> admissible_t(int n, int r, int r_prime, bool* truncated) {
    const int lo_overlap = std::max(0, r + r_prime - n);
    const int hi_overlap = std::min(r, r_prime);
    std::vector<int> ts;
    for (int ov = hi_overlap; ov >= lo_overlap; --ov) {
        ts.push_back(r + r_prime - 2 * ov);
    }
    if (truncated) *truncated = (r + r_prime > n);
    return ts;
}

// f = first r ones; g realizes overlap (r + r' - t)/2 with f.
BooleanOracle representative_partner(int n, int r, int r_prime, int t) {
    const int overlap = (r + r_prime - t) / 2;
    std::vector<int> ones;
    for (int x = 0; x < overlap; ++x) ones.push_back(x);
    for (int x = r; x < r + (r_prime - overlap); ++x) ones.push_back(x);
    return BooleanOracle::from_support(n, ones);
}

BooleanOracle random_weighted(int n, int r, std::mt19937_64& rng) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(r);
    return BooleanOracle::from_support(n, idx);
}

// Random pair with prescribed xor weight t.
std::pair<BooleanOracle, BooleanOracle> random_pair_with_t(
    int n, int r, int r_prime, int t, std::mt19937_64& rng) {
    const int overlap = (r + r_prime - t) / 2;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<int> f_ones(idx.begin(), idx.begin() + r);
    std::vector<int> g_ones(idx.begin(), idx.begin() + overlap);
    for (int k = 0; k < r_prime - overlap; ++k) g_ones.push_back(idx[r + k]);
    return {BooleanOracle::from_support(n, f_ones),
            BooleanOracle::from_support(n, g_ones)};
}

bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct VerifyContext {
    ReflectionSet refl;
    std::vector<double> c;
    int m;
    VerificationReport report;

    void check_pair(const BooleanOracle& f, const BooleanOracle& g) {
        const StateVector phi_f = final_state(f, refl, c, m);
        const StateVector phi_g = final_state(g, refl, c, m);
        const double v = std::abs(phi_f.inner(phi_g));
        report.max_abs_inner_product =
            std::max(report.max_abs_inner_product, v);
        if (v >= report.tolerance) {
            report.violations.push_back(
                Violation{f.xor_with(g).ones(), f.bits(), g.bits(), v});
        }
    }
};

VerificationReport run_verification(VerifyContext& ctx, int n, int r,
                                    int r_prime, VerifyMode mode,
                                    int random_pairs_per_t,
                                    std::uint64_t seed) {
    bool truncated = false;
    std::vector<int> ts = admissible_t(n, r, r_prime, &truncated);
    if (ts.empty()) throw std::domain_error("verify: no admissible t values");
    ctx.report.t_values = ts;
    ctx.report.t_range_truncated = truncated;

    if (mode == VerifyMode::per_t) {
        ctx.report.mode = "per_t";
        std::mt19937_64 rng(seed);
        for (int t : ts) {
            ctx.check_pair(BooleanOracle::first_ones(n, r),
                           representative_partner(n, r, r_prime, t));
            for (int k = 0; k < random_pairs_per_t; ++k) {
                auto [f, g] = random_pair_with_t(n, r, r_prime, t, rng);
                ctx.check_pair(f, g);
            }
        }
    } else {
        ctx.report.mode = "exhaustive";
        if (n > 20) throw std::domain_error("exhaustive: n_inputs > 20");
        std::vector<int> fc(r);
        std::iota(fc.begin(), fc.end(), 0);
        do {
            const BooleanOracle f = BooleanOracle::from_support(n, fc);
            std::vector<int> gc(r_prime);
            std::iota(gc.begin(), gc.end(), 0);
            do {
                ctx.check_pair(f, BooleanOracle::from_support(n, gc));
            } while (next_combination(gc, n));
        } while (next_combination(fc, n));
    }
    return ctx.report;
}

}  // namespace

VerificationReport verify_scheme(const Scheme& scheme, const WeightPair& w,
                                 int r, int r_prime, int n_inputs,
                                 VerifyMode mode, double tolerance,
                                 int random_pairs_per_t, std::uint64_t seed) {
    if (n_inputs < 1 || r < 0 || r > n_inputs || r_prime < 0 ||
        r_prime > n_inputs) {
        throw std::domain_error("verify: bad rational weights");
    }
    if (std::fabs(w.rho * n_inputs - r) > 1e-9 * n_inputs ||
        std::fabs(w.rho_prime * n_inputs - r_prime) > 1e-9 * n_inputs) {
        throw std::domain_error(
            "verify: r/N does not match the scheme's weights");
    }
    VerifyContext ctx{
        ReflectionSet::from_mus({scheme.mu1, scheme.mu2}, n_inputs),
        {std::sqrt(scheme.c1_sq), std::sqrt(scheme.c2_sq)},
        scheme.m,
        {}};
    ctx.report.n_inputs = n_inputs;
    ctx.report.r = r;
    ctx.report.r_prime = r_prime;
    ctx.report.m = scheme.m;
    ctx.report.tolerance = tolerance;
    return run_verification(ctx, n_inputs, r, r_prime, mode,
                            random_pairs_per_t, seed);
}

VerificationReport verify_scheme(const ZeroWeightScheme& scheme, int r,
                                 int n_inputs, VerifyMode mode,
                                 double tolerance, int random_pairs_per_t,
                                 std::uint64_t seed) {
    if (n_inputs < 1 || r < 1 || r > n_inputs) {
        throw std::domain_error("verify: bad rational weight");
    }
    VerifyContext ctx{ReflectionSet::from_mus({scheme.mu1}, n_inputs),
                      {1.0},
                      scheme.m,
                      {}};
    ctx.report.n_inputs = n_inputs;
    ctx.report.r = r;
    ctx.report.r_prime = 0;
    ctx.report.m = scheme.m;
    ctx.report.tolerance = tolerance;
    return run_verification(ctx, n_inputs, r, 0, mode, random_pairs_per_t,
                            seed);
}

std::optional<RationalPair> rationalize_weights(double rho, double rho_prime,
                                                int n_cap) {
    for (int n = 1; n <= n_cap; ++n) {
        const double r = rho * n;
        const double rp = rho_prime * n;
        if (std::fabs(r - std::round(r)) < 1e-9 &&
            std::fabs(rp - std::round(rp)) < 1e-9) {
            return RationalPair{n, static_cast<int>(std::round(r)),
                                static_cast<int>(std::round(rp))};
        }
    }
    return std::nullopt;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "verification mode=" << mode << " N=" << n_inputs << " r=" << r
       << " r'=" << r_prime << " m=" << m << "\n";
    os << "admissible t:";
    for (int t : t_values) os << ' ' << t;
    if (t_range_truncated) os << " (nominal range truncated at 2N-r-r')";
    os << "\n";
    os << "max |<Phi_f|Phi_g>| = " << max_abs_inner_product << " (tolerance "
       << tolerance << ")\n";
    if (violations.empty()) {
        os << "PASS: all final-state pairs orthogonal within tolerance\n";
    } else {
        os << "FAIL: " << violations.size() << " violating pair(s)\n";
        for (const auto& v : violations) {
            os << "  t=" << v.t << " f=" << v.f_bits << " g=" << v.g_bits
               << " |<f|g>|=" << v.abs_inner << "\n";
        }
    }
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["mode"] = mode;
    j["N"] = n_inputs;
    j["r"] = r;
    j["r_prime"] = r_prime;
    j["m"] = m;
    j["max_abs_inner_product"] = max_abs_inner_product;
    j["tolerance"] = tolerance;
    j["t_values"] = t_values;
    j["t_range_truncated"] = t_range_truncated;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations) {
        j["violations"].push_back({{"t", v.t},
                                   {"f", v.f_bits},
                                   {"g", v.g_bits},
                                   {"abs_inner_product", v.abs_inner}});
    }
    return j.dump(2);
}

}  // namespace wdp
