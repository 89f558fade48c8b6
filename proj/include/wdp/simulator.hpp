#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdp/decider.hpp"
#include "wdp/zero_weight.hpp"

namespace wdp {

// Explicit truth table of a Boolean function on {0, ..., n_inputs-1}.
struct BooleanOracle {
    int n_inputs;
    std::vector<std::uint8_t> truth_table;

    static BooleanOracle zero(int n_inputs);
    // Value 1 on the first r inputs, 0 elsewhere.
    static BooleanOracle first_ones(int n_inputs, int r);
    static BooleanOracle from_support(int n_inputs,
                                      const std::vector<int>& ones);

    int ones() const;
    double weight() const;
    BooleanOracle xor_with(const BooleanOracle& other) const;
    std::string bits() const;
};

// Dense amplitudes over ancilla (x) input (x) result-qubit {+,-}.
struct StateVector {
    int n_anc;
    int n_inputs;
    std::vector<std::complex<double>> amp;

    StateVector(int n_anc_, int n_inputs_);

    static constexpr int kPlus = 0;
    static constexpr int kMinus = 1;

    int index(int anc, int x, int sign) const {
        return (anc * n_inputs + x) * 2 + sign;
    }
    std::complex<double>& at(int anc, int x, int sign) {
        return amp[index(anc, x, sign)];
    }
    const std::complex<double>& at(int anc, int x, int sign) const {
        return amp[index(anc, x, sign)];
    }

    double norm() const;
    std::complex<double> inner(const StateVector& other) const;  // <this|other>
    void axpy(std::complex<double> c, const StateVector& other);
    void scale(std::complex<double> c);
};

// sqrt(mu/N) on every (ancilla_index, x, -) plus sqrt(1-mu) on
// (ancilla_index, 0, +).
StateVector build_beta(double mu, int ancilla_index, int n_anc, int n_inputs);

// Orthonormal reflection vectors, one per mu parameter.
struct ReflectionSet {
    std::vector<double> mus;
    std::vector<StateVector> betas;

    static ReflectionSet from_mus(const std::vector<double>& mus,
                                  int n_inputs);
    int n_anc() const { return static_cast<int>(betas.size()); }
};

// Phase oracle: negates (anc, x, -) amplitudes where f(x) = 1.
StateVector apply_oracle(const BooleanOracle& f, const StateVector& s);

// One iteration, -(I - 2 sum_i |beta_i><beta_i|)(I (x) U_f)|s>.
StateVector apply_q(const BooleanOracle& f, const ReflectionSet& refl,
                    const StateVector& s);

// Right-hand side of the m-iteration closed form for initial state beta_i,
// evaluated through the Chebyshev diagonal entries.
StateVector final_state_closed_form(const BooleanOracle& f,
                                    const ReflectionSet& refl, int i, int m);

enum class VerifyMode { per_t, exhaustive };

struct Violation {
    int t;
    std::string f_bits;
    std::string g_bits;
    double abs_inner;
};

struct VerificationReport {
    std::string mode;
    int n_inputs = 0;
    int r = 0;
    int r_prime = 0;
    int m = 0;
    double max_abs_inner_product = 0.0;
    std::vector<Violation> violations;
    std::vector<int> t_values;
    bool t_range_truncated = false;  // nominal r+r' range capped at 2N-r-r'
    double tolerance = 1e-8;

    bool passed() const { return violations.empty(); }
    std::string to_text() const;
    std::string to_json() const;
};

// Certifies |<Phi_f|Phi_g>| < tolerance over weight-r functions f and
// weight-r' functions g. per_t checks one representative pair per
// admissible overlap t (plus random_pairs_per_t seeded extras);
// exhaustive iterates every pair (n_inputs <= 20).
VerificationReport verify_scheme(const Scheme& scheme, const WeightPair& w,
                                 int r, int r_prime, int n_inputs,
                                 VerifyMode mode, double tolerance = 1e-8,
                                 int random_pairs_per_t = 0,
                                 std::uint64_t seed = 12345);

// Zero-function variant: g is the zero function, f runs over weight-r.
VerificationReport verify_scheme(const ZeroWeightScheme& scheme, int r,
                                 int n_inputs, VerifyMode mode,
                                 double tolerance = 1e-8,
                                 int random_pairs_per_t = 0,
                                 std::uint64_t seed = 12345);

// Smallest N <= n_cap with rho*N and rho_prime*N within 1e-9 of integers.
struct RationalPair {
    int n_inputs;
    int r;
    int r_prime;
};
std::optional<RationalPair> rationalize_weights(double rho, double rho_prime,
                                                int n_cap = 20);

}  // namespace wdp
