#pragma once

namespace wdp {

// Pair of candidate weights of the unknown Boolean function.
struct WeightPair {
    double rho;
    double rho_prime;

    // Throws std::domain_error on NaN/Inf or values outside [0,1].
    WeightPair(double rho_, double rho_prime_);

    double gap() const;  // |rho - rho_prime|
    double larger() const;
};

// One point of the decidability curve (A(mu), B(mu)).
struct CurvePoint {
    double mu;
    double a;
    double b;
};

// Rough query-count estimates for separating the two weights.
struct QueryEstimates {
    double classical_det;   // worst-case deterministic queries
    double classical_prob;  // sampling estimate via binomial variance
    double quantum;         // iteration estimate for the amplified search
};

// arccos(1 - 2*rho*mu), clamped into the arccos domain.
double grover_angle(double rho, double mu);

// Chebyshev polynomial of the first kind, T_m(t) = cos(m arccos t),
// via the three-term recurrence.
double cheb_t(int m, double t);

// Chebyshev polynomial of the second kind, U_{m-1}(t) = sin(m theta)/sin(theta)
// with t = cos(theta). Finite at t = +-1 (U_{m-1}(1) = m). m_minus_1 >= -1.
double cheb_u(int m_minus_1, double t);

// Evaluates the curve
//   A = T_m(y) T_m(y') + U_{m-1}(y) U_{m-1}(y') (1 - y y')
//   B = 2 (rho + rho') U_{m-1}(y) U_{m-1}(y') mu
// with y = 1 - 2 rho mu, y' = 1 - 2 rho' mu. Requires m >= 1.
CurvePoint curve_point(int m, const WeightPair& w, double mu);

// Classical vs quantum query-count estimates for distinguishing the pair
// on a domain of n_inputs points. Throws std::domain_error when the
// weights coincide. The weight-dependent factors use the larger weight.
QueryEstimates query_estimates(const WeightPair& w, long n_inputs);

}  // namespace wdp
