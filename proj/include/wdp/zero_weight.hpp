#pragma once

#include <optional>

namespace wdp {

// Single-reflection scheme distinguishing weight rho from the zero function.
struct ZeroWeightScheme {
    int m;       // iteration count
    double mu1;  // reflection parameter, cos(pi/2m) = 1 - 2 rho mu1
};

// Smallest m with cos(pi/2m) >= 1 - 2 rho, i.e. ceil(pi / (2 arccos(1-2rho))).
// Throws std::domain_error for rho <= 0.
int min_iterations_zero(double rho);

// Smallest weight decidable against zero with m iterations:
// (1 - cos(pi/2m)) / 2. Monotone decreasing in m.
double min_weight_zero(int m);

// Solves cos(pi/2m) = 1 - 2 rho mu1 for mu1 in [0,1]; nullopt when
// rho < min_weight_zero(m). Equality counts as decidable (mu1 = 1).
std::optional<ZeroWeightScheme> zero_scheme(double rho, int m);

}  // namespace wdp
