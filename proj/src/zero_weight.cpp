#include "wdp/zero_weight.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wdp {

namespace {

void require_positive_weight(double rho) {
    if (!std::isfinite(rho) || rho <= 0.0 || rho > 1.0) {
        throw std::domain_error("weight must lie in (0,1]");
    }
}

}  // namespace

double min_weight_zero(int m) {
    if (m < 1) throw std::domain_error("min_weight_zero: m must be >= 1");
    return 0.5 * (1.0 - std::cos(std::numbers::pi / (2.0 * m)));
}

int min_iterations_zero(double rho) {
    require_positive_weight(rho);
    const double theta_max = std::acos(1.0 - 2.0 * rho);
    int m = static_cast<int>(std::ceil(std::numbers::pi / (2.0 * theta_max)));
    if (m < 1) m = 1;
    // Settle the ceiling against the defining condition rho >= rho_min(m),
    // so floating rounding in the ratio cannot shift the answer.
    while (m > 1 && min_weight_zero(m - 1) <= rho) --m;
    while (min_weight_zero(m) > rho) ++m;
    return m;
}

std::optional<ZeroWeightScheme> zero_scheme(double rho, int m) {
    require_positive_weight(rho);
    if (m < 1) throw std::domain_error("zero_scheme: m must be >= 1");
    const double threshold = min_weight_zero(m);
    if (rho < threshold) return std::nullopt;
    const double mu1 = threshold / rho;  // (1 - cos(pi/2m)) / (2 rho)
    return ZeroWeightScheme{m, mu1};
}

}  // namespace wdp
