#include "wdp/scalar_math.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wdp {

namespace {

void require_finite_unit(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(name) + " must be finite");
    }
    if (v < 0.0 || v > 1.0) {
        throw std::domain_error(std::string(name) + " must lie in [0,1]");
    }
}

}  // namespace

WeightPair::WeightPair(double rho_, double rho_prime_)
    : rho(rho_), rho_prime(rho_prime_) {
    require_finite_unit(rho, "rho");
    require_finite_unit(rho_prime, "rho_prime");
}

double WeightPair::gap() const { return std::fabs(rho - rho_prime); }

double WeightPair::larger() const { return std::max(rho, rho_prime); }

double grover_angle(double rho, double mu) {
    if (std::isnan(rho) || std::isnan(mu)) {
        throw std::domain_error("grover_angle: NaN input");
    }
    const double c = std::clamp(1.0 - 2.0 * rho * mu, -1.0, 1.0);
    return std::acos(c);
}

double cheb_t(int m, double t) {
    if (m < 0) throw std::domain_error("cheb_t: negative order");
    if (std::isnan(t)) throw std::domain_error("cheb_t: NaN input");
    t = std::clamp(t, -1.0, 1.0);
    if (m == 0) return 1.0;
    double prev = 1.0;  // T_0
    double cur = t;     // T_1
    for (int k = 1; k < m; ++k) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double cheb_u(int m_minus_1, double t) {
    if (m_minus_1 < -1) throw std::domain_error("cheb_u: order below -1");
    if (std::isnan(t)) throw std::domain_error("cheb_u: NaN input");
    t = std::clamp(t, -1.0, 1.0);
    if (m_minus_1 == -1) return 0.0;
    if (m_minus_1 == 0) return 1.0;
    double prev = 1.0;       // U_0
    double cur = 2.0 * t;    // U_1
    for (int k = 1; k < m_minus_1; ++k) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

CurvePoint curve_point(int m, const WeightPair& w, double mu) {
    if (m < 1) throw std::domain_error("curve_point: m must be >= 1");
    if (std::isnan(mu)) throw std::domain_error("curve_point: NaN mu");
    const double y = 1.0 - 2.0 * w.rho * mu;
    const double yp = 1.0 - 2.0 * w.rho_prime * mu;
    const double uu = cheb_u(m - 1, y) * cheb_u(m - 1, yp);
    const double a = cheb_t(m, y) * cheb_t(m, yp) + uu * (1.0 - y * yp);
    const double b = 2.0 * (w.rho + w.rho_prime) * uu * mu;
    return CurvePoint{mu, a, b};
}

QueryEstimates query_estimates(const WeightPair& w, long n_inputs) {
    if (n_inputs < 1) throw std::domain_error("query_estimates: n_inputs < 1");
    const double d = w.gap();
    if (d == 0.0) {
        throw std::domain_error("query_estimates: weights coincide");
    }
    const double p = w.larger();
    QueryEstimates est;
    est.classical_det = static_cast<double>(n_inputs) * (1.0 - d);
    est.classical_prob = 4.0 * p * (1.0 - p) / (d * d);
    est.quantum = 2.0 * std::sqrt(p * (1.0 - p)) / d;
    return est;
}

}  // namespace wdp
