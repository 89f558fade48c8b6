#include "wdp/decider.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wdp {

namespace {

constexpr int kMu1Samples = 2048;
constexpr int kMu2Samples = 256;
constexpr double kDegenerateNorm = 1e-13;
constexpr double kBisectTol = 1e-12;
// Roots whose bracketing endpoints violate the sign conditions by more
// than this fraction of the local point magnitude are rejected without
// bisection; anything closer gets the full refinement.
constexpr double kQuickRejectBand = 0.03;

struct PlanePoint {
    double a;
    double b;
};

double norm2(const PlanePoint& p) { return std::hypot(p.a, p.b); }

PlanePoint eval(int m, const WeightPair& w, double mu) {
    const CurvePoint p = curve_point(m, w, mu);
    return PlanePoint{p.a, p.b};
}

double bisect_root(int m, const WeightPair& w, const PlanePoint& p2,
                   double lo, double hi, double glo) {
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        const PlanePoint p = eval(m, w, mid);
        const double gmid = p.b * p2.a - p.a * p2.b;
        if (gmid == 0.0) return mid;
        if ((glo < 0.0) != (gmid < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            glo = gmid;
        }
    }
    return 0.5 * (lo + hi);
}

struct Scan {
    const int m;
    const WeightPair& w;
    std::vector<double> mus, av, bv;
    std::vector<double> g;  // collinearity residual scratch
    double margin = std::numeric_limits<double>::infinity();

    Scan(int m_, const WeightPair& w_) : m(m_), w(w_) {
        mus.resize(kMu1Samples);
        av.resize(kMu1Samples);
        bv.resize(kMu1Samples);
        g.resize(kMu1Samples);
        for (int i = 0; i < kMu1Samples; ++i) {
            mus[i] = static_cast<double>(i) / (kMu1Samples - 1);
            const CurvePoint p = curve_point(m, w, mus[i]);
            av[i] = p.a;
            bv[i] = p.b;
        }
    }

    // Exact sign test at a refined root.
    std::optional<Scheme> accept(double mu1, double mu2, const PlanePoint& p2,
                                 double n2) {
        const PlanePoint p1 = eval(m, w, mu1);
        const double n1 = norm2(p1);
        if (n1 < kDegenerateNorm) return std::nullopt;
        const double s = std::max(p1.a * p2.a, p1.b * p2.b);
        if (s <= 0.0) {
            margin = s;
            const double c1 = n2 / (n1 + n2);
            return Scheme{m, mu1, mu2, c1, 1.0 - c1};
        }
        if (s < margin) margin = s;
        return std::nullopt;
    }

    std::optional<Scheme> try_mu2(double mu2) {
        const PlanePoint p2 = eval(m, w, mu2);
        const double n2 = norm2(p2);
        if (n2 < kDegenerateNorm) return std::nullopt;

        const double a2 = p2.a;
        const double b2 = p2.b;
        for (int i = 0; i < kMu1Samples; ++i) {
            g[i] = bv[i] * a2 - av[i] * b2;
        }

        double gprev = g[0];
        if (gprev == 0.0) {
            if (auto s = accept(mus[0], mu2, p2, n2)) return s;
        }
        for (int i = 1; i < kMu1Samples; ++i) {
            const double gi = g[i];
            if (gi == 0.0) {
                if (auto s = accept(mus[i], mu2, p2, n2)) return s;
            } else if (gprev != 0.0 && (gprev < 0.0) != (gi < 0.0)) {
                // Quick rejection from the bracketing samples: if the sign
                // conditions fail comfortably at both ends, the root in
                // between cannot satisfy them either.
                const double s_lo = std::max(av[i - 1] * a2, bv[i - 1] * b2);
                const double s_hi = std::max(av[i] * a2, bv[i] * b2);
                const double scale =
                    std::max({std::fabs(av[i] * a2), std::fabs(bv[i] * b2),
                              1e-30});
                const double band = kQuickRejectBand * scale;
                if (s_lo > band && s_hi > band) {
                    const double s_near = std::min(s_lo, s_hi);
                    if (s_near < margin) margin = s_near;
                } else {
                    const double root =
                        bisect_root(m, w, p2, mus[i - 1], mus[i], gprev);
                    if (auto s = accept(root, mu2, p2, n2)) return s;
                }
            }
            gprev = gi;
        }
        return std::nullopt;
    }
};

void require_interior_pair(const WeightPair& w) {
    if (w.rho <= 0.0 || w.rho_prime <= 0.0) {
        throw std::domain_error(
            "zero weight: use the zero-weight decision instead");
    }
    if (w.rho == w.rho_prime) {
        throw std::domain_error("weights must be distinct");
    }
}

}  // namespace

Decision decide_fixed_m(int m, const WeightPair& w, DecideDiagnostics* diag) {
    if (m < 1) throw std::domain_error("decide_fixed_m: m must be >= 1");
    require_interior_pair(w);

    Scan scan(m, w);

    // Acceptance needs a pair of curve points with A1*A2 <= 0.  If A keeps
    // one strict sign over the whole sampled curve (always true for m = 1,
    // where A is identically 1) no such pair exists and the scan is moot.
    const auto [amin_it, amax_it] =
        std::minmax_element(scan.av.begin(), scan.av.end());
    if (*amin_it > 0.0 || *amax_it < 0.0) {
        if (diag) {
            const double edge =
                std::min(std::fabs(*amin_it), std::fabs(*amax_it));
            diag->margin = edge * edge;
        }
        return Undecidable{true, true};
    }

    // Fast path: mu2 pinned at the curve endpoint.
    if (auto s = scan.try_mu2(1.0)) {
        if (diag) diag->margin = scan.margin;
        return *s;
    }
    // General path: mu2 over a uniform grid.
    for (int j = 0; j < kMu2Samples; ++j) {
        const double mu2 = static_cast<double>(j) / (kMu2Samples - 1);
        if (auto s = scan.try_mu2(mu2)) {
            if (diag) diag->margin = scan.margin;
            return *s;
        }
    }
    if (diag) diag->margin = scan.margin;
    return Undecidable{true, true};
}

M2Analysis m2_analysis(const WeightPair& w) {
    const double r = w.rho;
    const double rp = w.rho_prime;
    if (!(rp < r)) {
        throw std::invalid_argument("m2_analysis: requires rho > rho_prime");
    }
    if (rp <= 0.0 || r >= 1.0) {
        throw std::invalid_argument("m2_analysis: weights must be interior");
    }
    const double d = r - rp;
    M2Analysis out;
    out.k = 4.0 * r * rp * (1.0 - 8.0 * d * d);
    out.l = 8.0 * d * d + 4.0 * r * rp - 2.0 * (r + rp);
    out.m_coef = (2.0 * r - 1.0) * (2.0 * rp - 1.0);
    out.delta = out.l * out.l - 4.0 * out.k * out.m_coef;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    out.ratio_ok = r / rp > 1.0 + inv_sqrt2;
    out.half_ok = r > 0.5;
    out.gap_ok = d > 0.5 * inv_sqrt2;
    out.discriminant_ok = out.delta > 0.0;
    return out;
}

std::optional<Scheme> min_iterations_pair(const WeightPair& w, int m_max) {
    if (m_max < 1) throw std::domain_error("min_iterations_pair: m_max < 1");
    require_interior_pair(w);
    for (int m = 1; m <= m_max; ++m) {
        Decision d = decide_fixed_m(m, w);
        if (auto* s = std::get_if<Scheme>(&d)) return *s;
    }
    return std::nullopt;
}

}  // namespace wdp
