#pragma once

#include <optional>
#include <variant>

#include "wdp/scalar_math.hpp"

namespace wdp {

// Two-point convex combination hitting the origin of the (A,B) plane:
// c1_sq * P(mu1) + c2_sq * P(mu2) = (0,0), c1_sq + c2_sq = 1.
struct Scheme {
    int m;
    double mu1;
    double mu2;
    double c1_sq;
    double c2_sq;
};

// Both search paths exhausted without a valid two-point combination.
struct Undecidable {
    bool fast_path_failed;     // mu2 fixed to 1
    bool general_path_failed;  // mu2 scanned over the grid
};

using Decision = std::variant<Scheme, Undecidable>;

// Signed closeness of the best sign-condition candidate. Negative for a
// found scheme (how robustly the sign conditions hold), positive when
// undecidable (how far the nearest collinear root was from acceptance).
struct DecideDiagnostics {
    double margin;
};

// Closed-form m=2 analysis for ordered weights rho > rho_prime.
struct M2Analysis {
    double k;        // 4 rho rho' (1 - 8 (rho-rho')^2)
    double l;        // 8 (rho-rho')^2 + 4 rho rho' - 2 (rho+rho')
    double m_coef;   // (2 rho - 1)(2 rho' - 1)
    double delta;    // l^2 - 4 k m_coef
    bool ratio_ok;        // rho/rho' > 1 + 1/sqrt(2)
    bool half_ok;         // rho > 1/2
    bool gap_ok;          // rho - rho' > 1/(2 sqrt(2))
    bool discriminant_ok; // delta > 0

    bool all_ok() const {
        return ratio_ok && half_ok && gap_ok && discriminant_ok;
    }
};

// Searches the curve for two anti-parallel points through the origin.
// Fast path pins mu2 = 1; fallback scans mu2 over a grid. Smallest mu1
// root wins. Requires distinct weights in (0,1]; a zero weight belongs
// to the zero-weight decision and is rejected here.
Decision decide_fixed_m(int m, const WeightPair& w,
                        DecideDiagnostics* diag = nullptr);

// Requires 0 < rho_prime < rho < 1 (caller swaps); throws otherwise.
M2Analysis m2_analysis(const WeightPair& w);

// Smallest m <= m_max for which decide_fixed_m succeeds. nullopt means
// nothing found under the cap, not impossibility.
std::optional<Scheme> min_iterations_pair(const WeightPair& w, int m_max = 64);

}  // namespace wdp
