#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "wdp/simulator.hpp"

using namespace wdp;

namespace {

BooleanOracle random_weighted(int n, int r, std::mt19937& rng) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(r);
    return BooleanOracle::from_support(n, idx);
}

double max_component_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amp.size(); ++i) {
        worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
    }
    return worst;
}

StateVector final_state(const BooleanOracle& f, const ReflectionSet& refl,
                        const std::vector<double>& c, int m) {
    StateVector s(refl.n_anc(), f.n_inputs);
    for (int i = 0; i < refl.n_anc(); ++i) s.axpy(c[i], refl.betas[i]);
    for (int k = 0; k < m; ++k) s = apply_q(f, refl, s);
    return s;
}

}  // namespace

TEST_CASE("build_beta amplitude placement") {
    SUBCASE("mu = 1: uniform over the minus branch") {
        const StateVector s = build_beta(1.0, 0, 1, 4);
        for (int x = 0; x < 4; ++x) {
            CHECK(s.at(0, x, StateVector::kMinus) ==
                  std::complex<double>(0.5, 0.0));
            CHECK(s.at(0, x, StateVector::kPlus) ==
                  std::complex<double>(0.0, 0.0));
        }
    }
    SUBCASE("mu = 0: all weight on |0+>") {
        const StateVector s = build_beta(0.0, 0, 1, 4);
        CHECK(s.at(0, 0, StateVector::kPlus) ==
              std::complex<double>(1.0, 0.0));
        CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("mu = 0.5, N = 2") {
        const StateVector s = build_beta(0.5, 0, 1, 2);
        CHECK(std::abs(s.at(0, 0, StateVector::kMinus) - 0.5) < 1e-15);
        CHECK(std::abs(s.at(0, 1, StateVector::kMinus) - 0.5) < 1e-15);
        CHECK(std::abs(s.at(0, 0, StateVector::kPlus) -
                       1.0 / std::sqrt(2.0)) < 1e-15);
    }
    SUBCASE("index out of range") {
        CHECK_THROWS_AS(build_beta(0.5, 2, 2, 4), std::out_of_range);
    }
}

TEST_CASE("reflection vectors are orthonormal") {
    const ReflectionSet refl = ReflectionSet::from_mus({0.3, 0.8}, 6);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double expect = (i == j) ? 1.0 : 0.0;
            CHECK(std::abs(refl.betas[i].inner(refl.betas[j]) - expect) <
                  1e-12);
        }
    }
}

TEST_CASE("phase oracle") {
    std::mt19937 rng(3);
    const StateVector beta = build_beta(0.6, 0, 1, 8);
    SUBCASE("zero function acts as the identity") {
        const StateVector out = apply_oracle(BooleanOracle::zero(8), beta);
        CHECK(max_component_diff(out, beta) == 0.0);
    }
    SUBCASE("all-ones negates the minus branch") {
        const StateVector out =
            apply_oracle(BooleanOracle::first_ones(8, 8), beta);
        for (int x = 0; x < 8; ++x) {
            CHECK(out.at(0, x, StateVector::kMinus) ==
                  -beta.at(0, x, StateVector::kMinus));
            CHECK(out.at(0, x, StateVector::kPlus) ==
                  beta.at(0, x, StateVector::kPlus));
        }
    }
    SUBCASE("involution, bit exact") {
        const BooleanOracle f = random_weighted(8, 3, rng);
        const StateVector twice = apply_oracle(f, apply_oracle(f, beta));
        CHECK(max_component_diff(twice, beta) == 0.0);
    }
}

TEST_CASE("iteration step") {
    const ReflectionSet refl = ReflectionSet::from_mus({0.4, 0.9}, 6);
    SUBCASE("Q_z fixes every beta_i") {
        for (int i = 0; i < 2; ++i) {
            const StateVector out =
                apply_q(BooleanOracle::zero(6), refl, refl.betas[i]);
            CHECK(max_component_diff(out, refl.betas[i]) < 1e-14);
        }
    }
    SUBCASE("norm preservation") {
        std::mt19937 rng(9);
        StateVector s = refl.betas[0];
        const BooleanOracle f = random_weighted(6, 2, rng);
        for (int k = 0; k < 20; ++k) {
            s = apply_q(f, refl, s);
            CHECK(std::fabs(s.norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("cosine matrix diagonal: <beta|U_f|beta> = 1 - 2 rho mu") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const int n = 4 + static_cast<int>(u(rng) * 8);
        const int r = 1 + static_cast<int>(u(rng) * (n - 1));
        const double mu = u(rng);
        const BooleanOracle f = random_weighted(n, r, rng);
        const StateVector beta = build_beta(mu, 0, 1, n);
        const std::complex<double> c = beta.inner(apply_oracle(f, beta));
        CHECK(std::abs(c - (1.0 - 2.0 * f.weight() * mu)) < 1e-12);
    }
}

TEST_CASE("Chebyshev recurrence matches the iteration matrices") {
    // R^(m+2) = 2 C R^(m+1) - R^(m), entrywise on the diagonal.
    std::mt19937 rng(15);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int m = 0; m <= 12; ++m) {
        for (int k = 0; k < 200; ++k) {
            const double t = u(rng);
            const double lhs = cheb_u(m + 1, t);
            const double rhs = 2.0 * t * cheb_u(m, t) - cheb_u(m - 1, t);
            CHECK(std::fabs(lhs - rhs) < 1e-10);
        }
    }
}

TEST_CASE("closed form equals literal iteration") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SUBCASE("m = 0 returns beta_i exactly") {
        const ReflectionSet refl = ReflectionSet::from_mus({0.7}, 8);
        const StateVector out =
            final_state_closed_form(BooleanOracle::first_ones(8, 3), refl, 0,
                                    0);
        CHECK(max_component_diff(out, refl.betas[0]) == 0.0);
    }
    SUBCASE("m = 5, N = 8, r = 3, mu = 0.7") {
        const ReflectionSet refl = ReflectionSet::from_mus({0.7}, 8);
        const BooleanOracle f = BooleanOracle::first_ones(8, 3);
        StateVector iterated = refl.betas[0];
        for (int k = 0; k < 5; ++k) iterated = apply_q(f, refl, iterated);
        CHECK(max_component_diff(final_state_closed_form(f, refl, 0, 5),
                                 iterated) < 1e-10);
    }
    SUBCASE("random instances") {
        for (int k = 0; k < 50; ++k) {
            const int n = 2 + static_cast<int>(u(rng) * 9);      // N <= 10
            const int n_anc = 1 + static_cast<int>(u(rng) * 2);  // n <= 2
            const int m = static_cast<int>(u(rng) * 9);          // m <= 8
            const int r = static_cast<int>(u(rng) * (n + 1));
            std::vector<double> mus;
            for (int i = 0; i < n_anc; ++i) mus.push_back(u(rng));
            const ReflectionSet refl = ReflectionSet::from_mus(mus, n);
            const BooleanOracle f = random_weighted(n, r, rng);
            const int i = static_cast<int>(u(rng) * n_anc);
            StateVector iterated = refl.betas[i];
            for (int j = 0; j < m; ++j) iterated = apply_q(f, refl, iterated);
            CHECK(max_component_diff(final_state_closed_form(f, refl, i, m),
                                     iterated) < 1e-10);
        }
    }
}

TEST_CASE("final-state inner product depends only on t") {
    const WeightPair w(0.95, 0.45);
    const auto rational = rationalize_weights(w.rho, w.rho_prime);
    REQUIRE(rational.has_value());
    const int n = rational->n_inputs;
    const int r = rational->r;
    const int r_prime = rational->r_prime;

    Decision d = decide_fixed_m(2, w);
    REQUIRE(std::holds_alternative<Scheme>(d));
    const Scheme s = std::get<Scheme>(d);
    const ReflectionSet refl = ReflectionSet::from_mus({s.mu1, s.mu2}, n);
    const std::vector<double> c{std::sqrt(s.c1_sq), std::sqrt(s.c2_sq)};

    std::mt19937 rng(27);
    const int t = 12;  // admissible for r=19, r'=9, N=20
    const int overlap = (r + r_prime - t) / 2;
    std::complex<double> reference{};
    for (int k = 0; k < 20; ++k) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> f_ones(idx.begin(), idx.begin() + r);
        std::vector<int> g_ones(idx.begin(), idx.begin() + overlap);
        for (int j = 0; j < r_prime - overlap; ++j) g_ones.push_back(idx[r + j]);
        const BooleanOracle f = BooleanOracle::from_support(n, f_ones);
        const BooleanOracle g = BooleanOracle::from_support(n, g_ones);
        REQUIRE(f.xor_with(g).ones() == t);
        const std::complex<double> ip =
            final_state(f, refl, c, s.m).inner(final_state(g, refl, c, s.m));
        if (k == 0) {
            reference = ip;
        } else {
            CHECK(std::abs(ip - reference) < 1e-10);
        }
    }
}

TEST_CASE("verify_scheme") {
    SUBCASE("Deutsch-Jozsa corner, N = 2") {
        const ZeroWeightScheme s{1, 1.0};
        const auto report =
            verify_scheme(s, 1, 2, VerifyMode::exhaustive, 1e-12);
        CHECK(report.passed());
        CHECK(report.max_abs_inner_product < 1e-12);
    }
    SUBCASE("reference pair at N = 20") {
        const WeightPair w(0.95, 0.45);
        Decision d = decide_fixed_m(2, w);
        REQUIRE(std::holds_alternative<Scheme>(d));
        const Scheme s = std::get<Scheme>(d);
        const auto report =
            verify_scheme(s, w, 19, 9, 20, VerifyMode::per_t, 1e-8, 3);
        CHECK(report.passed());
        CHECK(report.t_values == std::vector<int>{10, 12});
        CHECK(report.t_range_truncated);
    }
    SUBCASE("corrupted scheme is flagged") {
        const WeightPair w(0.95, 0.45);
        Decision d = decide_fixed_m(2, w);
        Scheme s = std::get<Scheme>(d);
        s.mu1 += 0.05;
        const auto report =
            verify_scheme(s, w, 19, 9, 20, VerifyMode::per_t, 1e-8);
        CHECK_FALSE(report.passed());
        CHECK(report.max_abs_inner_product > 1e-3);
    }
    SUBCASE("rationalization mismatch is rejected") {
        const WeightPair w(0.95, 0.45);
        Decision d = decide_fixed_m(2, w);
        const Scheme s = std::get<Scheme>(d);
        CHECK_THROWS_AS(verify_scheme(s, w, 18, 9, 20, VerifyMode::per_t),
                        std::domain_error);
    }
}

TEST_CASE("report serialization") {
    const ZeroWeightScheme s{1, 1.0};
    const auto report = verify_scheme(s, 1, 2, VerifyMode::per_t);
    const std::string text = report.to_text();
    CHECK(text.find("PASS") != std::string::npos);
    const std::string json = report.to_json();
    CHECK(json.find("\"mode\": \"per_t\"") != std::string::npos);
    CHECK(json.find("\"max_abs_inner_product\"") != std::string::npos);
}

TEST_CASE("rationalize_weights") {
    const auto p = rationalize_weights(0.95, 0.45);
    REQUIRE(p.has_value());
    CHECK(p->n_inputs == 20);
    CHECK(p->r == 19);
    CHECK(p->r_prime == 9);

    CHECK(rationalize_weights(0.5, 0.25)->n_inputs == 4);
    CHECK_FALSE(rationalize_weights(1.0 / 23, 0.5).has_value());
}
