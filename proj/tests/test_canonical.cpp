#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "szego/canonical.hpp"
#include "szego/oracle.hpp"

using namespace szego;

namespace {

CanonicalSeries series_for(int n, const SzegoData& data, double r) { return iterate(n, 24, data, r); }

}  // namespace

TEST_CASE("lebesgue weight: Phi_n(z) = z^n in every region") {
    const auto data = build_szego(WeightSpec::lebesgue());
    const double r = default_radius(data.rho_hat);
    for (int n : {1, 5, 17}) {
        const auto series = series_for(n, data, r);
        for (const Complex z : {Complex(0.2, 0.1), Complex(0.8, -0.3), Complex(2.5, 1.0)}) {
            const auto v = eval_phi(n, z, series, data);
            CHECK(std::abs(v.value - std::pow(z, n)) <= 1e-12 * std::max(1.0, std::abs(std::pow(z, n))));
        }
    }
}

TEST_CASE("single-pole weight: canonical Phi against the oracle") {
    const auto w = WeightSpec::polynomial({{0.5, 1}});
    const auto data = build_szego(w);
    const double r = default_radius(data.rho_hat);
    const auto oracle = oracle_run(w, 16, PrecisionSpec{});

    for (int n : {8, 12, 16}) {
        const auto series = series_for(n, data, r);
        const auto phi = oracle.monic_at(n);
        for (const Complex z : szego::testing::random_points_in_disc(0.9, 25, 7u)) {
            const auto v = eval_phi(n, z, series, data);
            const double err = std::abs(v.value - phi.eval(z));
            CHECK(err <= 10.0 * std::max(v.bound, 1e-15));
        }
    }
}

TEST_CASE("region consistency across a re-radius") {
    const auto w = WeightSpec::polynomial({{0.5, 1}});
    const auto data = build_szego(w);
    const int n = 10;
    const auto wide = series_for(n, data, 0.75);
    const auto narrow = series_for(n, data, 0.65);
    // 0.65 < |z| < 0.75: Inside for the wide series, Middle for the narrow one
    for (const Complex z : {Complex(0.7, 0.0), std::polar(0.72, 2.1)}) {
        const auto a = eval_phi(n, z, wide, data);
        const auto b = eval_phi(n, z, narrow, data);
        CHECK(std::abs(a.value - b.value) <= a.bound + b.bound + 1e-13);
    }
    // a point inside the exclusion band of T_r triggers the re-radius path
    const auto banded = eval_phi(n, std::polar(0.75, 0.4), wide, data);
    const auto reference = eval_phi(n, std::polar(0.75, 0.4), narrow, data);
    CHECK(std::abs(banded.value - reference.value) <= banded.bound + reference.bound + 1e-13);
}

TEST_CASE("verblunsky from the canonical series") {
    const auto w = WeightSpec::polynomial({{0.5, 1}});
    const auto data = build_szego(w);
    const auto oracle = oracle_run(w, 32, PrecisionSpec{});

    SUBCASE("lebesgue is exactly zero") {
        const auto ldata = build_szego(WeightSpec::lebesgue());
        for (int n : {2, 9, 20}) {
            const auto est = verblunsky_canonical(n, ldata, 0.5);
            CHECK(std::abs(est.alpha) == 0.0);
            CHECK(est.bound == 0.0);
        }
    }
    SUBCASE("matches the oracle within certified bounds") {
        for (int n = 6; n <= 24; n += 3) {
            const auto est = verblunsky_canonical(n, data, 0.75);
            CHECK(std::abs(est.alpha - oracle.alpha(n)) <= est.bound + 1e-14);
        }
    }
    SUBCASE("leading-order surrogate and gap bound") {
        const auto est = verblunsky_canonical(5, data, 0.75);
        CHECK(std::abs(est.leading_order - (-0.01171875)) < 1e-13);
        CHECK(std::abs(est.alpha - est.leading_order) <= est.gap_bound + 1e-15);
        const double rel = std::abs(est.alpha - (-0.01171875)) / 0.01171875;
        CHECK(rel < 2e-3);
    }
    SUBCASE("bound chain |alpha_n| <= Lambda r^{n+1} + O(r^{3n})") {
        const auto series = iterate(11, 8, data, 0.75);
        const double lam = series.lambda_safe();
        for (int n = 10; n <= 30; n += 5) {
            const auto est = verblunsky_canonical(n, data, 0.75);
            CHECK(std::abs(est.alpha) <= lam * std::pow(0.75, n + 1) + est.gap_bound + 1e-14);
        }
    }
}

TEST_CASE("kappa from the canonical series") {
    const auto w = WeightSpec::polynomial({{0.5, 1}});
    const auto data = build_szego(w);
    const auto oracle = oracle_run(w, 16, PrecisionSpec{});

    SUBCASE("lebesgue: 1/sqrt(2 pi) to rounding") {
        const auto ldata = build_szego(WeightSpec::lebesgue());
        for (int n : {0, 3, 12}) {
            const auto est = kappa_canonical(n, ldata, 0.5);
            CHECK(std::abs(est.value - 1.0 / std::sqrt(2.0 * M_PI)) < 1e-13);
        }
    }
    SUBCASE("oracle match at n = 12 to 1e-8 relative") {
        const auto est = kappa_canonical(12, data, 0.75);
        CHECK(std::abs(est.value - oracle.kappa(12)) / oracle.kappa(12) < 1e-8);
    }
    SUBCASE("matches within certified bounds across n") {
        for (int n = 6; n <= 14; ++n) {
            const auto est = kappa_canonical(n, data, 0.75);
            CHECK(std::abs(est.value - oracle.kappa(n)) <= est.bound + 1e-12);
        }
    }
    SUBCASE("kappa^2 tracks tau^2/2pi within the corollary bound") {
        for (int n = 8; n <= 20; n += 4) {
            const auto est = kappa_canonical(n, data, 0.75);
            const auto series = iterate(n + 1, 8, data, 0.75);
            const double lam = series.lambda_safe();
            const double gap = lam * lam * std::pow(0.75, 2 * n) / (1.0 - 0.75 * 0.75);
            CHECK(std::abs(est.value * est.value - 1.0 / (2.0 * M_PI)) <= gap + 1e-12);
        }
    }
}

TEST_CASE("phi coefficient extraction") {
    SUBCASE("lebesgue: pure monomial") {
        const auto data = build_szego(WeightSpec::lebesgue());
        const auto series = series_for(7, data, 0.5);
        const auto p = phi_coefficients(7, series, data);
        REQUIRE(p.degree == 7);
        CHECK(p.coeffs[7] == Complex(1.0, 0.0));
        for (int k = 0; k < 7; ++k) CHECK(std::abs(p.coeffs[static_cast<std::size_t>(k)]) < 1e-13);
    }
    SUBCASE("single-pole weight against the oracle table") {
        const auto w = WeightSpec::polynomial({{0.5, 1}});
        const auto data = build_szego(w);
        const auto oracle = oracle_run(w, 10, PrecisionSpec{});
        for (int n : {6, 10}) {
            const auto series = series_for(n, data, 0.75);
            double bound = 0.0;
            const auto p = phi_coefficients(n, series, data, &bound);
            const auto q = oracle.monic_at(n);
            for (int k = 0; k <= n; ++k)
                CHECK(std::abs(p.coeffs[static_cast<std::size_t>(k)] - q.coeffs[static_cast<std::size_t>(k)]) <
                      1e-8);
            // constant term reproduces the szego recurrence tie to alpha
            CHECK(std::abs(p.coeffs[0] - (-std::conj(oracle.alpha(n - 1)))) < 1e-9);
        }
    }
    SUBCASE("two-pole weight coefficient table at n = 10") {
        const auto w = WeightSpec::polynomial({{0.5, 1}, {Complex(0.0, 0.5), 1}});
        const auto data = build_szego(w);
        const auto oracle = oracle_run(w, 10, PrecisionSpec{});
        const auto series = series_for(10, data, 0.75);
        const auto p = phi_coefficients(10, series, data);
        const auto q = oracle.monic_at(10);
        for (int k = 0; k <= 10; ++k)
            CHECK(std::abs(p.coeffs[static_cast<std::size_t>(k)] - q.coeffs[static_cast<std::size_t>(k)]) < 1e-8);
    }
}

TEST_CASE("exterior ratio converges to D_e/tau") {
    const auto w = WeightSpec::polynomial({{0.5, 1}});
    const auto data = build_szego(w);
    const Complex z(2.0, 0.0);
    double prev = 1e300;
    for (int n : {8, 12, 16, 20}) {
        const auto series = series_for(n, data, 0.75);
        const auto v = eval_phi(n, z, series, data);
        const double gap = std::abs(v.value / std::pow(z, n) - w.D_outer(z) / data.tau);
        CHECK(gap < prev);
        prev = gap;
    }
}
