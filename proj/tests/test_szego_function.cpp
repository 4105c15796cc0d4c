#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "szego/szego_function.hpp"

using namespace szego;
using szego::testing::SinglePoleForms;

TEST_CASE("fourier data of log w for w = |z-1/2|^2") {
    const auto w = WeightSpec::polynomial({{0.5, 1}});
    const auto f = log_fourier(w, 512);
    CHECK(std::abs(f.l(0)) < 1e-15);
    // log w on the circle = log(1 - z/2) + log(1 - 1/(2z)): l_k = -(1/2)^k / k
    for (int k = 1; k <= 20; ++k) {
        const double expected = -std::pow(0.5, k) / k;
        CHECK(std::abs(f.l(k) - expected) < 1e-13);
        CHECK(std::abs(f.l(-k) - expected) < 1e-13);
    }
}

TEST_CASE("fourier data of the essential weight matches the expansion of 1/(a-t)") {
    const auto w = WeightSpec::essential(0.5, EssentialSign::Plus);
    const auto f = log_fourier_auto(w);
    // l_k = -conj(a)^{k-1} for k >= 1
    for (int k = 1; k <= 25; ++k) CHECK(std::abs(f.l(k) - (-std::pow(0.5, k - 1))) < 1e-12);
    CHECK(std::abs(f.l(0)) < 1e-13);
}

TEST_CASE("conjugate symmetry of the log spectrum") {
    const auto w = WeightSpec::polynomial({{Complex(0.3, 0.2), 2}, {Complex(-1.7, 0.4), 1}});
    const auto f = log_fourier_auto(w);
    for (int k = 1; k < static_cast<int>(f.coeffs.size()); ++k)
        CHECK(std::abs(f.l(-k) - std::conj(f.l(k))) < 1e-12);
    CHECK(std::abs(f.l(0).imag()) < 1e-12);
}

TEST_CASE("szego data for the lebesgue weight") {
    const auto data = build_szego(WeightSpec::lebesgue());
    CHECK(data.tau == doctest::Approx(1.0));
    CHECK(data.c_min() == 0);
    CHECK(data.c_max() == 0);
    CHECK(data.c_at(0) == Complex(1.0, 0.0));
    CHECK(data.rho_hat == 0.0);
    CHECK(std::abs(eval_D(data, Complex(0.3, 0.2), Side::Inner) - 1.0) < 1e-14);
}

TEST_CASE("szego data for w = |z-1/2|^2") {
    const SinglePoleForms forms{0.5};
    const auto w = WeightSpec::polynomial({{0.5, 1}});
    const auto data = build_szego(w);

    CHECK(data.tau == doctest::Approx(1.0));
    CHECK(data.rho_hat == doctest::Approx(0.5));

    SUBCASE("laurent coefficients of F") {
        // c_{-m} = a^m (1 - a^2), frozen: c_{-6} = 0.01171875
        CHECK(std::abs(data.c_at(-6) - 0.01171875) < 1e-14);
        for (int m = 1; m <= 30; ++m) CHECK(std::abs(data.c_at(-m) - forms.c_neg(m)) < 1e-14);
        CHECK(std::abs(data.c_at(1) - (-0.5)) < 1e-14);
        CHECK(std::abs(data.c_at(0) - 0.75) < 1e-14);
    }

    SUBCASE("D evaluators: closed form and identities") {
        CHECK(std::abs(eval_D(data, 0.8, Side::Exterior) - Complex(0.8 / 0.3, 0.0)) < 1e-13);
        // conj(D_i(1/conj z)) * D_e(z) = 1 at z = 2
        const Complex z(2.0, 0.0);
        const Complex di = eval_D(data, 1.0 / std::conj(z), Side::Inner);
        const Complex de = eval_D(data, z, Side::Exterior);
        CHECK(std::abs(std::conj(di) * de - 1.0) < 1e-13);
        CHECK_THROWS_AS(eval_D(data, Complex(0.2, 0.0), Side::Exterior), Error);
        CHECK_THROWS_AS(eval_D(data, Complex(2.5, 0.0), Side::Inner), Error);
    }

    SUBCASE("boundary identity D_i / D_e = w on the circle") {
        double wmax = 0.0;
        for (int j = 0; j < 512; ++j) wmax = std::max(wmax, std::exp(w.log_weight(2.0 * M_PI * j / 512)));
        for (int j = 0; j < 512; ++j) {
            const double th = 2.0 * M_PI * j / 512;
            const Complex z = std::polar(1.0, th);
            const Complex ratio = eval_D(data, z, Side::Inner) / w.D_outer(z);
            CHECK(std::abs(ratio - std::exp(w.log_weight(th))) <= 1e-8 * wmax);
        }
    }

    SUBCASE("series evaluation of D matches the closed form off the circle") {
        SzegoData series_only = build_szego(log_fourier_auto(w));
        const double rr = 0.5 * (1.0 + 0.5);
        for (int j = 0; j < 32; ++j) {
            const Complex zi = std::polar(rr, 2.0 * M_PI * j / 32);
            CHECK(std::abs(eval_D(series_only, zi, Side::Inner) - w.D_inner(zi)) < 1e-10);
            const Complex ze = std::polar(1.0 / rr, 2.0 * M_PI * j / 32);
            CHECK(std::abs(eval_D(series_only, ze, Side::Exterior) - w.D_outer(ze)) < 1e-10);
        }
    }
}

TEST_CASE("unimodularity and symmetry of F") {
    const std::vector<WeightSpec> specs = {
        WeightSpec::polynomial({{0.5, 1}}),
        WeightSpec::polynomial({{0.5, 1}, {Complex(0.0, 0.5), 1}}),
        WeightSpec::log_laurent({0.0, 0.3}),
    };
    for (const auto& w : specs) {
        const auto data = build_szego(w);
        for (int j = 0; j < 200; ++j) {
            const Complex z = std::polar(1.0, 2.0 * M_PI * j / 200);
            CHECK(std::abs(std::abs(eval_F(data, z)) - 1.0) < 1e-8);
            const Complex zo = std::polar(1.1, 2.0 * M_PI * j / 200 + 0.13);
            const Complex sym = std::conj(eval_F(data, 1.0 / std::conj(zo))) * eval_F(data, zo);
            CHECK(std::abs(sym - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("tau invariant: tau = 1/D_i(0)") {
    for (const auto& w : {WeightSpec::polynomial({{0.5, 1}}), WeightSpec::polynomial({{Complex(0.1, -0.6), 2}})}) {
        const auto data = build_szego(w);
        CHECK(std::abs(data.tau - 1.0 / eval_D(data, 0.0, Side::Inner).real()) < 1e-12);
        CHECK(data.tau > 0.0);
    }
}

TEST_CASE("rho estimation") {
    SUBCASE("closed form wins for rational weights") {
        const auto data = build_szego(WeightSpec::polynomial({{0.5, 1}}));
        CHECK(estimate_rho(data) == doctest::Approx(0.5));
    }
    SUBCASE("decay fit on the two-pole weight") {
        const auto w = WeightSpec::polynomial({{0.5, 1}, {Complex(0.0, 0.5), 1}});
        SzegoData data = build_szego(log_fourier_auto(w));  // no closed form attached
        const double rho = estimate_rho(data);
        CHECK(rho == doctest::Approx(0.5).epsilon(0.02));
    }
    SUBCASE("lebesgue convention") {
        SzegoData data = build_szego(log_fourier_auto(WeightSpec::lebesgue()));
        CHECK(estimate_rho(data) == 0.0);
    }
}
