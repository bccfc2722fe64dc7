#include <doctest.h>

#include <cmath>
#include <random>

#include "wrpoly/errors.hpp"
#include "wrpoly/quadrature.hpp"
#include "wrpoly/wilson.hpp"

namespace {

const wr::WilsonParams kFig1{0.7, 0.2, 0.5, 0.3};
const wr::WilsonParams kMixed{-0.5, 1.2, 1.0, 0.8};
const wr::WilsonParams kBound{-2.5, 3.2, 3.0, 2.8};

}  // namespace

TEST_CASE("parameter validation and regime classification") {
    CHECK_NOTHROW(wr::validate_wilson_params(kFig1));
    CHECK_NOTHROW(wr::validate_wilson_params(kMixed));
    CHECK_THROWS_WITH_AS(wr::validate_wilson_params({0.5, -0.1, 0.5, 0.3}),
                         "WilsonParams: nu > 0 violated", wr::ParamError);
    CHECK_THROWS_WITH_AS(wr::validate_wilson_params({-0.9, 0.8, 0.5, 0.3}),
                         "WilsonParams: mu+nu > 0 violated", wr::ParamError);

    CHECK(wr::classify_regime(kFig1) == wr::WilsonRegime::scattering);
    CHECK(wr::classify_regime(kMixed) == wr::WilsonRegime::mixed);
    CHECK(wr::classify_regime(kBound) == wr::WilsonRegime::mixed);
    CHECK(wr::classify_regime({-0.5, 0.3, 0.4, 0.35}) == wr::WilsonRegime::other);
}

TEST_CASE("series and recursion match the references") {
    // tests/oracles/gen_oracles.py, section "wilson"
    CHECK(wr::wilson_series(1, 1.0, kFig1) ==
          doctest::Approx(-2.01805555555555555556).epsilon(1e-14));
    const wr::WilsonValueTable seed = wr::wilson_recursion(1, 1.0, kFig1);
    CHECK(seed.values[0] == 1.0);
    CHECK(seed.values[1] == doctest::Approx(-2.01805555555555555556).epsilon(1e-14));

    CHECK(wr::wilson_series(5, 2.25, kFig1) ==
          doctest::Approx(-1.29944583236158334093).epsilon(1e-12));
    CHECK(wr::wilson_recursion(5, 2.25, kFig1).values[5] ==
          doctest::Approx(-1.29944583236158334093).epsilon(1e-12));

    CHECK(wr::wilson_series(0, 7.7, kFig1) == 1.0);
    CHECK_THROWS_AS(wr::wilson_series(-1, 1.0, kFig1), wr::ParamError);
    CHECK_THROWS_AS(wr::wilson_recursion(-1, 1.0, kFig1), wr::ParamError);
}

TEST_CASE("series equals recursion over random scattering draws") {
    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> mu_d(0.1, 1.5);
    std::uniform_real_distribution<double> other_d(0.1, 2.0);
    std::uniform_real_distribution<double> y2_d(-1.0, 6.0);
    for (int draw = 0; draw < 200; ++draw) {
        const wr::WilsonParams p{mu_d(gen), other_d(gen), other_d(gen), other_d(gen)};
        const double y2 = y2_d(gen);
        const wr::WilsonValueTable table = wr::wilson_recursion(20, y2, p);
        double scale = 1.0;
        for (double v : table.values) scale = std::max(scale, std::abs(v));
        for (int n = 0; n <= 20; ++n) {
            const double s = wr::wilson_series(n, y2, p);
            CHECK(std::abs(s - table.values[n]) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("series is symmetric in the last two parameters") {
    const wr::WilsonParams swapped{0.7, 0.2, 0.3, 0.5};
    for (int n : {1, 4, 7}) {
        const double lhs = wr::wilson_series(n, 1.3, kFig1);
        const double rhs = wr::wilson_series(n, 1.3, swapped);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("degenerate recursion denominators raise") {
    const wr::WilsonParams degenerate{-1.2, 0.2, 0.5, 0.5};  // parameter sum 0
    CHECK_THROWS_AS(wr::wilson_recursion(3, 1.0, degenerate), wr::DegenerateRecursionError);
}

TEST_CASE("orthonormalization factors") {
    CHECK(wr::wilson_norm_factor(3, kFig1) ==
          doctest::Approx(3.47590668354708175231).epsilon(1e-13));
    CHECK(wr::wilson_norm_factor(0, kFig1) == doctest::Approx(1.0).epsilon(1e-14));
    const wr::WilsonValueTable table = wr::wilson_normalize(wr::wilson_recursion(3, 1.0, kFig1));
    CHECK(table.normalized);
    CHECK(table.values[3] == doctest::Approx(1.66707422476546483231).epsilon(1e-12));

    // negative radicand outside the scattering/mixed windows
    const wr::WilsonParams outside{-9.9, -0.1, 11.6, 11.4};
    CHECK_THROWS_AS(wr::wilson_norm_factor(1, outside), wr::ParamError);
}

TEST_CASE("normalized values satisfy the symmetric three-term identity") {
    const double y2 = 1.44;
    const double s = kFig1.s();
    const wr::WilsonValueTable hat = wr::wilson_normalize(wr::wilson_recursion(17, y2, kFig1));
    const auto raising = [&](int n) {
        const double num = (n + 1.0) * (n + kFig1.mu + kFig1.nu) * (n + kFig1.a + kFig1.b) *
                           (n + kFig1.mu + kFig1.a) * (n + kFig1.mu + kFig1.b) *
                           (n + kFig1.nu + kFig1.a) * (n + kFig1.nu + kFig1.b) * (n + s - 1);
        return std::sqrt(num / ((2 * n + s - 1) * (2 * n + s + 1))) / (2 * n + s);
    };
    for (int n = 0; n <= 15; ++n) {
        const double d0 = 2 * n + s;
        const double d1 = 2 * n + s - 1;
        const double d2 = 2 * n + s - 2;
        const double b1 = (n + kFig1.mu + kFig1.nu) * (n + kFig1.mu + kFig1.a) *
                          (n + kFig1.mu + kFig1.b) * (n + s - 1) / (d0 * d1);
        const double b2 = n * (n + kFig1.nu + kFig1.a - 1) * (n + kFig1.nu + kFig1.b - 1) *
                          (n + kFig1.a + kFig1.b - 1) / (d1 * d2);
        double rhs = (b1 + b2 - kFig1.mu * kFig1.mu) * hat.values[n] -
                     raising(n) * hat.values[n + 1];
        if (n > 0) rhs -= raising(n - 1) * hat.values[n - 1];
        CHECK(std::abs(y2 * hat.values[n] - rhs) <=
              1e-9 * std::max(1.0, std::abs(y2 * hat.values[n])));
    }
}

TEST_CASE("weight density values and unit mass") {
    CHECK(wr::wilson_weight(1.3, kFig1) ==
          doctest::Approx(0.00868533061520014387073).epsilon(1e-13));
    CHECK(wr::wilson_weight(0.0, kFig1) == 0.0);
    CHECK_THROWS_AS(wr::wilson_weight(-0.1, kFig1), wr::ParamError);

    const wr::QuadResult mass =
        wr::integrate_semiaxis([](double y) { return wr::wilson_weight(y, kFig1); }, 1e-10, 4.0);
    CHECK(mass.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("orthogonality matrix in the scattering regime") {
    const wr::GramReport report = wr::wilson_orthogonality_matrix(3, kFig1, 1e-9);
    CHECK(report.size == 4);
    CHECK(report.max_deviation < 1e-7);
    CHECK(report.entry(2, 2) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(report.entry(0, 3) == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(report.evaluations > 0);

    CHECK_THROWS_AS(wr::wilson_orthogonality_matrix(2, kMixed, 1e-8), wr::RegimeError);
}

TEST_CASE("generating-function residual") {
    CHECK(wr::wilson_generating_check(kFig1, 1.0, 0.1, 60) < 1e-10);
    CHECK(wr::wilson_generating_check(kFig1, 0.7, -0.35, 160) < 1e-9);
    CHECK(wr::wilson_generating_check(kFig1, 1.0, 0.0, 5) == 0.0);
    CHECK_THROWS_AS(wr::wilson_generating_check(kFig1, 1.0, 1.0, 60), wr::ParamError);
}

TEST_CASE("scattering amplitude matches the references") {
    struct Row {
        double y, mag, phase;
    };
    // tests/oracles/gen_oracles.py, section "wilson"
    const Row rows[] = {
        {0.5, 0.246819528970671377211, 1.78019616670819243199},
        {1.0, 1.03025236098850606272, 2.94273930470710707303},
        {2.0, 20.8860493739262387684, -2.65954698011831803433},
        {3.7, 3859.31940393599019776, 2.5000545027277778104},
        {5.0, 215855.517301255873937, 0.498234976095175546917},
    };
    for (const Row& r : rows) {
        const wr::Amplitude amp = wr::scattering_amplitude(r.y, kFig1);
        CHECK(amp.magnitude == doctest::Approx(r.mag).epsilon(1e-12));
        CHECK(amp.phase == doctest::Approx(r.phase).epsilon(1e-12));
    }
    CHECK_THROWS_AS(wr::scattering_amplitude(0.0, kFig1), wr::ParamError);
}

TEST_CASE("amplitude magnitude on the real axis vanishes at the discrete roots") {
    for (double z : {2.5, 1.5, 0.5}) {
        CHECK(wr::amplitude_magnitude_real_axis(z, kBound) == 0.0);
    }
    CHECK(wr::amplitude_magnitude_real_axis(0.7, kBound) > 0.0);
}

TEST_CASE("asymptotic fit recovers amplitude and phase") {
    const wr::Amplitude target = wr::scattering_amplitude(1.0, kFig1);
    const double scale = 2.0 * std::tgamma(0.9) * std::tgamma(0.8);
    const wr::AsymptoticFit fit = wr::wilson_asymptotic_fit(kFig1, 1.0, 300, 900);
    CHECK(std::abs(fit.amp_hat / (scale * target.magnitude) - 1.0) < 0.08);
    CHECK(std::abs(std::remainder(fit.phase_hat - target.phase, 2.0 * 3.14159265358979323846)) <
          0.08);

    CHECK_THROWS_AS(wr::wilson_asymptotic_fit(kFig1, 1.0, 3, 4), wr::ParamError);
    CHECK_THROWS_AS(wr::wilson_asymptotic_fit(kFig1, 1e-12, 500, 1000),
                    wr::FitDegenerateError);
}
