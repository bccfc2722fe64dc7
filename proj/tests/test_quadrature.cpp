#include <doctest.h>

#include <cmath>

#include "wrpoly/errors.hpp"
#include "wrpoly/quadrature.hpp"

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("semiaxis integrals of exponential decays") {
    const wr::QuadResult unit =
        wr::integrate_semiaxis([](double y) { return std::exp(-y); }, 1e-10, 1.0);
    CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(unit.evaluations > 0);

    const wr::QuadResult quarter =
        wr::integrate_semiaxis([](double y) { return y * y * std::exp(-2.0 * y); }, 1e-10, 2.0);
    CHECK(quarter.value == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("real-line gaussians, centered and shifted") {
    const double root_pi = std::sqrt(kPi);
    const wr::QuadResult centered =
        wr::integrate_real_line([](double x) { return std::exp(-x * x); }, 1e-10);
    CHECK(centered.value == doctest::Approx(root_pi).epsilon(1e-10));

    const wr::QuadResult shifted = wr::integrate_real_line(
        [](double x) { return std::exp(-(x - 3.0) * (x - 3.0)); }, 1e-10);
    CHECK(shifted.value == doctest::Approx(root_pi).epsilon(1e-9));
}

TEST_CASE("interval integral and argument validation") {
    const wr::QuadResult sine =
        wr::integrate_interval([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12);
    CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(wr::integrate_interval([](double x) { return x; }, 1.0, 1.0, 1e-8),
                    wr::ParamError);
    CHECK_THROWS_AS(wr::integrate_interval([](double x) { return x; }, 0.0, 1.0, 0.0),
                    wr::ParamError);
    CHECK_THROWS_AS(wr::integrate_semiaxis([](double y) { return y; }, 1e-8, -1.0),
                    wr::ParamError);
    CHECK_THROWS_AS(wr::integrate_semiaxis([](double y) { return y; }, -1e-8, 1.0),
                    wr::ParamError);
    CHECK_THROWS_AS(wr::integrate_real_line([](double x) { return x; }, 0.0), wr::ParamError);
}

TEST_CASE("repeated runs are bitwise deterministic") {
    const auto f = [](double y) { return std::cos(3.0 * y) * std::exp(-y); };
    const wr::QuadResult a = wr::integrate_semiaxis(f, 1e-11, 1.0);
    const wr::QuadResult b = wr::integrate_semiaxis(f, 1e-11, 1.0);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("panel refinement gives up on a jump below tolerance") {
    const auto step = [](double x) { return x < 0.6180339887498949 ? 0.0 : 1.0; };
    CHECK_THROWS_AS(wr::integrate_interval(step, 0.0, 1.0, 1e-15), wr::QuadratureError);
}
