#pragma once

#include <functional>

namespace wr {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

// Integral of f over [0, inf) for integrands decaying at least like exp(-decay_hint * y).
// The cutoff is chosen so the discarded tail is below tol * 1e-2; the finite window is
// then refined by panel doubling until successive estimates agree to tol.
QuadResult integrate_semiaxis(const std::function<double(double)>& f, double tol,
                              double decay_hint);

// Integral of f over (-inf, inf) for integrands with Gaussian decay exp(-x^2) times a
// polynomial factor of degree up to ~64.
QuadResult integrate_real_line(const std::function<double(double)>& f, double tol);

// Integral of f over [a, b] by the same panel-doubling scheme.
QuadResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                              double tol);

}  // namespace wr
