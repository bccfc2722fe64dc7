#pragma once

#include <vector>

namespace wr {

// Four-parameter family W~_n(y^2); continuous orthogonality in y on (0, inf).
struct WilsonParams {
    double mu = 0.0;
    double nu = 0.0;
    double a = 0.0;
    double b = 0.0;
    double s() const { return mu + nu + a + b; }
};

// scattering: mu > 0; mixed: mu < 0 with all pairwise sums still positive
// (a finite set of square-normalizable states joins the continuum);
// other: outside both windows (reachable through the discrete-family parameter map).
enum class WilsonRegime { scattering, mixed, other };

WilsonRegime classify_regime(const WilsonParams& p);

// Throws ParamError naming the violated inequality: nu, a, b > 0 and
// mu+nu, mu+a, mu+b, nu+a, nu+b, a+b > 0.
void validate_wilson_params(const WilsonParams& p);

struct WilsonValueTable {
    WilsonParams params;
    double y_squared = 0.0;
    std::vector<double> values;  // index n
    bool normalized = false;
};

// Terminating hypergeometric sum, n+1 terms, compensated summation.
// y2 may be negative (real arguments mu +- |y|), as needed for the discrete states.
double wilson_series(int n, double y2, const WilsonParams& p);

// Forward three-term recursion from the closed-form seeds; O(n_max).
WilsonValueTable wilson_recursion(int n_max, double y2, const WilsonParams& p);

// Orthonormalization factor f_n with F W_n = f_n W~_n, log-domain evaluation.
double wilson_norm_factor(int n, const WilsonParams& p);

WilsonValueTable wilson_normalize(const WilsonValueTable& table);

// Normalized weight density on y > 0; rho(0) = 0 (integrable endpoint limit).
double wilson_weight(double y, const WilsonParams& p);

struct GramReport {
    int size = 0;
    std::vector<double> entries;  // row-major size x size
    double max_deviation = 0.0;   // max |G - I|
    long evaluations = 0;
    double entry(int i, int j) const { return entries[static_cast<size_t>(i) * size + j]; }
};

// G_nm = integral_0^inf rho(y) W_n W_m dy for n, m <= n_max; scattering regime only.
GramReport wilson_orthogonality_matrix(int n_max, const WilsonParams& p, double tol);

// | sum_n W~_n t^n  -  2F1(mu+iy, nu+iy; mu+nu; t) * 2F1(a-iy, b-iy; a+b; t) |.
double wilson_generating_check(const WilsonParams& p, double y, double t, int n_trunc);

struct Amplitude {
    double magnitude = 0.0;
    double phase = 0.0;  // in (-pi, pi]
};

// A(z) = Gamma(2z) / [Gamma(mu+z) Gamma(nu+z) Gamma(a+z) Gamma(b+z)] at z = iy, y > 0.
Amplitude scattering_amplitude(double y, const WilsonParams& p);

// |A(z)| at real z (the discrete-state axis); returns 0 exactly when a denominator
// gamma sits on a pole, which is where the discrete states live.
double amplitude_magnitude_real_axis(double z, const WilsonParams& p);

struct AsymptoticFit {
    double amp_hat = 0.0;    // fitted amplitude of n*W~_n ~ amp * cos(2y ln n + phase)
    double phase_hat = 0.0;  // fitted phase, in (-pi, pi]
};

// Least-squares fit of n*W~_n against cos/sin(2y ln n) regressors over n in [lo, hi].
AsymptoticFit wilson_asymptotic_fit(const WilsonParams& p, double y, int lo, int hi);

}  // namespace wr
