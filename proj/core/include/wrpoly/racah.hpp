#pragma once

#include <vector>

#include "wrpoly/wilson.hpp"

namespace wr {

// Discrete family on m in {0..N}. delta is determined: delta = -(N+beta+1).
struct RacahParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    int N = 0;
};

// Validating factory: requires alpha > -1, gamma > -1, beta > N-1; computes delta.
// Throws ConstraintError naming the violated inequality.
RacahParams make_racah_params(double alpha, double beta, double gamma, int N);

// alpha = mu+a-1, gamma = mu+b-1, beta = nu+b-1, delta = mu-b. Consistent only when
// mu+nu = -N (so that delta = -(N+beta+1)); throws ConstraintError otherwise.
RacahParams map_wilson_to_racah(const WilsonParams& p, int N);

// mu = (gamma+delta+1)/2, nu = beta+(delta-gamma+1)/2, a = alpha-(gamma+delta-1)/2,
// b = (gamma-delta+1)/2.
WilsonParams map_racah_to_wilson(const RacahParams& r);

enum class RacahForm { bare, tilde };

struct RacahTable {
    RacahParams params;
    int size = 0;                // N+1
    std::vector<double> values;  // row-major (n, m)
    bool normalized = false;
    // Metric signs of the squared orthonormalization factors when normalized:
    // row n stores |factor| * value and row_signs[n] = sign(factor^2).
    std::vector<int> row_signs;
    double value(int n, int m) const { return values[static_cast<size_t>(n) * size + m]; }
};

// Double-terminating hypergeometric sum over k <= min(n, m); bare form seeds at 1,
// tilde form carries the degree-n prefactor.
double racah_series(int n, int m, const RacahParams& r, RacahForm form);

// Tilde-form column at fixed m via the three-term recursion in n, seeded by
// value(-1) = 0, value(0) = 1.
std::vector<double> racah_recursion(const RacahParams& r, int m);

// Full (N+1) x (N+1) table, recursion-built per column.
RacahTable racah_table(const RacahParams& r, RacahForm form);

// Unnormalized discrete weights: omega for the primal sum over m, omega_hat for the
// dual sum over n (omega_hat is also the squared orthonormalization factor).
double racah_omega(int m, const RacahParams& r);
double racah_omega_hat(int m, const RacahParams& r);

// Normalized weight rho(m) = omega(m) / lambda; sums to 1 over m = 0..N.
// May be negative outside the classical parameter window (indefinite measure).
double racah_weight(int m, const RacahParams& r);

struct DualityConstants {
    double lambda = 0.0;      // product form in (alpha, beta, gamma, N)
    double lambda_alt = 0.0;  // same constant written through delta
    double lambda_hat = 0.0;  // dual constant (alpha<->gamma, beta<->delta swap)
};

DualityConstants racah_duality_constants(const RacahParams& r);

// Orthonormalized table: values are |omega_hat(n)|^(1/2) * bare(n, m) with the sign of
// omega_hat(n) kept in row_signs (identity Gram under the signed bilinear pairing).
RacahTable racah_normalize(const RacahParams& r);

// max deviation of the signed bilinear Gram sum_m rho(m) v(n,m) v(n',m) from the
// identity: |row_sign(n) * G_nn - 1| on the diagonal, |G_nn'| off it.
double racah_gram_deviation(const RacahTable& normalized);

struct OrthogonalityResiduals {
    double primal = 0.0;
    double dual = 0.0;
};

// Relative residuals of the primal (sum over m, weight omega) and dual (sum over n,
// weight omega_hat) orthogonality statements against their closed-form diagonals.
OrthogonalityResiduals racah_orthogonality_check(const RacahParams& r);

// | sum_n tilde_n(m) t^n - 2F1(-m, -m+beta-gamma; -N; t)
//                          * 2F1(m+alpha+1, m+gamma+1; alpha+beta+N+2; t) |.
double racah_generating_check(const RacahParams& r, int m, double t);

}  // namespace wr
