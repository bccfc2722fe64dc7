#pragma once

#include <complex>
#include <vector>

#include "wrpoly/errors.hpp"

namespace wr {

using Complex = std::complex<double>;

// Principal-branch log Gamma. Accurate to ~1e-13 relative on |Re z| <= 50,
// |Im z| <= 200. Throws PoleError within 1e-14 of a non-positive integer.
Complex log_gamma(Complex z);

// Rising factorial a(a+1)...(a+n-1), linear domain. Exact zero when a is a
// non-positive integer with -a < n. Throws OverflowError past double range.
double pochhammer(double a, int n);

// Log-domain value with explicit sign; sign == 0 encodes an exact zero.
struct SignedLog {
    double log_abs;
    int sign;
};

// Overflow-safe rising factorial: factor-wise log accumulation with sign
// tracking (no log-gamma, so negative arguments are handled exactly).
SignedLog pochhammer_signed_log(double a, int n);

double signed_log_value(const SignedLog& s);

// One Gamma factor of a ratio: sign +1 numerator, -1 denominator.
struct GammaTerm {
    Complex z;
    int sign;
};

// arg of a product/ratio of Gamma factors, wrapped to (-pi, pi].
double gamma_ratio_arg(const std::vector<GammaTerm>& terms);

// Wraps any angle to (-pi, pi].
double wrap_angle(double phi);

// Gauss series sum_k (a)_k (b)_k / ((c)_k k!) t^k by direct summation,
// stopping at relative term size 1e-15. Negative-integer a or b terminates
// the series exactly. Throws ConvergenceError if 100000 terms do not converge.
Complex hyp2f1(Complex a, Complex b, Complex c, double t);

}  // namespace wr
