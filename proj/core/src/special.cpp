#include "wrpoly/special.hpp"

#include <cmath>
#include <cstdlib>

namespace wr {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
// 0.5 * log(2*pi)
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// Lanczos g = 7, 9 terms, double-precision coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log Gamma for Re z >= 0.5 via the Lanczos sum; the rational part keeps a
// positive real part on this half-plane, so std::log stays on the principal
// branch.
Complex log_gamma_core(Complex z) {
    const Complex zm1 = z - 1.0;
    Complex acc(kLanczos[0], 0.0);
    for (int k = 1; k < 9; ++k) {
        acc += kLanczos[k] / (zm1 + static_cast<double>(k));
    }
    const Complex t = zm1 + kLanczosG + 0.5;
    return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

// log(sin(pi z)) analytic on the closed upper half-plane (poles excluded):
// sin(pi z) = exp(-i pi z) (1 - exp(2 i pi z)) / (2 i) / ... rearranged so the
// only branch cut source is log1p of a value inside the unit disk.
Complex log_sin_pi_upper(Complex z) {
    const Complex two_pi_i_z(-2.0 * kPi * z.imag(), 2.0 * kPi * z.real());
    const Complex w = -std::exp(two_pi_i_z);
    // log1p(w) with complex w, |1 + w| bounded away from 0 off the poles
    const Complex l1p = std::log(1.0 + w);
    return Complex(0.0, kPi / 2.0) - kLn2 - Complex(0.0, kPi) * z + l1p;
}

}  // namespace

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ParamError("log_gamma: non-finite argument");
    }
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::hypot(z.real() - nearest, z.imag()) < 1e-14) {
        throw PoleError("log_gamma: argument within 1e-14 of a non-positive integer");
    }
    if (z.imag() < 0.0) {
        return std::conj(log_gamma(std::conj(z)));
    }
    if (z.real() < 0.5) {
        // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return std::log(kPi) - log_sin_pi_upper(z) - log_gamma(1.0 - z);
    }
    return log_gamma_core(z);
}

double pochhammer(double a, int n) {
    if (n < 0) throw ParamError("pochhammer: negative order");
    // exact zero when a is a non-positive integer inside the product range
    if (a <= 0.0 && a == std::round(a) && -a < static_cast<double>(n)) return 0.0;
    double r = 1.0;
    for (int k = 0; k < n; ++k) {
        r *= a + static_cast<double>(k);
        if (!std::isfinite(r)) {
            throw OverflowError("pochhammer: linear-domain overflow, use pochhammer_signed_log");
        }
    }
    return r;
}

SignedLog pochhammer_signed_log(double a, int n) {
    if (n < 0) throw ParamError("pochhammer_signed_log: negative order");
    SignedLog out{0.0, 1};
    for (int k = 0; k < n; ++k) {
        const double f = a + static_cast<double>(k);
        if (f == 0.0) return {0.0, 0};
        out.log_abs += std::log(std::fabs(f));
        if (f < 0.0) out.sign = -out.sign;
    }
    return out;
}

double signed_log_value(const SignedLog& s) {
    if (s.sign == 0) return 0.0;
    return static_cast<double>(s.sign) * std::exp(s.log_abs);
}

double wrap_angle(double phi) {
    double w = std::remainder(phi, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

double gamma_ratio_arg(const std::vector<GammaTerm>& terms) {
    double acc = 0.0;
    for (const GammaTerm& t : terms) {
        acc += static_cast<double>(t.sign) * log_gamma(t.z).imag();
    }
    return wrap_angle(acc);
}

Complex hyp2f1(Complex a, Complex b, Complex c, double t) {
    Complex sum(1.0, 0.0);
    Complex term(1.0, 0.0);
    for (int k = 0; k < 100000; ++k) {
        // a terminating numerator must win over a denominator zero at the same k
        const Complex num = (a + static_cast<double>(k)) * (b + static_cast<double>(k));
        if (std::abs(num) == 0.0) return sum;
        const Complex ck = c + static_cast<double>(k);
        if (std::abs(ck) < 1e-300) {
            throw ParamError("hyp2f1: denominator parameter hits a non-positive integer");
        }
        term *= num * t / (ck * static_cast<double>(k + 1));
        sum += term;
        if (std::abs(term) < 1e-15 * std::abs(sum) && k > 2) return sum;
    }
    throw ConvergenceError("hyp2f1: series did not converge in 100000 terms");
}

}  // namespace wr
