#include "wrpoly/wilson.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "dd.hpp"
#include "wrpoly/errors.hpp"
#include "wrpoly/quadrature.hpp"
#include "wrpoly/special.hpp"

namespace wr {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.83787706640934548356;

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw ParamError(std::string("WilsonParams: ") + name + " > 0 violated");
    }
}

struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// Cutoff Y with rate*Y - degree*ln(Y) = -ln(tol*1e-2), so an exp(-rate*y) * y^degree
// integrand still fits the semiaxis cutoff contract; returns the matching decay hint.
double compensated_decay_hint(double rate, double degree, double tol) {
    const double L = -std::log(tol * 1e-2);
    double Y = L / rate;
    for (int i = 0; i < 64; ++i) {
        Y = (L + degree * std::log(std::max(Y, 1.0))) / rate;
    }
    return L / Y;
}

double norm_radicand_log(int n, const WilsonParams& p, int* sign_out) {
    const double s = p.s();
    const SignedLog num[] = {pochhammer_signed_log(p.mu + p.nu, n),
                             pochhammer_signed_log(p.a + p.b, n),
                             pochhammer_signed_log(s, n)};
    const SignedLog den[] = {pochhammer_signed_log(p.mu + p.a, n),
                             pochhammer_signed_log(p.mu + p.b, n),
                             pochhammer_signed_log(p.nu + p.a, n),
                             pochhammer_signed_log(p.nu + p.b, n)};
    int sign = 1;
    double log_abs = std::lgamma(n + 1.0);
    for (const SignedLog& q : num) {
        sign *= q.sign;
        log_abs += q.log_abs;
    }
    for (const SignedLog& q : den) {
        if (q.sign == 0) throw ParamError("wilson_norm_factor: denominator Pochhammer vanishes");
        sign *= q.sign;
        log_abs -= q.log_abs;
    }
    const double ratio = (2 * n + s - 1) / (n + s - 1);
    if (ratio < 0.0) sign = -sign;
    if (ratio == 0.0) sign = 0;
    log_abs += std::log(std::abs(ratio));
    *sign_out = sign;
    return log_abs;
}

}  // namespace

WilsonRegime classify_regime(const WilsonParams& p) {
    const bool sums_ok = p.nu > 0.0 && p.a > 0.0 && p.b > 0.0 && p.mu + p.nu > 0.0 &&
                         p.mu + p.a > 0.0 && p.mu + p.b > 0.0 && p.nu + p.a > 0.0 &&
                         p.nu + p.b > 0.0 && p.a + p.b > 0.0;
    if (!sums_ok) return WilsonRegime::other;
    if (p.mu > 0.0) return WilsonRegime::scattering;
    if (p.mu < 0.0) return WilsonRegime::mixed;
    return WilsonRegime::other;
}

void validate_wilson_params(const WilsonParams& p) {
    require_positive(p.nu, "nu");
    require_positive(p.a, "a");
    require_positive(p.b, "b");
    require_positive(p.mu + p.nu, "mu+nu");
    require_positive(p.mu + p.a, "mu+a");
    require_positive(p.mu + p.b, "mu+b");
    require_positive(p.nu + p.a, "nu+a");
    require_positive(p.nu + p.b, "nu+b");
    require_positive(p.a + p.b, "a+b");
}

double wilson_series(int n, double y2, const WilsonParams& p) {
    if (n < 0) throw ParamError("wilson_series: n must be nonnegative");
    using detail::DD;
    const DD mua = detail::two_sum(p.mu, p.a);
    const DD mub = detail::two_sum(p.mu, p.b);
    const DD ab = detail::two_sum(p.a, p.b);
    const DD mun = detail::two_sum(p.mu, p.nu);
    const DD s1 = detail::dd_add_d(detail::dd_add(mun, ab), -1.0);
    DD term = detail::dd_from(1.0);
    for (int k = 0; k < n; ++k) {
        const DD den = detail::dd_mul_d(detail::dd_add_d(ab, static_cast<double>(k)), k + 1.0);
        if (detail::dd_to_double(den) == 0.0) {
            throw ParamError("wilson_series: prefactor denominator vanishes");
        }
        term = detail::dd_div(
            detail::dd_mul(detail::dd_mul(term, detail::dd_add_d(mua, static_cast<double>(k))),
                           detail::dd_add_d(mub, static_cast<double>(k))),
            den);
    }
    DD acc = term;
    for (int k = 0; k < n; ++k) {
        const DD d1 = detail::dd_add_d(mun, static_cast<double>(k));
        const DD d2 = detail::dd_add_d(mua, static_cast<double>(k));
        const DD d3 = detail::dd_add_d(mub, static_cast<double>(k));
        if (detail::dd_to_double(d1) == 0.0 || detail::dd_to_double(d2) == 0.0 ||
            detail::dd_to_double(d3) == 0.0) {
            throw ParamError("wilson_series: denominator Pochhammer vanishes");
        }
        const DD mk = detail::two_sum(p.mu, static_cast<double>(k));
        const DD num = detail::dd_mul(
            detail::dd_mul(detail::dd_from(static_cast<double>(k - n)),
                           detail::dd_add_d(s1, static_cast<double>(n + k))),
            detail::dd_add_d(detail::dd_mul(mk, mk), y2));
        const DD den = detail::dd_mul(detail::dd_mul(detail::dd_mul(d1, d2), d3),
                                      detail::dd_from(k + 1.0));
        term = detail::dd_div(detail::dd_mul(term, num), den);
        acc = detail::dd_add(acc, term);
    }
    return detail::dd_to_double(acc);
}

WilsonValueTable wilson_recursion(int n_max, double y2, const WilsonParams& p) {
    if (n_max < 0) throw ParamError("wilson_recursion: n_max must be nonnegative");
    const double s = p.s();
    WilsonValueTable table{p, y2, {}, false};
    table.values.resize(static_cast<size_t>(n_max) + 1);
    table.values[0] = 1.0;
    if (n_max == 0) return table;
    if (p.mu + p.nu == 0.0 || p.a + p.b == 0.0) {
        throw DegenerateRecursionError("wilson_recursion: seed denominator vanishes");
    }
    table.values[1] = (p.mu + p.a) * (p.mu + p.b) / (p.a + p.b) -
                      s / ((p.mu + p.nu) * (p.a + p.b)) * (y2 + p.mu * p.mu);
    for (int n = 1; n < n_max; ++n) {
        const double d0 = 2 * n + s;
        const double d1 = 2 * n + s - 1;
        const double d2 = 2 * n + s - 2;
        if (std::abs(d0) < 1e-12 || std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12) {
            throw DegenerateRecursionError(
                "wilson_recursion: denominator 2n+mu+nu+a+b-j within 1e-12 of zero");
        }
        const double b1 =
            (n + p.mu + p.nu) * (n + p.mu + p.a) * (n + p.mu + p.b) * (n + s - 1) / (d0 * d1);
        const double b2 =
            n * (n + p.nu + p.a - 1) * (n + p.nu + p.b - 1) * (n + p.a + p.b - 1) / (d1 * d2);
        const double c = (n + p.mu + p.a - 1) * (n + p.mu + p.b - 1) * (n + p.nu + p.a - 1) *
                         (n + p.nu + p.b - 1) / (d1 * d2);
        const double d =
            (n + 1) * (n + p.mu + p.nu) * (n + p.a + p.b) * (n + s - 1) / (d0 * d1);
        if (std::abs(d) < 1e-300) {
            throw DegenerateRecursionError("wilson_recursion: raising coefficient vanishes");
        }
        table.values[static_cast<size_t>(n) + 1] =
            ((b1 + b2 - p.mu * p.mu - y2) * table.values[n] - c * table.values[n - 1]) / d;
    }
    return table;
}

double wilson_norm_factor(int n, const WilsonParams& p) {
    if (n < 0) throw ParamError("wilson_norm_factor: n must be nonnegative");
    int sign = 0;
    const double log_abs = norm_radicand_log(n, p, &sign);
    if (sign <= 0) throw ParamError("wilson_norm_factor: non-positive radicand");
    return std::exp(0.5 * log_abs);
}

WilsonValueTable wilson_normalize(const WilsonValueTable& table) {
    WilsonValueTable out = table;
    out.normalized = true;
    for (size_t n = 0; n < table.values.size(); ++n) {
        out.values[n] = wilson_norm_factor(static_cast<int>(n), table.params) * table.values[n];
    }
    return out;
}

double wilson_weight(double y, const WilsonParams& p) {
    if (y < 0.0 || !std::isfinite(y)) throw ParamError("wilson_weight: y >= 0 required");
    if (y == 0.0) return 0.0;
    const double consts =
        std::real(log_gamma(Complex(p.s(), 0.0))) -
        std::real(log_gamma(Complex(p.mu + p.nu, 0.0))) -
        std::real(log_gamma(Complex(p.a + p.b, 0.0))) -
        std::real(log_gamma(Complex(p.mu + p.a, 0.0))) -
        std::real(log_gamma(Complex(p.mu + p.b, 0.0))) -
        std::real(log_gamma(Complex(p.nu + p.a, 0.0))) -
        std::real(log_gamma(Complex(p.nu + p.b, 0.0)));
    const double moduli = std::real(log_gamma(Complex(p.mu, y))) +
                          std::real(log_gamma(Complex(p.nu, y))) +
                          std::real(log_gamma(Complex(p.a, y))) +
                          std::real(log_gamma(Complex(p.b, y))) -
                          std::real(log_gamma(Complex(0.0, 2.0 * y)));
    return std::exp(consts + 2.0 * moduli - kLog2Pi);
}

GramReport wilson_orthogonality_matrix(int n_max, const WilsonParams& p, double tol) {
    validate_wilson_params(p);
    if (classify_regime(p) != WilsonRegime::scattering) {
        throw RegimeError(
            "wilson_orthogonality_matrix: requires mu > 0; use the mixed-regime check "
            "otherwise");
    }
    if (n_max < 0) throw ParamError("wilson_orthogonality_matrix: n_max must be nonnegative");
    std::vector<double> norm(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) norm[n] = wilson_norm_factor(n, p);
    GramReport report;
    report.size = n_max + 1;
    report.entries.assign(static_cast<size_t>(n_max + 1) * (n_max + 1), 0.0);
    for (int n = 0; n <= n_max; ++n) {
        for (int m = n; m <= n_max; ++m) {
            const auto integrand = [&](double y) {
                const WilsonValueTable t = wilson_recursion(std::max(n, m), y * y, p);
                return wilson_weight(y, p) * norm[n] * t.values[n] * norm[m] * t.values[m];
            };
            const double hint =
                compensated_decay_hint(2.0 * kPi, 2.0 * (n + m) + 8.0, tol);
            const QuadResult q = integrate_semiaxis(integrand, tol, hint);
            report.evaluations += q.evaluations;
            report.entries[static_cast<size_t>(n) * report.size + m] = q.value;
            report.entries[static_cast<size_t>(m) * report.size + n] = q.value;
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n_max; ++m) {
            const double target = (n == m) ? 1.0 : 0.0;
            report.max_deviation =
                std::max(report.max_deviation, std::abs(report.entry(n, m) - target));
        }
    }
    return report;
}

double wilson_generating_check(const WilsonParams& p, double y, double t, int n_trunc) {
    if (!(std::abs(t) < 1.0)) throw ParamError("wilson_generating_check: |t| < 1 required");
    if (n_trunc < 0) throw ParamError("wilson_generating_check: n_trunc must be nonnegative");
    const WilsonValueTable table = wilson_recursion(n_trunc, y * y, p);
    KahanSum lhs;
    double tn = 1.0;
    for (int n = 0; n <= n_trunc; ++n) {
        lhs.add(table.values[n] * tn);
        tn *= t;
    }
    const Complex f1 = hyp2f1(Complex(p.mu, y), Complex(p.nu, y), Complex(p.mu + p.nu, 0.0), t);
    const Complex f2 = hyp2f1(Complex(p.a, -y), Complex(p.b, -y), Complex(p.a + p.b, 0.0), t);
    return std::abs(Complex(lhs.s, 0.0) - f1 * f2);
}

Amplitude scattering_amplitude(double y, const WilsonParams& p) {
    if (!(y > 0.0)) throw ParamError("scattering_amplitude: y > 0 required");
    const Complex terms[] = {Complex(0.0, 2.0 * y), Complex(p.mu, y), Complex(p.nu, y),
                             Complex(p.a, y), Complex(p.b, y)};
    const double log_mag = std::real(log_gamma(terms[0])) - std::real(log_gamma(terms[1])) -
                           std::real(log_gamma(terms[2])) - std::real(log_gamma(terms[3])) -
                           std::real(log_gamma(terms[4]));
    const double phase = gamma_ratio_arg({{terms[0], +1},
                                          {terms[1], -1},
                                          {terms[2], -1},
                                          {terms[3], -1},
                                          {terms[4], -1}});
    return {std::exp(log_mag), phase};
}

double amplitude_magnitude_real_axis(double z, const WilsonParams& p) {
    const double denom_args[] = {p.mu + z, p.nu + z, p.a + z, p.b + z};
    for (double arg : denom_args) {
        if (std::abs(arg - std::round(arg)) < 1e-14 && std::round(arg) <= 0.0) {
            return 0.0;  // denominator gamma pole: zero of the amplitude
        }
    }
    double log_mag = std::real(log_gamma(Complex(2.0 * z, 0.0)));
    for (double arg : denom_args) {
        log_mag -= std::real(log_gamma(Complex(arg, 0.0)));
    }
    return std::exp(log_mag);
}

AsymptoticFit wilson_asymptotic_fit(const WilsonParams& p, double y, int lo, int hi) {
    if (!(lo >= 2 && hi >= 2 * lo)) {
        throw ParamError("wilson_asymptotic_fit: window must satisfy hi >= 2*lo >= 4");
    }
    const WilsonValueTable table = wilson_recursion(hi, y * y, p);
    double scc = 0.0, css = 0.0, scs = 0.0, rc = 0.0, rs = 0.0;
    for (int n = lo; n <= hi; ++n) {
        const double theta = 2.0 * y * std::log(static_cast<double>(n));
        const double cn = std::cos(theta);
        const double sn = std::sin(theta);
        const double v = n * table.values[n];
        scc += cn * cn;
        css += sn * sn;
        scs += cn * sn;
        rc += cn * v;
        rs += sn * v;
    }
    const double det = scc * css - scs * scs;
    if (!(det > 1e-12 * std::max(scc, css) * std::max(scc, css))) {
        throw FitDegenerateError("wilson_asymptotic_fit: degenerate design matrix");
    }
    const double c = (css * rc - scs * rs) / det;
    const double s = (scc * rs - scs * rc) / det;
    return {std::hypot(c, s), std::atan2(-s, c)};
}

}  // namespace wr
