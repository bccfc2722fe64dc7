#include "wrpoly/racah.hpp"

#include <cmath>
#include <string>

#include "dd.hpp"
#include "racah_internal.hpp"
#include "wrpoly/errors.hpp"
#include "wrpoly/special.hpp"

namespace wr {

namespace {

using detail::DD;
using detail::dd_abs;
using detail::dd_add;
using detail::dd_add_d;
using detail::dd_div;
using detail::dd_factorial;
using detail::dd_from;
using detail::dd_mul;
using detail::dd_mul_d;
using detail::dd_neg;
using detail::dd_pochhammer;
using detail::dd_sqrt;
using detail::dd_sub;
using detail::dd_to_double;
using detail::two_sum;

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

void check_index(int value, int N, const char* what) {
    if (value < 0 || value > N) {
        throw ParamError(std::string(what) + " must lie in 0..N");
    }
}

// Exact compound parameters; every downstream factor derives from these so both
// sides of each identity see the same binary parameter values.
struct RacahDD {
    double al, be, ga;
    int N;
    DD ab;    // alpha + beta
    DD abg;   // alpha + beta - gamma
    DD gb;    // gamma - beta
    DD bg;    // beta - gamma
    DD gbN;   // gamma - beta - N
    DD gabN;  // gamma - alpha - beta - N
    DD mbN;   // -beta - N

    explicit RacahDD(const RacahParams& r) : al(r.alpha), be(r.beta), ga(r.gamma), N(r.N) {
        ab = two_sum(al, be);
        abg = dd_add_d(ab, -ga);
        gb = two_sum(ga, -be);
        bg = two_sum(be, -ga);
        gbN = dd_add_d(gb, -static_cast<double>(N));
        gabN = dd_add_d(dd_add_d(two_sum(ga, -al), -be), -static_cast<double>(N));
        mbN = two_sum(-be, -static_cast<double>(N));
    }
};

DD tilde_prefactor_dd(int n, const RacahDD& q) {
    const DD den =
        dd_mul(dd_pochhammer(dd_add_d(q.ab, q.N + 2.0), n), dd_factorial(n));
    if (dd_to_double(den) == 0.0) throw ParamError("racah: zero prefactor denominator");
    const DD num =
        dd_mul(dd_pochhammer(two_sum(q.al, 1.0), n), dd_pochhammer(two_sum(q.ga, 1.0), n));
    return dd_div(num, den);
}

double tilde_prefactor(int n, const RacahParams& r) {
    return dd_to_double(tilde_prefactor_dd(n, RacahDD(r)));
}

std::vector<DD> recursion_dd(const RacahParams& r, int m) {
    check_index(m, r.N, "racah_recursion: m");
    const RacahDD q(r);
    const int N = r.N;
    std::vector<DD> v(static_cast<size_t>(N) + 1);
    v[0] = dd_from(1.0);
    if (N == 0) return v;
    const DD u_m = dd_add_d(q.bg, static_cast<double>(N - 2 * m));
    const DD u_0 = dd_add_d(q.bg, static_cast<double>(N));
    const DD eig = dd_mul_d(dd_mul(u_m, u_m), 0.25);
    const DD base = dd_mul_d(dd_mul(u_0, u_0), 0.25);
    for (int n = 0; n < N; ++n) {
        const DD d0 = dd_add_d(q.ab, 2.0 * n);
        const DD d1 = dd_add_d(q.ab, 2.0 * n + 1.0);
        const DD d2 = dd_add_d(q.ab, 2.0 * n + 2.0);
        if ((n > 0 && std::abs(dd_to_double(d0)) < 1e-12) ||
            std::abs(dd_to_double(d1)) < 1e-12 || std::abs(dd_to_double(d2)) < 1e-12) {
            throw DegenerateRecursionError(
                "racah_recursion: denominator 2n+alpha+beta+j within 1e-12 of zero");
        }
        const DD fall = dd_div(
            dd_mul(dd_mul(dd_mul(dd_from(static_cast<double>(n - N)), two_sum(q.al, n + 1.0)),
                          two_sum(q.ga, n + 1.0)),
                   dd_add_d(q.ab, n + 1.0)),
            dd_mul(d1, d2));
        DD bn = dd_sub(base, fall);
        DD an = dd_from(0.0);
        if (n > 0) {
            const DD rise = dd_div(
                dd_mul(dd_mul(dd_mul(dd_from(static_cast<double>(n)),
                                     two_sum(q.be, static_cast<double>(n))),
                              dd_add_d(q.abg, static_cast<double>(n))),
                       dd_add_d(q.ab, static_cast<double>(n + N + 1))),
                dd_mul(d0, d1));
            bn = dd_sub(bn, rise);
            an = dd_div(
                dd_mul(dd_mul(dd_mul(two_sum(q.al, static_cast<double>(n)),
                                     two_sum(q.be, static_cast<double>(n))),
                              two_sum(q.ga, static_cast<double>(n))),
                       dd_add_d(q.abg, static_cast<double>(n))),
                dd_mul(d0, d1));
        }
        const DD dn = dd_div(dd_mul(dd_mul(dd_from((n + 1.0) * (n - N)), dd_add_d(q.ab, n + 1.0)),
                                    dd_add_d(q.ab, static_cast<double>(n + N + 2))),
                             dd_mul(d1, d2));
        if (std::abs(dd_to_double(dn)) < 1e-300) {
            throw DegenerateRecursionError("racah_recursion: raising coefficient vanishes");
        }
        const DD prev = n == 0 ? dd_from(0.0) : v[n - 1];
        v[static_cast<size_t>(n) + 1] =
            dd_div(dd_sub(dd_mul(dd_sub(eig, bn), v[n]), dd_mul(an, prev)), dn);
    }
    return v;
}

std::vector<DD> bare_table_dd(const RacahParams& r, const RacahDD& q) {
    const int size = r.N + 1;
    std::vector<DD> values(static_cast<size_t>(size) * size);
    for (int m = 0; m <= r.N; ++m) {
        const std::vector<DD> column = recursion_dd(r, m);
        for (int n = 0; n <= r.N; ++n) {
            values[static_cast<size_t>(n) * size + m] = column[n];
        }
    }
    for (int n = 0; n <= r.N; ++n) {
        const DD pref = tilde_prefactor_dd(n, q);
        if (dd_to_double(pref) == 0.0) throw ParamError("racah_table: zero prefactor");
        for (int m = 0; m <= r.N; ++m) {
            const size_t i = static_cast<size_t>(n) * size + m;
            values[i] = dd_div(values[i], pref);
        }
    }
    return values;
}

DD omega_dd(int m, const RacahDD& q) {
    const DD edge = dd_add_d(q.gbN, static_cast<double>(m));
    const DD den = dd_mul(dd_mul(dd_mul(dd_pochhammer(q.mbN, m),
                                        dd_pochhammer(dd_add_d(q.gb, 1.0), m)),
                                 dd_pochhammer(q.gabN, m)),
                          dd_factorial(m));
    if (dd_to_double(edge) == 0.0 || dd_to_double(den) == 0.0) {
        throw ParamError("racah_omega: pole in prefactor");
    }
    const DD num =
        dd_mul(dd_mul(dd_mul(dd_mul(dd_add_d(q.gbN, 2.0 * m),
                                    dd_pochhammer(dd_from(-static_cast<double>(q.N)), m)),
                             dd_pochhammer(two_sum(q.al, 1.0), m)),
                      dd_pochhammer(two_sum(q.ga, 1.0), m)),
               dd_pochhammer(dd_add_d(q.gbN, 1.0), m));
    return dd_div(num, dd_mul(edge, den));
}

DD omega_hat_dd(int m, const RacahDD& q) {
    const DD edge = dd_add_d(q.ab, m + 1.0);
    const DD den = dd_mul(dd_mul(dd_mul(dd_pochhammer(two_sum(q.be, 1.0), m),
                                        dd_pochhammer(dd_add_d(q.abg, 1.0), m)),
                                 dd_pochhammer(dd_add_d(q.ab, q.N + 2.0), m)),
                          dd_factorial(m));
    if (dd_to_double(edge) == 0.0 || dd_to_double(den) == 0.0) {
        throw ParamError("racah_omega_hat: pole in prefactor");
    }
    const DD num =
        dd_mul(dd_mul(dd_mul(dd_mul(dd_add_d(q.ab, 2.0 * m + 1.0),
                                    dd_pochhammer(dd_from(-static_cast<double>(q.N)), m)),
                             dd_pochhammer(two_sum(q.al, 1.0), m)),
                      dd_pochhammer(two_sum(q.ga, 1.0), m)),
               dd_pochhammer(dd_add_d(q.ab, 2.0), m));
    return dd_div(num, dd_mul(edge, den));
}

struct DualityDD {
    DD lambda;
    DD lambda_alt;
    DD lambda_hat;
};

DualityDD duality_dd(const RacahDD& q, double de) {
    const int N = q.N;
    const DD den1 = dd_mul(dd_pochhammer(q.mbN, N), dd_pochhammer(q.gabN, N));
    const DD den2 = dd_mul(dd_pochhammer(two_sum(de, 1.0), N),
                           dd_pochhammer(dd_add_d(dd_add_d(two_sum(q.ga, -q.al), de), 1.0), N));
    const DD den3 = dd_mul(dd_pochhammer(two_sum(q.be, 1.0), N),
                           dd_pochhammer(dd_add_d(q.abg, 1.0), N));
    if (dd_to_double(den1) == 0.0 || dd_to_double(den2) == 0.0 || dd_to_double(den3) == 0.0) {
        throw ParamError("racah_duality_constants: pole in Pochhammer ratio");
    }
    DualityDD out;
    out.lambda = dd_div(dd_mul(dd_pochhammer(dd_neg(dd_add_d(q.ab, N + 1.0)), N),
                               dd_pochhammer(dd_add_d(q.gbN, 1.0), N)),
                        den1);
    out.lambda_alt = dd_div(dd_mul(dd_pochhammer(two_sum(-q.al, de), N),
                                   dd_pochhammer(dd_add_d(two_sum(q.ga, de), 2.0), N)),
                            den2);
    out.lambda_hat = dd_div(dd_mul(dd_pochhammer(dd_add_d(q.ab, 2.0), N),
                                   dd_pochhammer(q.bg, N)),
                            den3);
    return out;
}

// Printed diagonal of the primal orthogonality sum (weight omega over m).
DD primal_diagonal_dd(int n, const RacahDD& q) {
    const int N = q.N;
    const DD num =
        dd_mul(dd_mul(dd_mul(dd_mul(dd_mul(dd_mul(dd_add_d(q.ab, n + 1.0),
                                                  dd_pochhammer(dd_neg(dd_add_d(q.ab, N + 1.0)), N)),
                                           dd_pochhammer(dd_add_d(q.gbN, 1.0), N)),
                                    dd_pochhammer(two_sum(q.be, 1.0), n)),
                             dd_pochhammer(dd_add_d(q.abg, 1.0), n)),
                      dd_pochhammer(dd_add_d(q.ab, N + 2.0), n)),
               dd_factorial(n));
    const DD den =
        dd_mul(dd_mul(dd_mul(dd_mul(dd_mul(dd_mul(dd_add_d(q.ab, 2.0 * n + 1.0),
                                                  dd_pochhammer(q.mbN, N)),
                                           dd_pochhammer(q.gabN, N)),
                                    dd_pochhammer(dd_from(-static_cast<double>(N)), n)),
                             dd_pochhammer(two_sum(q.al, 1.0), n)),
                      dd_pochhammer(two_sum(q.ga, 1.0), n)),
               dd_pochhammer(dd_add_d(q.ab, 2.0), n));
    return dd_div(num, den);
}

// Printed diagonal of the dual orthogonality sum (weight omega_hat over n).
DD dual_diagonal_dd(int n, const RacahDD& q) {
    const int N = q.N;
    const DD num =
        dd_mul(dd_mul(dd_mul(dd_mul(dd_mul(dd_mul(dd_add_d(q.gbN, static_cast<double>(n)),
                                                  dd_pochhammer(dd_add_d(q.ab, 2.0), N)),
                                           dd_pochhammer(q.bg, N)),
                                    dd_pochhammer(q.mbN, n)),
                             dd_pochhammer(dd_add_d(q.gb, 1.0), n)),
                      dd_pochhammer(q.gabN, n)),
               dd_factorial(n));
    const DD den =
        dd_mul(dd_mul(dd_mul(dd_mul(dd_mul(dd_mul(dd_add_d(q.gbN, 2.0 * n),
                                                  dd_pochhammer(two_sum(q.be, 1.0), N)),
                                           dd_pochhammer(dd_add_d(q.abg, 1.0), N)),
                                    dd_pochhammer(dd_from(-static_cast<double>(N)), n)),
                             dd_pochhammer(two_sum(q.al, 1.0), n)),
                      dd_pochhammer(two_sum(q.ga, 1.0), n)),
               dd_pochhammer(dd_add_d(q.gbN, 1.0), n));
    return dd_div(num, den);
}

std::vector<DD> normalized_values_dd(const RacahParams& r, const RacahDD& q,
                                     std::vector<int>& signs) {
    std::vector<DD> values = bare_table_dd(r, q);
    const int size = r.N + 1;
    signs.assign(static_cast<size_t>(size), 1);
    for (int n = 0; n <= r.N; ++n) {
        const DD w = omega_hat_dd(n, q);
        if (dd_to_double(w) == 0.0) {
            throw ParamError("racah_normalize: zero normalization radicand");
        }
        signs[n] = dd_to_double(w) > 0.0 ? 1 : -1;
        const DD factor = dd_sqrt(dd_abs(w));
        for (int m = 0; m <= r.N; ++m) {
            const size_t i = static_cast<size_t>(n) * size + m;
            values[i] = dd_mul(values[i], factor);
        }
    }
    return values;
}

}  // namespace

namespace detail {

RacahNormalizedDD racah_normalized_dd(const RacahParams& r) {
    const RacahDD q(r);
    RacahNormalizedDD out;
    out.size = r.N + 1;
    out.values = normalized_values_dd(r, q, out.row_signs);
    const DualityDD d = duality_dd(q, r.delta);
    out.rho.resize(static_cast<size_t>(out.size));
    for (int m = 0; m <= r.N; ++m) {
        out.rho[m] = dd_div(omega_dd(m, q), d.lambda);
    }
    return out;
}

}  // namespace detail

RacahParams make_racah_params(double alpha, double beta, double gamma, int N) {
    if (N < 0) throw ConstraintError("RacahParams: N >= 0 violated");
    if (!(alpha > -1.0)) throw ConstraintError("RacahParams: alpha > -1 violated");
    if (!(gamma > -1.0)) throw ConstraintError("RacahParams: gamma > -1 violated");
    if (!(beta > N - 1.0)) throw ConstraintError("RacahParams: beta > N-1 violated");
    return {alpha, beta, gamma, -(N + beta + 1), N};
}

RacahParams map_wilson_to_racah(const WilsonParams& p, int N) {
    const double alpha = p.mu + p.a - 1;
    const double beta = p.nu + p.b - 1;
    const double gamma = p.mu + p.b - 1;
    const double delta = p.mu - p.b;
    if (std::abs(p.mu + p.nu + N) > 1e-12 * (1.0 + std::abs(p.mu) + std::abs(p.nu))) {
        throw ConstraintError(
            "map_wilson_to_racah: mu+nu = -N violated (delta = -(N+beta+1) unreachable)");
    }
    if (!(alpha > -1.0)) throw ConstraintError("map_wilson_to_racah: alpha > -1 violated");
    if (!(gamma > -1.0)) throw ConstraintError("map_wilson_to_racah: gamma > -1 violated");
    if (!(beta > N - 1.0)) throw ConstraintError("map_wilson_to_racah: beta > N-1 violated");
    return {alpha, beta, gamma, delta, N};
}

WilsonParams map_racah_to_wilson(const RacahParams& r) {
    WilsonParams p;
    p.mu = 0.5 * (r.gamma + r.delta + 1);
    p.nu = r.beta + 0.5 * (r.delta - r.gamma + 1);
    p.a = r.alpha - 0.5 * (r.gamma + r.delta - 1);
    p.b = 0.5 * (r.gamma - r.delta + 1);
    return p;
}

double racah_series(int n, int m, const RacahParams& r, RacahForm form) {
    check_index(n, r.N, "racah_series: n");
    check_index(m, r.N, "racah_series: m");
    const int kmax = std::min(n, m);
    KahanSum acc;
    double term = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        acc.add(term);
        if (k < kmax) {
            const double d1 = r.alpha + 1 + k;
            const double d2 = r.gamma + 1 + k;
            const double d3 = -r.N + k;
            if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0) {
                throw ParamError("racah_series: denominator Pochhammer vanishes");
            }
            term *= (-n + k) * (-m + k) * (n + r.alpha + r.beta + 1 + k) *
                    (m - r.beta + r.gamma - r.N + k) / (d1 * d2 * d3 * (k + 1));
        }
    }
    if (form == RacahForm::bare) return acc.s;
    return tilde_prefactor(n, r) * acc.s;
}

std::vector<double> racah_recursion(const RacahParams& r, int m) {
    const std::vector<DD> v = recursion_dd(r, m);
    std::vector<double> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = dd_to_double(v[i]);
    return out;
}

RacahTable racah_table(const RacahParams& r, RacahForm form) {
    RacahTable table;
    table.params = r;
    table.size = r.N + 1;
    table.values.assign(static_cast<size_t>(table.size) * table.size, 0.0);
    if (form == RacahForm::bare) {
        const RacahDD q(r);
        const std::vector<DD> values = bare_table_dd(r, q);
        for (size_t i = 0; i < values.size(); ++i) table.values[i] = dd_to_double(values[i]);
        return table;
    }
    for (int m = 0; m <= r.N; ++m) {
        const std::vector<DD> column = recursion_dd(r, m);
        for (int n = 0; n <= r.N; ++n) {
            table.values[static_cast<size_t>(n) * table.size + m] = dd_to_double(column[n]);
        }
    }
    return table;
}

double racah_omega(int m, const RacahParams& r) {
    check_index(m, r.N, "racah_omega: m");
    return dd_to_double(omega_dd(m, RacahDD(r)));
}

double racah_omega_hat(int m, const RacahParams& r) {
    check_index(m, r.N, "racah_omega_hat: m");
    return dd_to_double(omega_hat_dd(m, RacahDD(r)));
}

double racah_weight(int m, const RacahParams& r) {
    check_index(m, r.N, "racah_omega: m");
    const RacahDD q(r);
    const DD om = omega_dd(m, q);
    const DualityDD d = duality_dd(q, r.delta);
    return dd_to_double(dd_div(om, d.lambda));
}

DualityConstants racah_duality_constants(const RacahParams& r) {
    const DualityDD d = duality_dd(RacahDD(r), r.delta);
    DualityConstants out;
    out.lambda = dd_to_double(d.lambda);
    out.lambda_alt = dd_to_double(d.lambda_alt);
    out.lambda_hat = dd_to_double(d.lambda_hat);
    return out;
}

RacahTable racah_normalize(const RacahParams& r) {
    const RacahDD q(r);
    RacahTable table;
    table.params = r;
    table.size = r.N + 1;
    table.normalized = true;
    const std::vector<DD> values = normalized_values_dd(r, q, table.row_signs);
    table.values.resize(values.size());
    for (size_t i = 0; i < values.size(); ++i) table.values[i] = dd_to_double(values[i]);
    return table;
}

double racah_gram_deviation(const RacahTable& table) {
    if (!table.normalized) {
        throw ParamError("racah_gram_deviation: requires a normalized table");
    }
    const RacahParams& r = table.params;
    std::vector<double> rho(static_cast<size_t>(table.size));
    for (int m = 0; m <= r.N; ++m) rho[m] = racah_weight(m, r);
    double dev = 0.0;
    for (int n = 0; n <= r.N; ++n) {
        for (int n2 = n; n2 <= r.N; ++n2) {
            KahanSum acc;
            for (int m = 0; m <= r.N; ++m) {
                acc.add(rho[m] * table.value(n, m) * table.value(n2, m));
            }
            const double g = acc.s;
            dev = std::max(dev, n == n2 ? std::abs(table.row_signs[n] * g - 1.0) : std::abs(g));
        }
    }
    return dev;
}

OrthogonalityResiduals racah_orthogonality_check(const RacahParams& r) {
    const RacahDD q(r);
    const std::vector<DD> bare = bare_table_dd(r, q);
    const int size = r.N + 1;
    std::vector<DD> om(static_cast<size_t>(size)), om_hat(static_cast<size_t>(size));
    for (int m = 0; m <= r.N; ++m) {
        om[m] = omega_dd(m, q);
        om_hat[m] = omega_hat_dd(m, q);
    }
    const auto at = [&](int n, int m) -> const DD& {
        return bare[static_cast<size_t>(n) * size + m];
    };
    OrthogonalityResiduals out;
    for (int n = 0; n <= r.N; ++n) {
        const DD diag_p = primal_diagonal_dd(n, q);
        const DD diag_d = dual_diagonal_dd(n, q);
        for (int n2 = 0; n2 <= r.N; ++n2) {
            DD primal = dd_from(0.0);
            DD dual = dd_from(0.0);
            for (int m = 0; m <= r.N; ++m) {
                primal = dd_add(primal, dd_mul(dd_mul(om[m], at(n, m)), at(n2, m)));
                dual = dd_add(dual, dd_mul(dd_mul(om_hat[m], at(m, n)), at(m, n2)));
            }
            const DD err_p = n == n2 ? dd_sub(primal, diag_p) : primal;
            const DD err_d = n == n2 ? dd_sub(dual, diag_d) : dual;
            out.primal = std::max(out.primal, std::abs(dd_to_double(err_p)) /
                                                  std::max(1.0, std::abs(dd_to_double(diag_p))));
            out.dual = std::max(out.dual, std::abs(dd_to_double(err_d)) /
                                              std::max(1.0, std::abs(dd_to_double(diag_d))));
        }
    }
    return out;
}

double racah_generating_check(const RacahParams& r, int m, double t) {
    check_index(m, r.N, "racah_generating_check: m");
    if (!(std::abs(t) < 1.0)) throw ParamError("racah_generating_check: |t| < 1 required");
    const std::vector<double> column = racah_recursion(r, m);
    KahanSum lhs;
    double tn = 1.0;
    for (int n = 0; n <= r.N; ++n) {
        lhs.add(column[n] * tn);
        tn *= t;
    }
    const Complex f1 = hyp2f1(Complex(-m, 0.0), Complex(-m + r.beta - r.gamma, 0.0),
                              Complex(-r.N, 0.0), t);
    const Complex f2 = hyp2f1(Complex(m + r.alpha + 1, 0.0), Complex(m + r.gamma + 1, 0.0),
                              Complex(r.alpha + r.beta + r.N + 2, 0.0), t);
    return std::abs(Complex(lhs.s, 0.0) - f1 * f2);
}

}  // namespace wr
