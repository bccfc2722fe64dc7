#include "wrpoly/physics.hpp"

#include <cmath>
#include <complex>

#include "dd.hpp"
#include "racah_internal.hpp"
#include "wrpoly/errors.hpp"
#include "wrpoly/quadrature.hpp"
#include "wrpoly/special.hpp"

namespace wr {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kQuarterLogPi = 0.28618247146235004178;  // ln(pi)/4

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

double compensated_decay_hint(double rate, double degree, double tol) {
    const double L = -std::log(tol * 1e-2);
    double Y = L / rate;
    for (int i = 0; i < 64; ++i) {
        Y = (L + degree * std::log(std::max(Y, 1.0))) / rate;
    }
    return L / Y;
}

// phi_0..phi_nmax at one coordinate.
std::vector<double> basis_column(const BasisSpec& spec, int n_max, double coord) {
    std::vector<double> out(static_cast<size_t>(n_max) + 1);
    if (spec.kind == BasisKind::hermite1d) {
        const double u = spec.lambda * coord;
        double prev = std::exp(-kQuarterLogPi - 0.5 * u * u);
        out[0] = prev;
        if (n_max == 0) return out;
        double cur = std::sqrt(2.0) * u * prev;
        out[1] = cur;
        for (int n = 1; n < n_max; ++n) {
            const double next = u * std::sqrt(2.0 / (n + 1)) * cur -
                                std::sqrt(static_cast<double>(n) / (n + 1)) * prev;
            prev = cur;
            cur = next;
            out[static_cast<size_t>(n) + 1] = next;
        }
        return out;
    }
    if (coord < 0.0) throw DomainError("basis_eval: laguerre_radial requires r >= 0");
    const double u = spec.lambda * coord;
    const double al = 2.0 * spec.ell + 1.0;
    const double outer = std::pow(u, spec.ell + 0.5) * std::exp(-0.5 * u);
    double prev = std::exp(-0.5 * std::lgamma(al + 1.0));
    out[0] = outer * prev;
    if (n_max == 0) return out;
    double cur = (al + 1.0 - u) * std::exp(-0.5 * std::lgamma(al + 2.0));
    out[1] = outer * cur;
    for (int n = 1; n < n_max; ++n) {
        const double next =
            ((2 * n + al + 1 - u) * cur - std::sqrt(n * (n + al)) * prev) /
            std::sqrt((n + 1) * (n + al + 1));
        prev = cur;
        cur = next;
        out[static_cast<size_t>(n) + 1] = outer * next;
    }
    return out;
}

// Number of discrete points m with m + mu < 0.
int discrete_point_count(double mu) {
    if (!(mu < 0.0)) return 0;
    return static_cast<int>(std::ceil(-mu));
}

// Discrete pairing weight of the mixed orthogonality statement.
double discrete_pair_weight(int m, const WilsonParams& p) {
    const double s = p.s();
    const double log_c = std::lgamma(s) + std::lgamma(p.nu - p.mu) + std::lgamma(p.a - p.mu) +
                         std::lgamma(p.b - p.mu) - std::lgamma(1.0 - 2.0 * p.mu) -
                         std::lgamma(p.a + p.b) - std::lgamma(p.a + p.nu) -
                         std::lgamma(p.b + p.nu);
    const double den = pochhammer(p.mu - p.nu + 1, m) * pochhammer(p.mu - p.a + 1, m) *
                       pochhammer(p.mu - p.b + 1, m) * std::exp(std::lgamma(m + 1.0));
    if (den == 0.0) throw ParamError("mixed_orthogonality_check: Pochhammer pole in weight");
    const double num = pochhammer(2.0 * p.mu, m) * pochhammer(p.mu + p.nu, m) *
                       pochhammer(p.mu + p.a, m) * pochhammer(p.mu + p.b, m);
    return -2.0 * std::exp(log_c) * (m + p.mu) * num / den;
}

// Sign-partitioned synthesis parts: plus rows (row_sign +1) and minus rows (-1).
struct PartitionedState {
    std::vector<double> plus_coeff;
    std::vector<double> minus_coeff;
};

PartitionedState partition_state(const RacahTable& table, int m) {
    PartitionedState out;
    out.plus_coeff.assign(static_cast<size_t>(table.size), 0.0);
    out.minus_coeff.assign(static_cast<size_t>(table.size), 0.0);
    for (int n = 0; n < table.size; ++n) {
        if (table.row_signs[n] >= 0) {
            out.plus_coeff[n] = table.value(n, m);
        } else {
            out.minus_coeff[n] = table.value(n, m);
        }
    }
    return out;
}

double coeff_dot(const std::vector<double>& c1, const std::vector<double>& c2,
                 const BasisSpec& spec, double x) {
    const int n_max = static_cast<int>(c1.size()) - 1;
    const std::vector<double> phi = basis_column(spec, n_max, x);
    double v1 = 0.0, v2 = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        v1 += c1[n] * phi[n];
        v2 += c2[n] * phi[n];
    }
    return v1 * v2;
}

QuadResult basis_pair_integral(const std::vector<double>& c1, const std::vector<double>& c2,
                               const BasisSpec& spec, double tol) {
    const double lam = spec.lambda;
    const int degree = 2 * static_cast<int>(c1.size());
    if (spec.kind == BasisKind::hermite1d) {
        const auto f = [&](double t) { return coeff_dot(c1, c2, spec, t / lam) / lam; };
        return integrate_real_line(f, tol);
    }
    const double hint = compensated_decay_hint(1.0, degree + 2.0 * spec.ell + 2.0, tol);
    const auto f = [&](double t) { return coeff_dot(c1, c2, spec, t / lam) / lam; };
    return integrate_semiaxis(f, tol, hint);
}

}  // namespace

double energy_map_apply(const EnergyMap& map, double energy) {
    const double lam = map.lambda;
    switch (map.variant) {
        case EnergyMapVariant::direct:
            if (energy < 0.0) throw DomainError("energy_map_apply: direct map requires E >= 0");
            return std::sqrt(2.0 * energy) / lam;
        case EnergyMapVariant::inverse:
            if (!(energy > 0.0)) throw DomainError("energy_map_apply: inverse map requires E > 0");
            return lam / std::sqrt(2.0 * energy);
        case EnergyMapVariant::log:
            if (energy < 0.0) throw DomainError("energy_map_apply: log map requires E >= 0");
            return std::sqrt(std::log1p(2.0 * energy / (lam * lam)));
    }
    throw ParamError("energy_map_apply: unknown variant");
}

double energy_map_invert(const EnergyMap& map, double y) {
    const double lam = map.lambda;
    switch (map.variant) {
        case EnergyMapVariant::direct:
            if (y < 0.0) throw DomainError("energy_map_invert: direct map requires y >= 0");
            return 0.5 * lam * lam * y * y;
        case EnergyMapVariant::inverse:
            if (!(y > 0.0)) throw DomainError("energy_map_invert: inverse map requires y > 0");
            return 0.5 * lam * lam / (y * y);
        case EnergyMapVariant::log:
            if (y < 0.0) throw DomainError("energy_map_invert: log map requires y >= 0");
            return 0.5 * lam * lam * std::expm1(y * y);
    }
    throw ParamError("energy_map_invert: unknown variant");
}

double phase_shift(double y, const WilsonParams& p) {
    return scattering_amplitude(y, p).phase;
}

int bound_state_count(const WilsonParams& p) {
    if (!(p.mu < 0.0)) return 0;
    return static_cast<int>(std::floor(-p.mu));
}

BoundSpectrum bound_spectrum(const WilsonParams& p, const EnergyMap& map) {
    if (classify_regime(p) != WilsonRegime::mixed) {
        throw RegimeError("bound_spectrum: mixed regime required (mu < 0, pairwise sums > 0)");
    }
    BoundSpectrum out;
    out.params = p;
    out.map = map;
    out.count_index = bound_state_count(p);
    const double lam = map.lambda;
    for (int m = 0; m <= out.count_index; ++m) {
        BoundState st;
        st.m = m;
        st.y = -(m + p.mu);
        st.threshold = std::abs(st.y) < 1e-14;
        const double y2 = st.y * st.y;
        switch (map.variant) {
            case EnergyMapVariant::direct:
                st.energy = -0.5 * lam * lam * y2;
                break;
            case EnergyMapVariant::inverse:
                if (st.threshold) {
                    throw DomainError(
                        "bound_spectrum: inverse map undefined at the y = 0 threshold state");
                }
                st.energy = -0.5 * lam * lam / y2;
                break;
            case EnergyMapVariant::log:
                st.energy = 0.5 * lam * lam * std::expm1(-y2);
                break;
        }
        out.states.push_back(st);
    }
    return out;
}

double mixed_orthogonality_check(const WilsonParams& p, int n_max, double tol) {
    validate_wilson_params(p);
    if (n_max < 0) throw ParamError("mixed_orthogonality_check: n_max must be nonnegative");
    std::vector<double> norm(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) norm[n] = wilson_norm_factor(n, p);

    const int points = discrete_point_count(p.mu);
    std::vector<double> weights(static_cast<size_t>(points));
    std::vector<std::vector<double>> discrete_values(static_cast<size_t>(points));
    for (int m = 0; m < points; ++m) {
        weights[m] = discrete_pair_weight(m, p);
        const double y2 = -(m + p.mu) * (m + p.mu);
        discrete_values[m].resize(static_cast<size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) {
            discrete_values[m][n] = norm[n] * wilson_series(n, y2, p);
        }
    }

    double dev = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        for (int n2 = n; n2 <= n_max; ++n2) {
            const auto integrand = [&](double y) {
                const WilsonValueTable t = wilson_recursion(std::max(n, n2), y * y, p);
                return wilson_weight(y, p) * norm[n] * t.values[n] * norm[n2] * t.values[n2];
            };
            const double hint = compensated_decay_hint(2.0 * kPi, 2.0 * (n + n2) + 8.0, tol);
            KahanSum total;
            total.add(integrate_semiaxis(integrand, tol, hint).value);
            for (int m = 0; m < points; ++m) {
                total.add(weights[m] * discrete_values[m][n] * discrete_values[m][n2]);
            }
            const double target = n == n2 ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(total.s - target));
        }
    }
    return dev;
}

double basis_eval(const BasisSpec& spec, int n, double coord) {
    if (n < 0) throw ParamError("basis_eval: n must be nonnegative");
    return basis_column(spec, n, coord)[static_cast<size_t>(n)];
}

WavefunctionGrid synthesize_bound_state(const RacahParams& r, int m, const BasisSpec& spec,
                                        const std::vector<double>& grid) {
    if (m < 0 || m > r.N) throw ParamError("synthesize_bound_state: m must lie in 0..N");
    const RacahTable table = racah_normalize(r);
    const double rho = racah_weight(m, r);
    const double scale = std::sqrt(std::abs(rho));
    // Canonical real part: with the global phase of sqrt(rho) divided out, only the
    // rows whose squared norm factor matches the sign of rho survive in the real
    // component. In the positive-definite window this is the full sum.
    const int keep_sign = rho >= 0.0 ? 1 : -1;
    WavefunctionGrid out;
    out.coordinates = grid;
    out.values.resize(grid.size());
    out.n_trunc = r.N + 1;
    out.tail_estimate = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const std::vector<double> phi = basis_column(spec, r.N, grid[i]);
        KahanSum acc;
        for (int n = 0; n <= r.N; ++n) {
            if (table.row_signs[n] == keep_sign) {
                acc.add(table.value(n, m) * phi[n]);
            }
        }
        out.values[i] = scale * acc.s;
    }
    return out;
}

double bound_coefficient_gram_deviation(const RacahParams& r) {
    using detail::DD;
    const detail::RacahNormalizedDD table = detail::racah_normalized_dd(r);
    double dev = 0.0;
    for (int m = 0; m <= r.N; ++m) {
        for (int m2 = m; m2 <= r.N; ++m2) {
            DD acc = detail::dd_from(0.0);
            for (int n = 0; n <= r.N; ++n) {
                const DD prod = detail::dd_mul(table.value(n, m), table.value(n, m2));
                acc = detail::dd_add(acc, table.row_signs[n] > 0 ? prod : detail::dd_neg(prod));
            }
            if (m == m2) {
                const DD g = detail::dd_mul(table.rho[m], acc);
                dev = std::max(dev, std::abs(detail::dd_to_double(detail::dd_add_d(g, -1.0))));
            } else {
                const DD scale =
                    detail::dd_sqrt(detail::dd_abs(detail::dd_mul(table.rho[m], table.rho[m2])));
                dev = std::max(dev, std::abs(detail::dd_to_double(detail::dd_mul(scale, acc))));
            }
        }
    }
    return dev;
}

double bound_coordinate_gram_deviation(const RacahParams& r, const BasisSpec& spec, double tol) {
    const RacahTable table = racah_normalize(r);
    std::vector<double> rho(static_cast<size_t>(table.size));
    std::vector<PartitionedState> parts;
    for (int m = 0; m <= r.N; ++m) {
        rho[m] = racah_weight(m, r);
        parts.push_back(partition_state(table, m));
    }
    double dev = 0.0;
    for (int m = 0; m <= r.N; ++m) {
        for (int m2 = m; m2 <= r.N; ++m2) {
            const double ipp =
                basis_pair_integral(parts[m].plus_coeff, parts[m2].plus_coeff, spec, tol).value;
            const double imm =
                basis_pair_integral(parts[m].minus_coeff, parts[m2].minus_coeff, spec, tol).value;
            const double ipm =
                basis_pair_integral(parts[m].plus_coeff, parts[m2].minus_coeff, spec, tol).value;
            const double imp =
                basis_pair_integral(parts[m].minus_coeff, parts[m2].plus_coeff, spec, tol).value;
            const std::complex<double> pairing(ipp - imm, ipm + imp);
            std::complex<double> phase(1.0, 0.0);
            if (rho[m] < 0.0) phase *= std::complex<double>(0.0, 1.0);
            if (rho[m2] < 0.0) phase *= std::complex<double>(0.0, 1.0);
            const std::complex<double> g =
                phase * std::sqrt(std::abs(rho[m] * rho[m2])) * pairing;
            const double target = m == m2 ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(g - std::complex<double>(target, 0.0)));
        }
    }
    return dev;
}

WavefunctionGrid synthesize_scattering_state(const WilsonParams& p, double y,
                                             const BasisSpec& spec,
                                             const std::vector<double>& grid, int n_trunc) {
    if (n_trunc < 1) throw ParamError("synthesize_scattering_state: n_trunc >= 1 required");
    const int n_last = n_trunc - 1;
    const WilsonValueTable t = wilson_recursion(n_last, y * y, p);
    std::vector<double> coeff(static_cast<size_t>(n_trunc));
    for (int n = 0; n <= n_last; ++n) {
        coeff[n] = wilson_norm_factor(n, p) * t.values[n];
    }
    const double root_weight = std::sqrt(wilson_weight(y, p));
    WavefunctionGrid out;
    out.coordinates = grid;
    out.values.resize(grid.size());
    out.n_trunc = n_trunc;
    double phi_env = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const std::vector<double> phi = basis_column(spec, n_last, grid[i]);
        KahanSum acc;
        for (int n = 0; n <= n_last; ++n) {
            acc.add(coeff[n] * phi[n]);
        }
        out.values[i] = root_weight * acc.s;
        phi_env = std::max(phi_env, std::abs(phi[static_cast<size_t>(n_last)]));
    }
    double coeff_env = 0.0;
    for (int n = std::max(0, n_trunc - 5); n <= n_last; ++n) {
        coeff_env = std::max(coeff_env, std::abs(coeff[n]));
    }
    out.tail_estimate = root_weight * coeff_env * phi_env * (n_trunc / std::max(y, 1e-6));
    out.truncation_warning = out.tail_estimate > 1e-4;
    return out;
}

}  // namespace wr
