#pragma once

#include <vector>

#include "wrpoly/racah.hpp"
#include "wrpoly/wilson.hpp"

namespace wr {

// Bijections between energy E and polynomial argument y > 0 at scale lambda:
// direct: y = sqrt(2E)/lambda; inverse: y = lambda/k with E = k^2/2;
// log: y = sqrt(ln(1 + k^2/lambda^2)).
enum class EnergyMapVariant { direct, inverse, log };

struct EnergyMap {
    EnergyMapVariant variant = EnergyMapVariant::direct;
    double lambda = 1.0;
};

double energy_map_apply(const EnergyMap& map, double energy);  // E -> y
double energy_map_invert(const EnergyMap& map, double y);      // y -> E

// arg A(iy) in (-pi, pi]; identical code path to scattering_amplitude's phase.
double phase_shift(double y, const WilsonParams& p);

// Largest integer <= -mu for mu < 0 (inclusive at integer -mu); 0 otherwise.
int bound_state_count(const WilsonParams& p);

struct BoundState {
    int m = 0;
    double y = 0.0;        // root location -(m+mu) on the discrete axis
    double energy = 0.0;
    bool threshold = false;  // sits at y = 0 (integer -mu edge state)
};

struct BoundSpectrum {
    WilsonParams params;
    EnergyMap map;
    int count_index = 0;             // largest integer <= -mu
    std::vector<BoundState> states;  // m = 0..count_index
};

BoundSpectrum bound_spectrum(const WilsonParams& p, const EnergyMap& map);

// Continuous integral plus discrete sum pairing of the normalized polynomials;
// returns max |G - I| over n, n' <= n_max. The discrete sum is empty for mu > 0.
double mixed_orthogonality_check(const WilsonParams& p, int n_max, double tol);

enum class BasisKind { hermite1d, laguerre_radial };

struct BasisSpec {
    BasisKind kind = BasisKind::hermite1d;
    double lambda = 1.0;
    int ell = 0;  // laguerre_radial only
};

// Orthonormal-at-unit-scale basis element, evaluated through normalized three-term
// recurrences (stable to n = 500). Inner products carry a 1/lambda measure factor.
double basis_eval(const BasisSpec& spec, int n, double coord);

struct WavefunctionGrid {
    std::vector<double> coordinates;
    std::vector<double> values;
    int n_trunc = 0;
    double tail_estimate = 0.0;
    bool truncation_warning = false;
};

// Finite synthesis of discrete-family state m over the basis: the real component
// after the global phase of rho(m)^(1/2) is divided out, i.e. |rho(m)|^(1/2) times
// the sum over rows whose norm-factor sign matches sign(rho(m)). Reduces to the
// full sum when every weight is positive.
WavefunctionGrid synthesize_bound_state(const RacahParams& r, int m, const BasisSpec& spec,
                                        const std::vector<double>& grid);

// Coefficient-space Gram of the (N+1)-state family under the signed bilinear pairing;
// max |G - I|.
double bound_coefficient_gram_deviation(const RacahParams& r);

// Coordinate-space Gram via quadrature, sign-partitioned synthesis parts paired
// bilinearly; max |G - I|.
double bound_coordinate_gram_deviation(const RacahParams& r, const BasisSpec& spec, double tol);

// Partial sum rho(y)^(1/2) sum_{n < n_trunc} W_n(y^2) phi_n; tail_estimate is an
// oscillatory-envelope bound (not a guarantee), flagged when above 1e-4.
WavefunctionGrid synthesize_scattering_state(const WilsonParams& p, double y,
                                             const BasisSpec& spec,
                                             const std::vector<double>& grid, int n_trunc);

}  // namespace wr
