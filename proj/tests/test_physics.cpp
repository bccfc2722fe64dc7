#include <doctest.h>

#include <cmath>
#include <vector>

#include "wrpoly/errors.hpp"
#include "wrpoly/physics.hpp"
#include "wrpoly/quadrature.hpp"
#include "wrpoly/racah.hpp"
#include "wrpoly/wilson.hpp"

namespace {

const wr::WilsonParams kFig1{0.7, 0.2, 0.5, 0.3};
const wr::WilsonParams kMixed{-0.5, 1.2, 1.0, 0.8};
const wr::WilsonParams kBound{-2.5, 3.2, 3.0, 2.8};

wr::RacahParams fig2() { return wr::make_racah_params(0.7, 10.3, 0.5, 10); }

}  // namespace

TEST_CASE("energy maps are inverse pairs on their domains") {
    const wr::EnergyMap direct{wr::EnergyMapVariant::direct, 1.0};
    CHECK(wr::energy_map_apply(direct, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wr::energy_map_apply(direct, 0.0) == 0.0);
    CHECK(wr::energy_map_invert(direct, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(wr::energy_map_apply(direct, -0.1), wr::DomainError);
    CHECK_THROWS_AS(wr::energy_map_invert(direct, -1.0), wr::DomainError);

    const wr::EnergyMap inverse{wr::EnergyMapVariant::inverse, 1.0};
    CHECK(wr::energy_map_apply(inverse, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wr::energy_map_apply(inverse, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(wr::energy_map_invert(inverse, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(wr::energy_map_apply(inverse, 0.0), wr::DomainError);
    CHECK_THROWS_AS(wr::energy_map_invert(inverse, 0.0), wr::DomainError);

    const wr::EnergyMap logmap{wr::EnergyMapVariant::log, 1.0};
    // tests/oracles/gen_oracles.py, section "physics"
    CHECK(wr::energy_map_apply(logmap, 0.5) ==
          doctest::Approx(0.832554611157697756353).epsilon(1e-14));
    CHECK(wr::energy_map_apply(logmap, 0.0) == 0.0);
    CHECK(wr::energy_map_invert(logmap, wr::energy_map_apply(logmap, 0.5)) ==
          doctest::Approx(0.5).epsilon(1e-12));

    const wr::EnergyMap direct2{wr::EnergyMapVariant::direct, 2.0};
    CHECK(wr::energy_map_apply(direct2, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(wr::energy_map_invert(direct2, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("phase shift equals the amplitude phase") {
    CHECK(wr::phase_shift(1.3, kFig1) ==
          doctest::Approx(-2.97453197437832682722).epsilon(1e-12));
    CHECK(wr::phase_shift(1.3, kFig1) == wr::scattering_amplitude(1.3, kFig1).phase);
}

TEST_CASE("discrete state counting") {
    CHECK(wr::bound_state_count(kFig1) == 0);
    CHECK(wr::bound_state_count(kBound) == 2);
    CHECK(wr::bound_state_count({-2.0, 3.2, 3.0, 2.8}) == 2);
    CHECK(wr::bound_state_count({-0.5, 1.2, 1.0, 0.8}) == 0);
}

TEST_CASE("discrete spectrum under the three maps") {
    const wr::EnergyMap direct{wr::EnergyMapVariant::direct, 1.0};
    const wr::BoundSpectrum sp = wr::bound_spectrum(kBound, direct);
    REQUIRE(sp.states.size() == 3);
    CHECK(sp.count_index == 2);
    CHECK(sp.states[0].y == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(sp.states[1].y == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(sp.states[2].y == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sp.states[0].energy == doctest::Approx(-3.125).epsilon(1e-14));
    CHECK_FALSE(sp.states[2].threshold);

    const wr::EnergyMap logmap{wr::EnergyMapVariant::log, 1.0};
    const wr::BoundSpectrum sp_log = wr::bound_spectrum(kBound, logmap);
    // tests/oracles/gen_oracles.py, section "physics"
    CHECK(sp_log.states[0].energy ==
          doctest::Approx(-0.499034772931886145379).epsilon(1e-13));

    const wr::EnergyMap inverse{wr::EnergyMapVariant::inverse, 1.0};
    const wr::BoundSpectrum sp_inv = wr::bound_spectrum(kBound, inverse);
    CHECK(sp_inv.states[2].energy == doctest::Approx(-2.0).epsilon(1e-14));

    const wr::WilsonParams edge{-2.0, 3.2, 3.0, 2.8};
    const wr::BoundSpectrum sp_edge = wr::bound_spectrum(edge, direct);
    REQUIRE(sp_edge.states.size() == 3);
    CHECK(sp_edge.states[2].threshold);
    CHECK(sp_edge.states[2].energy == 0.0);
    CHECK_THROWS_AS(wr::bound_spectrum(edge, inverse), wr::DomainError);

    CHECK_THROWS_AS(wr::bound_spectrum(kFig1, direct), wr::RegimeError);
}

TEST_CASE("basis values match the references") {
    const wr::BasisSpec hermite{wr::BasisKind::hermite1d, 1.0, 0};
    // tests/oracles/gen_oracles.py, section "basis"
    CHECK(wr::basis_eval(hermite, 0, 0.0) ==
          doctest::Approx(0.751125544464942482859).epsilon(1e-14));
    CHECK(wr::basis_eval(hermite, 5, 1.3) ==
          doctest::Approx(-0.399391462813750734573).epsilon(1e-13));

    const wr::BasisSpec laguerre{wr::BasisKind::laguerre_radial, 1.0, 1};
    CHECK(wr::basis_eval(laguerre, 2, 0.7) ==
          doctest::Approx(0.359377034093805404724).epsilon(1e-13));
    CHECK(wr::basis_eval(laguerre, 3, 0.0) == 0.0);
    CHECK_THROWS_AS(wr::basis_eval(laguerre, 1, -0.2), wr::DomainError);
    CHECK_THROWS_AS(wr::basis_eval(hermite, -1, 0.5), wr::ParamError);
}

TEST_CASE("basis elements are orthonormal under the 1/lambda measure") {
    const wr::BasisSpec hermite{wr::BasisKind::hermite1d, 1.0, 0};
    for (int n = 0; n <= 6; ++n) {
        for (int m = n; m <= 6; ++m) {
            const auto f = [&](double x) {
                return wr::basis_eval(hermite, n, x) * wr::basis_eval(hermite, m, x);
            };
            const double target = n == m ? 1.0 : 0.0;
            CHECK(std::abs(wr::integrate_real_line(f, 1e-10).value - target) < 1e-8);
        }
    }

    const wr::BasisSpec laguerre{wr::BasisKind::laguerre_radial, 1.0, 1};
    for (int n = 0; n <= 4; ++n) {
        for (int m = n; m <= 4; ++m) {
            const auto f = [&](double r) {
                return wr::basis_eval(laguerre, n, r) * wr::basis_eval(laguerre, m, r);
            };
            const double target = n == m ? 1.0 : 0.0;
            CHECK(std::abs(wr::integrate_semiaxis(f, 1e-10, 0.25).value - target) < 1e-8);
        }
    }

    const wr::BasisSpec scaled{wr::BasisKind::hermite1d, 2.0, 0};
    const auto f = [&](double x) {
        const double v = wr::basis_eval(scaled, 3, x);
        return v * v;
    };
    CHECK(wr::integrate_real_line(f, 1e-10).value == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("finite synthesis reproduces the reference wavefunction values") {
    const wr::RacahParams r = fig2();
    const wr::BasisSpec hermite{wr::BasisKind::hermite1d, 1.0, 0};
    const std::vector<double> grid{0.0, 1.0};
    // tests/oracles/gen_oracles.py, section "bound synthesis"
    const double at0[4] = {0.733039991658599457407, 0.0, -0.523103020986168391989, 0.0};
    const double at1[4] = {0.516679134159700524399, 0.733795356020271945321,
                           0.224252881000320783734, -0.683396650700742726228};
    for (int m = 0; m <= 3; ++m) {
        const wr::WavefunctionGrid wf = wr::synthesize_bound_state(r, m, hermite, grid);
        CHECK(wf.n_trunc == r.N + 1);
        CHECK(wf.tail_estimate == 0.0);
        if (m % 2 == 1) {
            CHECK(wf.values[0] == 0.0);  // odd states vanish at the origin exactly
        } else {
            CHECK(wf.values[0] == doctest::Approx(at0[m]).epsilon(1e-12));
        }
        CHECK(wf.values[1] == doctest::Approx(at1[m]).epsilon(1e-12));
    }

    const wr::BasisSpec laguerre{wr::BasisKind::laguerre_radial, 1.0, 1};
    const std::vector<double> rgrid{0.0, 2.0};
    const double at2[4] = {0.481480836209771615715, 0.582463129485195538343,
                           0.33901869784530559531, -0.805419594354760020847};
    for (int m = 0; m <= 3; ++m) {
        const wr::WavefunctionGrid wf = wr::synthesize_bound_state(r, m, laguerre, rgrid);
        CHECK(wf.values[0] == 0.0);  // radial factor vanishes at r = 0
        CHECK(wf.values[1] == doctest::Approx(at2[m]).epsilon(1e-12));
    }

    CHECK_THROWS_AS(wr::synthesize_bound_state(r, -1, hermite, grid), wr::ParamError);
    CHECK_THROWS_AS(wr::synthesize_bound_state(r, 11, hermite, grid), wr::ParamError);
}

TEST_CASE("synthesis reduces to the plain sum when every weight is positive") {
    const wr::RacahParams r = wr::make_racah_params(0.7, 9.5, 25.0, 10);
    const wr::RacahTable table = wr::racah_normalize(r);
    const wr::BasisSpec hermite{wr::BasisKind::hermite1d, 1.0, 0};
    const std::vector<double> grid{0.8};
    const int m = 3;
    const wr::WavefunctionGrid wf = wr::synthesize_bound_state(r, m, hermite, grid);
    double plain = 0.0;
    for (int n = 0; n <= r.N; ++n) {
        plain += table.value(n, m) * wr::basis_eval(hermite, n, grid[0]);
    }
    plain *= std::sqrt(wr::racah_weight(m, r));
    CHECK(wf.values[0] == doctest::Approx(plain).epsilon(1e-12));
}

TEST_CASE("coefficient-space Gram of the synthesized family") {
    CHECK(wr::bound_coefficient_gram_deviation(fig2()) < 1e-10);
    CHECK(wr::bound_coefficient_gram_deviation(wr::make_racah_params(0.7, 9.5, 25.0, 10)) <
          1e-12);
}

TEST_CASE("coordinate-space Gram via quadrature in both bases") {
    const wr::RacahParams r = wr::make_racah_params(0.7, 3.5, 20.0, 4);
    const wr::BasisSpec hermite{wr::BasisKind::hermite1d, 1.0, 0};
    CHECK(wr::bound_coordinate_gram_deviation(r, hermite, 1e-8) < 1e-6);
    const wr::BasisSpec laguerre{wr::BasisKind::laguerre_radial, 1.0, 1};
    CHECK(wr::bound_coordinate_gram_deviation(r, laguerre, 1e-8) < 1e-6);
}

TEST_CASE("continuum-plus-sum pairing is orthonormal") {
    CHECK(wr::mixed_orthogonality_check(kMixed, 2, 1e-8) < 1e-6);
    // pure continuum: the discrete part is empty
    CHECK(wr::mixed_orthogonality_check(kFig1, 2, 1e-8) < 1e-6);
    CHECK_THROWS_AS(wr::mixed_orthogonality_check(kMixed, -1, 1e-8), wr::ParamError);
}

TEST_CASE("scattering-state synthesis") {
    const wr::BasisSpec hermite{wr::BasisKind::hermite1d, 1.0, 0};
    const std::vector<double> grid{0.0, 0.7, 1.9};
    const double y = 1.1;
    const wr::WavefunctionGrid wf = wr::synthesize_scattering_state(kFig1, y, hermite, grid, 1);
    const double root_weight = std::sqrt(wr::wilson_weight(y, kFig1));
    for (size_t i = 0; i < grid.size(); ++i) {
        const double direct = root_weight * wr::basis_eval(hermite, 0, grid[i]);
        CHECK(wf.values[i] == doctest::Approx(direct).epsilon(1e-14));
    }
    CHECK(wf.n_trunc == 1);
    CHECK(wf.truncation_warning == (wf.tail_estimate > 1e-4));

    const wr::WavefunctionGrid longer =
        wr::synthesize_scattering_state(kFig1, y, hermite, grid, 40);
    CHECK(longer.truncation_warning == (longer.tail_estimate > 1e-4));
    CHECK(longer.tail_estimate >= 0.0);

    CHECK_THROWS_AS(wr::synthesize_scattering_state(kFig1, y, hermite, grid, 0),
                    wr::ParamError);
}
