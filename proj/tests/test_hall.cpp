#include <gtest/gtest.h>

#include <cmath>

#include "abvortex/cross_section.hpp"
#include "abvortex/error.hpp"
#include "abvortex/hall.hpp"

namespace abvortex {
namespace {

// mpmath value at alpha = 1/4, |E_-n| = 1, E = 2, n_v/n_e = 0.01.
constexpr double kGoldenRho = 0.015655404664993376825;

const Kinematics kKin = Kinematics::natural(2.0);

TEST(HallResistivity, ZeroWithoutCorrections) {
  const auto r = hall_resistivity({1.0, 1.0}, kKin, decompose_flux(0.3), {});
  EXPECT_EQ(r.rho_xy, 0.0);
  EXPECT_NEAR(r.rho_xy_quadrature, 0.0, 1e-12);
}

TEST(HallResistivity, ZeroAtIntegerFlux) {
  const auto r = hall_resistivity({1.0, 1.0}, kKin, decompose_flux(2.0), {1.0, 1.0});
  EXPECT_NEAR(r.rho_xy, 0.0, 1e-15);
  EXPECT_NEAR(r.rho_xy_quadrature, 0.0, 1e-12);
}

TEST(HallResistivity, Golden) {
  const auto r = hall_resistivity({0.01, 1.0}, kKin, decompose_flux(0.25), {1.0, std::nullopt});
  EXPECT_NEAR(r.rho_xy, kGoldenRho, 1e-15);
  EXPECT_NEAR(r.rho_xy_quadrature, kGoldenRho, 1e-10 * kGoldenRho);
}

TEST(HallResistivity, SecondGolden) {
  const auto r = hall_resistivity({1.0, 1.0}, kKin, decompose_flux(1.4), {1.0, 3.0});
  EXPECT_NEAR(r.rho_xy, 1.0282193592310914348, 1e-13);
  EXPECT_NEAR(r.rho_xy_quadrature, r.rho_xy, 1e-10 * std::abs(r.rho_xy));
}

TEST(HallResistivity, QuadratureMatchesClosedFormOverGrid) {
  for (double alpha : {0.1, 0.35, 0.5, 0.8, 1.65, -0.3})
    for (double e : {0.5, 2.0, 7.0}) {
      const auto r = hall_resistivity({0.2, 1.0}, Kinematics::natural(e), decompose_flux(alpha),
                                      {1.0, 1.5});
      EXPECT_LE(std::abs(r.rho_xy_quadrature - r.rho_xy), 1e-8 * std::abs(r.rho_xy) + 1e-14)
          << alpha << " " << e;
    }
}

TEST(HallResistivity, TransverseRelation) {
  const auto flux = decompose_flux(0.6);
  const ExtensionSpec spec{0.7, 2.0};
  const double sigma = transverse_cross_section(kKin, flux, spec);
  const double k = wavenumber(kKin);
  const auto r = hall_resistivity({0.3, 2.0}, kKin, flux, spec);
  EXPECT_DOUBLE_EQ(r.rho_xy_quadrature, 0.3 * k / (2.0 * kPi * 2.0) * sigma);
}

TEST(HallResistivity, LinearInVortexDensity) {
  const auto flux = decompose_flux(0.4);
  const ExtensionSpec spec{1.0, 2.0};
  const double base = hall_resistivity({1.0, 1.0}, kKin, flux, spec).rho_xy;
  for (double nv : {0.5, 2.0, 8.0})
    EXPECT_DOUBLE_EQ(hall_resistivity({nv, 1.0}, kKin, flux, spec).rho_xy, nv * base);
  EXPECT_DOUBLE_EQ(hall_resistivity({1.0, 4.0}, kKin, flux, spec).rho_xy, base / 4.0);
}

TEST(HallResistivity, SignFlipsUnderCorrectionExchange) {
  const Densities rho{1.0, 1.0};
  for (double alpha : {0.2, 0.7, 1.3}) {
    const CorrectionPair d{0.4, 1.1};
    const CorrectionPair flipped{-d.minus_n1, -d.minus_n};
    EXPECT_NEAR(hall_closed_form(alpha, flipped, rho), -hall_closed_form(alpha, d, rho), 1e-15);
  }
}

TEST(HallResistivity, HallUnitScalesBothPaths) {
  const auto flux = decompose_flux(0.25);
  const ExtensionSpec spec{1.0, 2.0};
  const auto base = hall_resistivity({1.0, 1.0}, kKin, flux, spec);
  HallOptions opts;
  opts.hall_unit = 25812.807;
  const auto scaled = hall_resistivity({1.0, 1.0}, kKin, flux, spec, opts);
  EXPECT_DOUBLE_EQ(scaled.rho_xy, base.rho_xy * 25812.807);
  EXPECT_DOUBLE_EQ(scaled.rho_xy_quadrature, base.rho_xy_quadrature * 25812.807);
}

TEST(HallResistivity, RejectsNonpositiveDensities) {
  EXPECT_THROW(hall_resistivity({0.0, 1.0}, kKin, decompose_flux(0.3), {}), Error);
  EXPECT_THROW(hall_resistivity({1.0, -1.0}, kKin, decompose_flux(0.3), {}), Error);
  EXPECT_THROW(hall_closed_form(0.3, {}, {std::nan(""), 1.0}), Error);
}

TEST(HallSweep, PeriodicInFlux) {
  const std::vector<double> alphas{0.15, 0.4, 0.85};
  std::vector<double> shifted;
  for (double a : alphas) shifted.push_back(a + 2.0);
  const auto rule = fixed_spec_rule({1.0, 2.0});
  const auto a = hall_sweep({1.0, 1.0}, alphas, kKin, rule);
  const auto b = hall_sweep({1.0, 1.0}, shifted, kKin, rule);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].first, alphas[i]);
    EXPECT_NEAR(a[i].second.rho_xy, b[i].second.rho_xy, 1e-12);
  }
}

TEST(HallSweep, EtaScaledRule) {
  const auto rule = eta_scaled_spec_rule(2.0, 4.0);
  const auto s = rule(decompose_flux(1.25));
  EXPECT_DOUBLE_EQ(*s.e_bound_n, 0.5);
  EXPECT_DOUBLE_EQ(*s.e_bound_n1, 3.0);
  const auto at_integer = rule(decompose_flux(3.0));
  EXPECT_FALSE(at_integer.e_bound_n.has_value());
  EXPECT_DOUBLE_EQ(*at_integer.e_bound_n1, 4.0);
  const auto only_n = eta_scaled_spec_rule(2.0, std::nullopt)(decompose_flux(0.5));
  EXPECT_FALSE(only_n.e_bound_n1.has_value());
}

TEST(HallSweep, EntriesMatchPointwise) {
  const auto rule = eta_scaled_spec_rule(1.0, 1.0);
  const std::vector<double> alphas{0.2, 0.5, 3.0};
  const auto out = hall_sweep({0.1, 1.0}, alphas, kKin, rule);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const auto flux = decompose_flux(alphas[i]);
    EXPECT_EQ(out[i].second.rho_xy,
              hall_resistivity({0.1, 1.0}, kKin, flux, rule(flux)).rho_xy);
  }
}

TEST(HallSweep, RejectsEmptyRange) {
  EXPECT_THROW(hall_sweep({1.0, 1.0}, {}, kKin, fixed_spec_rule({})), Error);
}

}  // namespace
}  // namespace abvortex
