#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "abvortex/cross_section.hpp"
#include "abvortex/error.hpp"
#include "abvortex/reconciliation.hpp"

namespace abvortex {
namespace {

using cd = std::complex<double>;

// Golden values from a 30-digit mpmath evaluation of the closed form, of the
// partial-wave amplitude, and of adaptive quadrature for sigma_perp, at
// alpha = 1/4, |E_-n| = 1, no bound state in l = -1, E = 2.
constexpr double kClosedAtHalfPi = 16.753188628340264919;
constexpr double kClosedAtMinusHalfPi = 14.539180068172999508;
constexpr double kAsymmetryAtHalfPi = 2.2140085601672654113;
constexpr double kOracleAtHalfPi = 0.11253953951963825869;
constexpr double kOracleAtMinusHalfPi = 0.62936868560516707803;
constexpr double kSigmaPerpClosed = 6.9555130276063967459;
constexpr double kSigmaPerpOracle = -1.6236666485033833843;

const Kinematics kGenericKin = Kinematics::natural(2.0);
const ExtensionSpec kGenericSpec{1.0, std::nullopt};

// Abel-regularized partial-wave series for the conventional amplitude:
// sum_l (e^{2i delta0_l} - 1) e^{il phi} r^{|l|}, with the constant-phase tails
// summed geometrically. Independent of the closed form in the library.
cd brute_force_standard_amplitude(double k, double phi, double alpha, double eps) {
  const double r = std::exp(-eps);
  const long n = static_cast<long>(std::floor(alpha));
  const long cutoff = std::abs(n) + 3;
  auto delta0 = [&](long l) { return 0.5 * M_PI * (std::abs(double(l)) - std::abs(l + alpha)); };
  cd sum = 0.0;
  for (long l = -cutoff; l <= cutoff; ++l)
    sum += (std::polar(1.0, 2.0 * delta0(l)) - 1.0) * std::polar(std::pow(r, std::abs(double(l))), l * phi);
  const cd z = std::polar(r, phi);
  const cd zbar = std::polar(r, -phi);
  sum += (std::polar(1.0, -M_PI * alpha) - 1.0) * std::pow(z, cutoff + 1) / (1.0 - z);
  sum += (std::polar(1.0, M_PI * alpha) - 1.0) * std::pow(zbar, cutoff + 1) / (1.0 - zbar);
  return sum / std::sqrt(cd(0.0, 2.0 * M_PI * k));
}

TEST(StandardCrossSection, IntegerFluxVanishes) {
  for (double alpha : {0.0, 1.0, -2.0})
    for (double phi : {0.3, -1.0, 3.0}) EXPECT_NEAR(standard_cross_section(1.0, phi, alpha), 0.0, 1e-28);
}

TEST(StandardCrossSection, EvenInPhi) {
  for (double alpha : {0.1, 0.5, 1.7})
    for (double phi : {0.01, 0.5, 2.9})
      EXPECT_EQ(standard_cross_section(2.0, phi, alpha), standard_cross_section(2.0, -phi, alpha));
}

TEST(StandardCrossSection, BackwardValue) {
  EXPECT_NEAR(standard_cross_section(1.0, kPi, 0.5), 1.0 / (2.0 * kPi), 1e-16);
  const auto a = amplitude_from_corrections(1.0, kPi, decompose_flux(0.5), {});
  EXPECT_NEAR(std::norm(a.f_standard), 1.0 / (2.0 * kPi), 1e-16);
}

TEST(StandardCrossSection, ForwardSingularity) {
  for (double phi : {0.0, 2.0 * kPi, -4.0 * kPi}) {
    try {
      standard_cross_section(1.0, phi, 0.25);
      FAIL() << phi;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ForwardSingularity);
    }
  }
  EXPECT_THROW(modified_cross_section(kGenericKin, 0.0, decompose_flux(0.25), kGenericSpec), Error);
  EXPECT_THROW(amplitude_oracle(kGenericKin, 0.0, decompose_flux(0.25), kGenericSpec), Error);
  EXPECT_THROW(asymmetry(kGenericKin, 0.0, decompose_flux(0.25), kGenericSpec), Error);
}

TEST(ModifiedCrossSection, ReducesToStandardWithoutBoundStates) {
  for (double alpha : {0.25, 1.6, -0.4}) {
    const auto flux = decompose_flux(alpha);
    for (double phi : make_phi_grid(kPi / 180, kPi, 64))
      EXPECT_EQ(modified_cross_section(kGenericKin, phi, flux, {}),
                standard_cross_section(std::sqrt(2.0), phi, alpha));
  }
}

TEST(ModifiedCrossSection, IntegerFluxWithoutBoundStatesVanishes) {
  for (double phi : {0.2, -1.5, 3.1})
    EXPECT_NEAR(modified_cross_section(kGenericKin, phi, decompose_flux(2.0), {}), 0.0, 1e-28);
}

TEST(ModifiedCrossSection, GoldenGenericPoint) {
  const auto flux = decompose_flux(0.25);
  EXPECT_NEAR(modified_cross_section(kGenericKin, kPi / 2, flux, kGenericSpec), kClosedAtHalfPi,
              1e-13);
  EXPECT_NEAR(modified_cross_section(kGenericKin, -kPi / 2, flux, kGenericSpec),
              kClosedAtMinusHalfPi, 1e-13);
}

TEST(ModifiedCrossSection, SecondGoldenPoint) {
  // alpha = 1.4, |E_-n| = 1, |E_-n-1| = 3, E = 2, phi = 0.7 (mpmath).
  const auto flux = decompose_flux(1.4);
  const ExtensionSpec spec{1.0, 3.0};
  const auto d = corrections(flux, 2.0, spec);
  EXPECT_NEAR(d.minus_n, 2.0117447405383620985, 1e-14);
  EXPECT_NEAR(d.minus_n1, 2.600991433788870743, 1e-14);
  EXPECT_NEAR(modified_cross_section(kGenericKin, 0.7, flux, spec), 19.522943359304285478, 1e-12);
  EXPECT_NEAR(amplitude_oracle(kGenericKin, 0.7, flux, spec).cross_section(),
              0.26453012087640318249, 1e-14);
}

TEST(AmplitudeOracle, GoldenGenericPoint) {
  const auto flux = decompose_flux(0.25);
  EXPECT_NEAR(amplitude_oracle(kGenericKin, kPi / 2, flux, kGenericSpec).cross_section(),
              kOracleAtHalfPi, 1e-15);
  EXPECT_NEAR(amplitude_oracle(kGenericKin, -kPi / 2, flux, kGenericSpec).cross_section(),
              kOracleAtMinusHalfPi, 1e-15);
}

TEST(AmplitudeOracle, DecompositionSums) {
  const auto a = amplitude_oracle(kGenericKin, 1.1, decompose_flux(0.25), kGenericSpec);
  EXPECT_EQ(a.f, a.f_standard + a.f_correction);
}

TEST(AmplitudeOracle, NoCorrectionWithoutBoundStates) {
  const auto a = amplitude_oracle(kGenericKin, 1.1, decompose_flux(0.25), {});
  EXPECT_EQ(a.f_correction, cd(0.0, 0.0));
}

TEST(AmplitudeOracle, CorrectionFactorModulus) {
  for (double d = -3.0; d <= 3.0; d += 0.37)
    EXPECT_NEAR(std::abs(std::polar(1.0, 2.0 * d) - 1.0), 2.0 * std::abs(std::sin(d)), 1e-15);
}

TEST(AmplitudeOracle, StandardPartMatchesPartialWaveSeries) {
  for (double alpha : {0.25, 1.3, -0.75, -2.4, 0.5}) {
    const auto flux = decompose_flux(alpha);
    for (double phi : {0.3, -2.0, 3.1}) {
      const cd closed = amplitude_from_corrections(1.0, phi, flux, {}).f_standard;
      const cd series = brute_force_standard_amplitude(1.0, phi, alpha, 1e-9);
      EXPECT_LT(std::abs(closed - series), 1e-7) << alpha << " " << phi;
    }
  }
}

TEST(AmplitudeOracle, StandardPartReproducesStandardCrossSection) {
  for (double alpha : {0.25, 1.4, -0.6}) {
    const auto flux = decompose_flux(alpha);
    for (double phi : make_phi_grid(kPi / 180, kPi, 720)) {
      const double expected = standard_cross_section(1.7, phi, alpha);
      const auto a = amplitude_from_corrections(1.7, phi, flux, {});
      ASSERT_LE(std::abs(std::norm(a.f_standard) - expected) / expected, 1e-12);
    }
  }
}

TEST(Reconciliation, ClosedFormEqualsRescaledAmplitudeMinusCrossTerm) {
  for (double alpha : {0.25, 1.4, -0.6, 0.9}) {
    const auto flux = decompose_flux(alpha);
    const auto d = corrections(flux, 2.0, {1.0, 3.0});
    for (double phi : {0.7, -2.1, 3.0, 0.05}) {
      const double closed = cross_section_from_corrections(std::sqrt(2.0), phi, alpha, d);
      EXPECT_NEAR(closed_form_via_amplitude(std::sqrt(2.0), phi, flux, d), closed, 1e-12 * closed);
    }
  }
}

TEST(Asymmetry, ZeroWithoutCorrections) {
  for (double phi : make_phi_grid(kPi / 180, kPi, 100))
    EXPECT_EQ(asymmetry(kGenericKin, phi, decompose_flux(0.25), {}), 0.0);
}

TEST(Asymmetry, GoldenGenericPoint) {
  const double a = asymmetry(kGenericKin, kPi / 2, decompose_flux(0.25), kGenericSpec);
  EXPECT_NEAR(a, kAsymmetryAtHalfPi, 1e-13);
  EXPECT_GT(a, 0.0);
}

TEST(Asymmetry, VanishesForOppositeCorrections) {
  const double k = std::sqrt(2.0);
  for (double d : {0.3, 1.2, 2.5}) {
    for (double phi : make_phi_grid(kPi / 180, kPi, 64)) {
      EXPECT_NEAR(asymmetry_from_corrections(k, phi, 0.25, {d, kPi - d}), 0.0, 1e-10);
      EXPECT_NEAR(asymmetry_from_corrections(k, phi, 0.25, {d, -d}), 0.0, 1e-10);
    }
  }
}

TEST(Periodicity, ShiftByOneFluxQuantum) {
  for (double alpha : {0.25, -1.3, 2.6}) {
    const ExtensionSpec spec{0.8, 2.2};
    for (double phi : make_phi_grid(kPi / 180, kPi, 64)) {
      const double a = modified_cross_section(kGenericKin, phi, decompose_flux(alpha), spec);
      const double b = modified_cross_section(kGenericKin, phi, decompose_flux(alpha + 1.0), spec);
      EXPECT_LE(std::abs(a - b) / a, 1e-12);
    }
  }
}

TEST(MirrorMapping, NegatedFluxWithSwappedEnergiesReflectsAngle) {
  const ExtensionSpec spec{0.8, 2.2};
  const ExtensionSpec swapped{2.2, 0.8};
  for (double alpha : {0.25, 1.4, -0.6}) {
    for (double phi : {0.4, 1.9, -2.7}) {
      const auto f = decompose_flux(alpha);
      const auto g = decompose_flux(-alpha);
      const double oracle = amplitude_oracle(kGenericKin, -phi, f, spec).cross_section();
      const double mirrored = amplitude_oracle(kGenericKin, phi, g, swapped).cross_section();
      EXPECT_NEAR(mirrored, oracle, 1e-12 * oracle);
      const double closed = modified_cross_section(kGenericKin, -phi, f, spec);
      EXPECT_NEAR(modified_cross_section(kGenericKin, phi, g, swapped), closed, 1e-12 * closed);
    }
  }
}

TEST(TransverseCrossSection, ZeroWithoutCorrections) {
  EXPECT_NEAR(transverse_cross_section(kGenericKin, decompose_flux(0.25), {}), 0.0, 1e-12);
  EXPECT_NEAR(transverse_cross_section(kGenericKin, decompose_flux(3.0), {1.0, 1.0}), 0.0, 1e-12);
}

TEST(TransverseCrossSection, GoldenGenericPoint) {
  const auto flux = decompose_flux(0.25);
  const double sigma = transverse_cross_section(kGenericKin, flux, kGenericSpec);
  EXPECT_NEAR(sigma, kSigmaPerpClosed, 1e-10 * kSigmaPerpClosed);

  // Analytic integration of the closed form.
  const auto d = corrections(flux, 2.0, kGenericSpec);
  const double pa = kPi * 0.25;
  const double analytic = 8.0 * kPi / std::sqrt(2.0) * std::sin(pa) *
                          (std::sin(d.minus_n) * std::cos(d.minus_n - pa) +
                           std::sin(d.minus_n1) * std::cos(d.minus_n1 + pa));
  EXPECT_NEAR(sigma, analytic, 1e-10 * std::abs(analytic));
}

TEST(TransverseCrossSection, OracleGolden) {
  const double k = std::sqrt(2.0);
  const auto flux = decompose_flux(0.25);
  const auto d = corrections(flux, 2.0, kGenericSpec);
  const double sigma = transverse_integral(
      [&](double phi) {
        return amplitude_from_corrections(k, phi, flux, d).cross_section() -
               amplitude_from_corrections(k, -phi, flux, d).cross_section();
      },
      1u << 14);
  EXPECT_NEAR(sigma, kSigmaPerpOracle, 1e-10);
}

TEST(TransverseCrossSection, ConvergesUnderHalving) {
  for (double alpha : {0.25, 0.7, 1.45}) {
    const auto flux = decompose_flux(alpha);
    const ExtensionSpec spec{0.6, 1.7};
    const double coarse = transverse_cross_section(kGenericKin, flux, spec, 1u << 13);
    const double fine = transverse_cross_section(kGenericKin, flux, spec, 1u << 14);
    EXPECT_LT(std::abs(fine - coarse) / std::abs(fine), 1e-8);
  }
}

TEST(TransverseCrossSection, RejectsTooFewSteps) {
  EXPECT_THROW(transverse_cross_section(kGenericKin, decompose_flux(0.25), kGenericSpec, 32),
               Error);
}

TEST(PhiGrid, ShapeAndOrdering) {
  const auto grid = make_phi_grid(kPi / 180, kPi, 720);
  ASSERT_EQ(grid.size(), 720u);
  EXPECT_DOUBLE_EQ(grid.front(), -kPi);
  EXPECT_DOUBLE_EQ(grid.back(), kPi);
  EXPECT_DOUBLE_EQ(grid[359], -kPi / 180);
  EXPECT_DOUBLE_EQ(grid[360], kPi / 180);
  for (std::size_t i = 1; i < grid.size(); ++i) ASSERT_LT(grid[i - 1], grid[i]);
  EXPECT_EQ(make_phi_grid(0.1, 0.1, 2), (std::vector<double>{-0.1, 0.1}));
}

TEST(PhiGrid, RejectsBadSpecs) {
  EXPECT_THROW(make_phi_grid(0.0, kPi, 10), Error);
  EXPECT_THROW(make_phi_grid(0.1, 4.0, 10), Error);
  EXPECT_THROW(make_phi_grid(0.1, kPi, 7), Error);
  EXPECT_THROW(make_phi_grid(0.1, kPi, 0), Error);
}

TEST(AngularProfile, ValuesMatchPointwiseEvaluation) {
  const auto flux = decompose_flux(0.25);
  const auto grid = make_phi_grid(0.05, kPi, 40);
  const auto p = angular_profile(kGenericKin, flux, kGenericSpec, grid);
  ASSERT_EQ(p.phi_grid.size(), p.dsigma_total.size());
  ASSERT_EQ(p.phi_grid.size(), p.dsigma_standard.size());
  EXPECT_EQ(p.negative_count, 0u);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(p.dsigma_total[i], modified_cross_section(kGenericKin, grid[i], flux, kGenericSpec));
    EXPECT_GE(p.dsigma_standard[i], 0.0);
  }
}

}  // namespace
}  // namespace abvortex
