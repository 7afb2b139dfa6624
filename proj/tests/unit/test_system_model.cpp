#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "symcool/errors.hpp"
#include "symcool/system_model.hpp"

using namespace symcool;
using symcool::testing::rel_diff;
using symcool::testing::reference_config;

namespace {

ErrorCode derive_error(const SystemConfig& cfg) {
  try {
    derive(cfg);
  } catch (const ModelError& e) {
    return e.code();
  }
  ADD_FAILURE() << "derive did not throw";
  return ErrorCode::infeasible;
}

}  // namespace

TEST(Derive, AnchoredTrapFrequencies) {
  const auto d = derive(reference_config());
  EXPECT_EQ(d.omega_at, AngularRate::from_hz(45e3));
  EXPECT_EQ(d.omega_m, d.omega_at);
  // omega_r from the back-computed depth: about 2pi x 263 Hz.
  EXPECT_NEAR(d.omega_r.hz(), 263.0, 263.0 * 0.01);
}

TEST(Derive, CavityLinewidth) {
  const auto d = derive(reference_config());
  EXPECT_NEAR(d.kappa.hz(), 7.5e6, 7.5e6 * 0.01);
  // oracle: pi c / (L F)
  EXPECT_NEAR(d.kappa.value(), 4.7091289183e7, 4.7091289183e7 * 1e-9);
}

TEST(Derive, SphereZeroPointLength) {
  const auto d = derive(reference_config(150e-9));
  EXPECT_NEAR(d.sphere_oscillator_length, 2.4486931022e-12, 2.4486931022e-12 * 1e-8);
  EXPECT_LT(rel_diff(d.sphere_oscillator_length, 2.4e-12), 0.03);
}

TEST(Derive, ZeroLatticePowerGivesZeroFluxAmplitude) {
  auto cfg = reference_config();
  cfg.lattice.power = 0.0;
  EXPECT_EQ(derive(cfg).photon_flux_amplitude, 0.0);
}

TEST(Derive, ThermalOccupationAndMass) {
  const auto d = derive(reference_config());
  EXPECT_NEAR(d.thermal_occupation, 1.3891079424e8, 1.3891079424e8 * 1e-9);
  EXPECT_DOUBLE_EQ(d.mass, 2200.0 * 4.0 / 3.0 * M_PI * std::pow(150e-9, 3));
  EXPECT_DOUBLE_EQ(d.mode_volume, M_PI / 4.0 * 25e-12 * 0.05);
}

TEST(Derive, TrapIntensityAndDetuning) {
  const auto d = derive(reference_config());
  EXPECT_NEAR(d.trap_intensity, 7.3211273822e10, 7.3211273822e10 * 1e-9);
  EXPECT_GT(d.detuning_from_d2.value(), 0.0);
  EXPECT_NEAR(d.detuning_from_d2.hz(), 2.4591093812e11, 2.4591093812e11 * 1e-9);
}

TEST(Derive, FirstPrinciplesLatticeDepth) {
  auto cfg = reference_config();
  cfg.mode = DerivationMode::first_principles;
  const auto d = derive(cfg);
  // oracle: V0 = hbar gamma^2 I0 / (12 delta I_s), I0 = 4 * 2P/(pi w0^2)
  EXPECT_NEAR(d.omega_at.hz(), 44020.107855, 44020.107855 * 1e-8);
  EXPECT_NEAR(d.omega_r.hz(), 257.852536, 257.852536 * 1e-8);
  EXPECT_NEAR(d.lattice_depth / d.recoil_energy, 34.154157, 1e-5);
}

TEST(Derive, FirstPrinciplesDepthOverride) {
  auto cfg = reference_config();
  cfg.mode = DerivationMode::first_principles;
  cfg.lattice.depth_recoils = 18.0;
  const auto d = derive(cfg);
  EXPECT_DOUBLE_EQ(d.lattice_depth, 18.0 * d.recoil_energy);
  const double k = d.lattice_wavenumber;
  EXPECT_DOUBLE_EQ(d.omega_at.value(), std::sqrt(2.0 * d.lattice_depth * k * k / cfg.atoms.mass));
}

TEST(Derive, DetuningShiftsSphereFrequency) {
  auto cfg = reference_config();
  cfg.detuning = AngularRate::from_hz(500.0);
  const auto d = derive(cfg);
  EXPECT_DOUBLE_EQ(d.omega_m.value(), (AngularRate::from_hz(45e3) + AngularRate::from_hz(500.0)).value());
}

TEST(Derive, ErrorPaths) {
  auto resonant = reference_config();
  resonant.lattice.wavelength = resonant.lattice.reference_wavelength;
  EXPECT_EQ(derive_error(resonant), ErrorCode::singular_configuration);

  auto no_waist = reference_config();
  no_waist.cavity.mode_waist = 0.0;
  EXPECT_EQ(derive_error(no_waist), ErrorCode::invalid_geometry);

  auto no_length = reference_config();
  no_length.cavity.length = 0.0;
  EXPECT_EQ(derive_error(no_length), ErrorCode::invalid_geometry);

  auto blue = reference_config();
  blue.lattice.wavelength = 779.0e-9;
  EXPECT_EQ(derive_error(blue), ErrorCode::invalid_parameter);

  auto unanchored = reference_config();
  unanchored.atoms.axial_frequency.reset();
  EXPECT_EQ(derive_error(unanchored), ErrorCode::invalid_parameter);

  auto dark = reference_config();
  dark.mode = DerivationMode::first_principles;
  dark.lattice.power = 0.0;
  EXPECT_EQ(derive_error(dark), ErrorCode::singular_configuration);

  auto matched = reference_config();
  matched.sphere.epsilon = 1.0;
  EXPECT_EQ(derive_error(matched), ErrorCode::invalid_parameter);
}

TEST(Derive, ValidateListsEveryViolation) {
  auto cfg = reference_config();
  cfg.sphere.radius = -1.0;
  cfg.cavity.finesse = 0.0;
  cfg.cavity.transmittivity = 1.5;
  EXPECT_EQ(validate(cfg).size(), 3u);
  EXPECT_TRUE(validate(reference_config()).empty());
}

TEST(RecoilEnergy, Rb87At78074) {
  const auto cfg = reference_config();
  const double er = recoil_energy(cfg.atoms, cfg.lattice);
  EXPECT_NEAR(er, 2.4954872292816457e-30, 2.4954872292816457e-30 * 1e-9);
  EXPECT_NEAR(er / constants::hbar / kTwoPi, 3.77e3, 10.0);
}

TEST(RecoilEnergy, Scaling) {
  const auto cfg = reference_config();
  const double er = recoil_energy(cfg.atoms, cfg.lattice);
  auto heavy = cfg.atoms;
  heavy.mass *= 2.0;
  EXPECT_NEAR(recoil_energy(heavy, cfg.lattice), er / 2.0, er * 1e-14);
  auto short_wave = cfg.lattice;
  short_wave.wavelength /= 2.0;
  EXPECT_NEAR(recoil_energy(cfg.atoms, short_wave), 4.0 * er, er * 1e-13);
}

TEST(GasMeanSpeed, AirAndHelium) {
  Environment air;
  EXPECT_NEAR(gas_mean_speed(air), 468.24541068969876, 1e-9);
  Environment hot = air;
  hot.temperature *= 4.0;
  EXPECT_NEAR(gas_mean_speed(hot), 2.0 * gas_mean_speed(air), 1e-12);
  Environment helium = air;
  helium.gas_mass = 4.0 * constants::amu;
  EXPECT_NEAR(gas_mean_speed(helium), 1260.137052207816, 1e-9);
}

TEST(DeriveProperties, OscillatorLengthRatioIdentity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> radius(10e-9, 500e-9), freq(5e3, 200e3), det(-2e3, 2e3);
  for (int i = 0; i < 1000; ++i) {
    auto cfg = reference_config(radius(rng));
    cfg.atoms.axial_frequency = AngularRate::from_hz(freq(rng));
    cfg.detuning = AngularRate::from_hz(det(rng));
    const auto d = derive(cfg);
    const double expected = std::sqrt(cfg.atoms.mass * d.omega_at.value() / (d.mass * d.omega_m.value()));
    EXPECT_LT(rel_diff(d.sphere_oscillator_length / d.atom_oscillator_length, expected), 1e-12);
  }
}

TEST(DeriveProperties, ModesAgreeOnGeometry) {
  auto fp = reference_config();
  fp.mode = DerivationMode::first_principles;
  const auto dfp = derive(fp);
  auto anchored = reference_config();
  anchored.atoms.axial_frequency = dfp.omega_at;
  const auto da = derive(anchored);
  EXPECT_EQ(da.kappa, dfp.kappa);
  EXPECT_EQ(da.mode_volume, dfp.mode_volume);
  EXPECT_EQ(da.sphere_oscillator_length, dfp.sphere_oscillator_length);
  EXPECT_EQ(da.recoil_trap, dfp.recoil_trap);
  EXPECT_EQ(da.recoil_lattice, dfp.recoil_lattice);
  EXPECT_LT(rel_diff(da.lattice_depth, dfp.lattice_depth), 1e-12);
}

TEST(DeriveProperties, Deterministic) {
  const auto a = derive(reference_config());
  const auto b = derive(reference_config());
  EXPECT_EQ(a.kappa, b.kappa);
  EXPECT_EQ(a.photon_flux_amplitude, b.photon_flux_amplitude);
  EXPECT_EQ(a.lattice_depth, b.lattice_depth);
  EXPECT_EQ(a.sphere_oscillator_length, b.sphere_oscillator_length);
  EXPECT_EQ(a.intracavity_intensity, b.intracavity_intensity);
  EXPECT_EQ(a.q_effective, b.q_effective);
}
