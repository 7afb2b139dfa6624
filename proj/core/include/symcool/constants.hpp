#pragma once

#include <numbers>

namespace symcool {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Physical constants in SI. hbar, k_B and c are CODATA-2018 exact/recommended
// values; rate-valued constants are angular (rad/s).
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;        // J s
  static constexpr double k_B = 1.380649e-23;            // J/K
  static constexpr double c = 299792458.0;               // m/s
  static constexpr double amu = 1.66053906660e-27;       // kg

  static constexpr double rb87_mass = 86.909 * amu;      // kg
  static constexpr double rb87_gamma_se = kTwoPi * 6.065e6;  // rad/s
  static constexpr double rb87_I_sat = 17.0;             // W/m^2 (1.7 mW/cm^2)
  static constexpr double rb87_d2_wavelength = 780.24e-9;  // m

  static constexpr double silica_density = 2200.0;       // kg/m^3
  static constexpr double silica_epsilon = 2.0;
  static constexpr double air_mean_molecular_mass = 28.97 * amu;  // kg
};

using constants = PhysicalConstants;

inline constexpr double kPascalPerTorr = 133.322;

}  // namespace symcool
