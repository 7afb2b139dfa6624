#pragma once

#include <array>
#include <optional>
#include <vector>

#include "symcool/errors.hpp"
#include "symcool/rates.hpp"

namespace symcool {

enum class CoolingPhase { cooling_on, cooling_off };

const char* to_string(CoolingPhase phase);

struct TraceSample {
  double time = 0.0;        // s
  double occupation = 0.0;  // phonons
  CoolingPhase phase = CoolingPhase::cooling_on;
};

struct SimulationTrace {
  std::vector<TraceSample> samples;
};

// dn/dt = source - rate * n
struct RelaxationLaw {
  double rate = 0.0;    // 1/s
  double source = 0.0;  // phonons/s
  double fixed_point() const { return source / rate; }
};

// Cooling on: relaxation at gamma_g + Gamma_cool towards the full n_ss.
RelaxationLaw cooling_on_law(const RateBundle& b);
// Cooling off: atoms decoupled, only gamma_g damps against the sphere heating.
RelaxationLaw cooling_off_law(const RateBundle& b);

// Largest accepted step, 0.1 / (gamma_g + Gamma_cool).
double max_time_step(const RateBundle& b);

class StepSizeError : public ModelError {
 public:
  StepSizeError(double dt, double bound);
  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

// Fixed-step RK4 integration of the occupation. Each phase segment is split
// into equal steps no longer than dt so both the switch-off time and t_end are
// hit exactly.
SimulationTrace evolve_occupation(const RateBundle& b, double initial_occupation, double t_end, double dt,
                                  std::optional<double> cooling_off_at = std::nullopt);

struct NormalMode {
  AngularRate frequency;  // -Im(lambda)
  AngularRate damping;    // energy linewidth, -2 Re(lambda)
};

struct NormalModes {
  std::array<NormalMode, 2> modes;  // ascending frequency
  AngularRate splitting;
  bool resolved = false;  // 2g > (gamma_m + gamma_at) / 2
};

// Eigenvalues of [[-i w_m - gamma_m/2, -i g], [-i g, -i w_at - gamma_at/2]].
NormalModes normal_modes(AngularRate omega_m, AngularRate omega_at, AngularRate g, AngularRate gamma_m_total,
                         AngularRate gamma_at_total);

// Cooling-off normal modes: sphere linewidth gamma_m_diff + gamma_sc + Gamma_th,
// atom linewidth gamma_at_diff.
NormalModes normal_modes(const RateBundle& b);

}  // namespace symcool
