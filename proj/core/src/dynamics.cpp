#include "symcool/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "symcool/steady_state.hpp"

namespace symcool {

namespace {

std::string step_message(double dt, double bound) {
  std::ostringstream os;
  os << "time step " << dt << " s exceeds the stability bound " << bound << " s";
  return os.str();
}

double rk4_step(const RelaxationLaw& law, double n, double h) {
  auto f = [&](double x) { return law.source - law.rate * x; };
  const double k1 = f(n);
  const double k2 = f(n + 0.5 * h * k1);
  const double k3 = f(n + 0.5 * h * k2);
  const double k4 = f(n + h * k3);
  return n + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void integrate_segment(const RelaxationLaw& law, CoolingPhase phase, double t_start, double t_stop, double dt,
                       SimulationTrace& trace) {
  const double span = t_stop - t_start;
  if (!(span > 0.0)) return;
  const auto steps = static_cast<std::size_t>(std::ceil(span / dt * (1.0 - 1e-12)));
  const double h = span / static_cast<double>(std::max<std::size_t>(steps, 1));
  double n = trace.samples.back().occupation;
  for (std::size_t i = 1; i <= steps; ++i) {
    n = rk4_step(law, n, h);
    const double t = i == steps ? t_stop : t_start + static_cast<double>(i) * h;
    trace.samples.push_back({t, n, phase});
  }
}

}  // namespace

const char* to_string(CoolingPhase phase) {
  return phase == CoolingPhase::cooling_on ? "cooling-on" : "cooling-off";
}

StepSizeError::StepSizeError(double dt, double bound)
    : ModelError(ErrorCode::invalid_parameter, step_message(dt, bound)), bound_(bound) {}

RelaxationLaw cooling_on_law(const RateBundle& b) {
  const double rate = (b.gamma_g + b.gamma_cool).value();
  return {rate, rate * steady_state(b).n_ss};
}

RelaxationLaw cooling_off_law(const RateBundle& b) {
  return {b.gamma_g.value(), sphere_heating_rate(b).value()};
}

double max_time_step(const RateBundle& b) {
  const double rate = (b.gamma_g + b.gamma_cool).value();
  if (!(rate > 0.0)) {
    throw ModelError(ErrorCode::singular_configuration, "no damping: gamma_g + Gamma_cool is zero");
  }
  return 0.1 / rate;
}

SimulationTrace evolve_occupation(const RateBundle& b, double initial_occupation, double t_end, double dt,
                                  std::optional<double> cooling_off_at) {
  if (!(initial_occupation >= 0.0)) {
    throw ModelError(ErrorCode::invalid_parameter, "initial occupation must be non-negative");
  }
  if (!(t_end >= 0.0)) throw ModelError(ErrorCode::invalid_parameter, "t_end must be non-negative");
  if (!(dt > 0.0)) throw ModelError(ErrorCode::invalid_parameter, "time step must be positive");
  const double bound = max_time_step(b);
  if (dt > bound) throw StepSizeError(dt, bound);

  const RelaxationLaw on = cooling_on_law(b);
  const RelaxationLaw off = cooling_off_law(b);
  const double switch_time = std::clamp(cooling_off_at.value_or(t_end), 0.0, t_end);

  SimulationTrace trace;
  const CoolingPhase first = switch_time > 0.0 || t_end == 0.0 ? CoolingPhase::cooling_on : CoolingPhase::cooling_off;
  trace.samples.push_back({0.0, initial_occupation, first});
  integrate_segment(on, CoolingPhase::cooling_on, 0.0, switch_time, dt, trace);
  integrate_segment(off, CoolingPhase::cooling_off, switch_time, t_end, dt, trace);
  return trace;
}

NormalModes normal_modes(AngularRate omega_m, AngularRate omega_at, AngularRate g, AngularRate gamma_m_total,
                         AngularRate gamma_at_total) {
  if (!(omega_m.value() > 0.0) || !(omega_at.value() > 0.0)) {
    throw ModelError(ErrorCode::invalid_parameter, "normal modes need positive mode frequencies");
  }
  using cd = std::complex<double>;
  const cd i(0.0, 1.0);
  const cd a = -i * omega_m.value() - 0.5 * gamma_m_total.value();
  const cd d = -i * omega_at.value() - 0.5 * gamma_at_total.value();
  const cd off = -i * g.value();
  const cd half_diff = 0.5 * (a - d);
  const cd root = std::sqrt(half_diff * half_diff + off * off);
  const cd mean = 0.5 * (a + d);

  std::array<cd, 2> lambda{mean + root, mean - root};
  NormalModes out;
  for (std::size_t k = 0; k < 2; ++k) {
    out.modes[k] = {AngularRate(-lambda[k].imag()), AngularRate(-2.0 * lambda[k].real())};
  }
  if (out.modes[1].frequency < out.modes[0].frequency) std::swap(out.modes[0], out.modes[1]);
  out.splitting = AngularRate(2.0 * std::abs(root.imag()));
  out.resolved = 2.0 * g.value() > 0.5 * (gamma_m_total + gamma_at_total).value();
  return out;
}

NormalModes normal_modes(const RateBundle& b) {
  return normal_modes(b.omega_m, b.omega_at, b.g, b.gamma_m_diff + b.gamma_sc + b.gamma_th, b.gamma_at_diff);
}

}  // namespace symcool
