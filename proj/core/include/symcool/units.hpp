#pragma once

#include <compare>

#include "symcool/constants.hpp"

namespace symcool {

// Angular frequency in rad/s. Every rate in the model is stored this way;
// Hz only shows up at I/O boundaries through hz()/from_hz().
class AngularRate {
 public:
  constexpr AngularRate() = default;
  constexpr explicit AngularRate(double rad_per_s) : value_(rad_per_s) {}

  static constexpr AngularRate from_hz(double hz) { return AngularRate(kTwoPi * hz); }

  constexpr double value() const { return value_; }
  constexpr double hz() const { return value_ / kTwoPi; }

  constexpr auto operator<=>(const AngularRate&) const = default;

  constexpr AngularRate& operator+=(AngularRate o) {
    value_ += o.value_;
    return *this;
  }
  constexpr AngularRate& operator-=(AngularRate o) {
    value_ -= o.value_;
    return *this;
  }

  friend constexpr AngularRate operator+(AngularRate a, AngularRate b) { return AngularRate(a.value_ + b.value_); }
  friend constexpr AngularRate operator-(AngularRate a, AngularRate b) { return AngularRate(a.value_ - b.value_); }
  friend constexpr AngularRate operator*(AngularRate a, double s) { return AngularRate(a.value_ * s); }
  friend constexpr AngularRate operator*(double s, AngularRate a) { return AngularRate(a.value_ * s); }
  friend constexpr AngularRate operator/(AngularRate a, double s) { return AngularRate(a.value_ / s); }
  friend constexpr double operator/(AngularRate a, AngularRate b) { return a.value_ / b.value_; }

 private:
  double value_ = 0.0;
};

// Display form of an angular rate: value / 2pi, labelled "2pi x ... Hz".
double to_display_hz(AngularRate r);

// Pressure conversion; throws std::invalid_argument for negative input.
double torr_to_pascal(double torr);

}  // namespace symcool
