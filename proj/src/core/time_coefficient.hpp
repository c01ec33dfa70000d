#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "util.hpp"

namespace harnack {

/// Time coefficient a(t) of a gradient estimate together with an
/// antiderivative A(t). The power-law and constant variants carry closed
/// forms; tabulated samples use a cumulative trapezoid antiderivative and
/// adaptive quadrature (1e-10 relative) for exponential integrals.
class TimeCoefficient {
 public:
  struct PowerLaw {
    double mu;  // a(t) = mu / t, A(t) = mu * log(t)
  };
  struct Constant {
    double c;  // a(t) = c, A(t) = c * t
  };
  struct Tabulated {
    std::vector<double> t;  // strictly increasing, all > 0
    std::vector<double> a;
    std::vector<double> cumA;  // trapezoid antiderivative at the sample times
  };

  static TimeCoefficient power_law(double mu) { return TimeCoefficient(PowerLaw{mu}); }
  static TimeCoefficient constant(double c) { return TimeCoefficient(Constant{c}); }
  static TimeCoefficient tabulated(std::vector<double> t, std::vector<double> a);

  /// a(t); tabulated values are interpolated linearly inside the sample range.
  double value(double t) const;

  /// A(t), the antiderivative (A == 0 at t=1 for the closed forms, at the
  /// first sample time for tabulated data; only differences of A matter).
  double antiderivative(double t) const;

  /// I = \int_{t1}^{t2} exp(k * A(t)) dt for a given constant k,
  /// closed form where the variant allows and quadrature otherwise.
  double exp_weighted_integral(double k, double t1, double t2) const;

  bool is_power_law() const { return std::holds_alternative<PowerLaw>(v_); }
  bool is_constant() const { return std::holds_alternative<Constant>(v_); }
  const PowerLaw* as_power_law() const { return std::get_if<PowerLaw>(&v_); }
  const Constant* as_constant() const { return std::get_if<Constant>(&v_); }

 private:
  template <class V>
  explicit TimeCoefficient(V v) : v_(std::move(v)) {}

  std::variant<PowerLaw, Constant, Tabulated> v_;
};

/// (t2^d - t1^d)/d evaluated stably, including the d -> 0 limit log(t2/t1).
double power_mean_integral(double d, double t1, double t2);

}  // namespace harnack
