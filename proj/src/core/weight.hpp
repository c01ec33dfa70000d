#pragma once

#include <functional>
#include <variant>

#include "time_coefficient.hpp"

namespace harnack {

/// Weight w(t) > 0 of the path energy (1/q) \int |x'|^q w dt. Carries closed
/// forms for cell integrals of w and for the dual antiderivative
/// W = \int w^{1/(1-q)} where available; callable weights fall back to
/// midpoint cells and adaptive quadrature.
class WeightFunction {
 public:
  struct PowerTime {
    double sigma;  // w(t) = t^sigma
  };
  struct ExpOfA {
    double m;
    TimeCoefficient A;  // w(t) = exp(-m A(t))
  };
  struct Callable {
    std::function<double(double)> w;
  };

  static WeightFunction one() { return WeightFunction(PowerTime{0.0}); }
  static WeightFunction power_time(double sigma) { return WeightFunction(PowerTime{sigma}); }
  static WeightFunction exp_of_A(double m, TimeCoefficient A) {
    return WeightFunction(ExpOfA{m, std::move(A)});
  }
  static WeightFunction callable(std::function<double(double)> w) {
    return WeightFunction(Callable{std::move(w)});
  }

  double value(double t) const;

  /// \int_a^b w dt (exact for the closed-form variants).
  double cell_integral(double a, double b) const;

  /// W(b) - W(a) for W an antiderivative of w^{1/(1-q)}.
  double dual_antiderivative_difference(double a, double b, double q) const;

  /// min and max of w over [a, b].
  std::pair<double, double> min_max_on(double a, double b) const;

  bool has_closed_cells() const { return !std::holds_alternative<Callable>(v_); }

 private:
  template <class V>
  explicit WeightFunction(V v) : v_(std::move(v)) {}

  std::variant<PowerTime, ExpOfA, Callable> v_;
};

}  // namespace harnack
