#include "weight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harnack {

double WeightFunction::value(double t) const {
  double w;
  if (const auto* pt = std::get_if<PowerTime>(&v_)) {
    if (t <= 0.0 && pt->sigma != 0.0) throw std::domain_error("power weight needs t > 0");
    w = pt->sigma == 0.0 ? 1.0 : std::pow(t, pt->sigma);
  } else if (const auto* ea = std::get_if<ExpOfA>(&v_)) {
    w = std::exp(-ea->m * ea->A.antiderivative(t));
  } else {
    w = std::get<Callable>(v_).w(t);
  }
  if (!(w > 0.0)) throw std::domain_error("weight function must be positive on [t1, t2]");
  return w;
}

double WeightFunction::cell_integral(double a, double b) const {
  if (const auto* pt = std::get_if<PowerTime>(&v_))
    return pt->sigma == 0.0 ? b - a : power_mean_integral(pt->sigma + 1.0, a, b);
  if (const auto* ea = std::get_if<ExpOfA>(&v_)) return ea->A.exp_weighted_integral(-ea->m, a, b);
  return (b - a) * value(0.5 * (a + b));  // midpoint cell for callable weights
}

double WeightFunction::dual_antiderivative_difference(double a, double b, double q) const {
  if (!(q > 1.0)) throw std::invalid_argument("dual antiderivative needs q > 1");
  if (const auto* pt = std::get_if<PowerTime>(&v_)) {
    const double e = pt->sigma / (1.0 - q);
    return e == 0.0 ? b - a : power_mean_integral(e + 1.0, a, b);
  }
  if (const auto* ea = std::get_if<ExpOfA>(&v_))
    return ea->A.exp_weighted_integral(ea->m / (q - 1.0), a, b);
  const double inv = 1.0 / (1.0 - q);
  return adaptive_simpson([&](double t) { return std::pow(value(t), inv); }, a, b, 1e-12);
}

std::pair<double, double> WeightFunction::min_max_on(double a, double b) const {
  // power and exponential-of-power-law weights are monotone on (0, inf)
  if (std::holds_alternative<PowerTime>(v_)) {
    const double wa = value(a), wb = value(b);
    return {std::min(wa, wb), std::max(wa, wb)};
  }
  if (const auto* ea = std::get_if<ExpOfA>(&v_)) {
    if (ea->A.is_power_law() || ea->A.is_constant()) {
      const double wa = value(a), wb = value(b);
      return {std::min(wa, wb), std::max(wa, wb)};
    }
  }
  double lo = value(a), hi = lo;
  const int n = 1024;
  for (int i = 1; i <= n; ++i) {
    const double w = value(a + (b - a) * i / n);
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  return {lo, hi};
}

}  // namespace harnack
