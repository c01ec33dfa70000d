#include "time_coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harnack {

double power_mean_integral(double d, double t1, double t2) {
  if (d == 0.0) return std::log(t2 / t1);
  // (e^{d log t2} - e^{d log t1}) / d via expm1 keeps the d -> 0 limit smooth.
  return (std::expm1(d * std::log(t2)) - std::expm1(d * std::log(t1))) / d;
}

TimeCoefficient TimeCoefficient::tabulated(std::vector<double> t, std::vector<double> a) {
  if (t.size() < 2 || t.size() != a.size())
    throw std::invalid_argument("tabulated coefficient needs >= 2 (t, a) samples");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= 0.0) throw std::invalid_argument("tabulated sample times must be positive");
    if (i > 0 && t[i] <= t[i - 1])
      throw std::invalid_argument("tabulated sample times must be strictly increasing");
  }
  Tabulated tab{std::move(t), std::move(a), {}};
  tab.cumA.resize(tab.t.size(), 0.0);
  for (std::size_t i = 1; i < tab.t.size(); ++i)
    tab.cumA[i] = tab.cumA[i - 1] + 0.5 * (tab.a[i] + tab.a[i - 1]) * (tab.t[i] - tab.t[i - 1]);
  return TimeCoefficient(std::move(tab));
}

double TimeCoefficient::value(double t) const {
  if (t <= 0.0) throw std::domain_error("time coefficient evaluated at t <= 0");
  if (const auto* pl = std::get_if<PowerLaw>(&v_)) return pl->mu / t;
  if (const auto* c = std::get_if<Constant>(&v_)) return c->c;
  const auto& tab = std::get<Tabulated>(v_);
  if (t < tab.t.front() || t > tab.t.back())
    throw std::domain_error("tabulated coefficient evaluated outside its sample range");
  const auto it = std::upper_bound(tab.t.begin(), tab.t.end(), t);
  const std::size_t i = std::min(tab.t.size() - 1, static_cast<std::size_t>(it - tab.t.begin()));
  const std::size_t lo = i == 0 ? 0 : i - 1;
  if (lo + 1 >= tab.t.size()) return tab.a.back();
  const double w = (t - tab.t[lo]) / (tab.t[lo + 1] - tab.t[lo]);
  return tab.a[lo] + w * (tab.a[lo + 1] - tab.a[lo]);
}

double TimeCoefficient::antiderivative(double t) const {
  if (t <= 0.0) throw std::domain_error("antiderivative evaluated at t <= 0");
  if (const auto* pl = std::get_if<PowerLaw>(&v_)) return pl->mu * std::log(t);
  if (const auto* c = std::get_if<Constant>(&v_)) return c->c * t;
  const auto& tab = std::get<Tabulated>(v_);
  if (t < tab.t.front() || t > tab.t.back())
    throw std::domain_error("tabulated antiderivative evaluated outside its sample range");
  const auto it = std::upper_bound(tab.t.begin(), tab.t.end(), t);
  std::size_t i = static_cast<std::size_t>(it - tab.t.begin());
  if (i == 0) return 0.0;
  const std::size_t lo = i - 1;
  if (lo + 1 >= tab.t.size()) return tab.cumA.back();
  // piecewise-linear a gives a quadratic antiderivative on each cell
  const double at = value(t);
  return tab.cumA[lo] + 0.5 * (tab.a[lo] + at) * (t - tab.t[lo]);
}

double TimeCoefficient::exp_weighted_integral(double k, double t1, double t2) const {
  if (!(t1 > 0.0) || !(t2 > t1)) throw std::invalid_argument("need 0 < t1 < t2");
  if (k == 0.0) return t2 - t1;
  if (const auto* pl = std::get_if<PowerLaw>(&v_)) {
    // exp(k mu log t) = t^{k mu}
    return power_mean_integral(k * pl->mu + 1.0, t1, t2);
  }
  if (const auto* c = std::get_if<Constant>(&v_)) {
    const double b = k * c->c;
    if (b == 0.0) return t2 - t1;
    return (std::exp(b * t2) - std::exp(b * t1)) / b;
  }
  return adaptive_simpson([&](double t) { return std::exp(k * antiderivative(t)); }, t1, t2, 1e-10);
}

}  // namespace harnack
