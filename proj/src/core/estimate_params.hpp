#pragma once

#include <cmath>
#include <stdexcept>

#include "time_coefficient.hpp"
#include "util.hpp"

namespace harnack {

struct SpacetimePoint {
  Vec x;
  double t = 0.0;

  SpacetimePoint() = default;
  SpacetimePoint(Vec x_, double t_) : x(std::move(x_)), t(t_) {
    if (!(t > 0.0)) throw std::invalid_argument("spacetime point needs t > 0");
    if (x.empty()) throw std::invalid_argument("spacetime point needs dimension >= 1");
  }
};

enum class Direction { Forward, Backward };

struct DerivedQuantities {
  double q;   // p / (p - 1)
  double m;   // r / (p - 1) - 1
  double xi;  // (1/q) (1/(pC))^{q-1}
};

/// Parameters of a gradient estimate df/dt + a f >= C |grad f|^p / f^r
/// (Forward) or <= -C |grad f|^p / f^r (Backward). C <= 0 is rejected at
/// construction: such an estimate yields no Harnack bound (a positive
/// p-diffusion solution in the subcritical range satisfies one with C < 0
/// yet admits no Harnack inequality of this form).
class EstimateParams {
 public:
  EstimateParams(double C, double p, double r, TimeCoefficient a,
                 Direction direction = Direction::Forward)
      : C_(C), p_(p), r_(r), a_(std::move(a)), direction_(direction) {
    if (!(C > 0.0))
      throw std::invalid_argument(
          "gradient-estimate constant C must be positive: C <= 0 yields no Harnack bound");
    if (!(p > 1.0)) throw std::invalid_argument("gradient-estimate exponent p must exceed 1");
    if (!std::isfinite(C) || !std::isfinite(p) || !std::isfinite(r))
      throw std::invalid_argument("gradient-estimate parameters must be finite");
  }

  double C() const { return C_; }
  double p() const { return p_; }
  double r() const { return r_; }
  const TimeCoefficient& a() const { return a_; }
  Direction direction() const { return direction_; }

  // recomputed on demand, never stored
  DerivedQuantities derived() const {
    DerivedQuantities d;
    d.q = p_ / (p_ - 1.0);
    d.m = r_ / (p_ - 1.0) - 1.0;
    d.xi = (1.0 / d.q) * std::pow(1.0 / (p_ * C_), d.q - 1.0);
    return d;
  }

  /// I = \int_{t1}^{t2} e^{m (p-1) A(t)} dt.
  double weight_integral(double t1, double t2) const {
    if (!(t1 > 0.0) || !(t2 > t1)) throw std::invalid_argument("weight integral needs 0 < t1 < t2");
    const DerivedQuantities d = derived();
    return a_.exp_weighted_integral(d.m * (p_ - 1.0), t1, t2);
  }

 private:
  double C_, p_, r_;
  TimeCoefficient a_;
  Direction direction_;
};

}  // namespace harnack
