#pragma once

#include <optional>

#include "estimate_params.hpp"

namespace harnack {

enum class BoundCase { CaseI, CaseII, CaseIII, NonnegR0 };

/// One evaluated Harnack bound. `value` bounds [f(x2,t2)]^power — from below
/// for forward estimates, from above (or below on a negative power of f) for
/// backward ones. When `parenthesis_nonneg` is false only the power-form
/// inequality is meaningful and `root_value` is absent.
struct HarnackBound {
  double value = 0.0;
  BoundCase bound_case = BoundCase::CaseI;
  double power = 1.0;
  bool parenthesis_nonneg = true;
  std::optional<double> root_value;  // bound on f(x2,t2) itself when available
};

/// Lower bound of the forward general Harnack inequality (cases i-iii by the
/// sign of m, plus the nonnegative r=0 extension).
HarnackBound lower_bound(const EstimateParams& params, const SpacetimePoint& p1,
                         const SpacetimePoint& p2, double f1);

/// Upper bound from the reversed gradient estimate.
HarnackBound upper_bound(const EstimateParams& params, const SpacetimePoint& p1,
                         const SpacetimePoint& p2, double f1);

/// Heat-equation bound u1 (t1/t2)^{d/2} exp(-|x2-x1|^2 / (4(t2-t1))).
double heat_bound(int d, const SpacetimePoint& p1, const SpacetimePoint& p2, double u1);

struct PmeParams {
  double M;
  int d;

  PmeParams(double M_, int d_);

  static double M0(int d) { return std::max(0.0, 1.0 - 2.0 / d); }
  double k() const { return 1.0 / (M - 1.0 + 2.0 / d); }
  double mu() const { return (M - 1.0) * k(); }
  double delta() const { return 1.0 - mu(); }
};

/// Porous-medium bound: a lower bound on [u2]^{M-1} (M>1), the heat bound
/// (M=1), or a lower bound on [u2]^{1-M} (M0(d)<M<1).
HarnackBound pme_bound(const PmeParams& params, const SpacetimePoint& p1, const SpacetimePoint& p2,
                       double u1);

struct PdiffParams {
  double p;
  int d;
  double K;  // Aronson-Benilan-type constant of the p-diffusion estimate

  PdiffParams(double p_, int d_, double K_ = 0.0);  // K <= 0 selects default_K

  static double default_K(double p, int d) { return d / (d * (p - 2.0) + p); }
  double gamma() const { return (p - 2.0) / (p - 1.0); }
  double q() const { return p / (p - 1.0); }
  double xi() const { return (1.0 / q()) * std::pow(1.0 / p, q() - 1.0); }
  double delta() const { return (2.0 - p) * K + 1.0; }
  /// I over [t1,t2] for this parameter set (log branch at delta == 0).
  double weight_integral(double t1, double t2) const;
};

/// p-diffusion bound: a lower bound on [u2]^gamma (p>2), the heat bound
/// (p=2), or a lower bound on [u2]^{-gamma} (2d/(d+1)<p<2).
HarnackBound pdiff_bound(const PdiffParams& params, const SpacetimePoint& p1,
                         const SpacetimePoint& p2, double u1);

}  // namespace harnack
