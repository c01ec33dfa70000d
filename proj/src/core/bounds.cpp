#include "bounds.hpp"

#include <cmath>
#include <limits>

namespace harnack {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct PairGeometry {
  double t1, t2, dist;
};

PairGeometry check_pair(const SpacetimePoint& p1, const SpacetimePoint& p2) {
  if (p1.x.size() != p2.x.size())
    throw std::invalid_argument("the two points must share a spatial dimension");
  if (!(p2.t > p1.t)) throw std::invalid_argument("points must satisfy t1 < t2");
  return {p1.t, p2.t, std::sqrt(dist2(p1.x, p2.x))};
}

/// e^{a} - e^{b} evaluated as e^{max}(e^{a-max} - e^{b-max}); returns the
/// scale separately so callers can keep working in log space.
struct ScaledDifference {
  double scale_log;  // max(a, b), or -inf when both terms vanish
  double mantissa;   // e^{a-scale} - e^{b-scale}
  double value() const {
    return mantissa == 0.0 ? 0.0 : mantissa * std::exp(scale_log);
  }
};

ScaledDifference exp_difference(double log_a, double log_b) {
  const bool ha = std::isfinite(log_a), hb = std::isfinite(log_b);
  if (!ha && !hb) return {0.0, 0.0};
  const double s = ha && hb ? std::max(log_a, log_b) : (ha ? log_a : log_b);
  const double ea = ha ? std::exp(log_a - s) : 0.0;
  const double eb = hb ? std::exp(log_b - s) : 0.0;
  return {s, ea - eb};
}

}  // namespace

HarnackBound lower_bound(const EstimateParams& params, const SpacetimePoint& p1,
                         const SpacetimePoint& p2, double f1) {
  if (params.direction() != Direction::Forward)
    throw std::invalid_argument("lower_bound needs a forward estimate");
  const auto [t1, t2, dist] = check_pair(p1, p2);
  if (f1 < 0.0) throw std::domain_error("f(x1,t1) must be nonnegative");
  if (f1 == 0.0 && params.r() != 0.0)
    throw std::domain_error("f(x1,t1) = 0 only admissible in the nonnegative r = 0 form");

  const DerivedQuantities der = params.derived();
  const double A1 = params.a().antiderivative(t1);
  const double A2 = params.a().antiderivative(t2);
  const double dA = A1 - A2;
  const double log_dist_q = dist > 0.0 ? der.q * std::log(dist) : -std::numeric_limits<double>::infinity();

  HarnackBound b;
  if (der.m == 0.0) {
    // case (i): pure product of exponentials, assembled in log space
    const double log_bound = dA + std::log(f1) - der.xi * std::exp(log_dist_q) /
                                                     std::pow(t2 - t1, der.q - 1.0);
    b.value = std::exp(log_bound);
    b.bound_case = BoundCase::CaseI;
    b.power = 1.0;
    b.root_value = b.value;
    return b;
  }

  const double I = params.weight_integral(t1, t2);
  const double log_I_term = (1.0 - der.q) * std::log(I);

  if (der.m > 0.0) {
    // case (ii): 1 + m xi |dx|^q I^{1-q} f1^m e^{m A1}, always positive
    const double S = dist > 0.0 ? std::exp(std::log(der.m * der.xi) + log_dist_q + log_I_term +
                                           der.m * (std::log(f1) + A1))
                                : 0.0;
    b.value = std::exp(dA + std::log(f1) - std::log1p(S) / der.m);
    b.bound_case = BoundCase::CaseII;
    b.power = 1.0;
    b.root_value = b.value;
    return b;
  }

  // case (iii) / nonnegative r=0 form: bound on [f2]^{|m|}
  const double am = -der.m;
  const double log_f_term = f1 > 0.0 ? am * std::log(f1) : -std::numeric_limits<double>::infinity();
  const double log_dist_term =
      dist > 0.0 ? std::log(am * der.xi) + log_dist_q + log_I_term - am * A1
                 : -std::numeric_limits<double>::infinity();
  const ScaledDifference bracket = exp_difference(log_f_term, log_dist_term);
  b.value = bracket.mantissa * std::exp(am * dA + bracket.scale_log);
  if (bracket.mantissa == 0.0) b.value = 0.0;
  b.bound_case = params.r() == 0.0 ? BoundCase::NonnegR0 : BoundCase::CaseIII;
  b.power = am;
  b.parenthesis_nonneg = bracket.mantissa >= 0.0;
  if (b.parenthesis_nonneg && f1 > 0.0) {
    const double ratio = 1.0 - std::exp(log_dist_term - log_f_term);  // in [0,1]
    b.root_value = ratio > 0.0 ? std::exp(dA + std::log(f1) + std::log(ratio) / am) : 0.0;
  }
  return b;
}

HarnackBound upper_bound(const EstimateParams& params, const SpacetimePoint& p1,
                         const SpacetimePoint& p2, double f1) {
  if (params.direction() != Direction::Backward)
    throw std::invalid_argument("upper_bound needs a backward estimate");
  const auto [t1, t2, dist] = check_pair(p1, p2);
  if (f1 < 0.0) throw std::domain_error("f(x1,t1) must be nonnegative");
  if (f1 == 0.0 && params.r() != 0.0)
    throw std::domain_error("f(x1,t1) = 0 only admissible in the nonnegative r = 0 form");

  const DerivedQuantities der = params.derived();
  const double A1 = params.a().antiderivative(t1);
  const double A2 = params.a().antiderivative(t2);
  const double dA = A1 - A2;
  const double log_dist_q = dist > 0.0 ? der.q * std::log(dist) : -std::numeric_limits<double>::infinity();

  HarnackBound b;
  if (der.m == 0.0) {
    const double log_bound = dA + std::log(f1) + der.xi * std::exp(log_dist_q) /
                                                     std::pow(t2 - t1, der.q - 1.0);
    b.value = std::exp(log_bound);
    b.bound_case = BoundCase::CaseI;
    b.power = 1.0;
    b.root_value = b.value;
    return b;
  }

  const double I = params.weight_integral(t1, t2);
  const double log_I_term = (1.0 - der.q) * std::log(I);

  if (der.m > 0.0) {
    // case (ii): lower bound on [f2]^{-m}; the root form needs the bracket
    // f1^{-m} - m xi |dx|^q I^{1-q} e^{m A1} to be nonnegative
    const double log_f_term = -der.m * std::log(f1);
    const double log_dist_term =
        dist > 0.0 ? std::log(der.m * der.xi) + log_dist_q + log_I_term + der.m * A1
                   : -std::numeric_limits<double>::infinity();
    const ScaledDifference bracket = exp_difference(log_f_term, log_dist_term);
    b.value = bracket.mantissa * std::exp(der.m * (A2 - A1) + bracket.scale_log);
    if (bracket.mantissa == 0.0) b.value = 0.0;
    b.bound_case = BoundCase::CaseII;
    b.power = -der.m;
    b.parenthesis_nonneg = bracket.mantissa >= 0.0;
    if (b.parenthesis_nonneg) {
      const double S = std::exp(log_dist_term - log_f_term);
      if (S < 1.0)
        b.root_value = std::exp(dA + std::log(f1) - std::log1p(-S) / der.m);
      else
        b.root_value = std::numeric_limits<double>::infinity();
    }
    return b;
  }

  // case (iii) / nonnegative r=0 form: upper bound on [f2]^{|m|}, both
  // bracket terms add so the parenthesis is always admissible
  const double am = -der.m;
  const double f_term = f1 > 0.0 ? std::exp(am * std::log(f1)) : 0.0;
  const double dist_term =
      dist > 0.0 ? std::exp(std::log(am * der.xi) + log_dist_q + log_I_term - am * A1) : 0.0;
  b.value = std::exp(am * dA) * (f_term + dist_term);
  b.bound_case = params.r() == 0.0 ? BoundCase::NonnegR0 : BoundCase::CaseIII;
  b.power = am;
  b.parenthesis_nonneg = true;
  b.root_value = b.value > 0.0 ? std::pow(b.value, 1.0 / am) : 0.0;
  return b;
}

double heat_bound(int d, const SpacetimePoint& p1, const SpacetimePoint& p2, double u1) {
  if (d < 1) throw std::invalid_argument("spatial dimension must be >= 1");
  const auto [t1, t2, dist] = check_pair(p1, p2);
  if (!(u1 > 0.0)) throw std::domain_error("u(x1,t1) must be positive");
  return std::exp(std::log(u1) + 0.5 * d * std::log(t1 / t2) - dist * dist / (4.0 * (t2 - t1)));
}

PmeParams::PmeParams(double M_, int d_) : M(M_), d(d_) {
  if (d < 1) throw std::invalid_argument("spatial dimension must be >= 1");
  if (!(M > M0(d)))
    throw std::invalid_argument("porous-medium exponent must satisfy M > M0(d) = max{0, 1-2/d}");
}

HarnackBound pme_bound(const PmeParams& params, const SpacetimePoint& p1, const SpacetimePoint& p2,
                       double u1) {
  const auto [t1, t2, dist] = check_pair(p1, p2);
  if (!(u1 > 0.0)) throw std::domain_error("u(x1,t1) must be positive");

  HarnackBound b;
  if (params.M == 1.0) {
    b.value = heat_bound(params.d, p1, p2, u1);
    b.bound_case = BoundCase::CaseI;
    b.power = 1.0;
    b.root_value = b.value;
    return b;
  }

  const double mu = params.mu();
  const double delta = params.delta();
  const double Pd = power_mean_integral(delta, t1, t2);  // (t2^d - t1^d)/d
  const double distance_term = (params.M - 1.0) / params.M * dist * dist /
                               (4.0 * Pd) * std::pow(t1, -mu);
  const double bracket = std::pow(u1, params.M - 1.0) - distance_term;
  b.bound_case = BoundCase::CaseIII;

  if (params.M > 1.0) {
    b.value = std::pow(t1 / t2, mu) * bracket;
    b.power = params.M - 1.0;
    b.parenthesis_nonneg = bracket >= 0.0;
    if (b.parenthesis_nonneg)
      b.root_value = b.value > 0.0 ? std::pow(b.value, 1.0 / b.power) : 0.0;
    return b;
  }

  // M0(d) < M < 1: reciprocal form, defined only for a positive bracket
  b.power = 1.0 - params.M;
  if (!(bracket > 0.0)) {
    b.value = kNaN;
    b.parenthesis_nonneg = false;
    return b;
  }
  b.value = std::pow(t2 / t1, mu) / bracket;
  b.parenthesis_nonneg = true;
  b.root_value = std::pow(b.value, 1.0 / b.power);
  return b;
}

PdiffParams::PdiffParams(double p_, int d_, double K_) : p(p_), d(d_), K(K_) {
  if (d < 1) throw std::invalid_argument("spatial dimension must be >= 1");
  if (!(p > 2.0 * d / (d + 1.0)))
    throw std::invalid_argument(
        "p-diffusion exponent lies in the subcritical range: need p > 2d/(d+1)");
  if (K <= 0.0) K = default_K(p, d);
  if (!(K > 0.0)) throw std::invalid_argument("p-diffusion constant K must be positive");
}

double PdiffParams::weight_integral(double t1, double t2) const {
  if (!(t1 > 0.0) || !(t2 > t1)) throw std::invalid_argument("need 0 < t1 < t2");
  return power_mean_integral(delta(), t1, t2);
}

HarnackBound pdiff_bound(const PdiffParams& params, const SpacetimePoint& p1,
                         const SpacetimePoint& p2, double u1) {
  const auto [t1, t2, dist] = check_pair(p1, p2);
  if (!(u1 > 0.0)) throw std::domain_error("u(x1,t1) must be positive");

  HarnackBound b;
  if (params.p == 2.0) {
    b.value = heat_bound(params.d, p1, p2, u1);
    b.bound_case = BoundCase::CaseI;
    b.power = 1.0;
    b.root_value = b.value;
    return b;
  }

  const double g = params.gamma();
  const double I = params.weight_integral(t1, t2);
  const double distance_term =
      g * params.xi() * std::pow(dist, params.q()) * std::pow(I, 1.0 - params.q()) *
      std::pow(t1, -g * params.K);
  const double bracket = std::pow(u1, g) - distance_term;
  b.bound_case = BoundCase::CaseIII;

  if (params.p > 2.0) {
    b.value = std::pow(t1 / t2, g * params.K) * bracket;
    b.power = g;
    b.parenthesis_nonneg = bracket >= 0.0;
    if (b.parenthesis_nonneg)
      b.root_value = b.value > 0.0 ? std::pow(b.value, 1.0 / g) : 0.0;
    return b;
  }

  // 2d/(d+1) < p < 2: reciprocal form on [u2]^{-gamma}
  b.power = -g;
  if (!(bracket > 0.0)) {
    b.value = kNaN;
    b.parenthesis_nonneg = false;
    return b;
  }
  b.value = std::pow(t2 / t1, g * params.K) / bracket;
  b.parenthesis_nonneg = true;
  b.root_value = std::pow(b.value, 1.0 / b.power);
  return b;
}

}  // namespace harnack
