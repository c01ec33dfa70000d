#pragma once

#include <functional>
#include <memory>

#include "util.hpp"

namespace harnack {

/// Point evaluation of a space-time field with analytic derivatives; the
/// verifier consumes these for oracle-based checks.
class SpaceTimeField {
 public:
  virtual ~SpaceTimeField() = default;
  virtual int dim() const = 0;
  virtual double value(const Vec& x, double t) const = 0;
  virtual Vec gradient(const Vec& x, double t) const = 0;
  virtual double time_derivative(const Vec& x, double t) const = 0;
  virtual double laplacian(const Vec& x, double t) const = 0;
};

/// u(x,t) = amplitude (4 pi t)^{-d/2} exp(-|x+shift|^2 / (4t)), a positive
/// solution of u_t = Laplace(u) on R^d x (0, inf).
class HeatKernel final : public SpaceTimeField {
 public:
  HeatKernel(int d, Vec shift = {}, double amplitude = 1.0);

  int dim() const override { return d_; }
  double value(const Vec& x, double t) const override;
  Vec gradient(const Vec& x, double t) const override;
  double time_derivative(const Vec& x, double t) const override;
  double laplacian(const Vec& x, double t) const override;

 private:
  double r2(const Vec& x) const;
  int d_;
  Vec shift_;
  double amplitude_;
};

/// Source-type self-similar solution of the porous medium equation (M > 1):
/// u(x,t) = t^{-alpha} (C0 - kappa |x|^2 t^{-2 alpha/d})_+^{1/(M-1)}.
/// Inside its support the pressure f = (M/(M-1)) u^{M-1} is a downward
/// paraboloid with Laplace(f) = -k/t exactly.
class Barenblatt final : public SpaceTimeField {
 public:
  Barenblatt(int d, double M, double C0 = 1.0);

  int dim() const override { return d_; }
  double value(const Vec& x, double t) const override;
  Vec gradient(const Vec& x, double t) const override;
  double time_derivative(const Vec& x, double t) const override;
  double laplacian(const Vec& x, double t) const override;

  double alpha() const { return alpha_; }
  double kappa() const { return kappa_; }
  double k() const { return 1.0 / (M_ - 1.0 + 2.0 / d_); }
  double support_radius(double t) const;
  bool inside_support(const Vec& x, double t, double margin = 0.0) const;

  double pressure(const Vec& x, double t) const;
  Vec pressure_gradient(const Vec& x, double t) const;
  double pressure_laplacian(const Vec& x, double t) const;

  /// Laplace(u^M), assembled from the profile's analytic derivatives.
  double laplacian_uM(const Vec& x, double t) const;

  double M() const { return M_; }
  double C0() const { return C0_; }

 private:
  double s_value(const Vec& x, double t) const;  // C0 - kappa |x|^2 t^{-2 alpha/d}
  int d_;
  double M_, C0_, alpha_, kappa_;
};

/// Moser's family u_xi(x,t) = t^{-1/2} exp(-(x+xi)^2 / (4t)) on R x (0,inf).
class MoserFamily final : public SpaceTimeField {
 public:
  explicit MoserFamily(double xi) : xi_(xi) {}

  int dim() const override { return 1; }
  double value(const Vec& x, double t) const override;
  Vec gradient(const Vec& x, double t) const override;
  double time_derivative(const Vec& x, double t) const override;
  double laplacian(const Vec& x, double t) const override;

  double xi() const { return xi_; }

 private:
  double xi_;
};

/// log of u_xi(0,1) / u_xi(x0,1) for the Moser family: x0^2/4 + x0 xi / 2.
double moser_log_ratio(double xi, double x0);

/// The ratio itself, assembled in log space.
double moser_ratio(double xi, double x0);

/// Field defined by user-supplied closures; test and verifier plumbing.
class LambdaField final : public SpaceTimeField {
 public:
  using Scalar = std::function<double(const Vec&, double)>;
  using Vector = std::function<Vec(const Vec&, double)>;

  LambdaField(int d, Scalar u, Vector grad, Scalar ut, Scalar lap)
      : d_(d), u_(std::move(u)), grad_(std::move(grad)), ut_(std::move(ut)), lap_(std::move(lap)) {}

  int dim() const override { return d_; }
  double value(const Vec& x, double t) const override { return u_(x, t); }
  Vec gradient(const Vec& x, double t) const override { return grad_(x, t); }
  double time_derivative(const Vec& x, double t) const override { return ut_(x, t); }
  double laplacian(const Vec& x, double t) const override { return lap_(x, t); }

 private:
  int d_;
  Scalar u_;
  Vector grad_;
  Scalar ut_, lap_;
};

}  // namespace harnack
