#include "exact_solutions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harnack {

namespace {
void check_time(double t) {
  if (!(t > 0.0)) throw std::domain_error("exact solutions are defined for t > 0 only");
}
}  // namespace

HeatKernel::HeatKernel(int d, Vec shift, double amplitude)
    : d_(d), shift_(std::move(shift)), amplitude_(amplitude) {
  if (d < 1) throw std::invalid_argument("spatial dimension must be >= 1");
  if (shift_.empty()) shift_.assign(static_cast<std::size_t>(d), 0.0);
  if (shift_.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("shift dimension does not match d");
  if (!(amplitude_ > 0.0)) throw std::invalid_argument("amplitude must be positive");
}

double HeatKernel::r2(const Vec& x) const {
  if (x.size() != static_cast<std::size_t>(d_))
    throw std::invalid_argument("point dimension does not match the kernel");
  double s = 0.0;
  for (int k = 0; k < d_; ++k) s += sqr(x[k] + shift_[k]);
  return s;
}

double HeatKernel::value(const Vec& x, double t) const {
  check_time(t);
  return amplitude_ * std::pow(4.0 * std::numbers::pi * t, -0.5 * d_) *
         std::exp(-r2(x) / (4.0 * t));
}

Vec HeatKernel::gradient(const Vec& x, double t) const {
  const double u = value(x, t);
  Vec g(static_cast<std::size_t>(d_));
  for (int k = 0; k < d_; ++k) g[k] = -u * (x[k] + shift_[k]) / (2.0 * t);
  return g;
}

double HeatKernel::time_derivative(const Vec& x, double t) const {
  const double u = value(x, t);
  return u * (r2(x) / (4.0 * t * t) - 0.5 * d_ / t);
}

double HeatKernel::laplacian(const Vec& x, double t) const { return time_derivative(x, t); }

Barenblatt::Barenblatt(int d, double M, double C0) : d_(d), M_(M), C0_(C0) {
  if (d < 1) throw std::invalid_argument("spatial dimension must be >= 1");
  if (!(M > 1.0))
    throw std::invalid_argument("the source-type profile needs M > 1 (fast diffusion unsupported)");
  if (!(C0 > 0.0)) throw std::invalid_argument("profile constant C0 must be positive");
  alpha_ = d_ / (d_ * (M_ - 1.0) + 2.0);
  kappa_ = alpha_ * (M_ - 1.0) / (2.0 * d_ * M_);
}

double Barenblatt::s_value(const Vec& x, double t) const {
  check_time(t);
  if (x.size() != static_cast<std::size_t>(d_))
    throw std::invalid_argument("point dimension does not match the profile");
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  return C0_ - kappa_ * r2 * std::pow(t, -2.0 * alpha_ / d_);
}

double Barenblatt::support_radius(double t) const {
  check_time(t);
  return std::sqrt(C0_ / kappa_) * std::pow(t, alpha_ / d_);
}

bool Barenblatt::inside_support(const Vec& x, double t, double margin) const {
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  const double r = support_radius(t);
  return std::sqrt(r2) < r * (1.0 - margin);
}

double Barenblatt::value(const Vec& x, double t) const {
  const double s = s_value(x, t);
  if (s <= 0.0) return 0.0;
  return std::pow(t, -alpha_) * std::pow(s, 1.0 / (M_ - 1.0));
}

Vec Barenblatt::gradient(const Vec& x, double t) const {
  const double s = s_value(x, t);
  Vec g(static_cast<std::size_t>(d_), 0.0);
  if (s <= 0.0) return g;
  const double beta = 1.0 / (M_ - 1.0);
  const double coeff = std::pow(t, -alpha_) * beta * std::pow(s, beta - 1.0) *
                       (-2.0 * kappa_ * std::pow(t, -2.0 * alpha_ / d_));
  for (int k = 0; k < d_; ++k) g[k] = coeff * x[k];
  return g;
}

double Barenblatt::time_derivative(const Vec& x, double t) const {
  const double s = s_value(x, t);
  if (s <= 0.0) return 0.0;
  const double beta = 1.0 / (M_ - 1.0);
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  const double s_t = kappa_ * r2 * (2.0 * alpha_ / d_) * std::pow(t, -2.0 * alpha_ / d_ - 1.0);
  return -alpha_ * std::pow(t, -alpha_ - 1.0) * std::pow(s, beta) +
         std::pow(t, -alpha_) * beta * std::pow(s, beta - 1.0) * s_t;
}

double Barenblatt::laplacian(const Vec& x, double t) const {
  const double s = s_value(x, t);
  if (s <= 0.0) return 0.0;
  const double beta = 1.0 / (M_ - 1.0);
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  const double tpow = std::pow(t, -2.0 * alpha_ / d_);
  const double grad_s2 = 4.0 * kappa_ * kappa_ * tpow * tpow * r2;
  const double lap_s = -2.0 * d_ * kappa_ * tpow;
  return std::pow(t, -alpha_) * (beta * (beta - 1.0) * std::pow(s, beta - 2.0) * grad_s2 +
                                 beta * std::pow(s, beta - 1.0) * lap_s);
}

double Barenblatt::pressure(const Vec& x, double t) const {
  const double s = s_value(x, t);
  if (s <= 0.0) return 0.0;
  return M_ / (M_ - 1.0) * std::pow(t, -alpha_ * (M_ - 1.0)) * s;
}

Vec Barenblatt::pressure_gradient(const Vec& x, double t) const {
  const double s = s_value(x, t);
  Vec g(static_cast<std::size_t>(d_), 0.0);
  if (s <= 0.0) return g;
  const double coeff = M_ / (M_ - 1.0) * std::pow(t, -alpha_ * (M_ - 1.0)) *
                       (-2.0 * kappa_ * std::pow(t, -2.0 * alpha_ / d_));
  for (int k = 0; k < d_; ++k) g[k] = coeff * x[k];
  return g;
}

double Barenblatt::pressure_laplacian(const Vec& x, double t) const {
  const double s = s_value(x, t);
  if (s <= 0.0) return 0.0;
  return M_ / (M_ - 1.0) * std::pow(t, -alpha_ * (M_ - 1.0)) *
         (-2.0 * d_ * kappa_ * std::pow(t, -2.0 * alpha_ / d_));
}

double Barenblatt::laplacian_uM(const Vec& x, double t) const {
  const double s = s_value(x, t);
  if (s <= 0.0) return 0.0;
  const double mb = M_ / (M_ - 1.0);
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  const double tpow = std::pow(t, -2.0 * alpha_ / d_);
  const double grad_s2 = 4.0 * kappa_ * kappa_ * tpow * tpow * r2;
  const double lap_s = -2.0 * d_ * kappa_ * tpow;
  return std::pow(t, -alpha_ * M_) * (mb * (mb - 1.0) * std::pow(s, mb - 2.0) * grad_s2 +
                                      mb * std::pow(s, mb - 1.0) * lap_s);
}

double MoserFamily::value(const Vec& x, double t) const {
  check_time(t);
  if (x.size() != 1) throw std::invalid_argument("Moser family is one-dimensional");
  return std::exp(-sqr(x[0] + xi_) / (4.0 * t)) / std::sqrt(t);
}

Vec MoserFamily::gradient(const Vec& x, double t) const {
  return {-value(x, t) * (x[0] + xi_) / (2.0 * t)};
}

double MoserFamily::time_derivative(const Vec& x, double t) const {
  return value(x, t) * (sqr(x[0] + xi_) / (4.0 * t * t) - 0.5 / t);
}

double MoserFamily::laplacian(const Vec& x, double t) const { return time_derivative(x, t); }

double moser_log_ratio(double xi, double x0) {
  if (!(x0 > 0.0)) throw std::invalid_argument("the ratio is taken at a point x0 > 0");
  return x0 * x0 / 4.0 + x0 * xi / 2.0;
}

double moser_ratio(double xi, double x0) { return std::exp(moser_log_ratio(xi, x0)); }

}  // namespace harnack
