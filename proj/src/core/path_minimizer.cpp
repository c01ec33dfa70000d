#include "path_minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harnack {

namespace {

constexpr double kVelocityFloor = 1e-14;  // |x'| below this contributes no gradient

double norm_of(const double* v, int dim) {
  double s = 0.0;
  for (int k = 0; k < dim; ++k) s += v[k] * v[k];
  return std::sqrt(s);
}

struct CellData {
  std::vector<double> wint;  // \int_cell w dt
  std::vector<double> dt;
};

CellData precompute_cells(const DiscretePath& path, const WeightFunction& w) {
  CellData c;
  const std::size_t n = path.cell_count();
  c.wint.resize(n);
  c.dt.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    c.dt[j] = path.times[j + 1] - path.times[j];
    c.wint[j] = w.cell_integral(path.times[j], path.times[j + 1]);
  }
  return c;
}

double energy(const DiscretePath& path, const CellData& c, double q) {
  const int dim = path.dim;
  double E = 0.0;
  for (std::size_t j = 0; j < path.cell_count(); ++j) {
    double v2 = 0.0;
    for (int k = 0; k < dim; ++k) v2 += sqr((path.knot(j + 1)[k] - path.knot(j)[k]) / c.dt[j]);
    if (v2 > 0.0) E += std::pow(v2, 0.5 * q) * c.wint[j];
  }
  return E / q;
}

/// Interior-knot gradient; returns its sup-norm.
double gradient(const DiscretePath& path, const CellData& c, double q, std::vector<double>& g) {
  const int dim = path.dim;
  const std::size_t cells = path.cell_count();
  g.assign((cells + 1) * dim, 0.0);
  // flux through cell j: |v_j|^{q-2} v_j * wint_j / dt_j
  std::vector<double> flux(cells * dim, 0.0);
  for (std::size_t j = 0; j < cells; ++j) {
    double v2 = 0.0;
    for (int k = 0; k < dim; ++k) v2 += sqr((path.knot(j + 1)[k] - path.knot(j)[k]) / c.dt[j]);
    const double vn = std::sqrt(v2);
    if (vn < kVelocityFloor) continue;
    const double coeff = std::pow(vn, q - 2.0) * c.wint[j] / c.dt[j];
    for (int k = 0; k < dim; ++k)
      flux[j * dim + k] = coeff * (path.knot(j + 1)[k] - path.knot(j)[k]) / c.dt[j];
  }
  double sup = 0.0;
  for (std::size_t i = 1; i < cells; ++i)
    for (int k = 0; k < dim; ++k) {
      const double gi = flux[(i - 1) * dim + k] - flux[i * dim + k];
      g[i * dim + k] = gi;
      sup = std::max(sup, std::abs(gi));
    }
  return sup;
}

DiscretePath resample_linear(const DiscretePath& coarse, const std::vector<double>& times) {
  DiscretePath fine;
  fine.dim = coarse.dim;
  fine.times = times;
  fine.values.resize(times.size() * coarse.dim);
  std::size_t j = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    while (j + 2 < coarse.times.size() && coarse.times[j + 1] < t) ++j;
    const double a = coarse.times[j], b = coarse.times[j + 1];
    const double s = std::clamp((t - a) / (b - a), 0.0, 1.0);
    for (int k = 0; k < coarse.dim; ++k)
      fine.knot(i)[k] = (1.0 - s) * coarse.knot(j)[k] + s * coarse.knot(j + 1)[k];
  }
  return fine;
}

std::vector<double> knot_times(double t1, double t2, std::size_t cells, KnotSpacing spacing,
                               const WeightFunction& w, double q) {
  std::vector<double> times(cells + 1);
  if (spacing == KnotSpacing::UniformT) {
    for (std::size_t i = 0; i <= cells; ++i)
      times[i] = t1 + (t2 - t1) * static_cast<double>(i) / static_cast<double>(cells);
  } else {
    // knots equispaced in W(t); W is strictly increasing, so bisect per knot
    const double Wtot = w.dual_antiderivative_difference(t1, t2, q);
    times[0] = t1;
    for (std::size_t i = 1; i < cells; ++i) {
      const double target = Wtot * static_cast<double>(i) / static_cast<double>(cells);
      double lo = t1, hi = t2;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (w.dual_antiderivative_difference(t1, mid, q) < target ? lo : hi) = mid;
      }
      times[i] = 0.5 * (lo + hi);
    }
    times[cells] = t2;
  }
  times.front() = t1;
  times.back() = t2;
  return times;
}

/// One gradient-descent run with Armijo backtracking; Barzilai-Borwein trial
/// steps seed the backtracking.
MinimizationResult descend(DiscretePath path, const WeightFunction& w, double q,
                           const MinimizeOptions& opts, std::int64_t iter_budget) {
  const int dim = path.dim;
  const std::size_t cells = path.cell_count();
  const CellData c = precompute_cells(path, w);

  MinimizationResult res;
  std::vector<double> g, g_prev, x_prev;
  double E = energy(path, c, q);
  double sup = gradient(path, c, q, g);
  double step = 0.0;

  std::int64_t it = 0;
  for (; it < iter_budget && sup > opts.tol; ++it) {
    double g2 = 0.0;
    for (double gi : g) g2 += gi * gi;

    if (!x_prev.empty()) {
      double sy = 0.0, ss = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const double s = path.values[i] - x_prev[i];
        const double y = g[i] - g_prev[i];
        sy += s * y;
        ss += s * s;
      }
      step = sy > 0.0 ? ss / sy : 2.0 * step;
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
      // cold start: scale so the first trial moves knots by ~1% of the span
      double span = 0.0;
      for (int k = 0; k < dim; ++k)
        span = std::max(span, std::abs(path.knot(cells)[k] - path.knot(0)[k]));
      span = std::max(span, 1.0);
      step = 0.01 * span / std::max(sup, 1e-300);
    }

    x_prev = path.values;
    g_prev = g;
    double trial = step;
    double E_new = E;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t i = 0; i < g.size(); ++i) path.values[i] = x_prev[i] - trial * g[i];
      E_new = energy(path, c, q);
      if (E_new <= E - 1e-4 * trial * g2) break;
      trial *= 0.5;
    }
    if (!(E_new < E)) {  // no descent achievable at machine precision
      path.values = x_prev;
      break;
    }
    step = trial;
    E = E_new;
    sup = gradient(path, c, q, g);
  }

  res.value = E;
  res.path = std::move(path);
  res.iterations = it;
  res.converged = sup <= opts.tol;
  return res;
}

}  // namespace

void DiscretePath::validate() const {
  if (times.size() < 3) throw std::invalid_argument("path needs at least 2 cells");
  if (dim < 1) throw std::invalid_argument("path dimension must be >= 1");
  if (values.size() != times.size() * static_cast<std::size_t>(dim))
    throw std::invalid_argument("path values do not match knot count and dimension");
  for (std::size_t i = 0; i + 1 < times.size(); ++i)
    if (!(times[i] < times[i + 1])) throw std::invalid_argument("knot times must increase strictly");
  if (!(times.front() > 0.0)) throw std::invalid_argument("knot times must be positive");
}

bool DiscretePath::has_zero_endpoints(double tol) const {
  for (int k = 0; k < dim; ++k)
    if (std::abs(knot(0)[k]) > tol || std::abs(knot(knot_count() - 1)[k]) > tol) return false;
  return true;
}

DiscretePath straight_line_path(double t1, double t2, const Vec& x1, const Vec& x2,
                                std::size_t cells) {
  if (x1.size() != x2.size()) throw std::invalid_argument("endpoint dimensions differ");
  if (!(t1 > 0.0) || !(t2 > t1)) throw std::invalid_argument("need 0 < t1 < t2");
  DiscretePath p;
  p.dim = static_cast<int>(x1.size());
  p.times.resize(cells + 1);
  p.values.resize((cells + 1) * p.dim);
  for (std::size_t i = 0; i <= cells; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(cells);
    p.times[i] = t1 + s * (t2 - t1);
    for (int k = 0; k < p.dim; ++k) p.knot(i)[k] = (1.0 - s) * x1[k] + s * x2[k];
  }
  p.times.back() = t2;
  return p;
}

double functional_E(const DiscretePath& path, const WeightFunction& w, double q) {
  if (!(q > 1.0)) throw std::invalid_argument("path energy needs q > 1");
  path.validate();
  return energy(path, precompute_cells(path, w), q);
}

double closed_form_min(double q, const WeightFunction& w, double t1, double t2, const Vec& x1,
                       const Vec& x2) {
  if (!(q > 1.0)) throw std::invalid_argument("path energy needs q > 1");
  if (!(t1 > 0.0) || !(t2 > t1)) throw std::invalid_argument("need 0 < t1 < t2");
  const double dW = w.dual_antiderivative_difference(t1, t2, q);
  if (!(dW > 0.0)) throw std::domain_error("W must be strictly increasing on [t1, t2]");
  const double dist = std::sqrt(dist2(x1, x2));
  if (dist == 0.0) return 0.0;
  return std::pow(dist, q) / (q * std::pow(dW, q - 1.0));
}

OptimalPath::OptimalPath(double q, const WeightFunction& w, double t1, double t2, const Vec& x1,
                         const Vec& x2)
    : q_(q), t1_(t1), t2_(t2), w_(&w), x1_(x1) {
  if (!(q > 1.0)) throw std::invalid_argument("optimal path needs q > 1");
  if (!(t1 > 0.0) || !(t2 > t1)) throw std::invalid_argument("need 0 < t1 < t2");
  if (x1.size() != x2.size()) throw std::invalid_argument("endpoint dimensions differ");
  const double dW = w.dual_antiderivative_difference(t1, t2, q);
  if (!(dW > 0.0)) throw std::domain_error("W must be strictly increasing on [t1, t2]");
  B_.resize(x1.size());
  for (std::size_t k = 0; k < x1.size(); ++k) B_[k] = (x2[k] - x1[k]) / dW;
}

Vec OptimalPath::operator()(double t) const {
  // v(t) = x1 + B (W(t) - W(t1)); endpoints reproduce exactly
  if (t == t1_) return x1_;
  const double dW = w_->dual_antiderivative_difference(t1_, t, q_);
  Vec x(x1_.size());
  for (std::size_t k = 0; k < x1_.size(); ++k) x[k] = x1_[k] + B_[k] * dW;
  return x;
}

DiscretePath OptimalPath::sample(std::size_t cells) const {
  DiscretePath p;
  p.dim = static_cast<int>(x1_.size());
  p.times.resize(cells + 1);
  p.values.resize((cells + 1) * p.dim);
  for (std::size_t i = 0; i <= cells; ++i) {
    const double t =
        i == cells ? t2_ : t1_ + (t2_ - t1_) * static_cast<double>(i) / static_cast<double>(cells);
    p.times[i] = t;
    const Vec x = (*this)(t);
    for (int k = 0; k < p.dim; ++k) p.knot(i)[k] = x[k];
  }
  return p;
}

double gateaux(const DiscretePath& v, const DiscretePath& h, const WeightFunction& w, double q) {
  if (!(q > 1.0)) throw std::invalid_argument("path energy needs q > 1");
  v.validate();
  h.validate();
  if (v.dim != h.dim || v.times != h.times)
    throw std::invalid_argument("direction must share the knots of the base path");
  if (!h.has_zero_endpoints())
    throw std::invalid_argument("direction must vanish at both endpoints");
  const int dim = v.dim;
  double acc = 0.0;
  for (std::size_t j = 0; j < v.cell_count(); ++j) {
    const double dt = v.times[j + 1] - v.times[j];
    double v2 = 0.0, vh = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double vv = (v.knot(j + 1)[k] - v.knot(j)[k]) / dt;
      const double hh = (h.knot(j + 1)[k] - h.knot(j)[k]) / dt;
      v2 += vv * vv;
      vh += vv * hh;
    }
    const double vn = std::sqrt(v2);
    if (vn < kVelocityFloor) continue;
    acc += std::pow(vn, q - 2.0) * vh * w.cell_integral(v.times[j], v.times[j + 1]);
  }
  return acc;
}

MinimizationResult numeric_minimize(double q, const WeightFunction& w, double t1, double t2,
                                    const Vec& x1, const Vec& x2, std::size_t cells,
                                    const MinimizeOptions& opts) {
  if (!(q > 1.0)) throw std::invalid_argument("path energy needs q > 1");
  if (cells < 8) throw std::invalid_argument("need at least 8 cells");

  // coarse-to-fine: halve the cell count down to ~16, optimise upward,
  // prolonging each level's minimiser; the coarsest level starts from the
  // straight line
  std::vector<std::size_t> levels{cells};
  if (opts.coarse_to_fine)
    while (levels.back() > 32) levels.push_back(levels.back() / 2);
  std::reverse(levels.begin(), levels.end());

  MinimizationResult res;
  DiscretePath current;
  std::int64_t total_iters = 0;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto times = knot_times(t1, t2, levels[li], opts.spacing, w, q);
    DiscretePath start = li == 0 ? straight_line_path(t1, t2, x1, x2, levels[li])
                                 : resample_linear(current, times);
    if (li == 0 && opts.spacing == KnotSpacing::UniformW) start = resample_linear(start, times);
    start.times = times;
    res = descend(std::move(start), w, q, opts, opts.max_iters - total_iters);
    total_iters += res.iterations;
    current = res.path;
    if (total_iters >= opts.max_iters) break;
  }
  res.path = std::move(current);
  res.iterations = total_iters;
  res.gap_to_closed_form = res.value - closed_form_min(q, w, t1, t2, x1, x2);
  return res;
}

MinimizationResult numeric_minimize_from(double q, const WeightFunction& w, DiscretePath initial,
                                         const MinimizeOptions& opts) {
  if (!(q > 1.0)) throw std::invalid_argument("path energy needs q > 1");
  initial.validate();
  Vec x1(initial.knot(0), initial.knot(0) + initial.dim);
  Vec x2(initial.knot(initial.knot_count() - 1),
         initial.knot(initial.knot_count() - 1) + initial.dim);
  const double t1 = initial.times.front(), t2 = initial.times.back();
  MinimizationResult res = descend(std::move(initial), w, q, opts, opts.max_iters);
  res.gap_to_closed_form = res.value - closed_form_min(q, w, t1, t2, x1, x2);
  return res;
}

PoincareCheck poincare_check(const DiscretePath& x, double q, const WeightFunction& w) {
  if (!(q > 1.0)) throw std::invalid_argument("path energy needs q > 1");
  x.validate();
  if (!x.has_zero_endpoints()) throw std::invalid_argument("Poincare check needs zero endpoints");

  // 4-point Gauss-Legendre per cell for ||x||_{q,w}
  static const double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                               0.8611363115940526};
  static const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                               0.3478548451374538};
  const int dim = x.dim;
  double lhs_q = 0.0;
  for (std::size_t j = 0; j < x.cell_count(); ++j) {
    const double a = x.times[j], b = x.times[j + 1];
    for (int g = 0; g < 4; ++g) {
      const double t = 0.5 * (a + b) + 0.5 * (b - a) * gx[g];
      const double s = (t - a) / (b - a);
      double v2 = 0.0;
      for (int k = 0; k < dim; ++k)
        v2 += sqr((1.0 - s) * x.knot(j)[k] + s * x.knot(j + 1)[k]);
      lhs_q += 0.5 * (b - a) * gw[g] * std::pow(v2, 0.5 * q) * w.value(t);
    }
  }

  PoincareCheck out;
  out.lhs = std::pow(lhs_q, 1.0 / q);
  const auto [wmin, wmax] = w.min_max_on(x.times.front(), x.times.back());
  const double C1 = std::pow(wmin, 1.0 / q);
  const double C2 = std::pow(wmax, 1.0 / q);
  const double C3 = std::pow(q, -1.0 / q) * (x.times.back() - x.times.front());
  out.constant = C2 * C3 / C1;
  const double grad_norm = std::pow(q * functional_E(x, w, q), 1.0 / q);
  out.rhs = out.constant * grad_norm;
  out.holds = out.lhs <= out.rhs * (1.0 + 1e-12) + 1e-300;
  return out;
}

}  // namespace harnack
