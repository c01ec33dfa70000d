#pragma once

#include <cstdint>

#include "weight.hpp"

namespace harnack {

/// Piecewise-linear path on [t1, t2] with fixed endpoints. Values are stored
/// knot-major: values[i*dim + k] is coordinate k of knot i.
struct DiscretePath {
  std::vector<double> times;
  std::vector<double> values;
  int dim = 1;

  std::size_t knot_count() const { return times.size(); }
  std::size_t cell_count() const { return times.empty() ? 0 : times.size() - 1; }
  const double* knot(std::size_t i) const { return values.data() + i * dim; }
  double* knot(std::size_t i) { return values.data() + i * dim; }

  void validate() const;
  bool has_zero_endpoints(double tol = 0.0) const;
};

DiscretePath straight_line_path(double t1, double t2, const Vec& x1, const Vec& x2,
                                std::size_t cells);

enum class KnotSpacing { UniformT, UniformW };

struct MinimizationResult {
  double value = 0.0;
  DiscretePath path;
  std::int64_t iterations = 0;
  bool converged = false;
  double gap_to_closed_form = 0.0;
};

/// E(x) = (1/q) \int |x'|^q w dt for a piecewise-linear path, using exact
/// per-cell weight integrals where the weight has a closed antiderivative.
double functional_E(const DiscretePath& path, const WeightFunction& w, double q);

/// min E over paths with the given endpoints: |x2-x1|^q / (q (W(t2)-W(t1))^{q-1}).
double closed_form_min(double q, const WeightFunction& w, double t1, double t2, const Vec& x1,
                       const Vec& x2);

/// The unique minimiser t -> D + B W(t) of the path energy.
class OptimalPath {
 public:
  OptimalPath(double q, const WeightFunction& w, double t1, double t2, const Vec& x1,
              const Vec& x2);

  Vec operator()(double t) const;
  DiscretePath sample(std::size_t cells) const;

 private:
  double q_, t1_, t2_;
  const WeightFunction* w_;
  Vec x1_, B_;
};

/// Directional derivative of E at v in the direction h (same knots, zero
/// endpoints): \int |v'|^{q-2} v'.h' w dt.
double gateaux(const DiscretePath& v, const DiscretePath& h, const WeightFunction& w, double q);

struct MinimizeOptions {
  double tol = 1e-8;           // sup-norm of the interior-knot gradient
  std::int64_t max_iters = 100000;
  KnotSpacing spacing = KnotSpacing::UniformT;
  bool coarse_to_fine = true;  // straight-line start at the coarsest level
};

/// Armijo-backtracked gradient descent on the interior knots.
MinimizationResult numeric_minimize(double q, const WeightFunction& w, double t1, double t2,
                                    const Vec& x1, const Vec& x2, std::size_t cells,
                                    const MinimizeOptions& opts = {});

/// Same, started from a caller-provided path (its endpoints are kept).
MinimizationResult numeric_minimize_from(double q, const WeightFunction& w, DiscretePath initial,
                                         const MinimizeOptions& opts = {});

struct PoincareCheck {
  double lhs = 0.0;       // ||x||_{q,w}
  double rhs = 0.0;       // C ||x'||_{q,w}
  double constant = 0.0;  // C = C2 C3 / C1
  bool holds = false;
};

PoincareCheck poincare_check(const DiscretePath& x, double q, const WeightFunction& w);

}  // namespace harnack
