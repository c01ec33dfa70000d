#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bounds.hpp"
#include "grid.hpp"

namespace harnack {

namespace {

struct GridShape {
  int d, n;
  std::size_t total;
  std::size_t stride[3];
  double L, dx;

  int index_along(std::size_t flat, int axis) const {
    return static_cast<int>((flat / stride[axis]) % n);
  }
};

GridShape make_shape(const SolverConfig& cfg) {
  GridShape s;
  s.d = cfg.d;
  s.n = static_cast<int>(std::llround(2.0 * cfg.L / cfg.dx)) + 1;
  if (s.n < 5) throw std::invalid_argument("grid too coarse: need at least 5 nodes per axis");
  s.total = 1;
  for (int k = 0; k < s.d; ++k) {
    s.stride[k] = s.total;
    s.total *= s.n;
  }
  s.L = cfg.L;
  s.dx = cfg.dx;
  return s;
}

Vec node_coords(const GridShape& s, std::size_t flat) {
  Vec x(static_cast<std::size_t>(s.d));
  for (int k = 0; k < s.d; ++k) x[k] = -s.L + s.dx * s.index_along(flat, k);
  return x;
}

bool on_boundary(const GridShape& s, std::size_t flat) {
  for (int k = 0; k < s.d; ++k) {
    const int i = s.index_along(flat, k);
    if (i == 0 || i == s.n - 1) return true;
  }
  return false;
}

/// Squared face gradient for the p-diffusion flux: exact normal difference
/// plus averaged central tangential differences.
double face_grad2(const GridShape& s, const std::vector<double>& u, std::size_t i, int axis,
                  double inv_dx) {
  const double gn = (u[i + s.stride[axis]] - u[i]) * inv_dx;
  double g2 = gn * gn;
  for (int b = 0; b < s.d; ++b) {
    if (b == axis) continue;
    const auto sb = s.stride[b];
    auto central = [&](std::size_t j) {
      const int ib = s.index_along(j, b);
      if (ib == 0 || ib == s.n - 1) return 0.0;  // tangential slope unused at the rim
      return (u[j + sb] - u[j - sb]) * 0.5 * inv_dx;
    };
    const double gt = 0.5 * (central(i) + central(i + s.stride[axis]));
    g2 += gt * gt;
  }
  return g2;
}

struct StepKernel {
  Equation eq;
  double M = 1.0;   // pme
  double p = 2.0;   // pdiff
  double eps = 0.0;
  double floor = 1e-12;

  /// Fills per-axis face fluxes; returns the maximum effective diffusivity.
  double assemble(const GridShape& s, const std::vector<double>& u,
                  std::vector<std::vector<double>>& flux, std::vector<double>& w) const {
    const double inv_dx = 1.0 / s.dx;
    double dmax = 1.0;

    const std::vector<double>* src = &u;
    if (eq == Equation::Pme && M != 1.0) {
      w.resize(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::pow(u[i], M);
      src = &w;
      dmax = floor;
      for (double ui : u) dmax = std::max(dmax, M * std::pow(std::max(ui, floor), M - 1.0));
    }

    const bool plain = eq != Equation::Pdiff || (p == 2.0 && eps == 0.0);
    if (!plain) dmax = floor;

    for (int a = 0; a < s.d; ++a) {
      auto& F = flux[a];
      std::fill(F.begin(), F.end(), 0.0);
      const auto sa = s.stride[a];
      for (std::size_t i = 0; i < s.total; ++i) {
        if (s.index_along(i, a) >= s.n - 1) continue;
        const double gn = ((*src)[i + sa] - (*src)[i]) * inv_dx;
        if (plain) {
          F[i] = gn;
        } else {
          const double g2 = face_grad2(s, u, i, a, inv_dx);
          const double coeff = std::pow(g2 + eps * eps, 0.5 * (p - 2.0));
          F[i] = coeff * ((u[i + sa] - u[i]) * inv_dx);
          dmax = std::max(dmax, coeff);
        }
      }
    }
    return dmax;
  }
};

GridSolution run(Equation eq, double param, const SolverConfig& cfg,
                 const SpaceTimeField& initial) {
  cfg.validate();
  if (initial.dim() != cfg.d)
    throw std::invalid_argument("initial-data field dimension does not match the solver config");
  const GridShape s = make_shape(cfg);

  StepKernel kernel;
  kernel.eq = eq;
  kernel.eps = cfg.eps;
  kernel.floor = cfg.diffusivity_floor;
  if (eq == Equation::Pme) {
    kernel.M = param;
    if (!(param > PmeParams::M0(cfg.d)))
      throw std::invalid_argument("porous-medium exponent must satisfy M > M0(d)");
  }
  if (eq == Equation::Pdiff) {
    kernel.p = param;
    if (!(param > 1.0)) throw std::invalid_argument("p-diffusion exponent must exceed 1");
  }

  std::vector<double> u(s.total);
  for (std::size_t i = 0; i < s.total; ++i) u[i] = initial.value(node_coords(s, i), cfg.t_start);
  if (cfg.boundary == BoundaryRule::HomogeneousDirichlet)
    for (std::size_t i = 0; i < s.total; ++i)
      if (on_boundary(s, i)) u[i] = 0.0;

  const double cell = std::pow(cfg.dx, cfg.d);
  auto mass_of = [&](const std::vector<double>& f) {
    double m = 0.0;
    for (double v : f) m += v;
    return m * cell;
  };

  GridSolution g;
  g.d = cfg.d;
  g.L = cfg.L;
  g.dx = cfg.dx;
  g.n = s.n;
  g.equation = eq;
  g.param = param;
  g.eps = cfg.eps;
  g.boundary = cfg.boundary;
  g.cfl = cfg.cfl;
  g.times.push_back(cfg.t_start);
  g.frames.push_back(u);
  g.mass.push_back(mass_of(u));
  g.clamped_mass.push_back(0.0);

  std::vector<std::vector<double>> flux(static_cast<std::size_t>(s.d),
                                        std::vector<double>(s.total, 0.0));
  std::vector<double> w, u_next(s.total);

  // CFL screening before any stepping
  {
    const double dmax0 = kernel.assemble(s, u, flux, w);
    const double stable0 = cfg.cfl * cfg.dx * cfg.dx / (2.0 * cfg.d * dmax0);
    if (cfg.fixed_dt > 0.0 && cfg.fixed_dt > stable0)
      throw std::invalid_argument("fixed time step violates the CFL stability bound");
  }

  double t = cfg.t_start;
  double clamped_total = 0.0;
  const double inv_dx = 1.0 / cfg.dx;
  long step = 0;
  while (t < cfg.t_end) {
    const double dmax = kernel.assemble(s, u, flux, w);
    double dt = cfg.fixed_dt > 0.0 ? cfg.fixed_dt
                                   : cfg.cfl * cfg.dx * cfg.dx / (2.0 * cfg.d * dmax);
    const bool last = t + dt >= cfg.t_end;
    if (last) dt = cfg.t_end - t;
    const double t_new = last ? cfg.t_end : t + dt;

    const bool neumann = cfg.boundary == BoundaryRule::HomogeneousNeumann;
    for (std::size_t i = 0; i < s.total; ++i) {
      if (!neumann && on_boundary(s, i)) {
        u_next[i] = u[i];  // overwritten below per the boundary rule
        continue;
      }
      double div = 0.0;
      for (int a = 0; a < s.d; ++a) {
        const int ia = s.index_along(i, a);
        const double fp = ia < s.n - 1 ? flux[a][i] : 0.0;
        const double fm = ia > 0 ? flux[a][i - s.stride[a]] : 0.0;
        div += (fp - fm) * inv_dx;
      }
      u_next[i] = u[i] + dt * div;
    }

    switch (cfg.boundary) {
      case BoundaryRule::ExactDirichlet:
        for (std::size_t i = 0; i < s.total; ++i)
          if (on_boundary(s, i)) u_next[i] = initial.value(node_coords(s, i), t_new);
        break;
      case BoundaryRule::HomogeneousDirichlet:
        for (std::size_t i = 0; i < s.total; ++i)
          if (on_boundary(s, i)) u_next[i] = 0.0;
        break;
      case BoundaryRule::HomogeneousNeumann:
        break;
    }

    double clamped = 0.0;
    for (std::size_t i = 0; i < s.total; ++i) {
      if (u_next[i] < 0.0) {
        clamped += -u_next[i];
        u_next[i] = 0.0;
      }
    }
    clamped_total += clamped * cell;

    u.swap(u_next);
    const double m = mass_of(u);
    if (cfg.boundary == BoundaryRule::HomogeneousDirichlet &&
        m > g.mass.back() * (1.0 + 1e-12) + 1e-300)
      throw std::runtime_error("mass increased under the homogeneous Dirichlet boundary");

    t = t_new;
    ++step;
    if (step == 1) g.dt_first = dt;
    if (step % cfg.store_every == 0 || t >= cfg.t_end) {
      g.times.push_back(t);
      g.frames.push_back(u);
      g.mass.push_back(m);
      g.clamped_mass.push_back(clamped_total);
    }
  }
  return g;
}

}  // namespace

GridSolution solve_heat(const SolverConfig& config, const SpaceTimeField& initial) {
  return run(Equation::Heat, 0.0, config, initial);
}

GridSolution solve_pme(double M, const SolverConfig& config, const SpaceTimeField& initial) {
  return run(Equation::Pme, M, config, initial);
}

GridSolution solve_pdiff(double p, const SolverConfig& config, const SpaceTimeField& initial) {
  return run(Equation::Pdiff, p, config, initial);
}

}  // namespace harnack
