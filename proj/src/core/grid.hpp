#pragma once

#include <string>

#include "exact_solutions.hpp"
#include "util.hpp"

namespace harnack {

enum class Equation { Heat, Pme, Pdiff };
enum class BoundaryRule { ExactDirichlet, HomogeneousDirichlet, HomogeneousNeumann };

std::string equation_name(Equation e);
std::string boundary_name(BoundaryRule b);

struct SolverConfig {
  int d = 1;
  double L = 6.0;
  double dx = 0.05;
  double t_start = 1.0;  // every estimate is singular at t = 0
  double t_end = 2.0;
  double cfl = 0.9;             // fraction of the explicit stability limit, in (0,1)
  BoundaryRule boundary = BoundaryRule::ExactDirichlet;
  double eps = 1e-8;            // p-diffusion flux regularization
  double fixed_dt = 0.0;        // > 0 overrides the stability rule (validated against it)
  double diffusivity_floor = 1e-12;
  int store_every = 1;

  void validate() const;
};

/// Nonnegative field on a uniform space-time grid over [-L, L]^d. Frames are
/// node-major with flat index sum_k idx_k n^k; immutable once returned by a
/// solver.
class GridSolution {
 public:
  int d = 1;
  double L = 0.0, dx = 0.0;
  int n = 0;  // nodes per axis
  Equation equation = Equation::Heat;
  double param = 0.0;  // M for pme, p for pdiff
  double eps = 0.0;
  BoundaryRule boundary = BoundaryRule::ExactDirichlet;
  double cfl = 0.0;

  std::vector<double> times;                // stored frame times
  std::vector<std::vector<double>> frames;  // one field per stored time
  std::vector<double> mass;                 // dx^d * sum(u) per stored frame
  std::vector<double> clamped_mass;         // cumulative clamped-away mass per stored frame
  double dt_first = 0.0;                    // first time step (tolerance calibration)

  std::size_t node_count() const { return frames.empty() ? 0 : frames.front().size(); }
  std::size_t frame_count() const { return frames.size(); }

  Vec node_coords(std::size_t flat) const;
  double coord(int axis_index) const { return -L + dx * axis_index; }
  bool is_boundary_node(std::size_t flat) const;
  double value(std::size_t frame, std::size_t flat) const { return frames[frame][flat]; }

  /// L1 distance between the final frame and a reference field at t_end.
  double l1_error_vs(const SpaceTimeField& reference) const;

  /// Largest radius r such that some node with |x| >= r has u > threshold.
  double support_radius(std::size_t frame, double threshold = 0.0) const;

  void export_csv(const std::string& path, int time_stride = 1) const;
  void export_meta_json(const std::string& path) const;
};

/// Explicit central-difference heat stepping, dt = cfl dx^2 / (2 d).
GridSolution solve_heat(const SolverConfig& config, const SpaceTimeField& initial);

/// Porous-medium stepping of u via fluxes of u^M; dt recomputed per step
/// from the degenerate diffusivity max M u^{M-1}; negative values clamped.
GridSolution solve_pme(double M, const SolverConfig& config, const SpaceTimeField& initial);

/// p-diffusion stepping with staggered-face flux (|grad u|^2 + eps^2)^{(p-2)/2} grad u.
GridSolution solve_pdiff(double p, const SolverConfig& config, const SpaceTimeField& initial);

/// Constant-in-space initial data as a field (homogeneous Neumann tests).
LambdaField constant_field(int d, double c);

}  // namespace harnack
