#include "grid.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace harnack {

std::string equation_name(Equation e) {
  switch (e) {
    case Equation::Heat: return "heat";
    case Equation::Pme: return "pme";
    case Equation::Pdiff: return "pdiff";
  }
  return "?";
}

std::string boundary_name(BoundaryRule b) {
  switch (b) {
    case BoundaryRule::ExactDirichlet: return "exact-dirichlet";
    case BoundaryRule::HomogeneousDirichlet: return "dirichlet0";
    case BoundaryRule::HomogeneousNeumann: return "neumann0";
  }
  return "?";
}

void SolverConfig::validate() const {
  if (d < 1 || d > 3) throw std::invalid_argument("solver supports d in {1,2,3}");
  if (!(L > 0.0) || !(dx > 0.0) || dx >= L) throw std::invalid_argument("need 0 < dx < L");
  if (!(t_start > 0.0)) throw std::invalid_argument("t_start must be positive");
  if (!(t_end > t_start)) throw std::invalid_argument("need t_end > t_start");
  if (!(cfl > 0.0) || !(cfl < 1.0))
    throw std::invalid_argument("CFL safety factor must lie in (0, 1)");
  if (eps < 0.0) throw std::invalid_argument("regularization eps must be >= 0");
  if (store_every < 1) throw std::invalid_argument("store_every must be >= 1");
}

Vec GridSolution::node_coords(std::size_t flat) const {
  Vec x(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    x[k] = coord(static_cast<int>(flat % n));
    flat /= n;
  }
  return x;
}

bool GridSolution::is_boundary_node(std::size_t flat) const {
  for (int k = 0; k < d; ++k) {
    const int i = static_cast<int>(flat % n);
    if (i == 0 || i == n - 1) return true;
    flat /= n;
  }
  return false;
}

double GridSolution::l1_error_vs(const SpaceTimeField& reference) const {
  const double t = times.back();
  const auto& u = frames.back();
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc += std::abs(u[i] - reference.value(node_coords(i), t));
  return acc * std::pow(dx, d);
}

double GridSolution::support_radius(std::size_t frame, double threshold) const {
  const auto& u = frames.at(frame);
  double r = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > threshold) {
      double r2 = 0.0;
      for (double xk : node_coords(i)) r2 += xk * xk;
      r = std::max(r, std::sqrt(r2));
    }
  }
  return r;
}

namespace {
std::string format_double(double v) {
  std::array<char, 40> buf;
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), p);
}
}  // namespace

void GridSolution::export_csv(const std::string& path, int time_stride) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (d == 1) {
    out << "x,t,u\n";
  } else {
    for (int k = 0; k < d; ++k) out << "x" << k << ",";
    out << "t,u\n";
  }
  for (std::size_t f = 0; f < frames.size(); f += time_stride) {
    for (std::size_t i = 0; i < frames[f].size(); ++i) {
      const Vec x = node_coords(i);
      for (int k = 0; k < d; ++k) out << format_double(x[k]) << ",";
      out << format_double(times[f]) << "," << format_double(frames[f][i]) << "\n";
    }
  }
}

void GridSolution::export_meta_json(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "{\n"
      << "  \"equation\": \"" << equation_name(equation) << "\",\n"
      << "  \"param\": " << format_double(param) << ",\n"
      << "  \"d\": " << d << ",\n"
      << "  \"L\": " << format_double(L) << ",\n"
      << "  \"dx\": " << format_double(dx) << ",\n"
      << "  \"nodes_per_axis\": " << n << ",\n"
      << "  \"t_start\": " << format_double(times.front()) << ",\n"
      << "  \"t_end\": " << format_double(times.back()) << ",\n"
      << "  \"frames\": " << frames.size() << ",\n"
      << "  \"dt_first\": " << format_double(dt_first) << ",\n"
      << "  \"cfl\": " << format_double(cfl) << ",\n"
      << "  \"boundary\": \"" << boundary_name(boundary) << "\",\n"
      << "  \"eps\": " << format_double(eps) << ",\n"
      << "  \"final_mass\": " << format_double(mass.back()) << ",\n"
      << "  \"clamped_mass\": " << format_double(clamped_mass.back()) << "\n"
      << "}\n";
}

LambdaField constant_field(int d, double c) {
  return LambdaField(
      d, [c](const Vec&, double) { return c; },
      [d](const Vec&, double) { return Vec(static_cast<std::size_t>(d), 0.0); },
      [](const Vec&, double) { return 0.0; }, [](const Vec&, double) { return 0.0; });
}

}  // namespace harnack
