#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace harnack {

using Vec = std::vector<double>;

/// Deterministic RNG used everywhere seeds appear in the public surface.
/// splitmix64 core; the uniform mapping is fixed here so reports and CSV
/// outputs are byte-identical for a given seed regardless of the standard
/// library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  Vec point_in_box(int d, double radius) {
    Vec x(static_cast<std::size_t>(d));
    for (auto& xi : x) xi = uniform(-radius, radius);
    return x;
  }

 private:
  std::uint64_t state_;
};

inline double sqr(double x) { return x * x; }

inline double dist2(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch between points");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += sqr(a[i] - b[i]);
  return s;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth = 40);

}  // namespace harnack
