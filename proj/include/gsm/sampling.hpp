#pragma once

// Seeded point and multivector generation. Draws come straight from the
// mt19937_64 bit stream so the sequences do not depend on the standard
// library's distribution implementations.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gsm/clifford.hpp"

namespace gsm {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    double u = uniform();
    while (u == 0.0) u = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * uniform());
  }

  std::vector<double> uniform_vector(std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (double& c : v) c = uniform(lo, hi);
    return v;
  }

  std::vector<double> unit_vector(std::size_t n) {
    while (true) {
      std::vector<double> v(n);
      double s = 0.0;
      for (double& c : v) {
        c = normal();
        s += c * c;
      }
      if (s > 1e-20) {
        const double inv = 1.0 / std::sqrt(s);
        for (double& c : v) c *= inv;
        return v;
      }
    }
  }

  /// Multivector with real and imaginary parts uniform in [-1, 1].
  Multivector multivector(Signature sig) {
    Multivector m(sig);
    for (auto& c : m.coeffs()) c = cplx(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    return m;
  }

  /// Real paravector with components uniform in [-1, 1].
  Multivector paravector(Signature sig) {
    return Multivector::paravector(sig, uniform_vector(static_cast<std::size_t>(sig.n()) + 1, -1.0, 1.0));
  }

  /// x in the cube of half-width x_max / sqrt(p + 1) (so |x| <= x_max), y in
  /// a uniformly random direction with |y| uniform in [r_min, r_max].
  SplitPoint split_point(Signature sig, double x_max, double r_min, double r_max) {
    const double h = x_max / std::sqrt(static_cast<double>(sig.x_dim()));
    SplitPoint pt;
    pt.x = uniform_vector(static_cast<std::size_t>(sig.x_dim()), -h, h);
    const double r = uniform(r_min, r_max);
    pt.y = unit_vector(static_cast<std::size_t>(sig.q));
    for (double& c : pt.y) c *= r;
    return pt;
  }

  std::mt19937_64& engine() noexcept { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gsm
