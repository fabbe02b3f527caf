#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "inconic/error.hpp"
#include "inconic/geometry.hpp"

namespace inconic::testing {

/// Smallest |cross| of unit directions over the two opposite side pairs.
inline double side_parallelism(const ConvexQuad& q) {
  double worst = 1.0;
  for (int i = 0; i < 2; ++i) {
    Point a = q.vertex(i + 1) - q.vertex(i), b = q.vertex(i + 3) - q.vertex(i + 2);
    worst = std::min(worst, std::abs(cross(a, b)) / (norm(a) * norm(b)));
  }
  return worst;
}

/// Convex quads: four sorted angles on a jittered circle, then a random
/// similarity. Rejection keeps side parallelism above `min_parallel`.
class QuadGenerator {
 public:
  explicit QuadGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  ConvexQuad trapezium(double min_parallel = 1e-3) {
    for (;;) {
      std::array<double, 4> ang;
      for (double& a : ang) a = uniform(0.0, 2.0 * std::numbers::pi);
      std::sort(ang.begin(), ang.end());
      std::array<Point, 4> v;
      const double scale = uniform(0.2, 5.0), rot = uniform(0.0, 2.0 * std::numbers::pi);
      const Point shift{uniform(-3.0, 3.0), uniform(-3.0, 3.0)};
      for (std::size_t i = 0; i < 4; ++i) {
        const double r = uniform(0.5, 1.5);
        const double x = r * std::cos(ang[i] + rot), y = r * std::sin(ang[i] + rot);
        v[i] = shift + scale * Point{x, y};
      }
      try {
        ConvexQuad q = validate_quad(std::span<const Point, 4>(v));
        if (q.kind() == QuadKind::Trapezium && side_parallelism(q) > min_parallel) return q;
      } catch (const Error&) {
      }
    }
  }

  /// Exactly one parallel pair: bases y = 0 and y = height, then a random affine map.
  ConvexQuad trapezoid() {
    for (;;) {
      const double a0 = uniform(-1.0, 0.0), a1 = uniform(0.5, 2.0);
      const double b0 = uniform(-1.0, 1.0), b1 = b0 + uniform(0.3, 2.0);
      const double h = uniform(0.3, 2.0);
      std::array<Point, 4> v{Point{a0, 0.0}, Point{a1, 0.0}, Point{b1, h}, Point{b0, h}};
      const AffineMap m = affine();
      for (Point& p : v) p = m.apply(p);
      try {
        ConvexQuad q = validate_quad(std::span<const Point, 4>(v));
        if (q.kind() == QuadKind::Trapezoid) return q;
      } catch (const Error&) {
      }
    }
  }

  /// Invertible map with moderate condition number; may reverse orientation.
  AffineMap affine() {
    for (;;) {
      AffineMap m;
      m.m11 = uniform(-2.0, 2.0);
      m.m12 = uniform(-2.0, 2.0);
      m.m21 = uniform(-2.0, 2.0);
      m.m22 = uniform(-2.0, 2.0);
      m.tx = uniform(-5.0, 5.0);
      m.ty = uniform(-5.0, 5.0);
      const double fro2 = m.m11 * m.m11 + m.m12 * m.m12 + m.m21 * m.m21 + m.m22 * m.m22;
      if (std::abs(m.det()) > 0.2 * fro2) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace inconic::testing
