#pragma once

#include <array>
#include <complex>
#include <utility>

#include "inconic/geometry.hpp"

namespace inconic {

/// Plane point read as a complex number x + iy.
using ComplexPoint = std::complex<double>;

inline ComplexPoint to_complex(Point p) { return {p.x, p.y}; }
inline Point to_point(ComplexPoint z) { return {z.real(), z.imag()}; }

/// Triangle with complex vertices; L1 = z2z3, L2 = z1z3, L3 = z1z2.
class TriangleZ {
 public:
  /// Throws ErrorCode::DegenerateTriangle for (near) collinear vertices.
  static TriangleZ make(ComplexPoint z1, ComplexPoint z2, ComplexPoint z3);

  ComplexPoint z1() const { return z_[0]; }
  ComplexPoint z2() const { return z_[1]; }
  ComplexPoint z3() const { return z_[2]; }
  const std::array<ComplexPoint, 3>& vertices() const { return z_; }

  /// Side lines in the order L1, L2, L3.
  std::array<Line, 3> side_lines() const;

 private:
  explicit TriangleZ(std::array<ComplexPoint, 3> z) : z_(z) {}
  std::array<ComplexPoint, 3> z_;
};

/// Weights (t1, t2, t3) with t3 = 1 - t1 - t2 fixed at construction.
/// Templated so exact rational arithmetic can be used in checks.
template <class T>
class BasicWeightTriple {
 public:
  static BasicWeightTriple from_pair(T t1, T t2) { return BasicWeightTriple(t1, t2); }

  const T& t1() const { return t1_; }
  const T& t2() const { return t2_; }
  const T& t3() const { return t3_; }
  T product() const { return t1_ * t2_ * t3_; }

 private:
  BasicWeightTriple(T t1, T t2) : t1_(t1), t2_(t2), t3_(T(1) - t1 - t2) {}
  T t1_, t2_, t3_;
};

using WeightTriple = BasicWeightTriple<double>;

/// z^2 - sum z + product
struct MonicQuadratic {
  ComplexPoint sum;
  ComplexPoint product;
};

/// Monic numerator of t1/(z-z1) + t2/(z-z2) + t3/(z-z3).
MonicQuadratic focal_quadratic(const TriangleZ& tri, const WeightTriple& w);

/// Both roots, using the cancellation-free form of the quadratic formula.
std::pair<ComplexPoint, ComplexPoint> roots(const MonicQuadratic& p);

/// Unordered pair of zeros of the partial-fraction sum.
std::pair<ComplexPoint, ComplexPoint> foci_from_weights(const TriangleZ& tri,
                                                        const WeightTriple& w);

/// t1 t2 t3 > 0: the tangent conic is an ellipse.
bool marden_validity(const WeightTriple& w);

/// Contact points (zeta1 on z2z3, zeta2 on z1z3, zeta3 on z1z2).
/// Throws ErrorCode::AsymptoteContact when some t_i + t_j vanishes.
std::array<ComplexPoint, 3> tangent_points(const TriangleZ& tri, const WeightTriple& w,
                                           const Tolerances& tol = {});

/// The ellipse with the zeros as foci passing through zeta1.
/// Throws NotEllipse when t1 t2 t3 <= 0.
EllipseGeo marden_ellipse(const TriangleZ& tri, const WeightTriple& w,
                          const Tolerances& tol = {});

}  // namespace inconic
