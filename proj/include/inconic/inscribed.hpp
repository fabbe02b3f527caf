#pragma once

#include <array>
#include <optional>
#include <utility>

#include "inconic/geometry.hpp"
#include "inconic/marden.hpp"
#include "inconic/normal_form.hpp"

namespace inconic {

/// Open segment between the diagonal midpoints, m1 < m2 lexicographically.
struct LocusSegment {
  Point m1;
  Point m2;
  bool degenerate = false;  ///< parallelogram: m1 == m2

  Point at(double u) const { return m1 + u * (m2 - m1); }
};

LocusSegment locus(const ConvexQuad& q);

/// Parameter u of the projection of p onto line(m1, m2), and its distance
/// from that line relative to |m2 - m1|.
struct LocusCoordinate {
  double u = 0.0;
  double offset = 0.0;
};

LocusCoordinate locus_coordinate(const LocusSegment& z, Point p);

/// y = slope * x + intercept over the open interval (lo, hi), normalized frame.
struct NewtonLine {
  double slope = 0.0;
  double intercept = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  double operator()(double x) const { return slope * x + intercept; }
  bool contains(double h, double margin) const {
    const double w = hi - lo;
    return h > lo + margin * w && h < hi - margin * w;
  }
};

/// Throws ErrorCode::TrapezoidForm when s = 1 (vertical Newton line).
NewtonLine locus_line(const NormalForm& nf);

/// Weights that put the centers of both triangle ellipses at (h, L(h)).
/// Reduced forms of the center equations after substituting k = L(h).
template <class T>
std::pair<BasicWeightTriple<T>, BasicWeightTriple<T>> center_weights(const T& s, const T& t,
                                                                     const T& h) {
  const T one(1), two(2);
  const auto wt = BasicWeightTriple<T>::from_pair((two * h - s) / t, one - two * h);
  const auto ws = BasicWeightTriple<T>::from_pair((t - one) * (two * h - s) / (s * (s - one)),
                                                  (t - one) * (one - two * h) / (s - one));
  return {wt, ws};
}

/// Triangle of the lines y = 0, x = 0 and the side through (1,0), (s,t).
TriangleZ triangle_t1(const NormalForm& nf);
/// Triangle of the lines y = 0, x = 0 and the side through (0,1), (s,t).
TriangleZ triangle_t2(const NormalForm& nf);

/// Throws CenterOffLocus when h is not strictly inside I (margin tol.interval on u).
std::pair<WeightTriple, WeightTriple> weights_from_center(const NormalForm& nf, double h,
                                                          const Tolerances& tol = {});

/// z^2 - 2(h + i L(h)) z + i (s - 2h)/(s - 1), after checking that the focal
/// quadratics of both triangles reduce to it.
MonicQuadratic foci_quadratic(const NormalForm& nf, double h, const Tolerances& tol = {});

/// Contact point of both triangle ellipses on x = 0.
double shared_contact_y(const NormalForm& nf, double h);

struct InscribedResult {
  EllipseGeo ellipse;
  Conic conic = Conic::from_coefficients(1, 0, 1, 0, 0, -1);
  std::array<HomPoint, 4> tangencies;  ///< side_lines() order
  std::optional<WeightTriple> weights_t;  ///< empty on the trapezoid path
  std::optional<WeightTriple> weights_s;
};

/// The unique ellipse inscribed in q with the given center.
/// Throws CenterOffLocus, ParallelogramUnsupported or NumericalFailure.
InscribedResult inscribe_at_center(const ConvexQuad& q, Point center, const Tolerances& tol = {});

/// inscribe_at_center at m1 + u (m2 - m1), 0 < u < 1.
InscribedResult inscribe_at_param(const ConvexQuad& q, double u, const Tolerances& tol = {});

/// Open chord of the Newton line inside q, as parameters on the locus line.
struct ChordX {
  Point p_start;
  Point p_end;
  double u_start = 0.0;  ///< < 0
  double u_end = 0.0;    ///< > 1
};

ChordX chord_x(const ConvexQuad& q);

struct TangentConic {
  Conic conic = Conic::from_coefficients(1, 0, 1, 0, 0, -1);
  ConicKind kind = ConicKind::RealEllipse;
  std::array<HomPoint, 4> tangencies;  ///< w == 0 marks an asymptote
};

/// Conic tangent to all four side lines centered anywhere on the chord but
/// M1, M2: an ellipse on the locus, a hyperbola beyond it.
/// Throws CenterOffChord, DegenerateAtMidpoint or ParallelogramUnsupported.
TangentConic tangent_conic_at_center(const ConvexQuad& q, Point center,
                                     const Tolerances& tol = {});

}  // namespace inconic
