#pragma once

#include <array>

#include "inconic/geometry.hpp"
#include "inconic/normal_form.hpp"

namespace inconic {

/// Unsigned sub-triangle areas around P: alpha = BPC, beta = CPA, gamma = APB.
struct AreaTriple {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double sigma = 0.0;  ///< (alpha + beta + gamma) / 2

  double heron_product() const { return sigma * (sigma - alpha) * (sigma - beta) * (sigma - gamma); }
};

double triangle_area(Point a, Point b, Point c);

AreaTriple area_triple(Point a, Point b, Point c, Point p);

/// Area of the ellipse centered at p tangent to the three side lines of abc:
/// 4 pi / area(abc) * sqrt(sigma (sigma - alpha) (sigma - beta) (sigma - gamma)).
/// Holds for p inside or outside the triangle.
/// Throws DegenerateTriangle, or NoRealEllipse when the product is not positive.
double triangle_tangent_ellipse_area(Point a, Point b, Point c, Point p);

/// A(h) = (s - 2h)(2h - 1)(s + 2h(t - 1)).
template <class T>
T area_cubic(const T& s, const T& t, const T& h) {
  const T one(1), two(2);
  return (s - two * h) * (two * h - one) * (s + two * h * (t - one));
}

double area_cubic(const NormalForm& nf, double h);

/// Coefficients c0..c3 of A(h) in powers of h.
std::array<double, 4> area_cubic_coefficients(double s, double t);

/// Both real roots of A'(h), ascending. Trapezium normal forms only.
std::array<double, 2> area_critical_points(const NormalForm& nf);

/// Area pi / (2|s - 1|) sqrt(A(h)) of the inscribed ellipse centered at
/// (h, L(h)), normalized frame. Divide by nf.area_scale() for the original
/// frame. Throws CenterOffLocus when h is not strictly inside I.
double inscribed_area(const NormalForm& nf, double h, const Tolerances& tol = {});

struct MaxAreaResult {
  EllipseGeo ellipse;
  Point center;
  double area = 0.0;  ///< original frame
  double h0 = 0.0;    ///< normalized-frame abscissa of the center
};

/// The unique inscribed ellipse of maximal area.
/// Trapezia: closed-form root of A'(h). Trapezoids: golden-section search
/// along the locus. Throws ParallelogramUnsupported or NumericalFailure.
MaxAreaResult max_area(const ConvexQuad& q, const Tolerances& tol = {});

}  // namespace inconic
