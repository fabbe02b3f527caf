#include "inconic/area.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "inconic/error.hpp"
#include "inconic/inscribed.hpp"

namespace inconic {

double triangle_area(Point a, Point b, Point c) { return 0.5 * std::abs(cross(b - a, c - a)); }

AreaTriple area_triple(Point a, Point b, Point c, Point p) {
  AreaTriple r;
  r.alpha = triangle_area(b, p, c);
  r.beta = triangle_area(c, p, a);
  r.gamma = triangle_area(a, p, b);
  r.sigma = 0.5 * (r.alpha + r.beta + r.gamma);
  return r;
}

double triangle_tangent_ellipse_area(Point a, Point b, Point c, Point p) {
  const double abc = triangle_area(a, b, c);
  const double longest = std::max({distance(a, b), distance(b, c), distance(a, c)});
  if (!(abc > 1e-12 * longest * longest)) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
  }
  const AreaTriple r = area_triple(a, b, c, p);
  const double product = r.heron_product();
  // On a side line one sub-area vanishes and the product drops to <= 0.
  if (std::min({r.alpha, r.beta, r.gamma}) <= 1e-12 * abc || !(product > 0.0)) {
    throw Error(ErrorCode::NoRealEllipse, "no real ellipse with this center is tangent to all sides");
  }
  return 4.0 * std::numbers::pi / abc * std::sqrt(product);
}

double area_cubic(const NormalForm& nf, double h) { return area_cubic(nf.s, nf.t, h); }

std::array<double, 4> area_cubic_coefficients(double s, double t) {
  // (s - 2h)(-1 + 2h)(s + 2(t-1) h)
  const std::array<double, 2> f{s, -2.0}, g{-1.0, 2.0}, k{s, 2.0 * (t - 1.0)};
  std::array<double, 3> fg{f[0] * g[0], f[0] * g[1] + f[1] * g[0], f[1] * g[1]};
  return {fg[0] * k[0], fg[0] * k[1] + fg[1] * k[0], fg[1] * k[1] + fg[2] * k[0], fg[2] * k[1]};
}

std::array<double, 2> area_critical_points(const NormalForm& nf) {
  if (nf.kind != QuadKind::Trapezium) {
    throw Error(ErrorCode::TrapezoidForm, "A'(h) is linear when t = 1");
  }
  const auto c = area_cubic_coefficients(nf.s, nf.t);
  const double a = 3.0 * c[3], b = 2.0 * c[2], cc = c[1];
  const double disc = b * b - 4.0 * a * cc;
  if (!(disc >= 0.0)) {
    throw Error(ErrorCode::NumericalFailure, "A'(h) has no real roots");
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::array<double, 2> r{q / a, cc / q};
  if (r[0] > r[1]) std::swap(r[0], r[1]);
  return r;
}

double inscribed_area(const NormalForm& nf, double h, const Tolerances& tol) {
  const double lo = std::min(0.5, 0.5 * nf.s), hi = std::max(0.5, 0.5 * nf.s);
  const double margin = tol.interval * (hi - lo);
  if (!(h > lo + margin && h < hi - margin)) {
    throw Error(ErrorCode::CenterOffLocus, "h = " + std::to_string(h) + " is outside I");
  }
  return std::numbers::pi / (2.0 * std::abs(nf.s - 1.0)) *
         std::sqrt(std::max(0.0, area_cubic(nf, h)));
}

namespace {

MaxAreaResult trapezium_max(const ConvexQuad& q, const Tolerances& tol) {
  const NormalForm nf = normalize(q, tol);
  const NewtonLine line = locus_line(nf);
  const auto roots = area_critical_points(nf);

  int inside = 0;
  double h0 = 0.0;
  for (double r : roots) {
    if (r > line.lo && r < line.hi) {
      ++inside;
      h0 = r;
    }
  }
  if (inside != 1) {
    throw Error(ErrorCode::NumericalFailure,
                std::to_string(inside) + " critical points of A(h) inside I, expected 1");
  }

  const Point center = nf.from_normal.apply({h0, line(h0)});
  const InscribedResult ins = inscribe_at_center(q, center, tol);
  return {ins.ellipse, center, ins.ellipse.area(), h0};
}

MaxAreaResult trapezoid_max(const ConvexQuad& q, const Tolerances& tol) {
  const LocusSegment z = locus(q);
  auto area_at = [&](double u) { return inscribe_at_param(q, u, tol).ellipse.area(); };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = area_at(x1), f2 = area_at(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = area_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = area_at(x1);
    }
  }
  const double u = 0.5 * (lo + hi);
  const Point center = z.at(u);
  const InscribedResult ins = inscribe_at_center(q, center, tol);
  const double h0 = normalize(q, tol).to_normal.apply(center).x;
  return {ins.ellipse, center, ins.ellipse.area(), h0};
}

}  // namespace

MaxAreaResult max_area(const ConvexQuad& q, const Tolerances& tol) {
  switch (q.kind()) {
    case QuadKind::Trapezium: return trapezium_max(q, tol);
    case QuadKind::Trapezoid: return trapezoid_max(q, tol);
    case QuadKind::Parallelogram: break;
  }
  throw Error(ErrorCode::ParallelogramUnsupported, "inscribed ellipses of a parallelogram are not unique");
}

}  // namespace inconic
