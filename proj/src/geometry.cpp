#include "inconic/geometry.hpp"

#include <algorithm>
#include <numbers>

#include <Eigen/Dense>

#include "inconic/error.hpp"

namespace inconic {

// ---------------------------------------------------------------- Line

Line Line::from_coefficients(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw Error(ErrorCode::InvalidArgument, "line needs a nonzero, finite normal");
  }
  a /= n;
  b /= n;
  c /= n;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line(a, b, c);
}

Line Line::through(Point p, Point q) {
  return from_coefficients(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

// ---------------------------------------------------------------- AffineMap

AffineMap AffineMap::inverse(const Tolerances& tol) const {
  const double d = det();
  if (!(std::abs(d) > tol.det)) {
    throw Error(ErrorCode::SingularMap, "affine map is not invertible");
  }
  AffineMap inv;
  inv.m11 = m22 / d;
  inv.m12 = -m12 / d;
  inv.m21 = -m21 / d;
  inv.m22 = m11 / d;
  inv.tx = -(inv.m11 * tx + inv.m12 * ty);
  inv.ty = -(inv.m21 * tx + inv.m22 * ty);
  return inv;
}

Eigen::Matrix3d AffineMap::matrix() const {
  Eigen::Matrix3d h;
  h << m11, m12, tx, m21, m22, ty, 0.0, 0.0, 1.0;
  return h;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  AffineMap r;
  r.m11 = outer.m11 * inner.m11 + outer.m12 * inner.m21;
  r.m12 = outer.m11 * inner.m12 + outer.m12 * inner.m22;
  r.m21 = outer.m21 * inner.m11 + outer.m22 * inner.m21;
  r.m22 = outer.m21 * inner.m12 + outer.m22 * inner.m22;
  const Point t = outer.apply(Point{inner.tx, inner.ty});
  r.tx = t.x;
  r.ty = t.y;
  return r;
}

// ---------------------------------------------------------------- ConvexQuad

const char* to_string(QuadKind kind) noexcept {
  switch (kind) {
    case QuadKind::Trapezium: return "trapezium";
    case QuadKind::Trapezoid: return "trapezoid";
    case QuadKind::Parallelogram: return "parallelogram";
  }
  return "unknown";
}

bool ConvexQuad::contains_strictly(Point p, double margin) const {
  for (int i = 0; i < 4; ++i) {
    const Point a = vertex(i);
    const Point e = vertex(i + 1) - a;
    if (!(cross(e, p - a) / norm(e) > margin)) return false;
  }
  return true;
}

ConvexQuad validate_quad(std::span<const Point, 4> in, const Tolerances& tol) {
  std::array<Point, 4> v;
  std::copy(in.begin(), in.end(), v.begin());

  double scale = 0.0;
  for (const Point& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::InvalidArgument, "vertex coordinates must be finite");
    }
    for (const Point& q : v) scale = std::max(scale, distance(p, q));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (distance(v[i], v[j]) <= 1e-12 * scale || scale == 0.0) {
        throw Error(ErrorCode::DegenerateQuad, "repeated vertex");
      }
    }
  }

  double twice_area = 0.0;
  double max_triangle = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    twice_area += cross(v[i], v[(i + 1) % 4]);
    max_triangle = std::max(
        max_triangle, std::abs(cross(v[(i + 1) % 4] - v[i], v[(i + 2) % 4] - v[i])));
  }
  if (max_triangle <= tol.parallel * scale * scale) {
    throw Error(ErrorCode::DegenerateQuad, "all four vertices are collinear");
  }
  if (twice_area < 0.0) std::reverse(v.begin(), v.end());

  for (std::size_t i = 0; i < 4; ++i) {
    const Point in_edge = v[i] - v[(i + 3) % 4];
    const Point out_edge = v[(i + 1) % 4] - v[i];
    if (!(cross(in_edge, out_edge) / (norm(in_edge) * norm(out_edge)) > tol.parallel)) {
      throw Error(ErrorCode::NotConvex, "vertex " + std::to_string(i) + " is not a strict left turn");
    }
  }

  const auto smallest = std::min_element(v.begin(), v.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::rotate(v.begin(), smallest, v.end());

  auto unit_edge = [&](std::size_t i) {
    const Point e = v[(i + 1) % 4] - v[i];
    return (1.0 / norm(e)) * e;
  };
  int parallel_pairs = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    if (std::abs(cross(unit_edge(i), unit_edge(i + 2))) <= tol.parallel) ++parallel_pairs;
  }
  const QuadKind kind = parallel_pairs == 0   ? QuadKind::Trapezium
                        : parallel_pairs == 1 ? QuadKind::Trapezoid
                                              : QuadKind::Parallelogram;
  return ConvexQuad(v, kind);
}

std::array<Line, 4> side_lines(const ConvexQuad& q) {
  const auto& v = q.vertices();
  return {Line::through(v[0], v[1]), Line::through(v[0], v[3]), Line::through(v[1], v[2]),
          Line::through(v[3], v[2])};
}

// ---------------------------------------------------------------- Conic

Conic Conic::from_matrix(const Eigen::Matrix3d& m) {
  const Eigen::Matrix3d s = 0.5 * (m + m.transpose());
  const double n = s.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidArgument, "conic matrix must be finite and nonzero");
  }
  std::array<double, 6> k = {s(0, 0) / n,       2.0 * s(0, 1) / n, s(1, 1) / n,
                             2.0 * s(0, 2) / n, 2.0 * s(1, 2) / n, s(2, 2) / n};
  // Coefficients below this are treated as rounding noise for the sign rule.
  constexpr double kSignificant = 1e-12;
  const auto first = std::find_if(k.begin(), k.end(),
                                  [](double c) { return std::abs(c) > kSignificant; });
  if (first != k.end() && *first < 0.0) {
    for (double& c : k) c = -c;
  }
  for (double& c : k) {
    if (c == 0.0) c = 0.0;  // drop negative zero
  }
  return Conic(k);
}

Conic Conic::from_coefficients(double A, double B, double C, double D, double E, double F) {
  Eigen::Matrix3d m;
  m << A, B / 2, D / 2, B / 2, C, E / 2, D / 2, E / 2, F;
  return from_matrix(m);
}

Eigen::Matrix3d Conic::matrix() const {
  Eigen::Matrix3d m;
  m << k_[0], k_[1] / 2, k_[3] / 2, k_[1] / 2, k_[2], k_[4] / 2, k_[3] / 2, k_[4] / 2, k_[5];
  return m;
}

double Conic::eval(Point p) const {
  return k_[0] * p.x * p.x + k_[1] * p.x * p.y + k_[2] * p.y * p.y + k_[3] * p.x + k_[4] * p.y +
         k_[5];
}

double conic_distance(const Conic& a, const Conic& b) {
  const Eigen::Matrix3d ma = a.matrix();
  const Eigen::Matrix3d mb = b.matrix();
  return std::min((ma - mb).norm(), (ma + mb).norm());
}

const char* to_string(ConicKind kind) noexcept {
  switch (kind) {
    case ConicKind::RealEllipse: return "ellipse";
    case ConicKind::Hyperbola: return "hyperbola";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::DegenerateLines: return "degenerate";
    case ConicKind::ImaginaryEllipse: return "imaginary_ellipse";
  }
  return "unknown";
}

ConicKind classify_conic(const Conic& c, const Tolerances& tol) {
  const Eigen::Matrix3d m = c.matrix();
  const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(
                                 m, Eigen::EigenvaluesOnly)
                                 .eigenvalues();
  const double big = ev.cwiseAbs().maxCoeff();
  if (ev.cwiseAbs().minCoeff() <= tol.classify * big) return ConicKind::DegenerateLines;

  const Eigen::Vector2d q = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(
                                m.topLeftCorner<2, 2>(), Eigen::EigenvaluesOnly)
                                .eigenvalues();
  const double qbig = q.cwiseAbs().maxCoeff();
  if (q.cwiseAbs().minCoeff() <= tol.classify * qbig) return ConicKind::Parabola;
  if (q(0) * q(1) < 0.0) return ConicKind::Hyperbola;
  // Definite quadratic part: real iff det(M) has the opposite sign to the trace of Q.
  return m.determinant() * (q(0) + q(1)) < 0.0 ? ConicKind::RealEllipse
                                               : ConicKind::ImaginaryEllipse;
}

Point conic_center(const Conic& c, const Tolerances& tol) {
  const Eigen::Matrix3d m = c.matrix();
  const Eigen::Matrix2d q = m.topLeftCorner<2, 2>();
  const double d = q.determinant();
  if (!(std::abs(d) > tol.classify * q.squaredNorm())) {
    throw Error(ErrorCode::NotAnEllipse, "conic has no finite center");
  }
  const Eigen::Vector2d ctr = q.inverse() * (-m.topRightCorner<2, 1>());
  return {ctr(0), ctr(1)};
}

// ---------------------------------------------------------------- EllipseGeo

EllipseGeo EllipseGeo::make(Point center, double a, double b, double angle) {
  if (b > a) {
    std::swap(a, b);
    angle += std::numbers::pi / 2;
  }
  angle = std::remainder(angle, std::numbers::pi);
  if (angle <= -std::numbers::pi / 2) angle += std::numbers::pi;
  if (a - b <= 1e-15 * a) angle = 0.0;

  EllipseGeo e;
  e.center = center;
  e.semi_major = a;
  e.semi_minor = b;
  e.angle = angle;
  const double c = std::sqrt(std::max(0.0, (a - b) * (a + b)));
  const Point u{std::cos(angle), std::sin(angle)};
  e.focus1 = center + c * u;
  e.focus2 = center - c * u;
  return e;
}

double EllipseGeo::area() const { return std::numbers::pi * semi_major * semi_minor; }

Point EllipseGeo::point_at(double theta) const {
  const double ca = std::cos(angle), sa = std::sin(angle);
  const double x = semi_major * std::cos(theta), y = semi_minor * std::sin(theta);
  return {center.x + ca * x - sa * y, center.y + sa * x + ca * y};
}

Conic conic_from_ellipse(const EllipseGeo& e) {
  const double ca = std::cos(e.angle), sa = std::sin(e.angle);
  Eigen::Matrix2d r;
  r << ca, -sa, sa, ca;
  const Eigen::Matrix2d q =
      r * Eigen::Vector2d(1.0 / (e.semi_major * e.semi_major),
                          1.0 / (e.semi_minor * e.semi_minor))
              .asDiagonal() *
      r.transpose();
  const Eigen::Vector2d c(e.center.x, e.center.y);
  Eigen::Matrix3d m;
  m.topLeftCorner<2, 2>() = q;
  m.topRightCorner<2, 1>() = -q * c;
  m.bottomLeftCorner<1, 2>() = (-q * c).transpose();
  m(2, 2) = c.dot(q * c) - 1.0;
  return Conic::from_matrix(m);
}

EllipseGeo ellipse_from_conic(const Conic& c, const Tolerances& tol) {
  if (classify_conic(c, tol) != ConicKind::RealEllipse) {
    throw Error(ErrorCode::NotAnEllipse, std::string("conic is a ") + to_string(classify_conic(c, tol)));
  }
  Eigen::Matrix3d m = c.matrix();
  if (m(0, 0) + m(1, 1) < 0.0) m = -m;

  const Point ctr = conic_center(c, tol);
  const double p = m(0, 0), r = m(0, 1), q = m(1, 1);
  // Value of the quadratic form at the center; negative for a real ellipse.
  const double f0 = m(2, 2) + m(0, 2) * ctr.x + m(1, 2) * ctr.y;
  const double mean = 0.5 * (p + q);
  const double rad = std::hypot(0.5 * (p - q), r);
  const double mu_big = mean + rad;
  const double mu_small = (p * q - r * r) / mu_big;
  if (!(f0 < 0.0) || !(mu_small > 0.0)) {
    throw Error(ErrorCode::NotAnEllipse, "conic has no real points");
  }
  const double a = std::sqrt(-f0 / mu_small);
  const double b = std::sqrt(-f0 / mu_big);
  const double minor_dir = 0.5 * std::atan2(2.0 * r, p - q);
  return EllipseGeo::make(ctr, a, b, minor_dir + std::numbers::pi / 2);
}

Conic transform_conic(const Conic& c, const AffineMap& T, const Tolerances& tol) {
  const Eigen::Matrix3d hinv = T.inverse(tol).matrix();
  return Conic::from_matrix(hinv.transpose() * c.matrix() * hinv);
}

Eigen::Matrix3d adjugate(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

double tangency_residual(const Conic& c, const Line& l) {
  const Eigen::Matrix3d adj = adjugate(c.matrix());
  const double n = adj.norm();
  if (n == 0.0) return 0.0;  // double line: every line meets it doubly
  const Eigen::Vector3d v = l.vec();
  return std::abs(v.dot(adj * v)) / n;
}

HomPoint tangency_point(const Conic& c, const Line& l, const Tolerances& tol) {
  const double res = tangency_residual(c, l);
  if (!(res < tol.tangency)) {
    throw Error(ErrorCode::NotTangent, "residual " + std::to_string(res));
  }
  const Eigen::Matrix3d adj = adjugate(c.matrix());
  Eigen::Vector3d pole = adj * l.vec();
  const double n = pole.norm();
  if (!(n > tol.det * adj.norm())) {
    throw Error(ErrorCode::NotTangent, "line passes through a singular point of the conic");
  }
  pole /= n;
  if (std::abs(pole(2)) <= tol.det) {
    double x = pole(0), y = pole(1);
    const double m = std::hypot(x, y);
    x /= m;
    y /= m;
    if (x < 0.0 || (x == 0.0 && y < 0.0)) {
      x = -x;
      y = -y;
    }
    return {x, y, 0.0};
  }
  return {pole(0) / pole(2), pole(1) / pole(2), 1.0};
}

EllipseGeo ellipse_from_foci_point(Point f1, Point f2, Point p) {
  const double a = 0.5 * (distance(p, f1) + distance(p, f2));
  const double c = 0.5 * distance(f1, f2);
  if (!(a - c > 1e-14 * a)) {
    throw Error(ErrorCode::DegeneratePoint, "point lies on the focal segment");
  }
  const double b = std::sqrt((a - c) * (a + c));
  const Point d = f1 - f2;
  const double angle = c > 1e-15 * a ? std::atan2(d.y, d.x) : 0.0;
  return EllipseGeo::make(midpoint(f1, f2), a, b, angle);
}

}  // namespace inconic
