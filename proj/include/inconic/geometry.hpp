#pragma once

#include <array>
#include <cmath>
#include <span>

#include <Eigen/Core>

#include "inconic/tolerances.hpp"

namespace inconic {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return 0.5 * (a + b); }

/// Homogeneous point; w == 0 is a point at infinity.
struct HomPoint {
  double x = 0.0;
  double y = 0.0;
  double w = 1.0;

  bool at_infinity() const { return w == 0.0; }
  Point affine() const { return {x / w, y / w}; }
  Eigen::Vector3d vec() const { return {x, y, w}; }
};

/// Line a*x + b*y + c = 0 with a^2 + b^2 = 1 and the first nonzero of (a, b) positive.
class Line {
 public:
  /// Throws ErrorCode::InvalidArgument when (a, b) vanishes.
  static Line from_coefficients(double a, double b, double c);
  static Line through(Point p, Point q);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  Eigen::Vector3d vec() const { return {a_, b_, c_}; }

  /// Signed distance of p from the line.
  double eval(Point p) const { return a_ * p.x + b_ * p.y + c_; }

 private:
  Line(double a, double b, double c) : a_(a), b_(b), c_(c) {}
  double a_, b_, c_;
};

/// p -> M p + t
struct AffineMap {
  double m11 = 1.0, m12 = 0.0;
  double m21 = 0.0, m22 = 1.0;
  double tx = 0.0, ty = 0.0;

  static AffineMap identity() { return {}; }

  double det() const { return m11 * m22 - m12 * m21; }
  Point apply(Point p) const { return {m11 * p.x + m12 * p.y + tx, m21 * p.x + m22 * p.y + ty}; }
  Point apply_linear(Point p) const { return {m11 * p.x + m12 * p.y, m21 * p.x + m22 * p.y}; }

  /// Throws ErrorCode::SingularMap when |det| <= tol.det.
  AffineMap inverse(const Tolerances& tol = {}) const;

  /// 3x3 homogeneous matrix acting on column points.
  Eigen::Matrix3d matrix() const;
};

/// (outer ∘ inner)(p) = outer(inner(p))
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

enum class QuadKind { Trapezium, Trapezoid, Parallelogram };

const char* to_string(QuadKind kind) noexcept;

/// Strictly convex quadrilateral, counterclockwise, starting at the
/// lexicographically smallest vertex. Only validate_quad builds one.
class ConvexQuad {
 public:
  const std::array<Point, 4>& vertices() const { return v_; }
  Point vertex(int i) const { return v_[static_cast<std::size_t>(i & 3)]; }
  QuadKind kind() const { return kind_; }

  bool contains_strictly(Point p, double margin = 0.0) const;

 private:
  friend ConvexQuad validate_quad(std::span<const Point, 4>, const Tolerances&);
  ConvexQuad(std::array<Point, 4> v, QuadKind k) : v_(v), kind_(k) {}
  std::array<Point, 4> v_;
  QuadKind kind_;
};

/// Accepts the vertices in either cyclic orientation.
ConvexQuad validate_quad(std::span<const Point, 4> vertices, const Tolerances& tol = {});

/// The four side lines as (v0v1, v0v3, v1v2, v3v2): the two lines through v0
/// first, then the lines through v1 and v3 that meet at v2.
std::array<Line, 4> side_lines(const ConvexQuad& q);

/// Implicit conic A x^2 + B xy + C y^2 + D x + E y + F = 0, kept at canonical
/// scale: unit Frobenius norm of the symmetric matrix, first significant
/// coefficient positive.
class Conic {
 public:
  static Conic from_coefficients(double A, double B, double C, double D, double E, double F);
  static Conic from_matrix(const Eigen::Matrix3d& m);

  double A() const { return k_[0]; }
  double B() const { return k_[1]; }
  double C() const { return k_[2]; }
  double D() const { return k_[3]; }
  double E() const { return k_[4]; }
  double F() const { return k_[5]; }
  const std::array<double, 6>& coefficients() const { return k_; }

  Eigen::Matrix3d matrix() const;
  double eval(Point p) const;

 private:
  explicit Conic(std::array<double, 6> k) : k_(k) {}
  std::array<double, 6> k_;
};

/// Frobenius distance between canonical matrices, minimized over the sign.
double conic_distance(const Conic& a, const Conic& b);

enum class ConicKind { RealEllipse, Hyperbola, Parabola, DegenerateLines, ImaginaryEllipse };

const char* to_string(ConicKind kind) noexcept;

struct EllipseGeo {
  Point center;
  double semi_major = 1.0;
  double semi_minor = 1.0;
  double angle = 0.0;  ///< major-axis direction in (-pi/2, pi/2]
  Point focus1;        ///< center + c (cos angle, sin angle)
  Point focus2;

  /// Normalizes the angle, swaps axes if needed and fills in the foci.
  static EllipseGeo make(Point center, double a, double b, double angle);

  double area() const;
  Point point_at(double theta) const;
};

Conic conic_from_ellipse(const EllipseGeo& e);

/// Throws ErrorCode::NotAnEllipse unless the conic is a real ellipse.
EllipseGeo ellipse_from_conic(const Conic& c, const Tolerances& tol = {});

ConicKind classify_conic(const Conic& c, const Tolerances& tol = {});

/// Center of a central conic (gradient = 0). Throws NotAnEllipse for parabolas.
Point conic_center(const Conic& c, const Tolerances& tol = {});

/// Zero set of the result is T applied to the zero set of c.
Conic transform_conic(const Conic& c, const AffineMap& T, const Tolerances& tol = {});

Eigen::Matrix3d adjugate(const Eigen::Matrix3d& m);

/// l^T adj(M) l / ||adj(M)||; vanishes iff l is tangent, asymptotes included.
double tangency_residual(const Conic& c, const Line& l);

/// Pole of a tangent line; w == 0 exactly when the contact is at infinity.
/// Throws ErrorCode::NotTangent when the residual exceeds tol.tangency.
HomPoint tangency_point(const Conic& c, const Line& l, const Tolerances& tol = {});

/// Ellipse with the given foci through p. Throws DegeneratePoint when p lies
/// on the closed focal segment.
EllipseGeo ellipse_from_foci_point(Point f1, Point f2, Point p);

}  // namespace inconic
