#include "inconic/marden.hpp"

#include <algorithm>
#include <string>

#include "inconic/error.hpp"

namespace inconic {

TriangleZ TriangleZ::make(ComplexPoint z1, ComplexPoint z2, ComplexPoint z3) {
  const Point a = to_point(z1), b = to_point(z2), c = to_point(z3);
  const double longest = std::max({distance(a, b), distance(b, c), distance(a, c)});
  if (!(std::abs(cross(b - a, c - a)) > 1e-12 * longest * longest)) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle vertices are collinear");
  }
  return TriangleZ({z1, z2, z3});
}

std::array<Line, 3> TriangleZ::side_lines() const {
  const Point a = to_point(z_[0]), b = to_point(z_[1]), c = to_point(z_[2]);
  return {Line::through(b, c), Line::through(a, c), Line::through(a, b)};
}

MonicQuadratic focal_quadratic(const TriangleZ& tri, const WeightTriple& w) {
  const ComplexPoint z1 = tri.z1(), z2 = tri.z2(), z3 = tri.z3();
  // Leading coefficient is t1 + t2 + t3 = 1.
  return {w.t1() * (z2 + z3) + w.t2() * (z1 + z3) + w.t3() * (z1 + z2),
          w.t1() * z2 * z3 + w.t2() * z1 * z3 + w.t3() * z1 * z2};
}

std::pair<ComplexPoint, ComplexPoint> roots(const MonicQuadratic& p) {
  const ComplexPoint b = -p.sum;
  ComplexPoint sq = std::sqrt(b * b - 4.0 * p.product);
  // Pick the branch that adds to b instead of cancelling against it.
  if ((std::conj(b) * sq).real() < 0.0) sq = -sq;
  const ComplexPoint q = -0.5 * (b + sq);
  if (q == ComplexPoint{}) return {q, q};
  return {q, p.product / q};
}

std::pair<ComplexPoint, ComplexPoint> foci_from_weights(const TriangleZ& tri,
                                                        const WeightTriple& w) {
  const double lead = w.t1() + w.t2() + w.t3();
  if (!(std::abs(lead - 1.0) < 1e-12)) {
    throw Error(ErrorCode::DegenerateFoci, "weights do not sum to one");
  }
  return roots(focal_quadratic(tri, w));
}

bool marden_validity(const WeightTriple& w) { return w.product() > 0.0; }

namespace {

ComplexPoint weighted_contact(double ti, ComplexPoint zi, double tj, ComplexPoint zj,
                              const Tolerances& tol, const char* which) {
  const double sum = ti + tj;
  if (std::abs(sum) <= tol.pair * (std::abs(ti) + std::abs(tj))) {
    throw Error(ErrorCode::AsymptoteContact, std::string(which) + " is at infinity");
  }
  return (ti * zj + tj * zi) / sum;
}

}  // namespace

std::array<ComplexPoint, 3> tangent_points(const TriangleZ& tri, const WeightTriple& w,
                                           const Tolerances& tol) {
  // zeta_k = (t_i z_j + t_j z_i) / (t_i + t_j) on the side opposite z_k.
  return {weighted_contact(w.t2(), tri.z2(), w.t3(), tri.z3(), tol, "zeta1"),
          weighted_contact(w.t1(), tri.z1(), w.t3(), tri.z3(), tol, "zeta2"),
          weighted_contact(w.t1(), tri.z1(), w.t2(), tri.z2(), tol, "zeta3")};
}

EllipseGeo marden_ellipse(const TriangleZ& tri, const WeightTriple& w, const Tolerances& tol) {
  if (!marden_validity(w)) {
    throw Error(ErrorCode::NotEllipse, "t1 t2 t3 must be positive");
  }
  const auto zeta = tangent_points(tri, w, tol);
  const auto [f1, f2] = foci_from_weights(tri, w);
  const EllipseGeo e = ellipse_from_foci_point(to_point(f1), to_point(f2), to_point(zeta[0]));

  const Conic c = conic_from_ellipse(e);
  for (const Line& l : tri.side_lines()) {
    if (!(tangency_residual(c, l) < tol.tangency)) {
      throw Error(ErrorCode::NumericalFailure,
                  "Marden ellipse misses a side line, residual " +
                      std::to_string(tangency_residual(c, l)));
    }
  }
  return e;
}

}  // namespace inconic
