#include "inconic/inscribed.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "inconic/error.hpp"
#include "inconic/pencil.hpp"

namespace inconic {

namespace {

bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

double quad_scale(const ConvexQuad& q) {
  double s = 0.0;
  for (const Point& p : q.vertices()) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return 1.0 + s;
}

void require_locus_point(const LocusSegment& z, Point center, const Tolerances& tol) {
  const LocusCoordinate c = locus_coordinate(z, center);
  if (!(c.offset <= tol.on_line)) {
    throw Error(ErrorCode::CenterOffLocus,
                "center is off the Newton line by " + std::to_string(c.offset) + " (relative)");
  }
  if (!(c.u > tol.interval && c.u < 1.0 - tol.interval)) {
    throw Error(ErrorCode::CenterOffLocus,
                "center parameter u = " + std::to_string(c.u) + " is outside the open segment");
  }
}

std::array<HomPoint, 4> contacts(const Conic& c, const std::array<Line, 4>& sides,
                                 const Tolerances& tol) {
  std::array<HomPoint, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const double res = tangency_residual(c, sides[i]);
    if (!(res < tol.tangency)) {
      throw Error(ErrorCode::NumericalFailure,
                  "side " + std::to_string(i) + " tangency residual " + std::to_string(res));
    }
    out[i] = tangency_point(c, sides[i], tol);
  }
  return out;
}

// Marden construction in the normalized frame; returns the conic there.
Conic normalized_marden_conic(const NormalForm& nf, double h, InscribedResult& out,
                              const Tolerances& tol) {
  const auto [wt, ws] = weights_from_center(nf, h, tol);
  out.weights_t = wt;
  out.weights_s = ws;

  const MonicQuadratic mq = foci_quadratic(nf, h, tol);
  const auto [f1, f2] = roots(mq);

  // E1 from T1 alone must already have the same foci.
  const EllipseGeo e1 = marden_ellipse(triangle_t1(nf), wt, tol);
  const double focal_gap = std::min(
      distance(e1.focus1, to_point(f1)) + distance(e1.focus2, to_point(f2)),
      distance(e1.focus1, to_point(f2)) + distance(e1.focus2, to_point(f1)));
  if (!(focal_gap <= 1e-8 * (1.0 + std::abs(f1) + std::abs(f2)))) {
    throw Error(ErrorCode::NumericalFailure, "E1 foci disagree with the shared quadratic");
  }

  const Point contact{0.0, shared_contact_y(nf, h)};
  return conic_from_ellipse(ellipse_from_foci_point(to_point(f1), to_point(f2), contact));
}

}  // namespace

LocusSegment locus(const ConvexQuad& q) {
  Point a = midpoint(q.vertex(0), q.vertex(2));
  Point b = midpoint(q.vertex(1), q.vertex(3));
  if (lex_less(b, a)) std::swap(a, b);
  LocusSegment z{a, b, false};
  z.degenerate = q.kind() == QuadKind::Parallelogram || distance(a, b) == 0.0;
  return z;
}

LocusCoordinate locus_coordinate(const LocusSegment& z, Point p) {
  const Point d = z.m2 - z.m1;
  const double len2 = dot(d, d);
  if (len2 == 0.0) {
    return {0.0, std::numeric_limits<double>::infinity()};
  }
  const Point r = p - z.m1;
  return {dot(r, d) / len2, std::abs(cross(d, r)) / len2};
}

NewtonLine locus_line(const NormalForm& nf) {
  const double s = nf.s, t = nf.t;
  if (nf.kind != QuadKind::Trapezium) {
    throw Error(ErrorCode::TrapezoidForm, "normal form has a parallel pair; use the pencil path");
  }
  NewtonLine l;
  l.slope = (t - 1.0) / (s - 1.0);
  l.intercept = (s - t) / (2.0 * (s - 1.0));
  l.lo = std::min(0.5, 0.5 * s);
  l.hi = std::max(0.5, 0.5 * s);
  return l;
}

TriangleZ triangle_t1(const NormalForm& nf) {
  return TriangleZ::make(0.0, 1.0, ComplexPoint(0.0, -nf.t / (nf.s - 1.0)));
}

TriangleZ triangle_t2(const NormalForm& nf) {
  return TriangleZ::make(0.0, ComplexPoint(0.0, 1.0), -nf.s / (nf.t - 1.0));
}

std::pair<WeightTriple, WeightTriple> weights_from_center(const NormalForm& nf, double h,
                                                          const Tolerances& tol) {
  const NewtonLine line = locus_line(nf);
  if (!line.contains(h, tol.interval)) {
    throw Error(ErrorCode::CenterOffLocus,
                "h = " + std::to_string(h) + " is outside the open interval I");
  }
  return center_weights(nf.s, nf.t, h);
}

double shared_contact_y(const NormalForm& nf, double h) {
  return (nf.s - 2.0 * h) / (2.0 * h * (nf.s - 1.0));
}

MonicQuadratic foci_quadratic(const NormalForm& nf, double h, const Tolerances& tol) {
  const auto [wt, ws] = weights_from_center(nf, h, tol);
  const NewtonLine line = locus_line(nf);
  const MonicQuadratic shared{2.0 * ComplexPoint(h, line(h)),
                              ComplexPoint(0.0, (nf.s - 2.0 * h) / (nf.s - 1.0))};

  const MonicQuadratic p = focal_quadratic(triangle_t1(nf), wt);
  const MonicQuadratic q = focal_quadratic(triangle_t2(nf), ws);
  const double scale = 1.0 + std::abs(shared.sum) + std::abs(shared.product);
  for (const MonicQuadratic* m : {&p, &q}) {
    const double gap = std::abs(m->sum - shared.sum) + std::abs(m->product - shared.product);
    if (!(gap <= 1e-10 * scale)) {
      throw Error(ErrorCode::NumericalFailure,
                  "triangle focal quadratics differ by " + std::to_string(gap));
    }
  }
  return shared;
}

InscribedResult inscribe_at_center(const ConvexQuad& q, Point center, const Tolerances& tol) {
  if (q.kind() == QuadKind::Parallelogram) {
    throw Error(ErrorCode::ParallelogramUnsupported,
                "inscribed ellipses of a parallelogram are not unique");
  }
  require_locus_point(locus(q), center, tol);

  InscribedResult out;
  Conic conic = out.conic;
  if (q.kind() == QuadKind::Trapezium) {
    const NormalForm nf = normalize(q, tol);
    const Point hk = nf.to_normal.apply(center);
    const double scale = 1.0 + std::abs(hk.x) + std::abs(hk.y);
    if (!(std::abs(hk.y - locus_line(nf)(hk.x)) <= tol.on_line * scale)) {
      throw Error(ErrorCode::CenterOffLocus, "normalized center is off L");
    }
    conic = transform_conic(normalized_marden_conic(nf, hk.x, out, tol), nf.from_normal, tol);
  } else {
    conic = member_with_center(pencil_from_quad(q, tol), center, tol);
  }

  out.conic = conic;
  out.tangencies = contacts(conic, side_lines(q), tol);
  try {
    out.ellipse = ellipse_from_conic(conic, tol);
  } catch (const Error& e) {
    throw Error(ErrorCode::NumericalFailure, e.what());
  }
  const double err = distance(out.ellipse.center, center);
  if (!(err <= tol.center * quad_scale(q))) {
    throw Error(ErrorCode::NumericalFailure, "center error " + std::to_string(err));
  }
  return out;
}

InscribedResult inscribe_at_param(const ConvexQuad& q, double u, const Tolerances& tol) {
  if (q.kind() == QuadKind::Parallelogram) {
    throw Error(ErrorCode::ParallelogramUnsupported,
                "inscribed ellipses of a parallelogram are not unique");
  }
  if (!(u > tol.interval && u < 1.0 - tol.interval)) {
    throw Error(ErrorCode::CenterOffLocus, "u = " + std::to_string(u) + " must lie in (0, 1)");
  }
  return inscribe_at_center(q, locus(q).at(u), tol);
}

ChordX chord_x(const ConvexQuad& q) {
  const LocusSegment z = locus(q);
  if (z.degenerate) {
    throw Error(ErrorCode::ParallelogramUnsupported, "Newton line is undefined");
  }
  const Point d = z.m2 - z.m1;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) {
    const Point a = q.vertex(i);
    const Point e = q.vertex(i + 1) - a;
    // Interior side: cross(e, p - a) > 0 for a counterclockwise quad.
    const double base = cross(e, z.m1 - a);
    const double rate = cross(e, d);
    if (rate > 0.0) lo = std::max(lo, -base / rate);
    if (rate < 0.0) hi = std::min(hi, -base / rate);
  }
  return {z.at(lo), z.at(hi), lo, hi};
}

TangentConic tangent_conic_at_center(const ConvexQuad& q, Point center, const Tolerances& tol) {
  if (q.kind() == QuadKind::Parallelogram) {
    throw Error(ErrorCode::ParallelogramUnsupported, "Newton line is undefined");
  }
  const LocusSegment z = locus(q);
  const ChordX chord = chord_x(q);
  const LocusCoordinate c = locus_coordinate(z, center);
  const double margin = tol.interval * (chord.u_end - chord.u_start);
  if (!(c.offset <= tol.on_line) || !(c.u > chord.u_start + margin) ||
      !(c.u < chord.u_end - margin)) {
    throw Error(ErrorCode::CenterOffChord, "center is not on the open chord");
  }
  if (std::abs(c.u) <= tol.interval || std::abs(c.u - 1.0) <= tol.interval) {
    throw Error(ErrorCode::DegenerateAtMidpoint, "center coincides with a diagonal midpoint");
  }

  TangentConic out;
  try {
    out.conic = member_with_center(pencil_from_quad(q, tol), center, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateMember) {
      throw Error(ErrorCode::DegenerateAtMidpoint, e.what());
    }
    throw;
  }
  out.kind = classify_conic(out.conic, tol);
  out.tangencies = contacts(out.conic, side_lines(q), tol);
  return out;
}

}  // namespace inconic
