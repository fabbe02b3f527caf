#include <numbers>

#include <gtest/gtest.h>

#include "inconic/error.hpp"
#include "inconic/marden.hpp"
#include "support/oracles.hpp"
#include "support/random_quads.hpp"
#include "support/rational.hpp"

using namespace inconic;
using inconic::testing::Rational;

namespace {

// s = 3, t = 2 normal form triangles.
TriangleZ t1_ref() { return TriangleZ::make(0.0, 1.0, ComplexPoint(0.0, -1.0)); }
TriangleZ t2_ref() { return TriangleZ::make(0.0, ComplexPoint(0.0, 1.0), -3.0); }

bool matches_pair(std::pair<ComplexPoint, ComplexPoint> got, ComplexPoint a, ComplexPoint b,
                  double tol) {
  return inconic::testing::unordered_gap(to_point(got.first), to_point(got.second), to_point(a),
                                         to_point(b)) < tol;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(FociFromWeights, ReferenceTriangleT1) {
  const auto f = foci_from_weights(t1_ref(), WeightTriple::from_pair(-0.25, 1.5));
  EXPECT_TRUE(matches_pair(f, {-0.1957, -0.0496}, {-0.3043, -1.2004}, 2e-4));
}

TEST(FociFromWeights, ReferenceTriangleT2) {
  const auto f = foci_from_weights(t2_ref(), WeightTriple::from_pair(1.0 / 3.0, 0.5));
  EXPECT_TRUE(matches_pair(f, {-0.0159, 0.4019}, {-2.4841, 0.0981}, 2e-4));
}

TEST(FociFromWeights, SteinerWeightsMatchVieta) {
  const TriangleZ tri = TriangleZ::make(0.0, 1.0, ComplexPoint(0.0, 1.0));
  const auto f = foci_from_weights(tri, WeightTriple::from_pair(1.0 / 3.0, 1.0 / 3.0));
  // 3 z^2 - 2 (z1 + z2 + z3) z + (z1 z2 + z1 z3 + z2 z3)
  const auto r = inconic::testing::companion_roots(3.0, -2.0 * ComplexPoint(1.0, 1.0),
                                                   ComplexPoint(0.0, 1.0));
  EXPECT_TRUE(matches_pair(f, r[0], r[1], 1e-14));
}

TEST(Roots, SmallRootSurvivesCancellation) {
  const MonicQuadratic p{ComplexPoint(1e8, 0.0), ComplexPoint(1.0, 0.0)};
  const auto [a, b] = roots(p);
  const double small = std::min(std::abs(a), std::abs(b));
  EXPECT_NEAR(small, 1e-8, 1e-22);
}

TEST(MardenValidity, Examples) {
  EXPECT_TRUE(marden_validity(WeightTriple::from_pair(-0.25, 1.5)));
  EXPECT_TRUE(marden_validity(WeightTriple::from_pair(1.0 / 3.0, 0.5)));
  EXPECT_FALSE(marden_validity(WeightTriple::from_pair(0.5, 0.5)));
}

TEST(MardenValidity, ExactProducts) {
  using BW = BasicWeightTriple<Rational>;
  EXPECT_EQ(BW::from_pair(Rational(-1, 4), Rational(3, 2)).product(), Rational(3, 32));
  EXPECT_EQ(BW::from_pair(Rational(1, 3), Rational(1, 2)).product(), Rational(1, 36));
  EXPECT_EQ(BW::from_pair(Rational(1, 2), Rational(1, 2)).product(), Rational(0));
}

TEST(TangentPoints, ReferenceTriangleContacts) {
  const auto z = tangent_points(t1_ref(), WeightTriple::from_pair(-0.5, -1.0));
  // Exact rational oracle.
  using P = std::pair<Rational, Rational>;
  const Rational t1(-1, 2), t2(-1), t3(5, 2);
  const P z1{0, 0}, z2{1, 0}, z3{0, -1};
  const std::array<P, 3> oracle{inconic::testing::weighted_contact(t2, z2, t3, z3),
                                inconic::testing::weighted_contact(t1, z1, t3, z3),
                                inconic::testing::weighted_contact(t1, z1, t2, z2)};
  EXPECT_EQ(oracle[0], (P{Rational(5, 3), Rational(2, 3)}));
  EXPECT_EQ(oracle[1], (P{Rational(0), Rational(1, 4)}));
  EXPECT_EQ(oracle[2], (P{Rational(1, 3), Rational(0)}));
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(z[i].real(), oracle[i].first.to_double(), 1e-15);
    EXPECT_NEAR(z[i].imag(), oracle[i].second.to_double(), 1e-15);
  }
}

TEST(TangentPoints, SteinerContactsAreMidpoints) {
  const TriangleZ tri = TriangleZ::make(ComplexPoint(0.3, -1.0), ComplexPoint(2.0, 0.5),
                                        ComplexPoint(-1.0, 1.7));
  const auto z = tangent_points(tri, WeightTriple::from_pair(1.0 / 3.0, 1.0 / 3.0));
  EXPECT_NEAR(std::abs(z[0] - 0.5 * (tri.z2() + tri.z3())), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z[1] - 0.5 * (tri.z1() + tri.z3())), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z[2] - 0.5 * (tri.z1() + tri.z2())), 0.0, 1e-15);
}

TEST(TangentPoints, OppositeWeightsHitAsymptote) {
  EXPECT_EQ(code_of([] { tangent_points(t1_ref(), WeightTriple::from_pair(0.5, 1.0)); }),
            ErrorCode::AsymptoteContact);
}

TEST(TriangleZ, CollinearRejected) {
  EXPECT_EQ(code_of([] { TriangleZ::make(0.0, 1.0, 2.0); }), ErrorCode::DegenerateTriangle);
}

TEST(MardenEllipse, ReferenceTriangles) {
  const EllipseGeo e2 = marden_ellipse(t2_ref(), WeightTriple::from_pair(1.0 / 3.0, 0.5));
  const Conic c2 = conic_from_ellipse(e2);
  for (const Line& l : t2_ref().side_lines()) EXPECT_LT(tangency_residual(c2, l), 1e-8);
  // All weights positive: inscribed, so the center is inside T2.
  EXPECT_GT(e2.center.x, -3.0);
  EXPECT_LT(e2.center.x, 0.0);
  EXPECT_GT(e2.center.y, 0.0);
  EXPECT_LT(e2.center.y, 1.0 + e2.center.x / 3.0);

  const EllipseGeo e1 = marden_ellipse(t1_ref(), WeightTriple::from_pair(-0.25, 1.5));
  const Conic c1 = conic_from_ellipse(e1);
  for (const Line& l : t1_ref().side_lines()) EXPECT_LT(tangency_residual(c1, l), 1e-8);
  // Negative weights: some contact falls outside its edge, so not inscribed.
  const auto z = tangent_points(t1_ref(), WeightTriple::from_pair(-0.25, 1.5));
  bool outside = false;
  const auto& v = t1_ref().vertices();
  for (int i = 0; i < 3; ++i) {
    const ComplexPoint a = v[(i + 1) % 3], b = v[(i + 2) % 3];
    const double u = std::real((z[i] - a) / (b - a));
    outside = outside || u < 0.0 || u > 1.0;
  }
  EXPECT_TRUE(outside);
}

TEST(MardenEllipse, SteinerArea) {
  const TriangleZ tri = TriangleZ::make(0.0, 1.0, ComplexPoint(0.0, 1.0));
  const EllipseGeo e = marden_ellipse(tri, WeightTriple::from_pair(1.0 / 3.0, 1.0 / 3.0));
  EXPECT_NEAR(e.area(), std::numbers::pi / (6.0 * std::sqrt(3.0)), 1e-12);
  EXPECT_NEAR(e.area(), 0.302300, 1e-6);
}

TEST(MardenEllipse, NonPositiveProductRejected) {
  EXPECT_EQ(code_of([] { marden_ellipse(t1_ref(), WeightTriple::from_pair(2.0, 0.5)); }),
            ErrorCode::NotEllipse);
}

// ---------------------------------------------------------------- properties

TEST(MardenProperties, VietaAndCollinearity) {
  inconic::testing::QuadGenerator gen(21);
  int checked = 0;
  while (checked < 1000) {
    ComplexPoint z1(gen.uniform(-3, 3), gen.uniform(-3, 3));
    ComplexPoint z2(gen.uniform(-3, 3), gen.uniform(-3, 3));
    ComplexPoint z3(gen.uniform(-3, 3), gen.uniform(-3, 3));
    if (std::abs(std::imag(std::conj(z2 - z1) * (z3 - z1))) < 0.1) continue;
    const TriangleZ tri = TriangleZ::make(z1, z2, z3);
    const WeightTriple w = WeightTriple::from_pair(gen.uniform(-2, 2), gen.uniform(-2, 2));
    const auto [a, b] = foci_from_weights(tri, w);
    const ComplexPoint sum = w.t1() * (z2 + z3) + w.t2() * (z1 + z3) + w.t3() * (z1 + z2);
    const ComplexPoint prod = w.t1() * z2 * z3 + w.t2() * z1 * z3 + w.t3() * z1 * z2;
    EXPECT_LT(std::abs(a + b - sum), 1e-10 * (1.0 + std::abs(sum)));
    EXPECT_LT(std::abs(a * b - prod), 1e-10 * (1.0 + std::abs(prod)));

    const bool pair_ok = std::abs(w.t1() + w.t2()) > 1e-6 && std::abs(w.t1() + w.t3()) > 1e-6 &&
                         std::abs(w.t2() + w.t3()) > 1e-6;
    if (pair_ok) {
      const auto zeta = tangent_points(tri, w);
      const auto lines = tri.side_lines();
      for (int i = 0; i < 3; ++i) {
        EXPECT_LT(std::abs(lines[i].eval(to_point(zeta[i]))), 1e-10 * (1.0 + std::abs(zeta[i])));
      }
      if (marden_validity(w)) {
        const Conic c = conic_from_ellipse(marden_ellipse(tri, w));
        for (const Line& l : lines) EXPECT_LT(tangency_residual(c, l), 1e-8);
      }
    }
    ++checked;
  }
}

TEST(MardenProperties, ContactsAreAffineCovariant) {
  inconic::testing::QuadGenerator gen(22);
  const TriangleZ tri = TriangleZ::make(0.0, 1.0, ComplexPoint(0.2, 1.3));
  for (int i = 0; i < 100; ++i) {
    const AffineMap m = gen.affine();
    const WeightTriple w = WeightTriple::from_pair(gen.uniform(0.05, 0.45), gen.uniform(0.05, 0.45));
    const auto& v = tri.vertices();
    const TriangleZ mapped = TriangleZ::make(to_complex(m.apply(to_point(v[0]))),
                                             to_complex(m.apply(to_point(v[1]))),
                                             to_complex(m.apply(to_point(v[2]))));
    const auto a = tangent_points(tri, w);
    const auto b = tangent_points(mapped, w);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(distance(m.apply(to_point(a[k])), to_point(b[k])), 0.0, 1e-12);
    }
  }
}
