#include <numbers>

#include <gtest/gtest.h>

#include "inconic/error.hpp"
#include "inconic/inscribed.hpp"
#include "inconic/pencil.hpp"
#include "support/oracles.hpp"
#include "support/random_quads.hpp"

using namespace inconic;
using inconic::testing::QuadGenerator;

namespace {

ConvexQuad quad(std::array<Point, 4> v) { return validate_quad(std::span<const Point, 4>(v)); }

const ConvexQuad kRef = quad({Point{0, 0}, Point{1, 0}, Point{3, 2}, Point{0, 1}});
const ConvexQuad kSquare = quad({Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}});

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

// l^T D l / |D| straight from the matrix.
double dual_residual(const DualConic& d, const Line& l) {
  return std::abs(l.vec().dot(d.matrix() * l.vec())) / d.matrix().norm();
}

}  // namespace

TEST(PencilFromLines, EveryMemberIsTangentToAllSides) {
  const TangentPencil p = pencil_from_quad(kRef);
  for (int i = 0; i <= 20; ++i) {
    const double theta = std::numbers::pi * i / 21.0;
    const DualConic d = p.member({std::sin(theta), std::cos(theta)});
    for (const Line& l : side_lines(kRef)) EXPECT_LT(dual_residual(d, l), 1e-10);
  }
}

TEST(PencilFromLines, ClosureOverProjectiveSweep) {
  QuadGenerator gen(41);
  for (int q = 0; q < 50; ++q) {
    const ConvexQuad quad = q % 2 ? gen.trapezium() : gen.trapezoid();
    const TangentPencil p = pencil_from_quad(quad);
    for (int i = 0; i <= 40; ++i) {
      // i = 0 is the member at infinity (den = 0).
      const double theta = std::numbers::pi * i / 41.0;
      const DualConic d = p.member({std::cos(theta), std::sin(theta)});
      for (const Line& l : p.lines()) EXPECT_LT(dual_residual(d, l), 1e-10);
    }
  }
}

TEST(PencilFromLines, SquareIsFine) {
  const TangentPencil p = pencil_from_quad(kSquare);
  for (int i = 0; i < 5; ++i) {
    const DualConic d = p.member({static_cast<double>(i), 1.0});
    for (const Line& l : side_lines(kSquare)) EXPECT_LT(dual_residual(d, l), 1e-12);
    // Every member centered at the square's center.
    const HomPoint c = d.center();
    if (std::abs(c.w) > 1e-12) {
      EXPECT_NEAR(c.x / c.w, 0.5, 1e-12);
      EXPECT_NEAR(c.y / c.w, 0.5, 1e-12);
    }
  }
  EXPECT_EQ(code_of([&] { centers_line(p); }), ErrorCode::DegenerateConfiguration);
}

TEST(PencilFromLines, ConcurrentLinesRejected) {
  const std::array<Line, 4> lines{Line::from_coefficients(1, 0, 0), Line::from_coefficients(0, 1, 0),
                                  Line::from_coefficients(1, -1, 0), Line::from_coefficients(1, 1, -1)};
  EXPECT_EQ(code_of([&] { pencil_from_lines(lines); }), ErrorCode::DegenerateConfiguration);
  const std::array<Line, 4> same{Line::from_coefficients(1, 0, 0), Line::from_coefficients(2, 0, 0),
                                 Line::from_coefficients(0, 1, 0), Line::from_coefficients(1, 1, -1)};
  EXPECT_EQ(code_of([&] { pencil_from_lines(same); }), ErrorCode::DegenerateConfiguration);
}

TEST(MemberWithCenter, ReferenceCenterMatchesMarden) {
  const Conic c = member_with_center(pencil_from_quad(kRef), {1.0, 0.75});
  EXPECT_LT(conic_distance(c, inscribe_at_center(kRef, {1.0, 0.75}).conic), 1e-8);
  for (const Line& l : side_lines(kRef)) {
    EXPECT_LT(tangency_residual(c, l), 1e-10);
    EXPECT_LT(std::abs(inconic::testing::restricted_discriminant(c.coefficients(), l)), 1e-10);
  }
  const Point center = inconic::testing::adjugate_center(c.matrix());
  EXPECT_NEAR(center.x, 1.0, 1e-12);
  EXPECT_NEAR(center.y, 0.75, 1e-12);
}

TEST(MemberWithCenter, OffCentersLine) {
  const LocusSegment z = locus(kRef);
  // Collinearity determinant with M1, M2 is clearly nonzero.
  EXPECT_GT(std::abs(inconic::testing::signed_area(z.m1, z.m2, {0.7, 0.7})), 0.04);
  EXPECT_EQ(code_of([] { member_with_center(pencil_from_quad(kRef), {0.7, 0.7}); }),
            ErrorCode::CenterOffCentersLine);
}

TEST(MemberWithCenter, MidpointIsDegenerate) {
  EXPECT_EQ(code_of([] { member_with_center(pencil_from_quad(kRef), {0.5, 0.5}); }),
            ErrorCode::DegenerateMember);
  EXPECT_EQ(code_of([] { member_with_center(pencil_from_quad(kRef), {1.5, 1.0}); }),
            ErrorCode::DegenerateMember);
}

TEST(CentersLine, ReferenceQuad) {
  const Line l = centers_line(pencil_from_quad(kRef));
  EXPECT_LT(std::abs(l.eval({0.5, 0.5})), 1e-12);
  EXPECT_LT(std::abs(l.eval({1.5, 1.0})), 1e-12);
}

TEST(CentersLine, PassesThroughDiagonalMidpoints) {
  QuadGenerator gen(42);
  for (int i = 0; i < 100; ++i) {
    const ConvexQuad q = i % 4 == 0 ? gen.trapezoid() : gen.trapezium();
    const Line l = centers_line(pencil_from_quad(q));
    EXPECT_LT(std::abs(l.eval(midpoint(q.vertex(0), q.vertex(2)))), 1e-9);
    EXPECT_LT(std::abs(l.eval(midpoint(q.vertex(1), q.vertex(3)))), 1e-9);
  }
}

TEST(PencilProperties, OracleEquivalence) {
  QuadGenerator gen(43);
  for (int i = 0; i < 100; ++i) {
    const ConvexQuad q = gen.trapezium();
    const TangentPencil p = pencil_from_quad(q);
    const LocusSegment z = locus(q);
    for (int j = 1; j <= 20; ++j) {
      const Point c = z.at(j / 21.0);
      EXPECT_LT(conic_distance(member_with_center(p, c), inscribe_at_center(q, c).conic), 1e-8);
    }
  }
}
