#pragma once

#include <array>
#include <span>

#include <Eigen/Core>

#include "inconic/geometry.hpp"

namespace inconic {

/// Conic in line coordinates: l is tangent to the point conic iff l^T D l = 0.
/// Stored symmetric with unit Frobenius norm.
class DualConic {
 public:
  static DualConic from_matrix(const Eigen::Matrix3d& m);

  const Eigen::Matrix3d& matrix() const { return m_; }
  double eval(const Line& l) const { return l.vec().dot(m_ * l.vec()); }

  /// Homogeneous center: the pole of the line at infinity.
  HomPoint center() const { return {m_(0, 2), m_(1, 2), m_(2, 2)}; }

  /// Point conic (adjugate). Throws ErrorCode::DegenerateMember when D is
  /// rank deficient.
  Conic point_conic(const Tolerances& tol = {}) const;

 private:
  explicit DualConic(const Eigen::Matrix3d& m) : m_(m) {}
  Eigen::Matrix3d m_;
};

/// Point on the projective line: lambda = num / den, den = 0 is the member at infinity.
struct PencilParam {
  double num = 0.0;
  double den = 1.0;
};

/// All dual conics den * first + num * second tangent to four fixed lines.
class TangentPencil {
 public:
  const DualConic& first() const { return first_; }
  const DualConic& second() const { return second_; }
  const std::array<Line, 4>& lines() const { return lines_; }

  DualConic member(PencilParam p) const;

 private:
  friend TangentPencil pencil_from_lines(std::span<const Line, 4>, const Tolerances&);
  TangentPencil(DualConic a, DualConic b, std::array<Line, 4> lines)
      : first_(a), second_(b), lines_(lines) {}
  DualConic first_;
  DualConic second_;
  std::array<Line, 4> lines_;
};

/// Degenerate members from the point pairs (l1 x l2, l3 x l4) and
/// (l1 x l3, l2 x l4). Throws DegenerateConfiguration when three lines are
/// concurrent or two coincide.
TangentPencil pencil_from_lines(std::span<const Line, 4> lines, const Tolerances& tol = {});

/// Pencil of the four side lines in side_lines() order; the degenerate
/// members are the two diagonals' vertex pairs.
TangentPencil pencil_from_quad(const ConvexQuad& q, const Tolerances& tol = {});

/// Parameter of the member centered at `center`.
/// Throws CenterOffCentersLine when no member has that center.
PencilParam param_for_center(const TangentPencil& p, Point center, const Tolerances& tol = {});

/// Point conic tangent to all four lines with the given center.
/// Throws CenterOffCentersLine or DegenerateMember.
Conic member_with_center(const TangentPencil& p, Point center, const Tolerances& tol = {});

/// Line swept by the members' centers. Throws DegenerateConfiguration when
/// every member shares one center (parallelograms).
Line centers_line(const TangentPencil& p, const Tolerances& tol = {});

}  // namespace inconic
