#include "inconic/pencil.hpp"

#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "inconic/error.hpp"

namespace inconic {

namespace {

Eigen::Vector3d unit(const Eigen::Vector3d& v) { return v / v.norm(); }

DualConic point_pair(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  return DualConic::from_matrix(p * q.transpose() + q * p.transpose());
}

double smallest_singular_ratio(const Eigen::Matrix3d& m) {
  const Eigen::Vector3d ev =
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(m, Eigen::EigenvaluesOnly).eigenvalues();
  return ev.cwiseAbs().minCoeff() / ev.cwiseAbs().maxCoeff();
}

}  // namespace

DualConic DualConic::from_matrix(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d s = 0.5 * (m + m.transpose());
  const double n = s.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::DegenerateConfiguration, "dual conic vanishes");
  }
  s /= n;
  return DualConic(s);
}

Conic DualConic::point_conic(const Tolerances& tol) const {
  if (smallest_singular_ratio(m_) <= tol.det) {
    throw Error(ErrorCode::DegenerateMember, "member is a point pair");
  }
  const Eigen::Matrix3d adj = adjugate(m_);
  if (adj.norm() < 1e-14) {
    throw Error(ErrorCode::DegenerateMember, "adjugate vanishes");
  }
  return Conic::from_matrix(adj);
}

DualConic TangentPencil::member(PencilParam p) const {
  return DualConic::from_matrix(p.den * first_.matrix() + p.num * second_.matrix());
}

TangentPencil pencil_from_lines(std::span<const Line, 4> lines, const Tolerances& tol) {
  std::array<Eigen::Vector3d, 4> l;
  for (std::size_t i = 0; i < 4; ++i) l[i] = lines[i].vec();

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (l[i].cross(l[j]).norm() <= tol.det) {
        throw Error(ErrorCode::DegenerateConfiguration, "two lines coincide");
      }
      for (std::size_t k = j + 1; k < 4; ++k) {
        Eigen::Matrix3d triple;
        triple << l[i].transpose(), l[j].transpose(), l[k].transpose();
        if (std::abs(triple.determinant()) <= tol.det) {
          throw Error(ErrorCode::DegenerateConfiguration,
                      "lines " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                          std::to_string(k + 1) + " are concurrent");
        }
      }
    }
  }

  const DualConic a = point_pair(unit(l[0].cross(l[1])), unit(l[2].cross(l[3])));
  const DualConic b = point_pair(unit(l[0].cross(l[2])), unit(l[1].cross(l[3])));
  return TangentPencil(a, b, {lines[0], lines[1], lines[2], lines[3]});
}

TangentPencil pencil_from_quad(const ConvexQuad& q, const Tolerances& tol) {
  const auto sides = side_lines(q);
  return pencil_from_lines(std::span<const Line, 4>(sides), tol);
}

PencilParam param_for_center(const TangentPencil& p, Point center, const Tolerances& tol) {
  const Eigen::Matrix3d& da = p.first().matrix();
  const Eigen::Matrix3d& db = p.second().matrix();
  // Center of a member is column 3: den * col3(da) + num * col3(db) ~ (h, k, 1).
  const double ax = da(0, 2) - center.x * da(2, 2), bx = db(0, 2) - center.x * db(2, 2);
  const double ay = da(1, 2) - center.y * da(2, 2), by = db(1, 2) - center.y * db(2, 2);

  const bool use_x = std::hypot(ax, bx) >= std::hypot(ay, by);
  const double a = use_x ? ax : ay, b = use_x ? bx : by;
  if (std::hypot(a, b) <= tol.det) {
    throw Error(ErrorCode::DegenerateMember, "every member has this center");
  }
  // den * a + num * b = 0
  const double n = std::hypot(a, b);
  PencilParam param{a / n, -b / n};

  const HomPoint c = p.member(param).center();
  if (c.w == 0.0) {
    throw Error(ErrorCode::CenterOffCentersLine, "member center is at infinity");
  }
  const Point got = c.affine();
  const double scale = 1.0 + std::abs(center.x) + std::abs(center.y);
  if (!(distance(got, center) <= tol.center * scale)) {
    throw Error(ErrorCode::CenterOffCentersLine,
                "nearest member center is " + std::to_string(distance(got, center)) + " away");
  }
  return param;
}

Conic member_with_center(const TangentPencil& p, Point center, const Tolerances& tol) {
  return p.member(param_for_center(p, center, tol)).point_conic(tol);
}

Line centers_line(const TangentPencil& p, const Tolerances& tol) {
  const Eigen::Vector3d plus = p.member({1.0, 1.0}).center().vec();
  const Eigen::Vector3d minus = p.member({1.0, -1.0}).center().vec();
  const Eigen::Vector3d l = plus.cross(minus);
  if (!(l.norm() > tol.det * plus.norm() * minus.norm()) || std::hypot(l(0), l(1)) == 0.0) {
    throw Error(ErrorCode::DegenerateConfiguration, "all members share one center");
  }
  const Line line = Line::from_coefficients(l(0), l(1), l(2));

  // Every member's center must sit on the line, the member at infinity included.
  for (int i = 0; i <= 40; ++i) {
    const double theta = std::numbers::pi * i / 41.0;
    const Eigen::Vector3d c = p.member({std::sin(theta), std::cos(theta)}).center().vec();
    const double res = std::abs(line.vec().dot(c)) / c.norm();
    if (!(res < 1e-9)) {
      throw Error(ErrorCode::DegenerateConfiguration,
                  "member centers are not collinear, residual " + std::to_string(res));
    }
  }
  return line;
}

}  // namespace inconic
