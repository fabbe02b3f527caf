#pragma once

#include <array>

#include "inconic/geometry.hpp"

namespace inconic {

/// Affine frame in which the quad becomes (0,0), (1,0), (s,t), (0,1).
struct NormalForm {
  AffineMap to_normal;    ///< original frame -> normalized frame
  AffineMap from_normal;  ///< inverse of to_normal
  double s = 0.0;
  double t = 0.0;
  /// labeling[j] is the canonical vertex index sent to the j-th normalized
  /// vertex (0,0), (1,0), (s,t), (0,1).
  std::array<int, 4> labeling{0, 1, 2, 3};
  QuadKind kind = QuadKind::Trapezium;

  /// Ratio normalized area / original area.
  double area_scale() const { return std::abs(to_normal.det()); }
};

/// Trapezia keep the canonical labeling. Trapezoids are relabeled so the
/// parallel pair lands on y = 0 and y = 1 (t = 1).
/// Throws ErrorCode::ParallelogramUnsupported for parallelograms.
NormalForm normalize(const ConvexQuad& q, const Tolerances& tol = {});

}  // namespace inconic
