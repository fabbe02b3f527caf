#include "inconic/normal_form.hpp"

#include "inconic/error.hpp"

namespace inconic {

NormalForm normalize(const ConvexQuad& q, const Tolerances& tol) {
  if (q.kind() == QuadKind::Parallelogram) {
    throw Error(ErrorCode::ParallelogramUnsupported,
                "a parallelogram would force s = 1 and t = 1");
  }

  int start = 0;
  if (q.kind() == QuadKind::Trapezoid) {
    // Start where edge (start, start+1) is parallel to edge (start+2, start+3).
    const auto d = [&](int i) { return q.vertex(i + 1) - q.vertex(i); };
    const double c0 = std::abs(cross(d(0), d(2))) / (norm(d(0)) * norm(d(2)));
    const double c1 = std::abs(cross(d(1), d(3))) / (norm(d(1)) * norm(d(3)));
    start = c0 <= c1 ? 0 : 1;
  }

  NormalForm nf;
  nf.kind = q.kind();
  for (int j = 0; j < 4; ++j) nf.labeling[static_cast<std::size_t>(j)] = (start + j) & 3;

  const Point p0 = q.vertex(start);
  const Point e1 = q.vertex(start + 1) - p0;
  const Point e3 = q.vertex(start + 3) - p0;

  // Columns (e1, e3) map to (1,0), (0,1); to_normal is their inverse.
  AffineMap basis;
  basis.m11 = e1.x;
  basis.m21 = e1.y;
  basis.m12 = e3.x;
  basis.m22 = e3.y;
  basis.tx = p0.x;
  basis.ty = p0.y;
  nf.from_normal = basis;
  nf.to_normal = basis.inverse(tol);

  const Point st = nf.to_normal.apply(q.vertex(start + 2));
  nf.s = st.x;
  nf.t = st.y;
  return nf;
}

}  // namespace inconic
