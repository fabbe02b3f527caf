#pragma once

#include <string_view>

namespace inconic {

/// Numerical tolerances shared by every operation.
///
/// Passed explicitly; nothing in the library reads global state.
struct Tolerances {
  double det = 1e-12;       ///< invertibility of affine maps, rank of dual conics
  double tangency = 1e-8;   ///< line/conic tangency residual
  double classify = 1e-10;  ///< conic classification (relative eigenvalue tests)
  double parallel = 1e-9;   ///< cross product of unit edge directions
  double interval = 1e-9;   ///< margin on the locus/chord parameter u
  double pair = 1e-12;      ///< t_i + t_j relative to |t_i| + |t_j|
  double center = 1e-9;     ///< center consistency, relative
  double on_line = 1e-9;    ///< distance of a center from the Newton line, relative
};

/// Parses "key=value[,key=value...]" overrides onto `base`.
/// Keys: det, tan, class, par, interval, pair, center, on.
/// Throws inconic::Error(ErrorCode::InvalidArgument) on malformed input.
Tolerances parse_tolerances(std::string_view text, Tolerances base = {});

}  // namespace inconic
