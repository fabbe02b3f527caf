#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "inconic/error.hpp"
#include "inconic/inscribed.hpp"

namespace inconic {

/// Serial is the reference path; Parallel fans out with OpenMP when the
/// library is built with it. Both return identical results in the same order.
enum class Execution { Serial, Parallel };

/// Inscribed ellipses at u = i / (n + 1), i = 1..n.
/// The first failing sample's error is rethrown.
std::vector<InscribedResult> sample_locus(const ConvexQuad& q, std::size_t n, Execution ex,
                                          const Tolerances& tol = {});

struct GridMax {
  double h = 0.0;
  double value = 0.0;
  std::size_t index = 0;
};

/// Maximum of A(h) over n evenly spaced points spanning the closed interval
/// [lo + margin |I|, hi - margin |I|]. Ties go to the smaller h.
GridMax grid_max_area_cubic(const NormalForm& nf, std::size_t n, double margin, Execution ex);

/// Minimum over the same grid.
GridMax grid_min_area_cubic(const NormalForm& nf, std::size_t n, double margin, Execution ex);

struct ChordSample {
  double u = 0.0;  ///< locus parameter of the center
  Point center;
  std::optional<TangentConic> conic;
  std::optional<ErrorCode> error;
};

/// Tangent conics at n centers evenly spaced strictly inside the chord.
std::vector<ChordSample> sweep_chord(const ConvexQuad& q, std::size_t n, Execution ex,
                                     const Tolerances& tol = {});

/// Number of threads the Parallel path would use (1 without OpenMP).
int parallel_threads();

}  // namespace inconic
