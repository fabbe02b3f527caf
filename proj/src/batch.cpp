#include "inconic/batch.hpp"

#include <exception>

#include "inconic/area.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace inconic {

namespace {

// Runs body(i) for i in [0, n). Exceptions are caught per item and the one
// with the lowest index is rethrown, so both paths fail identically.
template <class Body>
void for_each_index(std::size_t n, Execution ex, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
  if (ex == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double grid_point(const NormalForm& nf, std::size_t n, double margin, std::size_t i) {
  const double lo = std::min(0.5, 0.5 * nf.s), hi = std::max(0.5, 0.5 * nf.s);
  const double a = lo + margin * (hi - lo), b = hi - margin * (hi - lo);
  return n == 1 ? 0.5 * (a + b) : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
}

template <class Better>
GridMax grid_extreme(const NormalForm& nf, std::size_t n, double margin, Execution ex,
                     Better better) {
  std::vector<double> values(n);
  for_each_index(n, ex, [&](std::size_t i) {
    values[i] = area_cubic(nf, grid_point(nf, n, margin, i));
  });
  // Ordered reduction: identical for both paths.
  GridMax best{grid_point(nf, n, margin, 0), values.empty() ? 0.0 : values[0], 0};
  for (std::size_t i = 1; i < n; ++i) {
    const double h = grid_point(nf, n, margin, i);
    if (better(values[i], best.value) ||
        (values[i] == best.value && h < best.h)) {
      best = {h, values[i], i};
    }
  }
  return best;
}

}  // namespace

std::vector<InscribedResult> sample_locus(const ConvexQuad& q, std::size_t n, Execution ex,
                                          const Tolerances& tol) {
  std::vector<InscribedResult> out(n);
  for_each_index(n, ex, [&](std::size_t i) {
    out[i] = inscribe_at_param(q, static_cast<double>(i + 1) / static_cast<double>(n + 1), tol);
  });
  return out;
}

GridMax grid_max_area_cubic(const NormalForm& nf, std::size_t n, double margin, Execution ex) {
  return grid_extreme(nf, n, margin, ex, [](double a, double b) { return a > b; });
}

GridMax grid_min_area_cubic(const NormalForm& nf, std::size_t n, double margin, Execution ex) {
  return grid_extreme(nf, n, margin, ex, [](double a, double b) { return a < b; });
}

std::vector<ChordSample> sweep_chord(const ConvexQuad& q, std::size_t n, Execution ex,
                                     const Tolerances& tol) {
  const ChordX chord = chord_x(q);
  const LocusSegment z = locus(q);
  std::vector<ChordSample> out(n);
  for_each_index(n, ex, [&](std::size_t i) {
    ChordSample& s = out[i];
    s.u = chord.u_start + (chord.u_end - chord.u_start) * static_cast<double>(i + 1) /
                              static_cast<double>(n + 1);
    s.center = z.at(s.u);
    try {
      s.conic = tangent_conic_at_center(q, s.center, tol);
    } catch (const Error& e) {
      s.error = e.code();
    }
  });
  return out;
}

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace inconic
