#pragma once

#include <array>
#include <optional>

#include <json.hpp>

#include "inconic/area.hpp"
#include "inconic/inscribed.hpp"

namespace inconic::cli {

/// Rounds to a 1e-12 grid, then to 15 significant digits; -0 becomes 0.
double tidy(double x);

/// 15 significant digits without grid rounding, for small error metrics.
double sig15(double x);

nlohmann::json to_json(Point p);
nlohmann::json to_json(const HomPoint& p);
nlohmann::json to_json(const Conic& c);

/// EllipseOutput record. `ellipse` is empty for non-elliptic conics.
nlohmann::json ellipse_output(const Conic& conic, ConicKind kind,
                              const std::optional<EllipseGeo>& ellipse,
                              const std::array<HomPoint, 4>& tangencies);

nlohmann::json ellipse_output(const InscribedResult& r);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace inconic::cli
