#include "json_output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "inconic/error.hpp"

namespace inconic::cli {

double tidy(double x) {
  if (!std::isfinite(x)) return x;
  // Beyond ~1e3 the 1e-12 grid is finer than 15 significant digits anyway.
  if (std::abs(x) < 1e3) x = std::round(x * 1e12) / 1e12;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  x = std::strtod(buf, nullptr);
  return x == 0.0 ? 0.0 : x;
}

double sig15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  x = std::strtod(buf, nullptr);
  return x == 0.0 ? 0.0 : x;
}

nlohmann::json to_json(Point p) { return nlohmann::json::array({tidy(p.x), tidy(p.y)}); }

nlohmann::json to_json(const HomPoint& p) {
  return nlohmann::json::array({tidy(p.x), tidy(p.y), tidy(p.w)});
}

nlohmann::json to_json(const Conic& c) {
  auto j = nlohmann::json::array();
  for (double k : c.coefficients()) j.push_back(tidy(k));
  return j;
}

nlohmann::json ellipse_output(const Conic& conic, ConicKind kind,
                              const std::optional<EllipseGeo>& ellipse,
                              const std::array<HomPoint, 4>& tangencies) {
  nlohmann::json j;
  j["classification"] = to_string(kind);
  j["conic"] = to_json(conic);
  auto t = nlohmann::json::array();
  for (const HomPoint& p : tangencies) t.push_back(to_json(p));
  j["tangencies"] = t;
  if (ellipse) {
    j["center"] = to_json(ellipse->center);
    j["semi_major"] = tidy(ellipse->semi_major);
    j["semi_minor"] = tidy(ellipse->semi_minor);
    j["angle_rad"] = tidy(ellipse->angle);
    j["foci"] = nlohmann::json::array({to_json(ellipse->focus1), to_json(ellipse->focus2)});
    j["area"] = tidy(ellipse->area());
  } else {
    try {
      j["center"] = to_json(conic_center(conic));
    } catch (const Error&) {
      j["center"] = nullptr;
    }
    for (const char* key : {"semi_major", "semi_minor", "angle_rad", "foci", "area"}) {
      j[key] = nullptr;
    }
  }
  return j;
}

nlohmann::json ellipse_output(const InscribedResult& r) {
  return ellipse_output(r.conic, ConicKind::RealEllipse, r.ellipse, r.tangencies);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace inconic::cli
