#include "inconic/tolerances.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "inconic/error.hpp"

namespace inconic {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::DegenerateQuad: return "DegenerateQuad";
    case ErrorCode::ParallelogramUnsupported: return "ParallelogramUnsupported";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::NotAnEllipse: return "NotAnEllipse";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DegenerateFoci: return "DegenerateFoci";
    case ErrorCode::NotEllipse: return "NotEllipse";
    case ErrorCode::AsymptoteContact: return "AsymptoteContact";
    case ErrorCode::TrapezoidForm: return "TrapezoidForm";
    case ErrorCode::CenterOffLocus: return "CenterOffLocus";
    case ErrorCode::CenterOffChord: return "CenterOffChord";
    case ErrorCode::DegenerateAtMidpoint: return "DegenerateAtMidpoint";
    case ErrorCode::CenterOffCentersLine: return "CenterOffCentersLine";
    case ErrorCode::DegenerateMember: return "DegenerateMember";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NoRealEllipse: return "NoRealEllipse";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_positive(std::string_view key, std::string_view text) {
  // std::from_chars for double is locale independent.
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value) ||
      value <= 0.0) {
    throw Error(ErrorCode::InvalidArgument,
                "tolerance '" + std::string(key) + "' needs a positive number, got '" +
                    std::string(text) + "'");
  }
  return value;
}

}  // namespace

Tolerances parse_tolerances(std::string_view text, Tolerances base) {
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;

    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument,
                  "expected key=value in tolerance list, got '" + std::string(item) + "'");
    }
    const auto key = trim(item.substr(0, eq));
    const double value = parse_positive(key, trim(item.substr(eq + 1)));
    if (key == "det") base.det = value;
    else if (key == "tan") base.tangency = value;
    else if (key == "class") base.classify = value;
    else if (key == "par") base.parallel = value;
    else if (key == "interval") base.interval = value;
    else if (key == "pair") base.pair = value;
    else if (key == "center") base.center = value;
    else if (key == "on") base.on_line = value;
    else throw Error(ErrorCode::InvalidArgument, "unknown tolerance key '" + std::string(key) + "'");
  }
  return base;
}

}  // namespace inconic
