#pragma once

#include <json.hpp>

#include "endegree/ends.hpp"
#include "endegree/rational.hpp"
#include "endegree/region.hpp"
#include "endegree/window.hpp"

namespace endegree {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json window_to_json(const Window& w);
Window window_from_json(const nlohmann::json& j);

nlohmann::json mode_to_json(const GoodnessMode& m);
GoodnessMode mode_from_json(const nlohmann::json& j);

// Regions serialize as {separator, seed, oracle}; reports embed them verbatim.
nlohmann::json region_to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

// Canonical serialization: sorted keys, no spaces, trailing newline.
std::string render_report(const nlohmann::json& body);

}  // namespace endegree
