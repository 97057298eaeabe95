#pragma once

// JSON forms used for golden files:
//   LaurentX  -> [{"exponent": d, "numerator": "..", "denominator": ".."}, ...]
//   EgfSeries -> {"order": T, "coefficients": [{"numerator": .., "denominator": ..}, ...]}
// Big numbers are decimal strings.

#include <json.hpp>

#include "phylocount/genfun/egf_series.hpp"
#include "phylocount/genfun/laurent.hpp"

namespace phylocount::genfun {

nlohmann::json to_json(const LaurentX& a);
nlohmann::json to_json(const EgfSeries& s);

LaurentX laurent_from_json(const nlohmann::json& j);
EgfSeries series_from_json(const nlohmann::json& j);

}  // namespace phylocount::genfun
