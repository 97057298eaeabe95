#include "phylocount/genfun/serialize.hpp"

#include <stdexcept>

namespace phylocount::genfun {
namespace {

nlohmann::json rational_json(const Rational& q) {
  return {{"numerator", q.get_num().get_str()}, {"denominator", q.get_den().get_str()}};
}

Rational rational_from(const nlohmann::json& j) {
  BigInt den(j.at("denominator").get<std::string>());
  if (den == 0) throw std::invalid_argument("zero denominator in JSON rational");
  return make_rational(BigInt(j.at("numerator").get<std::string>()), den);
}

}  // namespace

nlohmann::json to_json(const LaurentX& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [d, c] : a.terms()) {
    auto t = rational_json(c);
    t["exponent"] = d;
    out.push_back(std::move(t));
  }
  return out;
}

nlohmann::json to_json(const EgfSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(rational_json(c));
  return {{"order", s.order()}, {"coefficients", std::move(coeffs)}};
}

LaurentX laurent_from_json(const nlohmann::json& j) {
  LaurentX out;
  for (const auto& t : j) out += LaurentX::monomial(t.at("exponent").get<int>(), rational_from(t));
  return out;
}

EgfSeries series_from_json(const nlohmann::json& j) {
  std::vector<Rational> c;
  for (const auto& t : j.at("coefficients")) c.push_back(rational_from(t));
  EgfSeries s(std::move(c));
  if (s.order() != j.at("order").get<int>()) throw std::invalid_argument("series JSON: order mismatch");
  return s;
}

}  // namespace phylocount::genfun
