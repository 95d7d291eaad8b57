#pragma once

/**
 * @file io.hpp
 * @brief JSON serialization of quotient elements and related records.
 *
 * Uses nlohmann::json; the header json.hpp must be on the include path.
 */

#include <map>
#include <string>

#include <json.hpp>

#include "apoly.hpp"
#include "expr.hpp"
#include "partition.hpp"
#include "quotient.hpp"

namespace symquot {

inline nlohmann::json partition_json(const Partition& lambda) {
  auto arr = nlohmann::json::array();
  for (int p : lambda.parts()) arr.push_back(p);
  return arr;
}

inline Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

/// {"k":..,"n":..,"basis":"s","terms":[{"partition":[..],"coeff":".."},..]},
/// terms in canonical ascending order.
inline nlohmann::json to_json(const QuotElem& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms())
    terms.push_back({{"partition", partition_json(lambda)}, {"coeff", to_string(c)}});
  return {{"k", f.context().k}, {"n", f.context().n}, {"basis", "s"}, {"terms", std::move(terms)}};
}

/// Same layout with q-polynomial coefficients after specialization.
inline nlohmann::json to_json(const QuotContext& ctx, const std::map<Partition, QPoly>& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f)
    terms.push_back({{"partition", partition_json(lambda)}, {"coeff", to_string(c)}});
  return {{"k", ctx.k}, {"n", ctx.n}, {"basis", "s"}, {"terms", std::move(terms)}};
}

inline QuotElem quot_elem_from_json(const nlohmann::json& j) {
  if (j.at("basis").get<std::string>() != "s") throw std::invalid_argument("only the Schur basis is supported");
  const QuotContext ctx(j.at("k").get<int>(), j.at("n").get<int>());
  QuotElem f(ctx);
  for (const auto& t : j.at("terms"))
    f.add_term(partition_from_json(t.at("partition")), parse_apoly(t.at("coeff").get<std::string>(), ctx.k));
  return f;
}

}  // namespace symquot
