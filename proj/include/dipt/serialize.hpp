#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dipt/dipterous.hpp"
#include "dipt/homology.hpp"
#include "dipt/infinitesimal.hpp"
#include "dipt/lang_dynamics.hpp"
#include "dipt/lincomb.hpp"
#include "dipt/text.hpp"
#include "dipt/unital.hpp"

namespace dipt {

using json = nlohmann::ordered_json;

template <class Key>
json to_json(const Tensor<Key>& t) {
  json terms = json::array();
  for (const auto& [ks, c] : t) {
    json keys = json::array();
    for (const auto& k : ks) keys.push_back(key_str(k));
    terms.push_back({{"keys", keys}, {"coeff", c.str()}});
  }
  return {{"arity", t.arity()}, {"terms", terms}};
}

/// Inverse of to_json. Throws std::invalid_argument on schema violations.
template <class Key>
Tensor<Key> tensor_from_json(const json& j, const std::function<Key(std::string_view)>& parse_key) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("tensor JSON needs 'arity' and 'terms'");
  const std::size_t arity = j["arity"].get<std::size_t>();
  Tensor<Key> out(arity);
  for (const auto& term : j["terms"]) {
    const auto& keys = term.at("keys");
    if (keys.size() != arity) throw std::invalid_argument("term arity mismatch");
    std::vector<Key> ks;
    for (const auto& k : keys) ks.push_back(parse_key(k.get<std::string>()));
    out.add_term(ks, Rational::parse(term.at("coeff").get<std::string>()));
  }
  return out;
}

json to_json(const HomologyReport& r);
json to_json(const PrimComReport& r);
json to_json(const PbwReport& r);

/// basis key -> unital_str of the antipode image.
json antipode_table(CoproductKind kind, const std::vector<DiptBasis>& basis);

/// [{"word": ..., "mass": "p/q"}] in distribution order.
json distribution_json(const WordElement& x);

}  // namespace dipt
