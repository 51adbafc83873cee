#include "dipt/serialize.hpp"

namespace dipt {

json to_json(const HomologyReport& r) {
  json pieces = json::array();
  for (const auto& p : r.pieces)
    pieces.push_back(
        {{"arity", p.arity}, {"weight", p.weight}, {"kernel", p.kernel}, {"image", p.image}, {"betti", p.betti}});
  json out{{"pieces", pieces},
           {"koszul_ok", r.koszul_ok},
           {"d_squared_zero", r.d_squared_zero},
           {"simplicial", r.simplicial},
           {"homotopy_ok", r.homotopy_ok},
           {"betti_ok", r.betti_ok}};
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

json to_json(const PrimComReport& r) { return {{"kernel", r.kernel}, {"oracle", r.oracle}, {"ok", r.ok}}; }

json to_json(const PbwReport& r) {
  return {{"forests", r.forests}, {"primitives", r.primitives}, {"composed", r.composed}, {"ok", r.ok}};
}

json antipode_table(CoproductKind kind, const std::vector<DiptBasis>& basis) {
  json out = json::object();
  for (const auto& b : basis) out[b.key()] = unital_str(antipode(kind, UnitalElement(UnitalKey(b))));
  return out;
}

json distribution_json(const WordElement& x) {
  json out = json::array();
  for (const auto& [w, c] : distribution(x)) out.push_back({{"word", word_str(w)}, {"mass", c.str()}});
  return out;
}

}  // namespace dipt
