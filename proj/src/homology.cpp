#include "dipt/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "dipt/linear_algebra.hpp"

namespace dipt {

namespace {

ChainKey make_chain(ChainSymbol s, std::vector<DiptBasis> xs) {
  const ChainSymbol symbol = xs.size() == 1 ? ChainSymbol::None : s;
  return ChainKey(symbol, std::move(xs));
}

ChainElement face_basis(std::size_t i, const ChainKey& k) {
  const std::size_t n = k.arity();
  if (n < 2 || i < 1 || i > n - 1)
    throw std::out_of_range("face index " + std::to_string(i) + " out of range for arity " + std::to_string(n));
  const bool last_succ = k.symbol == ChainSymbol::Succ && i == n - 1;
  std::vector<DiptBasis> xs(k.slots.begin(), k.slots.begin() + static_cast<std::ptrdiff_t>(i - 1));
  xs.push_back(last_succ ? succ_basis(k.slots[i - 1], k.slots[i]) : star_basis(k.slots[i - 1], k.slots[i]));
  xs.insert(xs.end(), k.slots.begin() + static_cast<std::ptrdiff_t>(i + 1), k.slots.end());
  return ChainElement(make_chain(k.symbol, std::move(xs)));
}

ChainElement homotopy_basis(const ChainKey& k) {
  const DiptBasis& u = k.slots.back();
  if (u.degree() == 1) return {};
  const bool tree = u.forest().is_single_tree();
  if ((k.symbol == ChainSymbol::Succ && !tree) || (k.symbol == ChainSymbol::Star && tree)) return {};
  std::vector<DiptBasis> xs(k.slots.begin(), k.slots.end() - 1);
  if (tree) {
    const Decomposition d = decompose_basis(u);
    xs.push_back(d.left);
    xs.push_back(d.right);
  } else {
    const auto trees = u.forest().trees();
    const std::size_t split = u.degree() - trees.back().degree();
    xs.emplace_back(Forest(std::vector<PlanarTree>(trees.begin(), trees.end() - 1)), u.word().substr(0, split));
    xs.emplace_back(Forest(trees.back()), u.word().substr(split));
  }
  const std::size_t n = k.arity();
  const Rational sign = n % 2 == 1 ? Rational(1) : Rational(-1);
  return ChainElement(ChainKey(tree ? ChainSymbol::Succ : ChainSymbol::Star, std::move(xs)), sign);
}

void compositions(std::size_t parts, std::size_t total, std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (std::size_t first = 1; first + parts - 1 <= total; ++first) {
    prefix.push_back(first);
    compositions(parts - 1, total - first, prefix, out);
    prefix.pop_back();
  }
}

OperatorMatrix<ChainKey, ChainKey> differential_matrix(std::size_t arity, std::size_t weight,
                                                       const DifferentialOptions& opts) {
  return {chain_basis(arity, weight), [&](const ChainKey& k) { return differential(ChainElement(k), opts); }};
}

}  // namespace

ChainKey::ChainKey(ChainSymbol s, std::vector<DiptBasis> xs) : symbol(s), slots(std::move(xs)) {
  if (slots.empty()) throw std::invalid_argument("chains have at least one slot");
  if ((slots.size() == 1) != (symbol == ChainSymbol::None))
    throw std::invalid_argument("arity-1 chains carry no symbol, higher chains need one");
}

std::size_t ChainKey::weight() const {
  std::size_t w = 0;
  for (const auto& x : slots) w += x.degree();
  return w;
}

std::string ChainKey::str() const {
  std::string out;
  if (symbol == ChainSymbol::Star) out = "⊛ ⊗ ";
  if (symbol == ChainSymbol::Succ) out = "⊳ ⊗ ";
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) out += " ⊗ ";
    out += slots[i].key();
  }
  return out;
}

ChainElement face(std::size_t i, const ChainElement& c) {
  return linear_map<ChainKey>(c, [i](const ChainKey& k) { return face_basis(i, k); });
}

ChainElement differential(const ChainElement& c, const DifferentialOptions& opts) {
  return linear_map<ChainKey>(c, [&](const ChainKey& k) {
    ChainElement out;
    const std::size_t n = k.arity();
    for (std::size_t i = 1; i < n; ++i) {
      Rational sign = i % 2 == 1 ? Rational(1) : Rational(-1);
      if (opts.inject_sign_fault && i == n - 1) sign = -sign;
      out += sign * face_basis(i, k);
    }
    return out;
  });
}

ChainElement homotopy(const ChainElement& c) { return linear_map<ChainKey>(c, homotopy_basis); }

std::vector<ChainKey> chain_basis(std::size_t arity, std::size_t weight) {
  if (arity == 0) throw std::invalid_argument("chain arity starts at 1");
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> prefix;
  compositions(arity, weight, prefix, comps);
  std::vector<std::vector<DiptBasis>> tuples;
  for (const auto& comp : comps) {
    std::vector<std::vector<DiptBasis>> partial{{}};
    for (std::size_t d : comp) {
      std::vector<std::vector<DiptBasis>> next;
      for (const auto& p : partial)
        for (const auto& b : dipt_basis(d)) {
          next.push_back(p);
          next.back().push_back(b);
        }
      partial = std::move(next);
    }
    tuples.insert(tuples.end(), partial.begin(), partial.end());
  }
  std::vector<ChainKey> out;
  for (auto& t : tuples) {
    if (arity == 1) {
      out.emplace_back(ChainSymbol::None, t);
    } else {
      out.emplace_back(ChainSymbol::Star, t);
      out.emplace_back(ChainSymbol::Succ, t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomologyPiece homology_piece(std::size_t arity, std::size_t weight, const DifferentialOptions& opts) {
  if (arity == 0 || weight < arity) throw std::invalid_argument("homology pieces need 1 <= arity <= weight");
  HomologyPiece p;
  p.arity = arity;
  p.weight = weight;
  const std::size_t dim = chain_basis(arity, weight).size();
  p.kernel = arity == 1 ? dim : dim - differential_matrix(arity, weight, opts).rank();
  p.image = arity + 1 > weight ? 0 : differential_matrix(arity + 1, weight, opts).rank();
  p.betti = p.kernel - p.image;
  return p;
}

std::size_t homology_rank(std::size_t arity, std::size_t weight, const DifferentialOptions& opts) {
  return homology_piece(arity, weight, opts).betti;
}

HomologyReport homology_report(std::size_t max_arity, std::size_t weight_cap, std::size_t homotopy_weight_cap,
                               const DifferentialOptions& opts) {
  HomologyReport rep;
  auto fail = [&](bool& flag, const std::string& what, const ChainKey& k) {
    flag = false;
    if (!rep.witness) rep.witness = what + " fails on " + k.str();
  };
  for (std::size_t n = 1; n <= max_arity; ++n)
    for (std::size_t w = n; w <= weight_cap; ++w) {
      rep.pieces.push_back(homology_piece(n, w, opts));
      const std::size_t expected = n == 1 && w == 1 ? 1 : 0;
      if (rep.pieces.back().betti != expected) {
        rep.betti_ok = false;
        if (!rep.witness)
          rep.witness = "H_" + std::to_string(n) + " at weight " + std::to_string(w) + " has dimension " +
                        std::to_string(rep.pieces.back().betti);
      }
    }
  for (std::size_t n = 2; n <= max_arity; ++n)
    for (std::size_t w = n; w <= homotopy_weight_cap; ++w)
      for (const auto& k : chain_basis(n, w)) {
        const ChainElement c(k);
        const ChainElement dc = differential(c, opts);
        if (!differential(dc, opts).empty()) fail(rep.d_squared_zero, "d^2 = 0", k);
        for (std::size_t j = 2; j < n; ++j)
          for (std::size_t i = 1; i < j; ++i)
            if (face(i, face(j, c)) != face(j - 1, face(i, c))) fail(rep.simplicial, "d_i d_j = d_{j-1} d_i", k);
        if (differential(homotopy(c), opts) + homotopy(dc) != c) fail(rep.homotopy_ok, "dh + hd = id", k);
      }
  rep.koszul_ok = rep.d_squared_zero && rep.simplicial && rep.homotopy_ok && rep.betti_ok;
  return rep;
}

}  // namespace dipt
