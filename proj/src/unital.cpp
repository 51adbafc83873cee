#include "dipt/unital.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "dipt/dimensions.hpp"
#include "dipt/linear_algebra.hpp"

namespace dipt {

namespace {

UnitalElement star_keys(const UnitalKey& a, const UnitalKey& b) {
  if (!a) return UnitalElement(b);
  if (!b) return UnitalElement(a);
  return UnitalElement(UnitalKey(star_basis(*a, *b)));
}

UnitalElement succ_keys(const UnitalKey& a, const UnitalKey& b) {
  if (!a && !b) throw std::domain_error("1 ≻ 1 undefined");
  if (!a) return UnitalElement(b);
  if (!b) return {};
  return UnitalElement(UnitalKey(succ_basis(*a, *b)));
}

// Tensor of two unital elements.
UnitalTensor outer(const UnitalElement& a, const UnitalElement& b) {
  UnitalTensor out(2);
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add_term({ka, kb}, ca * cb);
  return out;
}

template <class F>
UnitalTensor tensor_bilinear(const UnitalTensor& p, const UnitalTensor& q, F&& f) {
  UnitalTensor out(2);
  for (const auto& [kp, cp] : p)
    for (const auto& [kq, cq] : q) out += (cp * cq) * f(kp[0], kp[1], kq[0], kq[1]);
  return out;
}

Rational inverse_factorial(std::size_t m) { return Rational(1) / factorial(static_cast<unsigned>(m)); }

}  // namespace

UnitalElement unit_element(const Rational& c) { return UnitalElement(kUnit, c); }

UnitalElement from_body(const DiptElement& x) {
  UnitalElement out;
  for (const auto& [b, c] : x) out.add_term(UnitalKey(b), c);
  return out;
}

Rational scalar_part(const UnitalElement& x) { return x.coeff(kUnit); }

DiptElement body(const UnitalElement& x) {
  DiptElement out;
  for (const auto& [k, c] : x)
    if (k) out.add_term(*k, c);
  return out;
}

Rational counit(const UnitalElement& x) { return scalar_part(x); }

UnitalElement unital_star(const UnitalElement& a, const UnitalElement& b) { return bilinear<UnitalKey>(a, b, star_keys); }
UnitalElement unital_succ(const UnitalElement& a, const UnitalElement& b) { return bilinear<UnitalKey>(a, b, succ_keys); }

UnitalTensor unital_pure(const UnitalKey& a, const UnitalKey& b, const Rational& c) {
  UnitalTensor t(2);
  t.add_term({a, b}, c);
  return t;
}

UnitalTensor semi_tensor_star(const UnitalTensor& p, const UnitalTensor& q) {
  return tensor_bilinear(p, q, [](const UnitalKey& a, const UnitalKey& b, const UnitalKey& a2, const UnitalKey& b2) {
    return outer(star_keys(a, a2), star_keys(b, b2));
  });
}

UnitalTensor semi_tensor_succ(const UnitalTensor& p, const UnitalTensor& q) {
  return tensor_bilinear(p, q, [](const UnitalKey& a, const UnitalKey& b, const UnitalKey& a2, const UnitalKey& b2) {
    if (!b && !b2) return outer(succ_keys(a, a2), unit_element());
    return outer(star_keys(a, a2), succ_keys(b, b2));
  });
}

UnitalTensor classical_tensor_star(const UnitalTensor& p, const UnitalTensor& q) { return semi_tensor_star(p, q); }

UnitalTensor classical_tensor_succ(const UnitalTensor& p, const UnitalTensor& q) {
  return tensor_bilinear(p, q, [](const UnitalKey& a, const UnitalKey& b, const UnitalKey& a2, const UnitalKey& b2) {
    if (!b && !b2) return outer(succ_keys(a, a2), unit_element());
    if (!a && !a2) return outer(unit_element(), succ_keys(b, b2));
    return outer(succ_keys(a, a2), succ_keys(b, b2));
  });
}

UnitalTensor UnitalCoproduct::on_basis(const UnitalKey& x) const {
  if (!x) return unital_pure(kUnit, kUnit);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(*x); it != cache_.end()) return it->second;
  }
  UnitalTensor value = compute(*x);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(*x, std::move(value)).first->second;
}

UnitalTensor UnitalCoproduct::compute(const DiptBasis& x) const {
  if (x.degree() == 1) return unital_pure(kUnit, x) + unital_pure(x, kUnit);
  const Decomposition d = decompose_basis(x);
  const UnitalTensor l = on_basis(d.left), r = on_basis(d.right);
  const bool is_star = d.op == DiptOp::Star;
  switch (kind_) {
    case CoproductKind::SemiHopf:
      return is_star ? semi_tensor_star(l, r) : semi_tensor_succ(l, r);
    case CoproductKind::ComHopf:
      return is_star ? classical_tensor_star(l, r) : classical_tensor_succ(l, r);
    case CoproductKind::SemiInfinitesimal: {
      const auto op = is_star ? semi_tensor_star : semi_tensor_succ;
      return op(l, unital_pure(kUnit, d.right)) + op(unital_pure(d.left, kUnit), r) - unital_pure(d.left, d.right);
    }
  }
  throw std::logic_error("unknown coproduct kind");
}

UnitalTensor UnitalCoproduct::operator()(const UnitalElement& x) const {
  UnitalTensor out(2);
  for (const auto& [k, c] : x) out += c * on_basis(k);
  return out;
}

UnitalTensor UnitalCoproduct::reduced(const UnitalElement& x) const {
  if (!scalar_part(x).is_zero()) throw std::invalid_argument("reduced coproduct needs zero scalar part");
  UnitalTensor out = (*this)(x);
  for (const auto& [k, c] : x) out -= unital_pure(kUnit, k, c) + unital_pure(k, kUnit, c);
  return out;
}

const UnitalCoproduct& unital_coproduct(CoproductKind kind) {
  static const UnitalCoproduct semi_hopf(CoproductKind::SemiHopf);
  static const UnitalCoproduct semi_inf(CoproductKind::SemiInfinitesimal);
  static const UnitalCoproduct com_hopf(CoproductKind::ComHopf);
  switch (kind) {
    case CoproductKind::SemiHopf:
      return semi_hopf;
    case CoproductKind::SemiInfinitesimal:
      return semi_inf;
    case CoproductKind::ComHopf:
      return com_hopf;
  }
  throw std::logic_error("unknown coproduct kind");
}

UnitalTensor blacktriangle(const UnitalElement& x) { return unital_coproduct(CoproductKind::SemiHopf)(x); }
UnitalTensor vartriangle(const UnitalElement& x) { return unital_coproduct(CoproductKind::SemiInfinitesimal)(x); }
UnitalTensor hopf_delta(const UnitalElement& x) { return unital_coproduct(CoproductKind::ComHopf)(x); }
UnitalTensor reduced(CoproductKind kind, const UnitalElement& x) { return unital_coproduct(kind).reduced(x); }

std::vector<DiptElement> prim_2as(std::size_t n, std::string_view alphabet) {
  if (n == 0) throw std::invalid_argument("degree starts at 1");
  using Row = std::pair<int, std::vector<UnitalKey>>;
  const OperatorMatrix<DiptBasis, Row> m(dipt_basis(n, alphabet), [](const DiptBasis& b) {
    LinComb<Row> out;
    const UnitalElement x(UnitalKey{b});
    for (const auto& [k, c] : reduced(CoproductKind::SemiInfinitesimal, x)) out.add_term({0, k}, c);
    for (const auto& [k, c] : reduced(CoproductKind::SemiHopf, x)) out.add_term({1, k}, c);
    return out;
  });
  return m.kernel();
}

UnitalElement antipode(CoproductKind kind, const UnitalElement& x) {
  static std::mutex mutex;
  static std::map<std::pair<CoproductKind, DiptBasis>, UnitalElement> memo;
  const UnitalCoproduct& cop = unital_coproduct(kind);
  std::function<UnitalElement(const UnitalKey&)> s = [&](const UnitalKey& k) -> UnitalElement {
    if (!k) return unit_element();
    {
      std::lock_guard lock(mutex);
      if (auto it = memo.find({kind, *k}); it != memo.end()) return it->second;
    }
    UnitalElement value = -UnitalElement(k);
    for (const auto& [keys, c] : cop.reduced(UnitalElement(k))) value -= c * unital_star(s(keys[0]), UnitalElement(keys[1]));
    std::lock_guard lock(mutex);
    return memo.try_emplace({kind, *k}, std::move(value)).first->second;
  };
  return linear_map<UnitalKey>(x, s);
}

UnitalElement antipode_convolution(CoproductKind kind, const UnitalElement& x, bool left) {
  UnitalElement out;
  for (const auto& [keys, c] : unital_coproduct(kind)(x)) {
    const UnitalElement a(keys[0]), b(keys[1]);
    out += c * (left ? unital_star(antipode(kind, a), b) : unital_star(a, antipode(kind, b)));
  }
  return out;
}

DiptElement com_symmetrize(const std::string& word) {
  if (word.empty()) throw std::invalid_argument("empty word");
  std::vector<std::size_t> perm(word.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  DiptElement out;
  const Forest leaves = Forest::leaves(word.size());
  const Rational weight = inverse_factorial(word.size());
  do {
    std::string w;
    for (std::size_t i : perm) w += word[i];
    out.add_term(DiptBasis(leaves, w), weight);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ComWord com_corestrict(const DiptElement& x) {
  const UnitalCoproduct& cop = unital_coproduct(CoproductKind::ComHopf);
  ComWord out;
  for (const auto& [b, c] : x) {
    UnitalTensor t(1);
    t.add_term({UnitalKey(b)}, 1);
    for (std::size_t i = 1; i < b.degree(); ++i)
      t = apply_to_slot(t, 0, 2, [&](const UnitalKey& k) { return cop.reduced(UnitalElement(k)); });
    for (const auto& [keys, k] : t) {
      std::string word;
      for (const auto& slot : keys) word += slot->word();
      std::sort(word.begin(), word.end());
      out.add_term(word, c * k * inverse_factorial(b.degree()));
    }
  }
  return out;
}

Tensor<std::string> com_unshuffle(const std::string& sorted_word) {
  const std::size_t m = sorted_word.size();
  if (m == 0) throw std::invalid_argument("empty word");
  if (m >= 31) throw std::invalid_argument("word too long");
  Tensor<std::string> out(2);
  for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
    std::string a, b;
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1u ? a : b) += sorted_word[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.add_term({a, b}, 1);
  }
  return out;
}

PrimComReport primcom_dims(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("max degree must be at least 1");
  PrimComReport rep;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const OperatorMatrix<DiptBasis, std::vector<UnitalKey>> m(dipt_basis(n), [](const DiptBasis& b) {
      return reduced(CoproductKind::ComHopf, UnitalElement(UnitalKey(b))).terms();
    });
    rep.kernel.push_back(m.columns().size() - m.rank());
  }
  std::vector<std::int64_t> large;
  for (auto r : large_schroeder(max_n)) large.push_back(static_cast<std::int64_t>(r));
  for (auto p : inverse_euler_transform(large)) rep.oracle.push_back(static_cast<std::uint64_t>(p));
  rep.ok = rep.kernel == rep.oracle;
  return rep;
}

}  // namespace dipt
