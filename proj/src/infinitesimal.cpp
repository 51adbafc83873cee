#include "dipt/infinitesimal.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "dipt/dimensions.hpp"
#include "dipt/linear_algebra.hpp"

namespace dipt {

DiptTensor SemiInfinitesimalCoproduct::on_basis(const DiptBasis& x) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(x); it != cache_.end()) return it->second;
  }
  DiptTensor value = compute(x);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(x, std::move(value)).first->second;
}

DiptTensor SemiInfinitesimalCoproduct::compute(const DiptBasis& x) const {
  DiptTensor out(2);
  if (x.degree() == 1) return out;
  const Decomposition d = decompose_basis(x);
  for (const auto& [keys, c] : on_basis(d.left)) out.add_term({keys[0], apply(d.op, keys[1], d.right)}, c);
  for (const auto& [keys, c] : on_basis(d.right)) out.add_term({star_basis(d.left, keys[0]), keys[1]}, c);
  out.add_term({d.left, d.right}, params_.t);
  return out;
}

DiptTensor SemiInfinitesimalCoproduct::operator()(const DiptElement& x) const {
  DiptTensor out(2);
  for (const auto& [b, c] : x) out += c * on_basis(b);
  return out;
}

DiptTensor SemiInfinitesimalCoproduct::iterate(const DiptElement& x, std::size_t n) const {
  DiptTensor out(1);
  for (const auto& [b, c] : x) out.add_term({b}, c);
  for (std::size_t i = 0; i < n; ++i)
    out = apply_to_slot(out, 0, 2, [this](const DiptBasis& b) { return on_basis(b); });
  return out;
}

const SemiInfinitesimalCoproduct& semi_infinitesimal(const CoproductParams& params) {
  static std::mutex mutex;
  static std::map<Rational, std::unique_ptr<SemiInfinitesimalCoproduct>> instances;
  std::lock_guard lock(mutex);
  auto& slot = instances[params.t];
  if (!slot) slot = std::make_unique<SemiInfinitesimalCoproduct>(params);
  return *slot;
}

DiptTensor delta(const DiptElement& x, const CoproductParams& params) { return semi_infinitesimal(params)(x); }

DiptTensor delta_iter(const DiptElement& x, std::size_t n, const CoproductParams& params) {
  if (n == 0) throw std::invalid_argument("iterated coproduct needs n >= 1");
  return semi_infinitesimal(params).iterate(x, n);
}

namespace {

OperatorMatrix<DiptBasis, std::vector<DiptBasis>> iterate_matrix(std::size_t r, std::size_t n, std::string_view alphabet,
                                                                const CoproductParams& params) {
  const auto& cop = semi_infinitesimal(params);
  return {dipt_basis(n, alphabet), [&](const DiptBasis& b) { return cop.iterate(DiptElement(b), r).terms(); }};
}

}  // namespace

std::size_t filtration_dim(std::size_t r, std::size_t n, const CoproductParams& params) {
  if (r == 0 || n == 0) throw std::invalid_argument("filtration level and degree start at 1");
  const auto m = iterate_matrix(r, n, std::string_view(&kDefaultGenerator, 1), params);
  return m.columns().size() - m.rank();
}

std::vector<DiptElement> prim_basis(std::size_t n, std::string_view alphabet, const CoproductParams& params) {
  if (n == 0) throw std::invalid_argument("degree starts at 1");
  return iterate_matrix(1, n, alphabet, params).kernel();
}

DiptElement triangle(const DiptElement& x, const DiptElement& y) { return succ(x, y) - star(x, y); }

DiptElement bracket(const std::vector<DiptElement>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("bracket needs at least two arguments");
  DiptElement inner = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 1;) inner = succ(xs[i], inner);
  return triangle(xs.front(), inner);
}

DiptElement mag_graft_as_bracket(const PlanarTree& t, std::string_view word) {
  if (word.size() != t.degree()) throw std::invalid_argument("word length does not match tree degree");
  if (t.is_leaf()) return generator(word.front());
  std::vector<DiptElement> args;
  std::size_t pos = 0;
  for (const auto& c : t.children()) {
    args.push_back(mag_graft_as_bracket(c, word.substr(pos, c.degree())));
    pos += c.degree();
  }
  return bracket(args);
}

bool corolla_iso_check(std::size_t n) {
  if (n < 2) throw std::invalid_argument("corolla needs arity at least 2");
  std::string word;
  std::vector<DiptElement> gens;
  for (std::size_t i = 0; i < n; ++i) {
    word += static_cast<char>('a' + i % 26);
    gens.push_back(generator(word.back()));
  }
  const DiptElement b = bracket(gens);
  const DiptBasis cor(Forest(corolla(n)), word);
  if (b.coeff(cor) != Rational(1)) return false;
  for (const auto& [k, c] : b)
    if (k != cor && k.forest().is_single_tree()) return false;
  return true;
}

DiptElement e_idempotent(const DiptElement& x, const CoproductParams& params) {
  const auto& cop = semi_infinitesimal(params);
  std::map<DiptBasis, DiptElement> memo;
  std::function<DiptElement(const DiptBasis&)> e = [&](const DiptBasis& b) -> DiptElement {
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    DiptElement value(b);
    for (const auto& [keys, c] : cop.on_basis(b)) value -= c * star(DiptElement(keys[0]), e(keys[1]));
    memo.emplace(b, value);
    return value;
  };
  return linear_map<DiptBasis>(x, e);
}

Tensor<std::string> asc_deconcat(const std::string& word) {
  if (word.empty()) throw std::invalid_argument("empty word");
  Tensor<std::string> out(2);
  for (std::size_t k = 1; k < word.size(); ++k) out.add_term({word.substr(0, k), word.substr(k)}, 1);
  return out;
}

Tensor<std::string> asc_deconcat(const AscElement& x) {
  Tensor<std::string> out(2);
  for (const auto& [w, c] : x) out += c * asc_deconcat(w);
  return out;
}

AscElement phi_corestrict(const DiptElement& x, const CoproductParams& params) {
  const auto& cop = semi_infinitesimal(params);
  AscElement out;
  for (const auto& [b, c] : x) {
    // Only D^{(d-1)} can put a generator in every slot.
    for (const auto& [keys, k] : cop.iterate(DiptElement(b), b.degree() - 1)) {
      std::string word;
      for (const auto& slot : keys) {
        if (slot.degree() != 1) break;
        word += slot.word();
      }
      if (word.size() == keys.size()) out.add_term(word, c * k);
    }
  }
  return out;
}

DiptElement s_section(const std::string& word) {
  if (word.empty()) throw std::invalid_argument("empty word");
  return DiptElement(DiptBasis(Forest::leaves(word.size()), word));
}

PbwReport pbw_dim_check(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("max degree must be at least 1");
  PbwReport rep;
  for (std::size_t n = 1; n <= max_n; ++n) {
    rep.forests.push_back(enumerate_forests(n).size());
    rep.primitives.push_back(filtration_dim(1, n));
  }
  rep.composed = sequence_composition(rep.primitives);
  rep.ok = rep.composed == rep.forests;
  return rep;
}

}  // namespace dipt
