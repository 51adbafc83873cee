#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "dipt/dipterous.hpp"
#include "dipt/lincomb.hpp"

namespace dipt {

/// Basis of K + Dipt(V): nullopt is the unit 1, which sorts first.
using UnitalKey = std::optional<DiptBasis>;
using UnitalElement = LinComb<UnitalKey>;
using UnitalTensor = Tensor<UnitalKey>;

inline const UnitalKey kUnit = std::nullopt;

UnitalElement unit_element(const Rational& c = 1);
UnitalElement from_body(const DiptElement& x);
/// Coefficient of the unit.
Rational scalar_part(const UnitalElement& x);
DiptElement body(const UnitalElement& x);
/// The counit: the scalar part.
Rational counit(const UnitalElement& x);

/// 1 * x = x = x * 1.
UnitalElement unital_star(const UnitalElement& a, const UnitalElement& b);
/// 1 > x = x, x > 1 = 0; 1 > 1 throws "1 ≻ 1 undefined".
UnitalElement unital_succ(const UnitalElement& a, const UnitalElement& b);

/// (a(x)b) * (a'(x)b') = (a*a')(x)(b*b').
UnitalTensor semi_tensor_star(const UnitalTensor& p, const UnitalTensor& q);
/// (a(x)b) > (a'(x)b') = (a*a')(x)(b>b') unless b = b' = 1, then (a>a')(x)1.
UnitalTensor semi_tensor_succ(const UnitalTensor& p, const UnitalTensor& q);
/// Slotwise products. For > a pair of units in one slot is kept as a unit
/// and the other slot takes the product; units in both slots throw.
UnitalTensor classical_tensor_star(const UnitalTensor& p, const UnitalTensor& q);
UnitalTensor classical_tensor_succ(const UnitalTensor& p, const UnitalTensor& q);

UnitalTensor unital_pure(const UnitalKey& a, const UnitalKey& b, const Rational& c = 1);

enum class CoproductKind {
  SemiHopf,             // ▲: a morphism for the semi tensor structure
  SemiInfinitesimal,    // △: unital semi-infinitesimal relations
  ComHopf,              // a morphism for the classical tensor structure
};

/// Coproduct determined by generators v |-> 1(x)v + v(x)1 and its
/// compatibility relations, memoized on basis keys.
class UnitalCoproduct {
 public:
  explicit UnitalCoproduct(CoproductKind kind) : kind_(kind) {}
  CoproductKind kind() const { return kind_; }
  UnitalTensor on_basis(const UnitalKey& x) const;
  UnitalTensor operator()(const UnitalElement& x) const;
  /// Coproduct minus 1(x)x and x(x)1; x must have no scalar part.
  UnitalTensor reduced(const UnitalElement& x) const;

 private:
  UnitalTensor compute(const DiptBasis& x) const;

  CoproductKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::map<DiptBasis, UnitalTensor> cache_;
};

const UnitalCoproduct& unital_coproduct(CoproductKind kind);

UnitalTensor blacktriangle(const UnitalElement& x);
UnitalTensor vartriangle(const UnitalElement& x);
UnitalTensor hopf_delta(const UnitalElement& x);
UnitalTensor reduced(CoproductKind kind, const UnitalElement& x);

/// ker reduced △ ∩ ker reduced ▲ in degree n.
std::vector<DiptElement> prim_2as(std::size_t n, std::string_view alphabet = std::string_view(&kDefaultGenerator, 1));

/// S(x) = -x - S(x1) * x2 over the reduced coproduct of `kind`; S(1) = 1.
UnitalElement antipode(CoproductKind kind, const UnitalElement& x);
inline UnitalElement antipode_S(const UnitalElement& x) { return antipode(CoproductKind::SemiHopf, x); }
inline UnitalElement antipode_Sprime(const UnitalElement& x) { return antipode(CoproductKind::SemiInfinitesimal, x); }

/// *(S (x) id) cop(x) when left is true, *(id (x) S) cop(x) otherwise.
UnitalElement antipode_convolution(CoproductKind kind, const UnitalElement& x, bool left);

/// Commutative words are sorted letter strings (multisets).
using ComWord = LinComb<std::string>;

/// (1/m!) sum over permutations of the all-leaf forest on the permuted word.
DiptElement com_symmetrize(const std::string& word);
/// Sum over m of (1/m!) times the multiset image of the generator
/// projection of the (m-1)-fold reduced Com coproduct.
ComWord com_corestrict(const DiptElement& x);
/// Reduced coproduct of the symmetric coalgebra on sorted words.
Tensor<std::string> com_unshuffle(const std::string& sorted_word);

struct PrimComReport {
  std::vector<std::uint64_t> kernel;  // dim ker reduced Com coproduct
  std::vector<std::uint64_t> oracle;  // inverse Euler transform of large Schröder
  bool ok = false;
};

PrimComReport primcom_dims(std::size_t max_n);

}  // namespace dipt
