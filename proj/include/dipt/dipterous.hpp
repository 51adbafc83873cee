#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dipt/lincomb.hpp"
#include "dipt/planar_tree.hpp"

namespace dipt {

/// Generator used for every dimension and kernel computation. The operads
/// involved are regular, so one generator determines all the dimensions.
inline constexpr char kDefaultGenerator = 'x';

/// Basis element forest (x) word of the free dipterous algebra Dipt(V).
/// Generators are single letters; the word has one letter per leaf.
/// Text form: "<forest> @ <word>", e.g. "[(| |) |] @ vwu".
class DiptBasis {
 public:
  DiptBasis(Forest forest, std::string word);

  /// The generator | (x) v.
  static DiptBasis generator(char v);
  static DiptBasis parse(std::string_view text);

  const Forest& forest() const { return forest_; }
  const std::string& word() const { return word_; }
  std::size_t degree() const { return word_.size(); }
  const std::string& key() const { return key_; }

  friend bool operator==(const DiptBasis& a, const DiptBasis& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const DiptBasis& a, const DiptBasis& b) { return a.key_ <=> b.key_; }

 private:
  Forest forest_;
  std::string word_;
  std::string key_;
};

using DiptElement = LinComb<DiptBasis>;

inline DiptElement generator(char v) { return DiptElement(DiptBasis::generator(v)); }

/// Every basis element of degree n over `alphabet`, in canonical order.
std::vector<DiptBasis> dipt_basis(std::size_t n, std::string_view alphabet = std::string_view(&kDefaultGenerator, 1));

/// Degree-n part of x.
DiptElement component(const DiptElement& x, std::size_t n);

// Basis-level operations. Each returns a single basis element.
DiptBasis star_basis(const DiptBasis& a, const DiptBasis& b);
DiptBasis succ_basis(const DiptBasis& a, const DiptBasis& b);
DiptBasis prec_basis(const DiptBasis& a, const DiptBasis& b);

/// Concatenation of forests and words. Associative.
DiptElement star(const DiptElement& a, const DiptElement& b);

/// The dipterous operation: the trees of `a` grafted under a new root
/// followed by the branches of `b` (when b is a single non-leaf tree), by
/// the tree graft(b) (when b has several trees), or by a leaf (when b is
/// the generator). Always a single tree.
DiptElement succ(const DiptElement& a, const DiptElement& b);

/// Right dipterous pair: same concatenation, mirrored grafting.
DiptElement rdipt_star(const DiptElement& a, const DiptElement& b);
DiptElement rdipt_prec(const DiptElement& a, const DiptElement& b);

/// Mirror image: forests reflected, words reversed. Exchanges succ and prec.
DiptBasis reflect(const DiptBasis& x);
DiptElement reflect(const DiptElement& x);

enum class DiptOp { Star, Succ };

struct Decomposition {
  DiptOp op;
  DiptBasis left;
  DiptBasis right;
};

/// Canonical splitting x = left op right with both factors of smaller
/// degree: t_1...t_k -> t_1 * (t_2...t_k), and a single tree
/// t_1 v ... v t_k -> (t_1...t_{k-1}) > (branches of t_k), where a leaf t_k
/// gives the generator on the right. Throws on generators.
Decomposition decompose_basis(const DiptBasis& x);

DiptBasis apply(DiptOp op, const DiptBasis& a, const DiptBasis& b);

/// A dipterous algebra given by its two products and generator images.
/// T must be default-constructible to zero, closed under +, and scalable
/// by Rational on the left.
template <class T>
struct DipterousStructure {
  std::function<T(const T&, const T&)> star;
  std::function<T(const T&, const T&)> succ;
  std::function<T(char)> generator;
};

/// The unique dipterous morphism Dipt(V) -> target extending the generator
/// assignment, evaluated through decompose_basis.
template <class T>
T eval_universal(const DiptElement& x, const DipterousStructure<T>& target) {
  std::map<DiptBasis, T> memo;
  std::function<T(const DiptBasis&)> eval = [&](const DiptBasis& b) -> T {
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    T value{};
    if (b.degree() == 1) {
      value = target.generator(b.word().front());
    } else {
      const Decomposition d = decompose_basis(b);
      const T l = eval(d.left);
      const T r = eval(d.right);
      value = d.op == DiptOp::Star ? target.star(l, r) : target.succ(l, r);
    }
    memo.emplace(b, value);
    return value;
  };
  T out{};
  for (const auto& [b, c] : x) out = out + c * eval(b);
  return out;
}

/// Dipt(V) viewed as a target of eval_universal (generators to themselves).
DipterousStructure<DiptElement> dipt_self_structure();

}  // namespace dipt
