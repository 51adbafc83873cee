#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dipt/binary_tree.hpp"
#include "dipt/dipterous.hpp"
#include "dipt/lincomb.hpp"

namespace dipt {

/// Basis element tree (x) word of the free L-dipterous algebra: a binary
/// tree with at least one internal node, one letter per internal node
/// (read in-order). The generator v is the one-node tree.
class LDiptBasis {
 public:
  LDiptBasis(BinaryTree tree, std::string word);
  static LDiptBasis generator(char v);
  static LDiptBasis parse(std::string_view text);

  const BinaryTree& tree() const { return tree_; }
  const std::string& word() const { return word_; }
  std::size_t degree() const { return word_.size(); }
  const std::string& key() const { return key_; }

  friend bool operator==(const LDiptBasis& a, const LDiptBasis& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const LDiptBasis& a, const LDiptBasis& b) { return a.key_ <=> b.key_; }

 private:
  BinaryTree tree_;
  std::string word_;
  std::string key_;
};

using LDiptElement = LinComb<LDiptBasis>;

LDiptBasis ldipt_nwarrow_basis(const LDiptBasis& r, const LDiptBasis& s);
/// t > s := (t <^ s_l) v s_r.
LDiptBasis ldipt_succ_basis(const LDiptBasis& t, const LDiptBasis& s);

/// Associative product: graft onto the rightmost leaf.
LDiptElement ldipt_nwarrow(const LDiptElement& a, const LDiptElement& b);
LDiptElement ldipt_succ(const LDiptElement& a, const LDiptElement& b);

std::vector<LDiptBasis> ldipt_basis(std::size_t n, std::string_view alphabet = std::string_view(&kDefaultGenerator, 1));

/// L-dipterous algebra given by its products and generator images.
template <class T>
struct LDipterousStructure {
  std::function<T(const T&, const T&)> nwarrow;
  std::function<T(const T&, const T&)> succ;
  std::function<T(char)> generator;
};

/// Unique L-dipterous morphism extending the generator assignment, through
/// t = (t_l > v) <^ t_r. A leaf t_l collapses the > factor to the
/// generator image; a leaf t_r drops the <^ factor.
template <class T>
T ldipt_eval_universal(const LDiptElement& x, const LDipterousStructure<T>& target) {
  std::map<std::string, T> memo;
  std::function<T(const BinaryTree&, std::string_view)> eval = [&](const BinaryTree& t, std::string_view w) -> T {
    const std::string key = t.encoding() + " @ " + std::string(w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t dl = t.left().degree();
    const T g = target.generator(w[dl]);
    T head = t.left().is_leaf() ? g : target.succ(eval(t.left(), w.substr(0, dl)), g);
    T value = t.right().is_leaf() ? head : target.nwarrow(head, eval(t.right(), w.substr(dl + 1)));
    memo.emplace(key, value);
    return value;
  };
  T out{};
  for (const auto& [b, c] : x) out = out + c * eval(b.tree(), b.word());
  return out;
}

LDipterousStructure<LDiptElement> ldipt_self_structure();

/// Free L-dipterous algebra as a dipterous target (star = <^).
DipterousStructure<LDiptElement> ldipt_as_dipterous();

}  // namespace dipt
