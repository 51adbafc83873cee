#include "dipt/ldipterous.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dipt/errors.hpp"

namespace dipt {

LDiptBasis::LDiptBasis(BinaryTree tree, std::string word) : tree_(std::move(tree)), word_(std::move(word)) {
  if (tree_.is_leaf()) throw std::invalid_argument("the leaf is not an L-dipterous basis element");
  if (word_.size() != tree_.degree()) throw std::invalid_argument("word length does not match internal node count");
  for (char c : word_)
    if (!std::isalpha(static_cast<unsigned char>(c))) throw std::invalid_argument("generator names are letters");
  key_ = tree_.encoding() + " @ " + word_;
}

LDiptBasis LDiptBasis::generator(char v) {
  return LDiptBasis(BinaryTree::graft(BinaryTree::leaf(), BinaryTree::leaf()), std::string(1, v));
}

LDiptBasis LDiptBasis::parse(std::string_view text) {
  const auto at = text.find(" @ ");
  if (at == std::string_view::npos) throw ParseError("expected '<tree> @ <word>'", 0);
  BinaryTree t = BinaryTree::parse(text.substr(0, at));
  std::string word(text.substr(at + 3));
  if (t.is_leaf() || word.size() != t.degree()) throw ParseError("word length does not match tree degree", at + 3);
  return LDiptBasis(std::move(t), std::move(word));
}

LDiptBasis ldipt_nwarrow_basis(const LDiptBasis& r, const LDiptBasis& s) {
  return LDiptBasis(bin_nwarrow(r.tree(), s.tree()), r.word() + s.word());
}

LDiptBasis ldipt_succ_basis(const LDiptBasis& t, const LDiptBasis& s) {
  const BinaryTree& st = s.tree();
  return LDiptBasis(bin_graft(bin_nwarrow(t.tree(), st.left()), st.right()), t.word() + s.word());
}

LDiptElement ldipt_nwarrow(const LDiptElement& a, const LDiptElement& b) {
  return bilinear<LDiptBasis>(a, b, [](const LDiptBasis& x, const LDiptBasis& y) {
    return LDiptElement(ldipt_nwarrow_basis(x, y));
  });
}

LDiptElement ldipt_succ(const LDiptElement& a, const LDiptElement& b) {
  return bilinear<LDiptBasis>(a, b, [](const LDiptBasis& x, const LDiptBasis& y) {
    return LDiptElement(ldipt_succ_basis(x, y));
  });
}

std::vector<LDiptBasis> ldipt_basis(std::size_t n, std::string_view alphabet) {
  if (n == 0) throw std::invalid_argument("L-dipterous basis starts in degree 1");
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char c : alphabet) next.push_back(w + c);
    words = std::move(next);
  }
  std::vector<LDiptBasis> out;
  for (const auto& t : enumerate_binary(n))
    for (const auto& w : words) out.emplace_back(t, w);
  std::sort(out.begin(), out.end());
  return out;
}

LDipterousStructure<LDiptElement> ldipt_self_structure() {
  return {[](const LDiptElement& a, const LDiptElement& b) { return ldipt_nwarrow(a, b); },
          [](const LDiptElement& a, const LDiptElement& b) { return ldipt_succ(a, b); },
          [](char v) { return LDiptElement(LDiptBasis::generator(v)); }};
}

DipterousStructure<LDiptElement> ldipt_as_dipterous() {
  return {[](const LDiptElement& a, const LDiptElement& b) { return ldipt_nwarrow(a, b); },
          [](const LDiptElement& a, const LDiptElement& b) { return ldipt_succ(a, b); },
          [](char v) { return LDiptElement(LDiptBasis::generator(v)); }};
}

}  // namespace dipt
