#include "dipt/dipterous.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dipt/errors.hpp"

namespace dipt {

namespace {

void check_word(const std::string& word) {
  for (char c : word)
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("generator names are letters, got '") + c + "'");
}

Forest forest_of(std::span<const PlanarTree> trees) {
  return Forest(std::vector<PlanarTree>(trees.begin(), trees.end()));
}

}  // namespace

DiptBasis::DiptBasis(Forest forest, std::string word) : forest_(std::move(forest)), word_(std::move(word)) {
  if (word_.size() != forest_.degree())
    throw std::invalid_argument("word length " + std::to_string(word_.size()) + " does not match forest degree " +
                                std::to_string(forest_.degree()));
  check_word(word_);
  key_ = forest_.encoding() + " @ " + word_;
}

DiptBasis DiptBasis::generator(char v) { return DiptBasis(Forest(PlanarTree::leaf()), std::string(1, v)); }

DiptBasis DiptBasis::parse(std::string_view text) {
  const auto at = text.find(" @ ");
  if (at == std::string_view::npos) throw ParseError("expected '<forest> @ <word>'", 0);
  Forest f = [&] {
    try {
      return Forest::parse(text.substr(0, at));
    } catch (const ParseError& e) {
      throw ParseError("malformed forest", e.position());
    }
  }();
  std::string word(text.substr(at + 3));
  for (std::size_t i = 0; i < word.size(); ++i)
    if (!std::isalpha(static_cast<unsigned char>(word[i]))) throw ParseError("generator names are letters", at + 3 + i);
  if (word.size() != f.degree()) throw ParseError("word length does not match forest degree", at + 3 + word.size());
  return DiptBasis(std::move(f), std::move(word));
}

std::vector<DiptBasis> dipt_basis(std::size_t n, std::string_view alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("empty generator alphabet");
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    next.reserve(words.size() * alphabet.size());
    for (const auto& w : words)
      for (char c : alphabet) next.push_back(w + c);
    words = std::move(next);
  }
  std::vector<DiptBasis> out;
  for (const auto& f : enumerate_forests(n))
    for (const auto& w : words) out.emplace_back(f, w);
  std::sort(out.begin(), out.end());
  return out;
}

DiptElement component(const DiptElement& x, std::size_t n) {
  DiptElement out;
  for (const auto& [b, c] : x)
    if (b.degree() == n) out.add_term(b, c);
  return out;
}

DiptBasis star_basis(const DiptBasis& a, const DiptBasis& b) {
  return DiptBasis(a.forest() + b.forest(), a.word() + b.word());
}

DiptBasis succ_basis(const DiptBasis& a, const DiptBasis& b) {
  std::vector<PlanarTree> kids(a.forest().trees().begin(), a.forest().trees().end());
  const auto rhs = b.forest().trees();
  if (rhs.size() == 1) {
    if (rhs.front().is_leaf())
      kids.push_back(rhs.front());
    else
      kids.insert(kids.end(), rhs.front().children().begin(), rhs.front().children().end());
  } else {
    kids.push_back(graft(std::vector<PlanarTree>(rhs.begin(), rhs.end())));
  }
  return DiptBasis(Forest(graft(std::move(kids))), a.word() + b.word());
}

DiptBasis prec_basis(const DiptBasis& a, const DiptBasis& b) {
  std::vector<PlanarTree> kids;
  const auto lhs = a.forest().trees();
  if (lhs.size() == 1) {
    if (lhs.front().is_leaf())
      kids.push_back(lhs.front());
    else
      kids.assign(lhs.front().children().begin(), lhs.front().children().end());
  } else {
    kids.push_back(graft(std::vector<PlanarTree>(lhs.begin(), lhs.end())));
  }
  kids.insert(kids.end(), b.forest().trees().begin(), b.forest().trees().end());
  return DiptBasis(Forest(graft(std::move(kids))), a.word() + b.word());
}

DiptElement star(const DiptElement& a, const DiptElement& b) {
  return bilinear<DiptBasis>(a, b, [](const DiptBasis& x, const DiptBasis& y) { return DiptElement(star_basis(x, y)); });
}

DiptElement succ(const DiptElement& a, const DiptElement& b) {
  return bilinear<DiptBasis>(a, b, [](const DiptBasis& x, const DiptBasis& y) { return DiptElement(succ_basis(x, y)); });
}

DiptElement rdipt_star(const DiptElement& a, const DiptElement& b) { return star(a, b); }

DiptElement rdipt_prec(const DiptElement& a, const DiptElement& b) {
  return bilinear<DiptBasis>(a, b, [](const DiptBasis& x, const DiptBasis& y) { return DiptElement(prec_basis(x, y)); });
}

DiptBasis reflect(const DiptBasis& x) {
  return DiptBasis(x.forest().reflect(), std::string(x.word().rbegin(), x.word().rend()));
}

DiptElement reflect(const DiptElement& x) {
  return linear_map<DiptBasis>(x, [](const DiptBasis& b) { return DiptElement(reflect(b)); });
}

Decomposition decompose_basis(const DiptBasis& x) {
  if (x.degree() == 1) throw std::invalid_argument("generator has no decomposition");
  const auto trees = x.forest().trees();
  if (trees.size() > 1) {
    const std::size_t d = trees.front().degree();
    return {DiptOp::Star, DiptBasis(Forest(trees.front()), x.word().substr(0, d)),
            DiptBasis(forest_of(trees.subspan(1)), x.word().substr(d))};
  }
  const auto kids = trees.front().children();
  Forest left = forest_of(kids.first(kids.size() - 1));
  const PlanarTree& last = kids.back();
  Forest right = last.is_leaf() ? Forest(last) : forest_of(last.children());
  const std::size_t d = left.degree();
  return {DiptOp::Succ, DiptBasis(std::move(left), x.word().substr(0, d)), DiptBasis(std::move(right), x.word().substr(d))};
}

DiptBasis apply(DiptOp op, const DiptBasis& a, const DiptBasis& b) {
  return op == DiptOp::Star ? star_basis(a, b) : succ_basis(a, b);
}

DipterousStructure<DiptElement> dipt_self_structure() {
  return {[](const DiptElement& a, const DiptElement& b) { return star(a, b); },
          [](const DiptElement& a, const DiptElement& b) { return succ(a, b); },
          [](char v) { return generator(v); }};
}

}  // namespace dipt
