#include "dipt/qndipt.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dipt/errors.hpp"

namespace dipt {

namespace {

bool letters(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; });
}

QNElement qn_star_basis(const QNBasis& a, const QNBasis& b) {
  if (a.tag() || b.tag()) return {};
  return QNElement(QNBasis(a.word() + b.word()));
}

QNElement qn_succ_basis(const QNBasis& a, const QNBasis& b) {
  if (a.tag()) return {};
  if (b.tag()) return QNElement(QNBasis(a.word() + b.word(), b.tag()));
  if (b.word().size() == 1) return QNElement(QNBasis(a.word(), b.word().front()));
  return {};
}

}  // namespace

QNBasis::QNBasis(std::string word, std::optional<char> tag) : word_(std::move(word)), tag_(tag) {
  if (word_.empty()) throw std::invalid_argument("QNDipt words are nonempty");
  if (!letters(word_) || (tag_ && !letters(std::string_view(&*tag_, 1))))
    throw std::invalid_argument("generator names are letters");
  key_ = word_ + '|' + (tag_ ? *tag_ : '1');
}

QNBasis QNBasis::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '<word>|<tag>'", text.size());
  const std::string_view word = text.substr(0, bar), tag = text.substr(bar + 1);
  if (word.empty() || !letters(word)) throw ParseError("word must be a nonempty run of letters", 0);
  if (tag.size() != 1 || (tag != "1" && !letters(tag))) throw ParseError("tag must be 1 or a letter", bar + 1);
  return QNBasis(std::string(word), tag == "1" ? std::nullopt : std::optional<char>(tag.front()));
}

QNElement qn_star(const QNElement& a, const QNElement& b) { return bilinear<QNBasis>(a, b, qn_star_basis); }
QNElement qn_succ(const QNElement& a, const QNElement& b) { return bilinear<QNBasis>(a, b, qn_succ_basis); }

std::vector<QNBasis> qn_basis(std::size_t n, std::string_view alphabet) {
  if (n == 0) throw std::invalid_argument("QNDipt basis starts in degree 1");
  std::vector<std::string> words{""};
  std::vector<QNBasis> out;
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char c : alphabet) next.push_back(w + c);
    words = std::move(next);
    if (len == n)
      for (const auto& w : words) out.emplace_back(w);
    if (len + 1 == n)
      for (const auto& w : words)
        for (char c : alphabet) out.emplace_back(w, c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> qn_dim_table(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("max degree must be at least 1");
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= max_n; ++n) out.push_back(qn_basis(n).size());
  return out;
}

DipterousStructure<QNElement> qn_structure() {
  return {qn_star, qn_succ, [](char v) { return QNElement(QNBasis(std::string(1, v))); }};
}

}  // namespace dipt
