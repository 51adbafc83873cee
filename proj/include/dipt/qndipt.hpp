#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dipt/dipterous.hpp"
#include "dipt/lincomb.hpp"

namespace dipt {

/// Basis element X (x) tag of T(V) (x) (K + V): a nonempty word X and a tag
/// that is either the unit or a generator. Text form: "<word>|1" or "<word>|v".
class QNBasis {
 public:
  QNBasis(std::string word, std::optional<char> tag = std::nullopt);
  static QNBasis parse(std::string_view text);

  const std::string& word() const { return word_; }
  const std::optional<char>& tag() const { return tag_; }
  std::size_t degree() const { return word_.size() + (tag_ ? 1 : 0); }
  const std::string& key() const { return key_; }

  friend bool operator==(const QNBasis& a, const QNBasis& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const QNBasis& a, const QNBasis& b) { return a.key_ <=> b.key_; }

 private:
  std::string word_;
  std::optional<char> tag_;
  std::string key_;
};

using QNElement = LinComb<QNBasis>;

/// X|1 * Y|1 = XY|1, zero otherwise.
QNElement qn_star(const QNElement& a, const QNElement& b);
/// X|1 > Y|v = XY|v and X|1 > v|1 = X|v, zero otherwise.
QNElement qn_succ(const QNElement& a, const QNElement& b);

std::vector<QNBasis> qn_basis(std::size_t n, std::string_view alphabet = std::string_view(&kDefaultGenerator, 1));
std::vector<std::size_t> qn_dim_table(std::size_t max_n);

/// QNDipt(V) as a dipterous target, generators v |-> v|1.
DipterousStructure<QNElement> qn_structure();

}  // namespace dipt
