#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dipt/lincomb.hpp"
#include "dipt/nap_tree.hpp"

namespace dipt {

/// Basis element t (x) t_1...t_n of NAP(V) (x) (K + Com(NAP(V))). An empty
/// tail stands for 1_K. Text form: "<head> ; <t_1> ... <t_n>" or "<head> ; 1".
class PermNapBasis {
 public:
  explicit PermNapBasis(NapTree head, std::vector<NapTree> tail = {});
  static PermNapBasis parse(std::string_view text);

  const NapTree& head() const { return head_; }
  const std::vector<NapTree>& tail() const { return tail_; }
  /// Total node count.
  std::size_t degree() const { return degree_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const PermNapBasis& a, const PermNapBasis& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const PermNapBasis& a, const PermNapBasis& b) { return a.key_ <=> b.key_; }

 private:
  NapTree head_;
  std::vector<NapTree> tail_;
  std::size_t degree_ = 0;
  std::string key_;
};

using PermNapElement = LinComb<PermNapBasis>;

/// Head kept, tails merged with the right head.
PermNapBasis perm_nap_star_basis(const PermNapBasis& a, const PermNapBasis& b);
/// Folds a's tail, b's head and b's tail into a's head by <|; tail becomes 1.
PermNapBasis perm_nap_prec_basis(const PermNapBasis& a, const PermNapBasis& b);

PermNapElement perm_nap_star(const PermNapElement& a, const PermNapElement& b);
PermNapElement perm_nap_prec(const PermNapElement& a, const PermNapElement& b);

/// Every basis element with `n` nodes in total, sorted.
std::vector<PermNapBasis> perm_nap_basis(std::size_t n, const std::vector<std::string>& labels);

}  // namespace dipt
