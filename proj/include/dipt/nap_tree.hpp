#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dipt {

/// Non-planar rooted tree with labeled nodes. Children form a multiset and
/// are kept sorted by encoding, so the encoding is canonical:
///   nap := label | label "[" nap ("," nap)* "]"
class NapTree {
 public:
  explicit NapTree(std::string label, std::vector<NapTree> children = {});
  static NapTree parse(std::string_view text);

  const std::string& label() const { return label_; }
  std::span<const NapTree> children() const { return children_; }
  /// Number of nodes.
  std::size_t degree() const { return degree_; }
  const std::string& encoding() const { return encoding_; }

  friend bool operator==(const NapTree& a, const NapTree& b) { return a.encoding_ == b.encoding_; }
  friend std::strong_ordering operator<=>(const NapTree& a, const NapTree& b) {
    return a.encoding_ <=> b.encoding_;
  }

 private:
  std::string label_;
  std::vector<NapTree> children_;
  std::size_t degree_ = 1;
  std::string encoding_;
};

/// t <| s: links the root of `s` to the root of `t`.
NapTree nap_graft(const NapTree& t, const NapTree& s);

/// All labeled NAP trees with exactly `n` nodes over `labels`, sorted.
std::vector<NapTree> enumerate_nap(std::size_t n, const std::vector<std::string>& labels);

std::string encode(const NapTree& t);

}  // namespace dipt
