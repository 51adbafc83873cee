#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dipt {

/// Planar binary tree. Degree counts internal nodes; the leaf has degree 0.
/// Same text grammar as planar trees, restricted to two children per node.
class BinaryTree {
 public:
  BinaryTree();
  static BinaryTree leaf() { return BinaryTree(); }
  /// l \/ r: a new root with `l` on the left and `r` on the right.
  static BinaryTree graft(const BinaryTree& l, const BinaryTree& r);
  static BinaryTree parse(std::string_view text);

  bool is_leaf() const { return node_ == nullptr; }
  std::size_t degree() const;
  /// Left and right subtrees; throw std::invalid_argument on the leaf.
  const BinaryTree& left() const;
  const BinaryTree& right() const;
  const std::string& encoding() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    return a.node_ == b.node_ || a.encoding() == b.encoding();
  }
  friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
    return a.encoding() <=> b.encoding();
  }

 private:
  struct Node;
  explicit BinaryTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

BinaryTree bin_graft(const BinaryTree& l, const BinaryTree& r);

/// Grafts the root of `s` onto the rightmost leaf of `r`; degrees add.
/// The leaf is a two-sided unit.
BinaryTree bin_nwarrow(const BinaryTree& r, const BinaryTree& s);

/// Grafts the root of `t` onto the leftmost leaf of `s` (mirror of
/// bin_nwarrow); the leaf is a two-sided unit.
BinaryTree bin_nearrow(const BinaryTree& t, const BinaryTree& s);

/// All binary trees with `n` internal nodes, sorted by encoding.
const std::vector<BinaryTree>& enumerate_binary(std::size_t n);

std::string encode(const BinaryTree& t);

}  // namespace dipt
