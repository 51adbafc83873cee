#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dipt {

/// Planar rooted tree in which every internal node has at least two
/// children (a Schroeder tree). Degree is the number of leaves.
///
/// Values are immutable and share structure, so copies are cheap. Ordering
/// and equality follow the canonical text encoding:
///   tree := "|" | "(" tree (" " tree)+ ")"
class PlanarTree {
 public:
  /// The single leaf `|`.
  PlanarTree();

  static PlanarTree leaf() { return PlanarTree(); }

  /// New root over `children` in order. Throws std::invalid_argument when
  /// fewer than two children are given.
  static PlanarTree graft(std::vector<PlanarTree> children);

  /// Depth-one tree with `n` leaves, n >= 2.
  static PlanarTree corolla(std::size_t n);

  static PlanarTree parse(std::string_view text);

  bool is_leaf() const;
  std::size_t degree() const;
  std::span<const PlanarTree> children() const;

  /// Children of the root, so that graft(decompose()) == *this.
  /// Throws std::invalid_argument on the leaf.
  std::vector<PlanarTree> decompose() const;

  /// Left-right mirror image.
  PlanarTree reflect() const;

  const std::string& encoding() const;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) {
    return a.node_ == b.node_ || a.encoding() == b.encoding();
  }
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
    return a.encoding() <=> b.encoding();
  }

  struct Node;

 private:
  explicit PlanarTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct PlanarTree::Node {
  std::vector<PlanarTree> children;
  std::size_t degree = 1;
  std::string encoding;
};

/// Nonempty ordered sequence of planar trees: a basis element of Dipt(K).
///   forest := "[" tree (" " tree)* "]"
class Forest {
 public:
  explicit Forest(std::vector<PlanarTree> trees);
  explicit Forest(PlanarTree tree) : Forest(std::vector<PlanarTree>{std::move(tree)}) {}

  static Forest parse(std::string_view text);
  /// The forest of `n` leaves, `[| | ... |]`.
  static Forest leaves(std::size_t n);

  std::span<const PlanarTree> trees() const { return trees_; }
  std::size_t size() const { return trees_.size(); }
  std::size_t degree() const { return degree_; }
  bool is_single_tree() const { return trees_.size() == 1; }
  const std::string& encoding() const { return encoding_; }

  /// Concatenation.
  friend Forest operator+(const Forest& a, const Forest& b);

  Forest reflect() const;

  friend bool operator==(const Forest& a, const Forest& b) { return a.encoding_ == b.encoding_; }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    return a.encoding_ <=> b.encoding_;
  }

 private:
  std::vector<PlanarTree> trees_;
  std::size_t degree_ = 0;
  std::string encoding_;
};

inline PlanarTree graft(std::vector<PlanarTree> ts) { return PlanarTree::graft(std::move(ts)); }
inline std::vector<PlanarTree> decompose(const PlanarTree& t) { return t.decompose(); }
inline PlanarTree corolla(std::size_t n) { return PlanarTree::corolla(n); }

/// All trees with `n` leaves, sorted by encoding. Throws for n == 0.
/// Results are cached per degree; safe to call from several threads.
const std::vector<PlanarTree>& enumerate_trees(std::size_t n);

/// All forests of total degree `n`, sorted by encoding. Throws for n == 0.
const std::vector<Forest>& enumerate_forests(std::size_t n);

std::string encode(const PlanarTree& t);
std::string encode(const Forest& f);

}  // namespace dipt
