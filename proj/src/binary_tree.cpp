#include "dipt/binary_tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "text_cursor.hpp"

namespace dipt {

struct BinaryTree::Node {
  BinaryTree left;
  BinaryTree right;
  std::size_t degree = 0;
  std::string encoding;
};

namespace {

const std::string& leaf_encoding() {
  static const std::string s = "|";
  return s;
}

BinaryTree parse_binary(detail::TextCursor& cur) {
  if (cur.accept('|')) return BinaryTree::leaf();
  cur.expect('(');
  BinaryTree l = parse_binary(cur);
  cur.expect(' ');
  BinaryTree r = parse_binary(cur);
  if (cur.peek() == ' ') cur.fail("binary tree nodes have exactly two children");
  cur.expect(')');
  return BinaryTree::graft(l, r);
}

}  // namespace

BinaryTree::BinaryTree() = default;

BinaryTree BinaryTree::graft(const BinaryTree& l, const BinaryTree& r) {
  auto n = std::make_shared<Node>();
  n->left = l;
  n->right = r;
  n->degree = l.degree() + r.degree() + 1;
  n->encoding = "(" + l.encoding() + " " + r.encoding() + ")";
  return BinaryTree(std::move(n));
}

BinaryTree BinaryTree::parse(std::string_view text) {
  detail::TextCursor cur(text);
  BinaryTree t = parse_binary(cur);
  cur.expect_end();
  return t;
}

std::size_t BinaryTree::degree() const { return node_ ? node_->degree : 0; }

const BinaryTree& BinaryTree::left() const {
  if (!node_) throw std::invalid_argument("leaf has no subtrees");
  return node_->left;
}

const BinaryTree& BinaryTree::right() const {
  if (!node_) throw std::invalid_argument("leaf has no subtrees");
  return node_->right;
}

const std::string& BinaryTree::encoding() const { return node_ ? node_->encoding : leaf_encoding(); }

BinaryTree bin_graft(const BinaryTree& l, const BinaryTree& r) { return BinaryTree::graft(l, r); }

BinaryTree bin_nwarrow(const BinaryTree& r, const BinaryTree& s) {
  if (r.is_leaf()) return s;
  if (s.is_leaf()) return r;
  return BinaryTree::graft(r.left(), bin_nwarrow(r.right(), s));
}

BinaryTree bin_nearrow(const BinaryTree& t, const BinaryTree& s) {
  if (s.is_leaf()) return t;
  if (t.is_leaf()) return s;
  return BinaryTree::graft(bin_nearrow(t, s.left()), s.right());
}

const std::vector<BinaryTree>& enumerate_binary(std::size_t n) {
  static std::shared_mutex mutex;
  static std::map<std::size_t, std::vector<BinaryTree>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<BinaryTree> out;
  if (n == 0) {
    out.push_back(BinaryTree::leaf());
  } else {
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& l : enumerate_binary(k))
        for (const auto& r : enumerate_binary(n - 1 - k)) out.push_back(BinaryTree::graft(l, r));
  }
  std::sort(out.begin(), out.end());
  std::unique_lock lock(mutex);
  return cache.try_emplace(n, std::move(out)).first->second;
}

std::string encode(const BinaryTree& t) { return t.encoding(); }

}  // namespace dipt
