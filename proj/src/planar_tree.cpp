#include "dipt/planar_tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "text_cursor.hpp"

namespace dipt {

namespace {

std::shared_ptr<const PlanarTree::Node> leaf_node() {
  static const auto node = [] {
    auto n = std::make_shared<PlanarTree::Node>();
    n->encoding = "|";
    return n;
  }();
  return node;
}

// All compositions of n into parts >= 1, optionally with at least two parts.
void compositions(std::size_t n, std::size_t min_parts, std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    if (prefix.size() >= min_parts) out.push_back(prefix);
    return;
  }
  for (std::size_t first = 1; first <= n; ++first) {
    prefix.push_back(first);
    compositions(n - first, min_parts, prefix, out);
    prefix.pop_back();
  }
}

// Cartesian product of per-part tree lists.
template <class Emit>
void for_each_product(const std::vector<std::size_t>& parts, std::size_t i, std::vector<PlanarTree>& acc,
                      Emit&& emit) {
  if (i == parts.size()) {
    emit(acc);
    return;
  }
  for (const auto& t : enumerate_trees(parts[i])) {
    acc.push_back(t);
    for_each_product(parts, i + 1, acc, emit);
    acc.pop_back();
  }
}

template <class T>
class DegreeCache {
 public:
  template <class Build>
  const std::vector<T>& get(std::size_t n, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    std::vector<T> built = build(n);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(n, std::move(built)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::size_t, std::vector<T>> cache_;
};

PlanarTree parse_tree(detail::TextCursor& cur) {
  if (cur.accept('|')) return PlanarTree::leaf();
  cur.expect('(');
  std::vector<PlanarTree> children;
  children.push_back(parse_tree(cur));
  while (cur.accept(' ')) children.push_back(parse_tree(cur));
  if (children.size() < 2) cur.fail("internal node needs at least two children");
  cur.expect(')');
  return PlanarTree::graft(std::move(children));
}

}  // namespace

PlanarTree::PlanarTree() : node_(leaf_node()) {}

PlanarTree PlanarTree::graft(std::vector<PlanarTree> children) {
  if (children.size() < 2)
    throw std::invalid_argument("unary/empty grafting not in Schröder basis");
  auto node = std::make_shared<Node>();
  node->degree = 0;
  node->encoding = "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) node->encoding += ' ';
    node->encoding += children[i].encoding();
    node->degree += children[i].degree();
  }
  node->encoding += ')';
  node->children = std::move(children);
  return PlanarTree(std::move(node));
}

PlanarTree PlanarTree::corolla(std::size_t n) {
  if (n < 2) throw std::invalid_argument("corolla needs arity at least 2");
  return graft(std::vector<PlanarTree>(n, leaf()));
}

PlanarTree PlanarTree::parse(std::string_view text) {
  detail::TextCursor cur(text);
  PlanarTree t = parse_tree(cur);
  cur.expect_end();
  return t;
}

bool PlanarTree::is_leaf() const { return node_->children.empty(); }
std::size_t PlanarTree::degree() const { return node_->degree; }
std::span<const PlanarTree> PlanarTree::children() const { return node_->children; }
const std::string& PlanarTree::encoding() const { return node_->encoding; }

std::vector<PlanarTree> PlanarTree::decompose() const {
  if (is_leaf()) throw std::invalid_argument("leaf has no grafting decomposition");
  return node_->children;
}

PlanarTree PlanarTree::reflect() const {
  if (is_leaf()) return *this;
  std::vector<PlanarTree> kids;
  kids.reserve(node_->children.size());
  for (auto it = node_->children.rbegin(); it != node_->children.rend(); ++it) kids.push_back(it->reflect());
  return graft(std::move(kids));
}

Forest::Forest(std::vector<PlanarTree> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw std::invalid_argument("a forest has at least one tree");
  encoding_ = "[";
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) encoding_ += ' ';
    encoding_ += trees_[i].encoding();
    degree_ += trees_[i].degree();
  }
  encoding_ += ']';
}

Forest Forest::parse(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect('[');
  std::vector<PlanarTree> trees;
  trees.push_back(parse_tree(cur));
  while (cur.accept(' ')) trees.push_back(parse_tree(cur));
  cur.expect(']');
  cur.expect_end();
  return Forest(std::move(trees));
}

Forest Forest::leaves(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a forest has at least one tree");
  return Forest(std::vector<PlanarTree>(n, PlanarTree::leaf()));
}

Forest operator+(const Forest& a, const Forest& b) {
  std::vector<PlanarTree> trees(a.trees_);
  trees.insert(trees.end(), b.trees_.begin(), b.trees_.end());
  return Forest(std::move(trees));
}

Forest Forest::reflect() const {
  std::vector<PlanarTree> trees;
  trees.reserve(trees_.size());
  for (auto it = trees_.rbegin(); it != trees_.rend(); ++it) trees.push_back(it->reflect());
  return Forest(std::move(trees));
}

const std::vector<PlanarTree>& enumerate_trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("trees have degree at least 1");
  static DegreeCache<PlanarTree> cache;
  return cache.get(n, [](std::size_t deg) {
    std::vector<PlanarTree> out;
    if (deg == 1) {
      out.push_back(PlanarTree::leaf());
      return out;
    }
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> prefix;
    compositions(deg, 2, prefix, parts);
    for (const auto& p : parts) {
      std::vector<PlanarTree> acc;
      for_each_product(p, 0, acc, [&](const std::vector<PlanarTree>& kids) { out.push_back(PlanarTree::graft(kids)); });
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

const std::vector<Forest>& enumerate_forests(std::size_t n) {
  if (n == 0) throw std::invalid_argument("forests have degree at least 1");
  static DegreeCache<Forest> cache;
  return cache.get(n, [](std::size_t deg) {
    std::vector<Forest> out;
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> prefix;
    compositions(deg, 1, prefix, parts);
    for (const auto& p : parts) {
      std::vector<PlanarTree> acc;
      for_each_product(p, 0, acc, [&](const std::vector<PlanarTree>& trees) { out.emplace_back(trees); });
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

std::string encode(const PlanarTree& t) { return t.encoding(); }
std::string encode(const Forest& f) { return f.encoding(); }

}  // namespace dipt
