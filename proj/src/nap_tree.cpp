#include "dipt/nap_tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "text_cursor.hpp"

namespace dipt {

namespace {

NapTree parse_nap(detail::TextCursor& cur) {
  std::string label = cur.identifier();
  std::vector<NapTree> kids;
  if (cur.accept('[')) {
    kids.push_back(parse_nap(cur));
    while (cur.accept(',')) kids.push_back(parse_nap(cur));
    cur.expect(']');
  }
  return NapTree(std::move(label), std::move(kids));
}

// Multisets of trees whose node counts sum to `n`, as sorted vectors.
void child_multisets(std::size_t n, const std::vector<std::string>& labels, std::set<std::vector<NapTree>>& out) {
  if (n == 0) {
    out.insert(std::vector<NapTree>{});
    return;
  }
  for (std::size_t first = 1; first <= n; ++first) {
    std::set<std::vector<NapTree>> rest;
    child_multisets(n - first, labels, rest);
    for (const auto& t : enumerate_nap(first, labels))
      for (auto r : rest) {
        r.push_back(t);
        std::sort(r.begin(), r.end());
        out.insert(std::move(r));
      }
  }
}

}  // namespace

NapTree::NapTree(std::string label, std::vector<NapTree> children)
    : label_(std::move(label)), children_(std::move(children)) {
  if (label_.empty()) throw std::invalid_argument("NAP tree label must be nonempty");
  std::sort(children_.begin(), children_.end());
  encoding_ = label_;
  for (const auto& c : children_) degree_ += c.degree();
  if (!children_.empty()) {
    encoding_ += '[';
    for (std::size_t i = 0; i < children_.size(); ++i) {
      if (i) encoding_ += ',';
      encoding_ += children_[i].encoding();
    }
    encoding_ += ']';
  }
}

NapTree NapTree::parse(std::string_view text) {
  detail::TextCursor cur(text);
  NapTree t = parse_nap(cur);
  cur.expect_end();
  return t;
}

NapTree nap_graft(const NapTree& t, const NapTree& s) {
  std::vector<NapTree> kids(t.children().begin(), t.children().end());
  kids.push_back(s);
  return NapTree(t.label(), std::move(kids));
}

std::vector<NapTree> enumerate_nap(std::size_t n, const std::vector<std::string>& labels) {
  std::vector<NapTree> out;
  if (n == 0) return out;
  std::set<std::vector<NapTree>> kids;
  child_multisets(n - 1, labels, kids);
  for (const auto& label : labels)
    for (const auto& k : kids) out.emplace_back(label, k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string encode(const NapTree& t) { return t.encoding(); }

}  // namespace dipt
