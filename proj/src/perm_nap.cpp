#include "dipt/perm_nap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dipt/errors.hpp"

namespace dipt {

namespace {

NapTree fold(NapTree t, const std::vector<NapTree>& ts) {
  for (const auto& s : ts) t = nap_graft(t, s);
  return t;
}

void tail_multisets(std::size_t n, std::size_t min_first, const std::vector<std::string>& labels,
                    std::vector<NapTree>& prefix, std::set<std::vector<NapTree>>& out) {
  if (n == 0) {
    auto sorted = prefix;
    std::sort(sorted.begin(), sorted.end());
    out.insert(std::move(sorted));
    return;
  }
  for (std::size_t k = min_first; k <= n; ++k)
    for (const auto& t : enumerate_nap(k, labels)) {
      prefix.push_back(t);
      tail_multisets(n - k, k, labels, prefix, out);
      prefix.pop_back();
    }
}

}  // namespace

PermNapBasis::PermNapBasis(NapTree head, std::vector<NapTree> tail) : head_(std::move(head)), tail_(std::move(tail)) {
  std::sort(tail_.begin(), tail_.end());
  degree_ = head_.degree();
  key_ = head_.encoding() + " ;";
  if (tail_.empty()) key_ += " 1";
  for (const auto& t : tail_) {
    degree_ += t.degree();
    key_ += ' ' + t.encoding();
  }
}

PermNapBasis PermNapBasis::parse(std::string_view text) {
  const auto semi = text.find(" ; ");
  if (semi == std::string_view::npos) throw ParseError("expected '<head> ; <tail>'", 0);
  NapTree head = NapTree::parse(text.substr(0, semi));
  std::string_view rest = text.substr(semi + 3);
  std::vector<NapTree> tail;
  if (rest != "1") {
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto sp = rest.find(' ', pos);
      const auto piece = rest.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
      try {
        tail.push_back(NapTree::parse(piece));
      } catch (const ParseError& e) {
        throw ParseError("malformed tail tree", semi + 3 + pos + e.position());
      }
      if (sp == std::string_view::npos) break;
      pos = sp + 1;
    }
  }
  return PermNapBasis(std::move(head), std::move(tail));
}

PermNapBasis perm_nap_star_basis(const PermNapBasis& a, const PermNapBasis& b) {
  std::vector<NapTree> tail = a.tail();
  tail.push_back(b.head());
  tail.insert(tail.end(), b.tail().begin(), b.tail().end());
  return PermNapBasis(a.head(), std::move(tail));
}

PermNapBasis perm_nap_prec_basis(const PermNapBasis& a, const PermNapBasis& b) {
  NapTree h = fold(a.head(), a.tail());
  h = nap_graft(h, b.head());
  return PermNapBasis(fold(std::move(h), b.tail()));
}

PermNapElement perm_nap_star(const PermNapElement& a, const PermNapElement& b) {
  return bilinear<PermNapBasis>(a, b, [](const PermNapBasis& x, const PermNapBasis& y) {
    return PermNapElement(perm_nap_star_basis(x, y));
  });
}

PermNapElement perm_nap_prec(const PermNapElement& a, const PermNapElement& b) {
  return bilinear<PermNapBasis>(a, b, [](const PermNapBasis& x, const PermNapBasis& y) {
    return PermNapElement(perm_nap_prec_basis(x, y));
  });
}

std::vector<PermNapBasis> perm_nap_basis(std::size_t n, const std::vector<std::string>& labels) {
  std::vector<PermNapBasis> out;
  for (std::size_t h = 1; h <= n; ++h) {
    std::set<std::vector<NapTree>> tails;
    std::vector<NapTree> prefix;
    tail_multisets(n - h, 1, labels, prefix, tails);
    for (const auto& head : enumerate_nap(h, labels))
      for (const auto& tail : tails) out.emplace_back(head, tail);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dipt
