#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dipt/rational.hpp"

namespace dipt {

/// Finitely supported map from canonical basis keys to rationals. No stored
/// coefficient is ever zero, so two equal vectors have identical supports.
template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using container = std::map<Key, Rational>;
  using const_iterator = typename container::const_iterator;

  LinComb() = default;
  explicit LinComb(Key key, Rational coeff = 1) { add_term(std::move(key), coeff); }
  LinComb(std::initializer_list<std::pair<const Key, Rational>> terms) {
    for (const auto& [k, c] : terms) add_term(k, c);
  }

  void add_term(const Key& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Rational coeff(const Key& key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational{} : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container& terms() const { return terms_; }

  std::vector<Key> support() const {
    std::vector<Key> keys;
    keys.reserve(terms_.size());
    for (const auto& [k, c] : terms_) keys.push_back(k);
    return keys;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  LinComb operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  container terms_;
};

template <class Key>
LinComb<Key> lc_add(const LinComb<Key>& a, const LinComb<Key>& b) {
  return a + b;
}

template <class Key>
LinComb<Key> lc_scale(const Rational& c, const LinComb<Key>& a) {
  return c * a;
}

/// Linear extension of a basis map `f: Key -> LinComb<Out>`.
template <class Out, class Key, class F>
LinComb<Out> linear_map(const LinComb<Key>& x, F&& f) {
  LinComb<Out> out;
  for (const auto& [k, c] : x) out += c * f(k);
  return out;
}

/// Bilinear extension of a basis operation `f: (Key, Key) -> LinComb<Out>`.
template <class Out, class Key, class F>
LinComb<Out> bilinear(const LinComb<Key>& a, const LinComb<Key>& b, F&& f) {
  LinComb<Out> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out += (ca * cb) * f(ka, kb);
  return out;
}

/// Sparse element of V^{(x)n}: coefficients indexed by n-tuples of keys.
template <class Key>
class Tensor {
 public:
  using tuple_type = std::vector<Key>;

  Tensor() = default;
  explicit Tensor(std::size_t arity) : arity_(arity) {
    if (arity == 0) throw std::invalid_argument("tensor arity must be positive");
  }

  std::size_t arity() const { return arity_; }

  void add_term(const tuple_type& keys, const Rational& coeff) {
    if (keys.size() != arity_) throw std::invalid_argument("tensor term has wrong arity");
    terms_.add_term(keys, coeff);
  }

  Rational coeff(const tuple_type& keys) const { return terms_.coeff(keys); }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const LinComb<tuple_type>& terms() const { return terms_; }

  Tensor& operator+=(const Tensor& o) {
    check_arity(o);
    terms_ += o.terms_;
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_arity(o);
    terms_ -= o.terms_;
    return *this;
  }
  Tensor& operator*=(const Rational& s) {
    terms_ *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }

  /// Zero tensors compare equal regardless of arity.
  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.empty() && b.empty()) return true;
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_arity(const Tensor& o) const {
    if (o.arity_ != arity_ && !o.empty())
      throw std::invalid_argument("adding tensors of different arity");
  }

  std::size_t arity_ = 1;
  LinComb<tuple_type> terms_;
};

template <class Key>
Tensor<Key> pure_tensor(std::vector<Key> keys, const Rational& coeff = 1) {
  Tensor<Key> t(keys.size());
  t.add_term(keys, coeff);
  return t;
}

/// Replaces slot `slot` of every term by the tensor `f(key)` (of arity m),
/// giving a tensor of arity n + m - 1. With slot 0 this is (f (x) id)(t).
template <class Key, class F>
Tensor<Key> apply_to_slot(const Tensor<Key>& t, std::size_t slot, std::size_t image_arity, F&& f) {
  Tensor<Key> out(t.arity() + image_arity - 1);
  for (const auto& [keys, c] : t) {
    const Tensor<Key> image = f(keys[slot]);
    for (const auto& [ikeys, ic] : image) {
      std::vector<Key> merged;
      merged.reserve(out.arity());
      merged.insert(merged.end(), keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(slot));
      merged.insert(merged.end(), ikeys.begin(), ikeys.end());
      merged.insert(merged.end(), keys.begin() + static_cast<std::ptrdiff_t>(slot) + 1, keys.end());
      out.add_term(merged, c * ic);
    }
  }
  return out;
}

/// Tensor product of two tensors (concatenating tuples).
template <class Key>
Tensor<Key> tensor_product(const Tensor<Key>& a, const Tensor<Key>& b) {
  Tensor<Key> out(a.arity() + b.arity());
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<Key> keys = ka;
      keys.insert(keys.end(), kb.begin(), kb.end());
      out.add_term(keys, ca * cb);
    }
  return out;
}

/// Swaps the two slots of an arity-2 tensor.
template <class Key>
Tensor<Key> flip(const Tensor<Key>& t) {
  if (t.arity() != 2 && !t.empty()) throw std::invalid_argument("flip needs an arity-2 tensor");
  Tensor<Key> out(2);
  for (const auto& [keys, c] : t) out.add_term({keys[1], keys[0]}, c);
  return out;
}

}  // namespace dipt
