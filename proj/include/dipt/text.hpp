#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dipt/lang_dynamics.hpp"
#include "dipt/lincomb.hpp"
#include "dipt/unital.hpp"

namespace dipt {

/// Canonical key of any basis type exposing key().
template <class B>
  requires requires(const B& b) { { b.key() } -> std::convertible_to<std::string>; }
std::string key_str(const B& b) {
  return b.key();
}

/// "1" for the unit.
std::string key_str(const UnitalKey& k);
std::string key_str(const Word& w);
inline std::string key_str(const std::string& s) { return s; }

UnitalKey parse_unital_key(std::string_view text);

/// "a + 2/3 b - c"; "0" when empty.
template <class Key>
std::string to_text(const LinComb<Key>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    const bool neg = c < Rational(0);
    const Rational mag = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != Rational(1)) out += mag.str() + " ";
    out += key_str(k);
    first = false;
  }
  return out;
}

/// One "k1 ⊗ k2 ⊗ ... : coeff" line per term.
template <class Key>
std::vector<std::string> to_lines(const Tensor<Key>& t) {
  std::vector<std::string> out;
  for (const auto& [ks, c] : t) {
    std::string line;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (i) line += " ⊗ ";
      line += key_str(ks[i]);
    }
    out.push_back(line + " : " + c.str());
  }
  return out;
}

/// Scalar part first, as in "3 - a + b"; "0" when empty.
std::string unital_str(const UnitalElement& x);

}  // namespace dipt
