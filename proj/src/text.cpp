#include "dipt/text.hpp"

namespace dipt {

std::string key_str(const UnitalKey& k) { return k ? k->key() : "1"; }

std::string key_str(const Word& w) { return word_str(w); }

UnitalKey parse_unital_key(std::string_view text) {
  if (text == "1") return kUnit;
  return UnitalKey(DiptBasis::parse(text));
}

std::string unital_str(const UnitalElement& x) {
  const Rational c = scalar_part(x);
  const auto b = body(x);
  if (c == Rational(0)) return to_text(b);
  if (b.empty()) return c.str();
  const std::string rest = to_text(b);
  return c.str() + (rest.front() == '-' ? " - " + rest.substr(1) : " + " + rest);
}

}  // namespace dipt
