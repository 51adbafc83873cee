#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dipt/lincomb.hpp"
#include "dipt/rational.hpp"

namespace dipt {

/// A word is a nonempty sequence of symbols; symbols are arbitrary tokens.
using Word = std::vector<std::string>;
using WordElement = LinComb<Word>;
using WordTensor = Tensor<Word>;

/// Symbols joined by single spaces.
std::string word_str(const Word& w);
/// Splits on whitespace; rejects the empty word.
Word parse_word(std::string_view text);
WordElement word_element(std::string_view text, Rational coeff = 1);

/// Letter cooperation s -> sum_i w_i s1_i (x) s2_i.
class CoopTable {
 public:
  struct Rule {
    Rational weight;
    std::string first;
    std::string second;
  };

  void add_symbol(const std::string& s);
  /// Registers all three symbols in the alphabet.
  void add_rule(const std::string& lhs, const std::string& first, const std::string& second, Rational weight);

  const std::set<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules(const std::string& symbol) const;
  bool contains(const std::string& symbol) const { return alphabet_.count(symbol) > 0; }

  /// Throws std::invalid_argument unless the weights of every symbol that
  /// has rules sum to 1.
  void check_stochastic() const;
  bool is_stochastic() const;
  /// Symbols without rules; words ending in one are dropped by a step.
  std::vector<std::string> terminals() const;

 private:
  std::set<std::string> alphabet_;
  std::map<std::string, std::vector<Rule>> rules_;
};

/// Lines "A -> B C : p/q"; '#' starts a comment; blank lines ignored.
/// Errors carry 1-based line numbers.
CoopTable parse_grammar(std::string_view text);

struct Arc {
  std::string source;
  std::string target;
  Rational weight;
};

struct WeightedGraph {
  std::set<std::string> vertices;
  std::vector<Arc> arcs;
};

/// Lines "arc v w p/q"; '#' comments.
WeightedGraph parse_graph(std::string_view text);

/// v -> sum over outgoing arcs of w(a) v (x) t(a). Throws on sinks and on
/// two arcs with the same endpoints.
CoopTable graph_coop(const WeightedGraph& g);

/// Cooperation on the last letter, the prefix kept on the left.
/// Letters without rules contribute nothing.
WordTensor delta_sharp(const CoopTable& tbl, const WordElement& x);

WordElement concat(const WordElement& a, const WordElement& b);
/// Concatenation of the two tensor slots.
WordElement mu(const WordTensor& t);

/// mu(Delta(x)) y.
WordElement bowtie(const CoopTable& tbl, const WordElement& x, const WordElement& y);
/// x mu(Delta(y)).
WordElement prec_A(const CoopTable& tbl, const WordElement& x, const WordElement& y);

/// Raised when a sampled pair breaks zeta(x)zeta(y) = zeta(zeta(x)y).
class BaxterRotaError : public std::runtime_error {
 public:
  BaxterRotaError(Word x, Word y);
  const Word& x() const { return x_; }
  const Word& y() const { return y_; }

 private:
  Word x_, y_;
};

/// Linear endomorphism of the word algebra, given on basis words.
class BaxterRota {
 public:
  explicit BaxterRota(std::function<WordElement(const Word&)> on_basis) : on_basis_(std::move(on_basis)) {}
  /// Finite table; words outside it throw std::out_of_range.
  static BaxterRota from_table(std::map<Word, WordElement> table);

  WordElement operator()(const WordElement& x) const;

  /// First sampled pair breaking the right Baxter-Rota law, if any.
  std::optional<std::pair<Word, Word>> check(const std::vector<Word>& samples) const;

 private:
  std::function<WordElement(const Word&)> on_basis_;
};

struct DerivedOps {
  WordElement star;  // zeta(x) y
  WordElement prec;  // x zeta(y)
  std::size_t sample_size;
};

/// Checks the law on x, y and `samples` (all pairs), then returns both
/// derived products. Throws BaxterRotaError with the first witness.
DerivedOps baxter_derived_ops(const BaxterRota& zeta, const WordElement& x, const WordElement& y,
                              const std::vector<Word>& samples = {});

/// mu(Delta(state)).
WordElement dynamics_step(const CoopTable& tbl, const WordElement& state);

/// States after steps 0..k. With `probability` set the table must be
/// stochastic (std::invalid_argument otherwise); mass is then preserved
/// exactly when there are no terminals.
std::vector<WordElement> dynamics_run(const CoopTable& tbl, const WordElement& start, std::size_t k,
                                      bool probability = true);

Rational total_mass(const WordElement& x);

/// Terms by decreasing coefficient, ties by word.
std::vector<std::pair<Word, Rational>> distribution(const WordElement& x);

}  // namespace dipt
