#include "dipt/lang_dynamics.hpp"

#include <algorithm>
#include <sstream>

#include "dipt/errors.hpp"

namespace dipt {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = tokens(strip_comment(line));
    if (!toks.empty()) f(toks, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

Rational weight_at(const std::string& tok, std::size_t line_no) {
  try {
    return Rational::parse(tok);
  } catch (const std::exception& e) {
    throw ParseError::at_line(e.what(), line_no);
  }
}

Word join(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::string word_str(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w = tokens(text);
  if (w.empty()) throw ParseError("empty word", 0);
  return w;
}

WordElement word_element(std::string_view text, Rational coeff) { return WordElement(parse_word(text), coeff); }

void CoopTable::add_symbol(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty symbol");
  alphabet_.insert(s);
}

void CoopTable::add_rule(const std::string& lhs, const std::string& first, const std::string& second, Rational weight) {
  add_symbol(lhs);
  add_symbol(first);
  add_symbol(second);
  rules_[lhs].push_back({std::move(weight), first, second});
}

const std::vector<CoopTable::Rule>& CoopTable::rules(const std::string& symbol) const {
  static const std::vector<Rule> none;
  const auto it = rules_.find(symbol);
  return it == rules_.end() ? none : it->second;
}

void CoopTable::check_stochastic() const {
  for (const auto& [s, rs] : rules_) {
    Rational sum;
    for (const auto& r : rs) {
      if (r.weight < Rational(0)) throw std::invalid_argument("negative weight on symbol '" + s + "'");
      sum += r.weight;
    }
    if (sum != Rational(1))
      throw std::invalid_argument("weights of symbol '" + s + "' sum to " + sum.str() + ", not 1");
  }
}

bool CoopTable::is_stochastic() const {
  try {
    check_stochastic();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<std::string> CoopTable::terminals() const {
  std::vector<std::string> out;
  for (const auto& s : alphabet_)
    if (!rules_.count(s)) out.push_back(s);
  return out;
}

CoopTable parse_grammar(std::string_view text) {
  CoopTable tbl;
  for_each_line(text, [&](const std::vector<std::string>& t, std::size_t line_no) {
    if (t.size() != 6 || t[1] != "->" || t[4] != ":")
      throw ParseError::at_line("expected 'A -> B C : p/q'", line_no);
    tbl.add_rule(t[0], t[2], t[3], weight_at(t[5], line_no));
  });
  return tbl;
}

WeightedGraph parse_graph(std::string_view text) {
  WeightedGraph g;
  for_each_line(text, [&](const std::vector<std::string>& t, std::size_t line_no) {
    if (t.size() != 4 || t[0] != "arc") throw ParseError::at_line("expected 'arc v w p/q'", line_no);
    g.vertices.insert(t[1]);
    g.vertices.insert(t[2]);
    g.arcs.push_back({t[1], t[2], weight_at(t[3], line_no)});
  });
  return g;
}

CoopTable graph_coop(const WeightedGraph& g) {
  CoopTable tbl;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& a : g.arcs) {
    if (!g.vertices.count(a.source) || !g.vertices.count(a.target))
      throw std::invalid_argument("arc endpoint outside the vertex set");
    if (!seen.emplace(a.source, a.target).second)
      throw std::invalid_argument("two arcs from '" + a.source + "' to '" + a.target + "'");
    tbl.add_rule(a.source, a.source, a.target, a.weight);
  }
  for (const auto& v : g.vertices) {
    tbl.add_symbol(v);
    if (tbl.rules(v).empty()) throw std::invalid_argument("vertex '" + v + "' is a sink");
  }
  return tbl;
}

WordTensor delta_sharp(const CoopTable& tbl, const WordElement& x) {
  WordTensor out(2);
  for (const auto& [w, c] : x) {
    if (w.empty()) throw std::invalid_argument("empty word");
    const Word prefix(w.begin(), w.end() - 1);
    for (const auto& r : tbl.rules(w.back())) {
      Word left = prefix;
      left.push_back(r.first);
      out.add_term({std::move(left), Word{r.second}}, c * r.weight);
    }
  }
  return out;
}

WordElement concat(const WordElement& a, const WordElement& b) {
  return bilinear<Word>(a, b, [](const Word& x, const Word& y) { return WordElement(join(x, y)); });
}

WordElement mu(const WordTensor& t) {
  if (t.arity() != 2) throw std::invalid_argument("mu expects a 2-tensor");
  WordElement out;
  for (const auto& [ks, c] : t) out.add_term(join(ks[0], ks[1]), c);
  return out;
}

WordElement bowtie(const CoopTable& tbl, const WordElement& x, const WordElement& y) {
  return concat(mu(delta_sharp(tbl, x)), y);
}

WordElement prec_A(const CoopTable& tbl, const WordElement& x, const WordElement& y) {
  return concat(x, mu(delta_sharp(tbl, y)));
}

BaxterRotaError::BaxterRotaError(Word x, Word y)
    : std::runtime_error("right Baxter-Rota law fails on (" + word_str(x) + ", " + word_str(y) + ")"),
      x_(std::move(x)),
      y_(std::move(y)) {}

BaxterRota BaxterRota::from_table(std::map<Word, WordElement> table) {
  return BaxterRota([table = std::move(table)](const Word& w) {
    const auto it = table.find(w);
    if (it == table.end()) throw std::out_of_range("zeta undefined on '" + word_str(w) + "'");
    return it->second;
  });
}

WordElement BaxterRota::operator()(const WordElement& x) const { return linear_map<Word>(x, on_basis_); }

std::optional<std::pair<Word, Word>> BaxterRota::check(const std::vector<Word>& samples) const {
  for (const auto& a : samples)
    for (const auto& b : samples) {
      const WordElement za = (*this)(WordElement(a));
      const WordElement yb(b);
      if (concat(za, (*this)(yb)) != (*this)(concat(za, yb))) return std::make_pair(a, b);
    }
  return std::nullopt;
}

DerivedOps baxter_derived_ops(const BaxterRota& zeta, const WordElement& x, const WordElement& y,
                              const std::vector<Word>& samples) {
  std::set<Word> pool(samples.begin(), samples.end());
  for (const auto& [w, c] : x) pool.insert(w);
  for (const auto& [w, c] : y) pool.insert(w);
  const std::vector<Word> all(pool.begin(), pool.end());
  if (auto bad = zeta.check(all)) throw BaxterRotaError(bad->first, bad->second);
  return {concat(zeta(x), y), concat(x, zeta(y)), all.size()};
}

WordElement dynamics_step(const CoopTable& tbl, const WordElement& state) { return mu(delta_sharp(tbl, state)); }

std::vector<WordElement> dynamics_run(const CoopTable& tbl, const WordElement& start, std::size_t k, bool probability) {
  if (probability) tbl.check_stochastic();
  std::vector<WordElement> states{start};
  states.reserve(k + 1);
  for (std::size_t i = 0; i < k; ++i) states.push_back(dynamics_step(tbl, states.back()));
  return states;
}

Rational total_mass(const WordElement& x) {
  Rational sum;
  for (const auto& [w, c] : x) sum += c;
  return sum;
}

std::vector<std::pair<Word, Rational>> distribution(const WordElement& x) {
  std::vector<std::pair<Word, Rational>> out(x.begin(), x.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return b.second < a.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace dipt
