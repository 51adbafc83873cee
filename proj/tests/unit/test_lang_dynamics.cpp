#include <doctest.h>

#include <random>

#include "dipt/errors.hpp"
#include "dipt/lang_dynamics.hpp"

using namespace dipt;

namespace {

CoopTable one_rule() {
  CoopTable t;
  t.add_rule("s", "a", "b", 1);
  t.add_symbol("t");
  t.add_symbol("x");
  return t;
}

CoopTable random_grammar(std::mt19937& rng, bool stochastic) {
  const std::vector<std::string> syms{"a", "b", "c", "d", "e"};
  std::uniform_int_distribution<std::size_t> nsym(1, syms.size()), nrules(1, 3);
  std::uniform_int_distribution<int> weight(1, 7);
  const std::size_t n = nsym(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  CoopTable tbl;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = nrules(rng);
    std::vector<int> ws(r);
    int total = 0;
    for (auto& w : ws) total += (w = weight(rng));
    for (std::size_t j = 0; j < r; ++j)
      tbl.add_rule(syms[i], syms[pick(rng)], syms[pick(rng)], stochastic ? Rational(ws[j], total) : Rational(ws[j]));
  }
  return tbl;
}

Word random_word(std::mt19937& rng, const CoopTable& tbl, std::size_t max_len) {
  const std::vector<std::string> alpha(tbl.alphabet().begin(), tbl.alphabet().end());
  std::uniform_int_distribution<std::size_t> len(1, max_len), pick(0, alpha.size() - 1);
  Word w(len(rng));
  for (auto& s : w) s = alpha[pick(rng)];
  return w;
}

}  // namespace

TEST_CASE("words") {
  CHECK(word_str(parse_word("s a  b")) == "s a b");
  CHECK_THROWS_AS(parse_word("  "), ParseError);
  CHECK(concat(word_element("a b"), word_element("c")) == word_element("a b c"));
}

TEST_CASE("delta sharp") {
  const CoopTable t = one_rule();
  CHECK(delta_sharp(t, word_element("s")) == pure_tensor<Word>({{"a"}, {"b"}}));
  CHECK(delta_sharp(t, word_element("x s")) == pure_tensor<Word>({{"x", "a"}, {"b"}}));
  CHECK(delta_sharp(t, word_element("s x")).empty());
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const CoopTable g = random_grammar(rng, false);
    const Word u = random_word(rng, g, 4), v = random_word(rng, g, 4);
    WordTensor expected(2);
    for (const auto& [ks, c] : delta_sharp(g, WordElement(v))) {
      Word left = u;
      left.insert(left.end(), ks[0].begin(), ks[0].end());
      expected.add_term({left, ks[1]}, c);
    }
    CHECK(delta_sharp(g, concat(WordElement(u), WordElement(v))) == expected);
  }
}

TEST_CASE("bowtie and prec_A") {
  const CoopTable t = one_rule();
  CHECK(bowtie(t, word_element("s"), word_element("t")) == word_element("a b t"));
  CHECK(prec_A(t, word_element("t"), word_element("s")) == word_element("t a b"));
  std::mt19937 rng(11);
  for (int i = 0; i < 250; ++i) {
    const CoopTable g = random_grammar(rng, i % 2 == 0);
    const WordElement x(random_word(rng, g, 4)), y(random_word(rng, g, 4)), z(random_word(rng, g, 4));
    CHECK(prec_A(g, bowtie(g, x, y), z) == bowtie(g, x, prec_A(g, y, z)));
    CHECK(prec_A(g, prec_A(g, x, y), z) == prec_A(g, x, bowtie(g, y, z)));
  }
}

TEST_CASE("Baxter-Rota derived operations") {
  const BaxterRota id([](const Word& w) { return WordElement(w); });
  const auto ops = baxter_derived_ops(id, word_element("x"), word_element("x"));
  CHECK(ops.star == word_element("x x"));
  CHECK(ops.prec == word_element("x x"));

  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const CoopTable g = random_grammar(rng, false);
    const BaxterRota zeta([&](const Word& w) { return mu(delta_sharp(g, WordElement(w))); });
    std::vector<Word> samples;
    for (int j = 0; j < 5; ++j) samples.push_back(random_word(rng, g, 3));
    const WordElement x(random_word(rng, g, 4)), y(random_word(rng, g, 4)), z(random_word(rng, g, 4));
    const auto xy = baxter_derived_ops(zeta, x, y, samples);
    CHECK(xy.star == bowtie(g, x, y));
    CHECK(xy.prec == prec_A(g, x, y));
    const auto star = [&](const WordElement& a, const WordElement& b) { return concat(zeta(a), b); };
    const auto prec = [&](const WordElement& a, const WordElement& b) { return concat(a, zeta(b)); };
    CHECK(prec(star(x, y), z) == star(x, prec(y, z)));
    CHECK(prec(prec(x, y), z) == prec(x, star(y, z)));
  }

  const BaxterRota prepend([](const Word& w) {
    Word out{"a"};
    out.insert(out.end(), w.begin(), w.end());
    return WordElement(out);
  });
  CHECK_THROWS_AS(baxter_derived_ops(prepend, word_element("x"), word_element("y")), BaxterRotaError);
  try {
    baxter_derived_ops(prepend, word_element("x"), word_element("y"));
  } catch (const BaxterRotaError& e) {
    CHECK(e.x() == Word{"x"});
  }
  const auto table = BaxterRota::from_table({{Word{"x"}, word_element("x")}});
  CHECK_THROWS_AS(table(word_element("y")), std::out_of_range);
}

TEST_CASE("grammar and graph files") {
  const CoopTable g = parse_grammar("# comment\ns -> s a : 1/2\n\ns -> a s : 1/2  # trailing\n");
  CHECK(g.rules("s").size() == 2);
  CHECK(g.is_stochastic());
  try {
    parse_grammar("s -> s a : 1/2\ns -> a s 1/2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_grammar("s -> a b : 1/0"), ParseError);

  const WeightedGraph gr = parse_graph("arc v w 1/2\narc v u 1/2\narc w w 1\narc u v 1\n");
  const CoopTable m = graph_coop(gr);
  CHECK(delta_sharp(m, word_element("v")) ==
        pure_tensor<Word>({{"v"}, {"w"}}, Rational(1, 2)) + pure_tensor<Word>({{"v"}, {"u"}}, Rational(1, 2)));
  CHECK(delta_sharp(graph_coop(parse_graph("arc v v 1")), word_element("v")) == pure_tensor<Word>({{"v"}, {"v"}}));
  CHECK_THROWS_AS(graph_coop(parse_graph("arc v w 1")), std::invalid_argument);
  CHECK_THROWS_AS(graph_coop(parse_graph("arc v v 1/2\narc v v 1/2")), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("edge v w 1"), ParseError);
}

TEST_CASE("dynamics") {
  const CoopTable g = parse_grammar("s -> s a : 1/2\ns -> a s : 1/2\n");
  const auto states = dynamics_run(g, word_element("s"), 1);
  CHECK(states.size() == 2);
  CHECK(states[0] == word_element("s"));
  CHECK(states[1] == word_element("s a", Rational(1, 2)) + word_element("a s", Rational(1, 2)));
  const auto d = distribution(word_element("b", 1) + word_element("a", 1) + word_element("c", 2));
  CHECK(d.front().first == Word{"c"});
  CHECK(d[1].first == Word{"a"});

  const CoopTable det = parse_grammar("s -> a s : 1");
  const auto run = dynamics_run(det, word_element("s"), 3);
  CHECK(run.back() == word_element("a a a s"));

  CHECK_THROWS_AS(dynamics_run(parse_grammar("s -> a s : 2"), word_element("s"), 1), std::invalid_argument);
  CHECK_NOTHROW(dynamics_run(parse_grammar("s -> a s : 2"), word_element("s"), 1, false));

  std::mt19937 rng(2024);
  for (int i = 0; i < 40; ++i) {
    const CoopTable r = random_grammar(rng, true);
    const auto traj = dynamics_run(r, WordElement(random_word(rng, r, 1)), 10);
    for (const auto& s : traj) CHECK(total_mass(s) == Rational(1));
  }
}
