#include "dipt/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "dipt/dimensions.hpp"
#include "dipt/dipterous.hpp"
#include "dipt/infinitesimal.hpp"
#include "dipt/lang_dynamics.hpp"
#include "dipt/ldipterous.hpp"
#include "dipt/perm_nap.hpp"
#include "dipt/qndipt.hpp"
#include "dipt/text.hpp"

namespace dipt {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  template <class W>
  void expect(bool cond, W&& witness) {
    ++r_.cases;
    if (!cond && r_.ok) {
      r_.ok = false;
      r_.witness = witness();
    }
  }
  void fail(std::string witness) {
    expect(false, [&] { return witness; });
  }
  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

template <class B>
std::string triple_str(const B& x, const B& y, const B& z) {
  return "(" + key_str(x) + ", " + key_str(y) + ", " + key_str(z) + ")";
}

template <class B, class BasisFn, class F>
void for_triples(std::size_t cap, BasisFn&& basis, F&& f) {
  std::map<std::size_t, std::vector<B>> cache;
  auto get = [&](std::size_t d) -> const std::vector<B>& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, basis(d)).first;
    return it->second;
  };
  for (std::size_t a = 1; a + 2 <= cap; ++a)
    for (std::size_t b = 1; a + b + 1 <= cap; ++b)
      for (std::size_t c = 1; a + b + c <= cap; ++c)
        for (const auto& x : get(a))
          for (const auto& y : get(b))
            for (const auto& z : get(c)) f(x, y, z);
}

std::vector<DiptBasis> dipt_upto(std::size_t n, std::string_view alphabet) {
  std::vector<DiptBasis> out;
  for (std::size_t d = 1; d <= n; ++d)
    for (const auto& b : dipt_basis(d, alphabet)) out.push_back(b);
  return out;
}

std::vector<UnitalKey> unital_keys(std::size_t cap) {
  std::vector<UnitalKey> out{kUnit};
  for (const auto& b : dipt_upto(cap, "x")) out.emplace_back(b);
  for (const auto& b : dipt_upto(std::min<std::size_t>(cap, 3), "vw")) out.emplace_back(b);
  return out;
}

std::vector<std::string> words_of(std::size_t len, std::string_view letters, bool sorted) {
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char c : letters)
        if (!sorted || w.empty() || w.back() <= c) next.push_back(w + c);
    words = std::move(next);
  }
  return words;
}

template <class Key>
std::string tensor_str(const Tensor<Key>& t) {
  std::string out;
  for (const auto& line : to_lines(t)) out += (out.empty() ? "" : "; ") + line;
  return out.empty() ? "0" : out;
}

const std::vector<std::string> kSymbols{"a", "b", "c", "d", "e"};

CoopTable random_grammar(std::mt19937_64& rng, bool stochastic) {
  std::uniform_int_distribution<std::size_t> nsym(1, kSymbols.size()), nrules(1, 3);
  std::uniform_int_distribution<int> weight(1, 7);
  const std::size_t n = nsym(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  CoopTable tbl;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> ws(nrules(rng));
    int total = 0;
    for (auto& w : ws) total += (w = weight(rng));
    for (int w : ws)
      tbl.add_rule(kSymbols[i], kSymbols[pick(rng)], kSymbols[pick(rng)], stochastic ? Rational(w, total) : Rational(w));
  }
  return tbl;
}

Word random_word(std::mt19937_64& rng, const CoopTable& tbl, std::size_t max_len) {
  const std::vector<std::string> alpha(tbl.alphabet().begin(), tbl.alphabet().end());
  std::uniform_int_distribution<std::size_t> len(1, max_len), pick(0, alpha.size() - 1);
  Word w(len(rng));
  for (auto& s : w) s = alpha[pick(rng)];
  return w;
}

DiptElement random_homogeneous(std::mt19937_64& rng, std::size_t degree) {
  const auto& basis = dipt_basis(degree, "vw");
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1), terms(1, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  DiptElement x;
  while (x.empty())
    for (std::size_t i = terms(rng); i > 0; --i) x.add_term(basis[pick(rng)], coeff(rng));
  return x;
}

}  // namespace

bool all_ok(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

CheckResult check_dipterous_axioms(std::size_t cap) {
  Recorder rec("dipterous axioms");
  for (std::string_view alphabet : {std::string_view("x"), std::string_view("vw")}) {
    const std::size_t c = alphabet.size() == 1 ? cap : std::min<std::size_t>(cap, 4);
    for_triples<DiptBasis>(c, [&](std::size_t d) { return dipt_basis(d, alphabet); },
                           [&](const DiptBasis& a, const DiptBasis& b, const DiptBasis& e) {
                             const DiptElement x(a), y(b), z(e);
                             rec.expect(star(star(x, y), z) == star(x, star(y, z)),
                                        [&] { return "(x*y)*z on " + triple_str(a, b, e); });
                             rec.expect(succ(star(x, y), z) == succ(x, succ(y, z)),
                                        [&] { return "(x*y)>z on " + triple_str(a, b, e); });
                           });
  }
  return rec.done();
}

CheckResult check_right_dipterous_axioms(std::size_t cap) {
  Recorder rec("right-dipterous axioms");
  for_triples<DiptBasis>(cap, [](std::size_t d) { return dipt_basis(d); },
                         [&](const DiptBasis& a, const DiptBasis& b, const DiptBasis& e) {
                           const DiptElement x(a), y(b), z(e);
                           rec.expect(rdipt_prec(rdipt_prec(x, y), z) == rdipt_prec(x, rdipt_star(y, z)),
                                      [&] { return "(x<y)<z on " + triple_str(a, b, e); });
                         });
  return rec.done();
}

CheckResult check_ldipterous_axioms(std::size_t cap) {
  Recorder rec("L-dipterous axioms");
  for (std::string_view alphabet : {std::string_view("x"), std::string_view("vw")}) {
    const std::size_t c = alphabet.size() == 1 ? cap : std::min<std::size_t>(cap, 4);
    for_triples<LDiptBasis>(c, [&](std::size_t d) { return ldipt_basis(d, alphabet); },
                            [&](const LDiptBasis& a, const LDiptBasis& b, const LDiptBasis& e) {
                              const LDiptElement x(a), y(b), z(e);
                              rec.expect(ldipt_nwarrow(ldipt_nwarrow(x, y), z) == ldipt_nwarrow(x, ldipt_nwarrow(y, z)),
                                         [&] { return "associativity on " + triple_str(a, b, e); });
                              rec.expect(ldipt_succ(ldipt_nwarrow(x, y), z) == ldipt_succ(x, ldipt_succ(y, z)),
                                         [&] { return "(x<^y)>z on " + triple_str(a, b, e); });
                              rec.expect(ldipt_nwarrow(ldipt_succ(x, y), z) == ldipt_succ(x, ldipt_nwarrow(y, z)),
                                         [&] { return "(x>y)<^z on " + triple_str(a, b, e); });
                            });
  }
  return rec.done();
}

CheckResult check_qndipt_axioms(std::size_t cap) {
  Recorder rec("QNDipt relations (1)-(4)");
  for_triples<QNBasis>(cap, [](std::size_t d) { return qn_basis(d, "vw"); },
                       [&](const QNBasis& a, const QNBasis& b, const QNBasis& e) {
                         const QNElement x(a), y(b), z(e);
                         rec.expect(qn_star(qn_star(x, y), z) == qn_star(x, qn_star(y, z)),
                                    [&] { return "associativity on " + triple_str(a, b, e); });
                         rec.expect(qn_succ(qn_star(x, y), z) == qn_succ(x, qn_succ(y, z)),
                                    [&] { return "(x*y)>z on " + triple_str(a, b, e); });
                         rec.expect(qn_star(qn_succ(x, y), z).empty() && qn_succ(x, qn_star(y, z)).empty(),
                                    [&] { return "(x>y)*z, x>(y*z) on " + triple_str(a, b, e); });
                         rec.expect(qn_star(x, qn_succ(y, z)).empty() && qn_succ(qn_succ(x, y), z).empty(),
                                    [&] { return "x*(y>z), (x>y)>z on " + triple_str(a, b, e); });
                       });
  return rec.done();
}

CheckResult check_nap_axioms(std::size_t cap) {
  Recorder rec("NAP identity");
  const std::vector<std::string> labels{"v", "w"};
  for_triples<NapTree>(cap, [&](std::size_t d) { return enumerate_nap(d, labels); },
                       [&](const NapTree& x, const NapTree& y, const NapTree& z) {
                         rec.expect(nap_graft(nap_graft(x, y), z) == nap_graft(nap_graft(x, z), y), [&] {
                           return "(xy)z = (xz)y on (" + x.encoding() + ", " + y.encoding() + ", " + z.encoding() + ")";
                         });
                       });
  return rec.done();
}

CheckResult check_permutative_axioms(std::size_t cap) {
  Recorder rec("permutative axioms");
  const std::vector<std::string> labels{"v", "w"};
  for_triples<PermNapBasis>(cap, [&](std::size_t d) { return perm_nap_basis(d, labels); },
                            [&](const PermNapBasis& a, const PermNapBasis& b, const PermNapBasis& e) {
                              const PermNapElement x(a), y(b), z(e);
                              const auto xy = perm_nap_star(x, y);
                              rec.expect(perm_nap_star(xy, z) == perm_nap_star(x, perm_nap_star(y, z)),
                                         [&] { return "associativity on " + triple_str(a, b, e); });
                              rec.expect(perm_nap_star(xy, z) == perm_nap_star(perm_nap_star(x, z), y),
                                         [&] { return "(xy)z = (xz)y on " + triple_str(a, b, e); });
                            });
  return rec.done();
}

CheckResult check_perm_nap_axioms(std::size_t cap) {
  Recorder rec("Perm(NAP) right-dipterous axioms");
  const std::vector<std::string> labels{"v", "w"};
  for_triples<PermNapBasis>(cap, [&](std::size_t d) { return perm_nap_basis(d, labels); },
                            [&](const PermNapBasis& a, const PermNapBasis& b, const PermNapBasis& e) {
                              const PermNapElement x(a), y(b), z(e);
                              const auto xyz = perm_nap_prec(perm_nap_prec(x, y), z);
                              rec.expect(xyz == perm_nap_prec(x, perm_nap_star(y, z)),
                                         [&] { return "(x<y)<z = x<(y*z) on " + triple_str(a, b, e); });
                              rec.expect(xyz == perm_nap_prec(perm_nap_prec(x, z), y),
                                         [&] { return "(x<y)<z = (x<z)<y on " + triple_str(a, b, e); });
                            });
  return rec.done();
}

CheckResult check_delta_coassoc(std::size_t cap, const Rational& t) {
  Recorder rec("coassociativity of D, t = " + t.str());
  const auto& cop = semi_infinitesimal(CoproductParams{t});
  auto keys = dipt_upto(cap, "x");
  for (const auto& b : dipt_upto(std::min<std::size_t>(cap, 4), "vw")) keys.push_back(b);
  const auto on = [&](const DiptBasis& k) { return cop.on_basis(k); };
  for (const auto& b : keys) {
    const DiptTensor d = cop.on_basis(b);
    rec.expect(apply_to_slot(d, 0, 2, on) == apply_to_slot(d, 1, 2, on), [&] { return b.key(); });
  }
  return rec.done();
}

CheckResult check_unital_coassoc(CoproductKind kind, std::size_t cap) {
  static const char* names[] = {"blacktriangle", "vartriangle", "Com coproduct"};
  Recorder rec(std::string("coassociativity of ") + names[static_cast<int>(kind)]);
  const auto& cop = unital_coproduct(kind);
  const auto on = [&](const UnitalKey& k) { return cop.on_basis(k); };
  for (const auto& k : unital_keys(cap)) {
    const UnitalTensor d = cop.on_basis(k);
    rec.expect(apply_to_slot(d, 0, 2, on) == apply_to_slot(d, 1, 2, on), [&] { return key_str(k); });
  }
  return rec.done();
}

CheckResult check_com_cocommutative(std::size_t cap) {
  Recorder rec("cocommutativity of the Com coproduct");
  const auto& cop = unital_coproduct(CoproductKind::ComHopf);
  for (const auto& k : unital_keys(cap)) {
    const UnitalTensor d = cop.on_basis(k);
    rec.expect(flip(d) == d, [&] { return key_str(k); });
  }
  return rec.done();
}

CheckResult check_prim_dims(std::size_t max_n, const Rational& t) {
  Recorder rec("dim ker D = little Schröder");
  const auto expected = little_schroeder(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t got = prim_basis(n, "x", CoproductParams{t}).size();
    rec.expect(got == expected[n - 1], [&] {
      return "degree " + std::to_string(n) + ": " + std::to_string(got) + " vs " + std::to_string(expected[n - 1]);
    });
  }
  return rec.done();
}

CheckResult check_pbw(std::size_t max_n) {
  Recorder rec("composition identity r_n = sum m_{n_1}...m_{n_k}");
  const PbwReport rep = pbw_dim_check(max_n);
  for (std::size_t n = 0; n < max_n; ++n)
    rec.expect(rep.forests[n] == rep.composed[n], [&] {
      return "degree " + std::to_string(n + 1) + ": " + std::to_string(rep.forests[n]) + " vs " +
             std::to_string(rep.composed[n]);
    });
  return rec.done();
}

CheckResult check_idempotent(std::size_t cap) {
  Recorder rec("e o e = e, image(e) in ker D");
  for (const auto& b : dipt_upto(cap, "x")) {
    const DiptElement e = e_idempotent(DiptElement(b));
    rec.expect(e_idempotent(e) == e, [&] { return "e(e(x)) on " + b.key(); });
    rec.expect(delta(e).empty(), [&] { return "D(e(x)) on " + b.key(); });
  }
  return rec.done();
}

CheckResult check_phi_section_asc(std::size_t max_len) {
  Recorder rec("phi o s = id (As^c)");
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& w : words_of(len, "vw", false))
      rec.expect(phi_corestrict(s_section(w)) == AscElement(w), [&] { return w; });
  return rec.done();
}

CheckResult check_phi_morphism_asc(std::size_t cap, const Rational& t) {
  Recorder rec("phi is a coalgebra morphism (As^c)");
  const CoproductParams p{t};
  for (const auto& b : dipt_upto(cap, "vw")) {
    const auto lhs = asc_deconcat(phi_corestrict(DiptElement(b), p));
    Tensor<std::string> rhs(2);
    for (const auto& [k, c] : delta(DiptElement(b), p))
      for (const auto& [w1, c1] : phi_corestrict(DiptElement(k[0]), p))
        for (const auto& [w2, c2] : phi_corestrict(DiptElement(k[1]), p)) rhs.add_term({w1, w2}, c * c1 * c2);
    rec.expect(lhs == rhs, [&] { return b.key(); });
  }
  return rec.done();
}

CheckResult check_phi_section_com(std::size_t max_len) {
  Recorder rec("phi o s = id (Com^c)");
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& w : words_of(len, "uvw", true))
      rec.expect(com_corestrict(com_symmetrize(w)) == ComWord(w), [&] { return w; });
  return rec.done();
}

CheckResult check_phi_morphism_com(std::size_t cap) {
  Recorder rec("phi is a coalgebra morphism (Com^c)");
  const auto& com = unital_coproduct(CoproductKind::ComHopf);
  for (const auto& b : dipt_upto(cap, "vw")) {
    Tensor<std::string> lhs(2), rhs(2);
    for (const auto& [w, c] : com_corestrict(DiptElement(b))) lhs += c * com_unshuffle(w);
    for (const auto& [ks, c] : com.reduced(UnitalElement(UnitalKey(b))))
      for (const auto& [w1, c1] : com_corestrict(DiptElement(*ks[0])))
        for (const auto& [w2, c2] : com_corestrict(DiptElement(*ks[1]))) rhs.add_term({w1, w2}, c * c1 * c2);
    rec.expect(lhs == rhs, [&] { return b.key(); });
  }
  return rec.done();
}

CheckResult check_prim_2as(std::size_t max_n) {
  Recorder rec("ker reduced-triangle cap ker reduced-blacktriangle = V");
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto kernel = prim_2as(n);
    const std::size_t expected = n == 1 ? 1 : 0;
    rec.expect(kernel.size() == expected, [&] {
      std::string w = "degree " + std::to_string(n) + ": dim " + std::to_string(kernel.size()) + ", expected " +
                      std::to_string(expected);
      if (!kernel.empty()) w += "; element " + to_text(kernel.front());
      return w;
    });
  }
  return rec.done();
}

CheckResult check_antipodes(std::size_t cap) {
  Recorder rec("antipode identities S, S' (both sides)");
  for (auto kind : {CoproductKind::SemiHopf, CoproductKind::SemiInfinitesimal})
    for (const auto& k : unital_keys(cap)) {
      const UnitalElement x(k);
      const UnitalElement expected = unit_element(counit(x));
      const char* name = kind == CoproductKind::SemiHopf ? "S" : "S'";
      rec.expect(antipode_convolution(kind, x, true) == expected,
                 [&] { return std::string(name) + " left on " + key_str(k); });
      rec.expect(antipode_convolution(kind, x, false) == expected,
                 [&] { return std::string(name) + " right on " + key_str(k); });
    }
  return rec.done();
}

CheckResult check_coproduct_morphisms(std::size_t cap, std::uint64_t seed, std::size_t samples) {
  Recorder rec("blacktriangle and Com coproduct are morphisms");
  if (cap < 2) return rec.done();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> total(2, cap);
  const auto& tri = unital_coproduct(CoproductKind::SemiHopf);
  const auto& com = unital_coproduct(CoproductKind::ComHopf);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t n = total(rng);
    const std::size_t a = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    const UnitalElement x = from_body(random_homogeneous(rng, a)), y = from_body(random_homogeneous(rng, n - a));
    const auto w = [&] { return "x = " + unital_str(x) + ", y = " + unital_str(y); };
    rec.expect(tri(unital_star(x, y)) == semi_tensor_star(tri(x), tri(y)), [&] { return "blacktriangle(x*y): " + w(); });
    rec.expect(tri(unital_succ(x, y)) == semi_tensor_succ(tri(x), tri(y)), [&] { return "blacktriangle(x>y): " + w(); });
    rec.expect(com(unital_star(x, y)) == classical_tensor_star(com(x), com(y)), [&] { return "Com(x*y): " + w(); });
    rec.expect(com(unital_succ(x, y)) == classical_tensor_succ(com(x), com(y)), [&] { return "Com(x>y): " + w(); });
  }
  return rec.done();
}

CheckResult check_reduced_vartriangle(std::size_t cap) {
  Recorder rec("reduced vartriangle = D");
  for (const auto& b : dipt_upto(cap, "x")) {
    UnitalTensor expected(2);
    for (const auto& [ks, c] : delta(DiptElement(b))) expected.add_term({ks[0], ks[1]}, c);
    const UnitalTensor got = reduced(CoproductKind::SemiInfinitesimal, UnitalElement(UnitalKey(b)));
    rec.expect(got == expected, [&] { return b.key() + ": " + tensor_str(got); });
  }
  return rec.done();
}

CheckResult check_primcom(std::size_t max_n) {
  Recorder rec("Prim_Com dims = inverse Euler transform of large Schröder");
  const PrimComReport rep = primcom_dims(max_n);
  for (std::size_t n = 0; n < max_n; ++n)
    rec.expect(rep.kernel[n] == rep.oracle[n], [&] {
      return "degree " + std::to_string(n + 1) + ": " + std::to_string(rep.kernel[n]) + " vs " +
             std::to_string(rep.oracle[n]);
    });
  return rec.done();
}

CheckResult check_eps_law(std::uint64_t seed, std::size_t samples) {
  Recorder rec("Delta(uv) = u Delta(v)");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const CoopTable g = random_grammar(rng, false);
    const Word u = random_word(rng, g, 4), v = random_word(rng, g, 4);
    WordTensor expected(2);
    for (const auto& [ks, c] : delta_sharp(g, WordElement(v))) {
      Word left = u;
      left.insert(left.end(), ks[0].begin(), ks[0].end());
      expected.add_term({left, ks[1]}, c);
    }
    rec.expect(delta_sharp(g, concat(WordElement(u), WordElement(v))) == expected,
               [&] { return "u = " + word_str(u) + ", v = " + word_str(v); });
  }
  return rec.done();
}

CheckResult check_right_ldipt_words(std::uint64_t seed, std::size_t samples) {
  Recorder rec("right L-dipterous axioms on words");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const CoopTable g = random_grammar(rng, i % 2 == 0);
    const Word a = random_word(rng, g, 4), b = random_word(rng, g, 4), c = random_word(rng, g, 4);
    const WordElement x(a), y(b), z(c);
    const auto w = [&] { return "(" + word_str(a) + ", " + word_str(b) + ", " + word_str(c) + ")"; };
    rec.expect(prec_A(g, bowtie(g, x, y), z) == bowtie(g, x, prec_A(g, y, z)), [&] { return "(x#y)<z on " + w(); });
    rec.expect(prec_A(g, prec_A(g, x, y), z) == prec_A(g, x, bowtie(g, y, z)), [&] { return "(x<y)<z on " + w(); });

    const BaxterRota zeta([&](const Word& s) { return mu(delta_sharp(g, WordElement(s))); });
    try {
      const auto xy = baxter_derived_ops(zeta, x, y, {c});
      const auto st = [&](const WordElement& p, const WordElement& q) { return concat(zeta(p), q); };
      const auto pr = [&](const WordElement& p, const WordElement& q) { return concat(p, zeta(q)); };
      rec.expect(xy.star == bowtie(g, x, y) && xy.prec == prec_A(g, x, y), [&] { return "derived ops on " + w(); });
      rec.expect(pr(st(x, y), z) == st(x, pr(y, z)), [&] { return "zeta (x*y)<z on " + w(); });
      rec.expect(pr(pr(x, y), z) == pr(x, st(y, z)), [&] { return "zeta (x<y)<z on " + w(); });
    } catch (const BaxterRotaError& e) {
      rec.fail(e.what());
    }
  }
  return rec.done();
}

CheckResult check_dynamics_mass(std::uint64_t seed, std::size_t grammars, std::size_t steps) {
  Recorder rec("mass conservation");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < grammars; ++i) {
    const CoopTable g = random_grammar(rng, true);
    const Word start = random_word(rng, g, 1);
    const auto states = dynamics_run(g, WordElement(start), steps);
    for (std::size_t s = 0; s < states.size(); ++s)
      rec.expect(total_mass(states[s]) == Rational(1), [&] {
        return "grammar " + std::to_string(i) + ", step " + std::to_string(s) + ": mass " +
               total_mass(states[s]).str();
      });
  }
  return rec.done();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "coassoc", "bialgebra", "pbw", "dynamics", "all"};
  return names;
}

CheckList run_suite(std::string_view name, const CheckConfig& config) {
  const std::size_t n = config.max_degree;
  const auto cap = [&](std::size_t limit, std::size_t extra = 0) { return std::min(limit, n + extra); };
  if (name == "axioms")
    return {check_dipterous_axioms(cap(6, 1)), check_right_dipterous_axioms(cap(6, 1)),
            check_ldipterous_axioms(cap(5)),   check_qndipt_axioms(cap(5)),
            check_nap_axioms(cap(6, 1)),       check_permutative_axioms(cap(5)),
            check_perm_nap_axioms(cap(5))};
  if (name == "coassoc") {
    CheckList out;
    std::vector<Rational> ts{0, 1, 2};
    if (std::find(ts.begin(), ts.end(), config.t) == ts.end()) ts.push_back(config.t);
    for (const auto& t : ts) out.push_back(check_delta_coassoc(cap(5), t));
    for (auto kind : {CoproductKind::SemiHopf, CoproductKind::SemiInfinitesimal, CoproductKind::ComHopf})
      out.push_back(check_unital_coassoc(kind, cap(4)));
    out.push_back(check_com_cocommutative(cap(4)));
    return out;
  }
  if (name == "bialgebra")
    return {check_prim_2as(cap(5)), check_antipodes(cap(4)), check_coproduct_morphisms(cap(4), config.seed, 200),
            check_reduced_vartriangle(cap(5)), check_primcom(cap(5))};
  if (name == "pbw")
    return {check_prim_dims(cap(5), config.t), check_pbw(cap(6, 1)),         check_idempotent(cap(4)),
            check_phi_section_asc(cap(5)),     check_phi_morphism_asc(cap(4), config.t),
            check_phi_section_com(cap(4)),     check_phi_morphism_com(cap(4))};
  if (name == "dynamics")
    return {check_eps_law(config.seed, 200), check_right_ldipt_words(config.seed, 200),
            check_dynamics_mass(config.seed, 40, 10)};
  if (name == "all") {
    CheckList out;
    for (const auto& s : suite_names())
      if (s != "all")
        for (auto& c : run_suite(s, config)) out.push_back(std::move(c));
    return out;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace dipt
