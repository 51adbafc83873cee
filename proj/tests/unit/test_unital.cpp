#include <doctest.h>

#include <algorithm>

#include "dipt/infinitesimal.hpp"
#include "dipt/unital.hpp"

using namespace dipt;

namespace {

UnitalKey k(const char* text) { return UnitalKey(DiptBasis::parse(text)); }
UnitalElement u(const char* text) { return UnitalElement(k(text)); }
UnitalTensor pt(const UnitalKey& a, const UnitalKey& b, Rational c = 1) { return unital_pure(a, b, c); }

std::vector<UnitalKey> upto(std::size_t n, std::string_view alphabet = "x") {
  std::vector<UnitalKey> out;
  for (std::size_t d = 1; d <= n; ++d)
    for (const auto& b : dipt_basis(d, alphabet)) out.emplace_back(b);
  return out;
}

std::size_t degree(const UnitalKey& key) { return key ? key->degree() : 0; }

UnitalTensor apply_slot(const UnitalTensor& t, std::size_t slot, const UnitalCoproduct& cop) {
  return apply_to_slot(t, slot, 2, [&](const UnitalKey& key) { return cop.on_basis(key); });
}

// prod_k (1 - x^k)^{-p_k} = 1 + sum r_n x^n, solved degree by degree with
// explicit multiset-binomial expansions.
std::vector<long> euler_oracle(const std::vector<long>& r) {
  const std::size_t N = r.size();
  std::vector<long> p(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    // Coefficient of x^n in prod_{k<n} (1-x^k)^{-p_k}.
    std::vector<long> series(N + 1, 0);
    series[0] = 1;
    for (std::size_t kk = 1; kk < n; ++kk) {
      std::vector<long> next(N + 1, 0);
      for (std::size_t e = 0; e <= N; ++e) {
        if (series[e] == 0) continue;
        // (1-x^k)^{-p} = sum_j C(p+j-1, j) x^{kj}
        long binom = 1;
        for (std::size_t j = 0; e + kk * j <= N; ++j) {
          next[e + kk * j] += series[e] * binom;
          binom = binom * (p[kk] + static_cast<long>(j)) / static_cast<long>(j + 1);
        }
      }
      series = next;
    }
    p[n] = r[n - 1] - series[n];
  }
  return {p.begin() + 1, p.end()};
}

}  // namespace

TEST_CASE("unit rules") {
  const UnitalElement one = unit_element();
  const UnitalElement x = u("[(| |)] @ vw");
  CHECK(unital_succ(one, x) == x);
  CHECK(unital_succ(x, one).empty());
  CHECK(unital_star(one, x) == x);
  CHECK(unital_star(x, one) == x);
  CHECK_THROWS_WITH(unital_succ(one, one), "1 ≻ 1 undefined");
  CHECK_THROWS(unital_succ(one + x, Rational(2) * one));
  for (const auto& a : upto(4)) {
    const UnitalElement y(a);
    CHECK(unital_star(one, y) == y);
    CHECK(unital_star(y, one) == y);
    CHECK(unital_succ(one, y) == y);
    CHECK(unital_succ(y, one).empty());
  }
  CHECK(counit(one) == Rational(1));
  CHECK(counit(x).is_zero());
  CHECK(counit(Rational(3) * one + x) == Rational(3));
  CHECK(body(Rational(3) * one + x) == DiptElement(DiptBasis::parse("[(| |)] @ vw")));
}

TEST_CASE("semi tensor structure") {
  const UnitalKey x = k("[|] @ v"), y = k("[|] @ w"), b = k("[|] @ u");
  CHECK(semi_tensor_succ(pt(x, kUnit), pt(y, kUnit)) == pt(k("[(| |)] @ vw"), kUnit));
  CHECK(semi_tensor_succ(pt(x, b), pt(y, kUnit)).empty());
  CHECK(semi_tensor_succ(pt(x, kUnit), pt(y, b)) == pt(k("[| |] @ vw"), b));
  CHECK(semi_tensor_star(pt(x, b), pt(y, b)) == pt(k("[| |] @ vw"), k("[| |] @ uu")));
  CHECK_THROWS(semi_tensor_succ(pt(kUnit, kUnit), pt(kUnit, kUnit)));
}

TEST_CASE("classical tensor structure") {
  const UnitalKey x = k("[|] @ v"), y = k("[|] @ w"), b = k("[|] @ u"), b2 = k("[|] @ x");
  CHECK(classical_tensor_succ(pt(x, kUnit), pt(y, kUnit)) == pt(k("[(| |)] @ vw"), kUnit));
  CHECK(classical_tensor_succ(pt(x, b), pt(y, b2)) == pt(k("[(| |)] @ vw"), k("[(| |)] @ ux")));
  CHECK(classical_tensor_star(pt(kUnit, b), pt(kUnit, b2)) == pt(kUnit, k("[| |] @ ux")));
  CHECK(classical_tensor_succ(pt(kUnit, b), pt(kUnit, b2)) == pt(kUnit, k("[(| |)] @ ux")));
  CHECK(classical_tensor_succ(pt(x, kUnit), pt(kUnit, b)).empty());
  CHECK_THROWS(classical_tensor_succ(pt(kUnit, kUnit), pt(kUnit, kUnit)));
}

TEST_CASE("coproducts on small elements") {
  const UnitalKey v = k("[|] @ v"), w = k("[|] @ w");
  const UnitalElement gv(v);
  CHECK(blacktriangle(gv) == pt(kUnit, v) + pt(v, kUnit));
  CHECK(vartriangle(gv) == pt(kUnit, v) + pt(v, kUnit));
  CHECK(hopf_delta(gv) == pt(v, kUnit) + pt(kUnit, v));
  CHECK(blacktriangle(unit_element()) == pt(kUnit, kUnit));
  CHECK(vartriangle(unit_element()) == pt(kUnit, kUnit));
  CHECK(hopf_delta(unit_element()) == pt(kUnit, kUnit));
  const UnitalKey vw = k("[(| |)] @ vw");
  CHECK(blacktriangle(UnitalElement(vw)) == pt(vw, kUnit) + pt(kUnit, vw) + pt(v, w));
  CHECK(reduced(CoproductKind::SemiHopf, UnitalElement(vw)) == pt(v, w));
  CHECK(reduced(CoproductKind::SemiInfinitesimal, UnitalElement(vw)) == pt(v, w));
  CHECK(reduced(CoproductKind::SemiHopf, gv).empty());
  CHECK(reduced(CoproductKind::SemiInfinitesimal, gv).empty());
  CHECK_THROWS(reduced(CoproductKind::SemiHopf, gv + unit_element()));
  const UnitalKey s = k("[| |] @ vw"), s2 = k("[| |] @ wv");
  CHECK(hopf_delta(UnitalElement(s)) == pt(s, kUnit) + pt(kUnit, s) + pt(v, w) + pt(w, v));
  // v > w is primitive for the Com coproduct.
  CHECK(reduced(CoproductKind::ComHopf, UnitalElement(vw)).empty());
  CHECK(reduced(CoproductKind::ComHopf, UnitalElement(s)) == reduced(CoproductKind::ComHopf, UnitalElement(s2)));
}

TEST_CASE("coassociativity and cocommutativity up to degree 4") {
  for (auto kind : {CoproductKind::SemiHopf, CoproductKind::SemiInfinitesimal, CoproductKind::ComHopf}) {
    const auto& cop = unital_coproduct(kind);
    auto keys = upto(4);
    const auto two = upto(3, "vw");
    keys.insert(keys.end(), two.begin(), two.end());
    keys.push_back(kUnit);
    for (const auto& key : keys) {
      const UnitalTensor d = cop.on_basis(key);
      CHECK(apply_slot(d, 0, cop) == apply_slot(d, 1, cop));
      if (kind == CoproductKind::ComHopf) CHECK(flip(d) == d);
    }
  }
}

TEST_CASE("coproducts are morphisms") {
  const auto& tri = unital_coproduct(CoproductKind::SemiHopf);
  const auto& com = unital_coproduct(CoproductKind::ComHopf);
  const auto keys = upto(3, "vw");
  for (const auto& a : keys)
    for (const auto& b : keys) {
      if (degree(a) + degree(b) > 4) continue;
      const UnitalElement x(a), y(b);
      CHECK(tri(unital_star(x, y)) == semi_tensor_star(tri(x), tri(y)));
      CHECK(tri(unital_succ(x, y)) == semi_tensor_succ(tri(x), tri(y)));
      CHECK(com(unital_star(x, y)) == classical_tensor_star(com(x), com(y)));
      CHECK(com(unital_succ(x, y)) == classical_tensor_succ(com(x), com(y)));
    }
}

TEST_CASE("reduced △ is the semi-infinitesimal coproduct") {
  for (const auto& key : upto(5)) {
    const UnitalTensor r = reduced(CoproductKind::SemiInfinitesimal, UnitalElement(key));
    UnitalTensor expected(2);
    for (const auto& [ks, c] : delta(DiptElement(*key))) expected.add_term({ks[0], ks[1]}, c);
    CHECK(r == expected);
  }
  for (const auto& key : upto(3, "vw")) {
    UnitalTensor expected(2);
    for (const auto& [ks, c] : delta(DiptElement(*key))) expected.add_term({ks[0], ks[1]}, c);
    CHECK(reduced(CoproductKind::SemiInfinitesimal, UnitalElement(key)) == expected);
  }
}

TEST_CASE("counit") {
  for (auto kind : {CoproductKind::SemiHopf, CoproductKind::SemiInfinitesimal, CoproductKind::ComHopf})
    for (const auto& key : upto(3, "vw")) {
      UnitalElement left, right;
      for (const auto& [ks, c] : unital_coproduct(kind).on_basis(key)) {
        if (!ks[0]) left.add_term(ks[1], c);
        if (!ks[1]) right.add_term(ks[0], c);
      }
      CHECK(left == UnitalElement(key));
      CHECK(right == UnitalElement(key));
    }
}

TEST_CASE("rigidity: ker reduced △ ∩ ker reduced ▲") {
  const std::vector<std::size_t> expected{1, 0, 0, 0, 0};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(prim_2as(n).size() == expected[n - 1]);
  CHECK(prim_2as(1, "vw").size() == 2);
  CHECK(prim_2as(2, "vw").empty());
  // The D-kernel element of degree 2 is not killed by reduced ▲.
  const UnitalElement tri = u("[(| |)] @ xx") - u("[| |] @ xx");
  CHECK(reduced(CoproductKind::SemiInfinitesimal, tri).empty());
  CHECK_FALSE(reduced(CoproductKind::SemiHopf, tri).empty());
}

TEST_CASE("antipodes") {
  const UnitalElement v = u("[|] @ v");
  CHECK(antipode_S(v) == -v);
  CHECK(antipode_Sprime(v) == -v);
  CHECK(antipode_S(unit_element()) == unit_element());
  CHECK(antipode_Sprime(u("[(| |)] @ vw")) == u("[| |] @ vw") - u("[(| |)] @ vw"));
  for (auto kind : {CoproductKind::SemiHopf, CoproductKind::SemiInfinitesimal}) {
    auto keys = upto(4);
    const auto two = upto(3, "vw");
    keys.insert(keys.end(), two.begin(), two.end());
    keys.push_back(kUnit);
    for (const auto& key : keys) {
      const UnitalElement x(key);
      const UnitalElement expected = unit_element(counit(x));
      CHECK(antipode_convolution(kind, x, true) == expected);
      CHECK(antipode_convolution(kind, x, false) == expected);
    }
  }
}

TEST_CASE("Com corestriction and symmetrizer") {
  CHECK(com_symmetrize("v") == DiptElement(DiptBasis::parse("[|] @ v")));
  CHECK(com_symmetrize("vw") ==
        Rational(1, 2) * (DiptElement(DiptBasis::parse("[| |] @ vw")) + DiptElement(DiptBasis::parse("[| |] @ wv"))));
  CHECK(com_corestrict(com_symmetrize("vwu")) == ComWord("uvw"));
  CHECK(com_unshuffle("xx") == Rational(2) * pure_tensor<std::string>({"x", "x"}));
  CHECK(com_unshuffle("v").empty());

  // phi o s = id on multisets of size <= 4 over three letters.
  std::vector<std::string> words{""};
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char c : std::string("uvw"))
        if (w.empty() || w.back() <= c) next.push_back(w + c);
    words = next;
    for (const auto& w : words) CHECK(com_corestrict(com_symmetrize(w)) == ComWord(w));
  }
  // Coalgebra morphism for the Com coproduct.
  const auto& com = unital_coproduct(CoproductKind::ComHopf);
  for (const auto& key : upto(4, "vw")) {
    if (key->degree() == 4 && key->word() > "vvww") continue;
    const auto lhs = [&] {
      Tensor<std::string> out(2);
      for (const auto& [w, c] : com_corestrict(DiptElement(*key))) out += c * com_unshuffle(w);
      return out;
    }();
    Tensor<std::string> rhs(2);
    for (const auto& [ks, c] : com.reduced(UnitalElement(key)))
      for (const auto& [w1, c1] : com_corestrict(DiptElement(*ks[0])))
        for (const auto& [w2, c2] : com_corestrict(DiptElement(*ks[1]))) rhs.add_term({w1, w2}, c * c1 * c2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Prim_Com dimensions match the series inversion") {
  const auto oracle = euler_oracle({1, 2, 6, 22, 90});
  CHECK(oracle == std::vector<long>{1, 1, 4, 15, 64});
  const auto rep = primcom_dims(5);
  CHECK(rep.ok);
  CHECK(rep.kernel == std::vector<std::uint64_t>{1, 1, 4, 15, 64});
  CHECK(rep.oracle == rep.kernel);
}

TEST_CASE("degree-3 element killed by both reduced coproducts") {
  const UnitalElement w = u("[((| |) |)] @ xxx") + u("[(| (| |))] @ xxx") - u("[(| | |)] @ xxx") - u("[(| |) |] @ xxx");
  CHECK(reduced(CoproductKind::SemiHopf, w).empty());
  CHECK(reduced(CoproductKind::SemiInfinitesimal, w).empty());
}
