#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dipt/rational.hpp"
#include "dipt/unital.hpp"

namespace dipt {

/// Outcome of one property: number of instances tried and the first
/// counterexample, if any.
struct CheckResult {
  std::string name;
  bool ok = true;
  std::size_t cases = 0;
  std::optional<std::string> witness;
};

using CheckList = std::vector<CheckResult>;

struct CheckConfig {
  std::size_t max_degree = 5;
  std::uint64_t seed = 0;
  Rational t{1};
};

bool all_ok(const CheckList& checks);

// Axioms, exhaustive over basis triples of total degree <= cap.
CheckResult check_dipterous_axioms(std::size_t cap);
CheckResult check_right_dipterous_axioms(std::size_t cap);
CheckResult check_ldipterous_axioms(std::size_t cap);
CheckResult check_qndipt_axioms(std::size_t cap);
/// Node count cap, two labels.
CheckResult check_nap_axioms(std::size_t cap);
CheckResult check_permutative_axioms(std::size_t cap);
CheckResult check_perm_nap_axioms(std::size_t cap);

// Coalgebra structure on basis elements of degree <= cap.
CheckResult check_delta_coassoc(std::size_t cap, const Rational& t);
CheckResult check_unital_coassoc(CoproductKind kind, std::size_t cap);
CheckResult check_com_cocommutative(std::size_t cap);

/// dim ker D per degree against the little Schröder numbers.
CheckResult check_prim_dims(std::size_t max_n, const Rational& t = 1);
/// Forest counts against sums over compositions of primitive counts.
CheckResult check_pbw(std::size_t max_n);
/// e o e = e and D o e = 0.
CheckResult check_idempotent(std::size_t cap);
/// phi o s = id on words of length <= max_len over two letters.
CheckResult check_phi_section_asc(std::size_t max_len);
/// Deconcatenation o phi = (phi (x) phi) o D.
CheckResult check_phi_morphism_asc(std::size_t cap, const Rational& t = 1);
/// Same pair for the Com coproduct, on sorted words over three letters.
CheckResult check_phi_section_com(std::size_t max_len);
CheckResult check_phi_morphism_com(std::size_t cap);

/// dim ker reduced-triangle cap ker reduced-blacktriangle = (1, 0, 0, ...).
CheckResult check_prim_2as(std::size_t max_n);
/// Both antipodes, both sides, on basis elements of degree <= cap.
CheckResult check_antipodes(std::size_t cap);
/// blacktriangle and the Com coproduct respect both products on random
/// homogeneous pairs of total degree <= cap.
CheckResult check_coproduct_morphisms(std::size_t cap, std::uint64_t seed, std::size_t samples);
/// Reduced unital triangle equals D (t = 1).
CheckResult check_reduced_vartriangle(std::size_t cap);
CheckResult check_primcom(std::size_t max_n);

/// Delta-sharp law Delta(uv) = u Delta(v) on random grammars and words.
CheckResult check_eps_law(std::uint64_t seed, std::size_t samples);
/// Right L-dipterous axioms for (bowtie, prec_A) and the Baxter-Rota
/// derived products on random word triples.
CheckResult check_right_ldipt_words(std::uint64_t seed, std::size_t samples);
/// Total mass stays 1 over `steps` steps of random stochastic grammars.
CheckResult check_dynamics_mass(std::uint64_t seed, std::size_t grammars, std::size_t steps);

const std::vector<std::string>& suite_names();
/// Named group of checks; throws std::invalid_argument on unknown names.
CheckList run_suite(std::string_view name, const CheckConfig& config);

}  // namespace dipt
