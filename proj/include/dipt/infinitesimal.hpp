#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "dipt/dipterous.hpp"
#include "dipt/lincomb.hpp"

namespace dipt {

using DiptTensor = Tensor<DiptBasis>;
/// Elements of the tensor coalgebra As^c(V): combinations of words.
using AscElement = LinComb<std::string>;

struct CoproductParams {
  Rational t{1};
};

/// The semi-infinitesimal coproduct on Dipt(V):
///   D(v) = 0,
///   D(x <> y) = x1 (x) (x2 <> y) + (x * y1) (x) y2 + t x (x) y   (<> in {*, >}).
/// Basis values are memoized; lookups are safe from several threads.
class SemiInfinitesimalCoproduct {
 public:
  explicit SemiInfinitesimalCoproduct(CoproductParams params = {}) : params_(std::move(params)) {}

  const CoproductParams& params() const { return params_; }
  DiptTensor on_basis(const DiptBasis& x) const;
  DiptTensor operator()(const DiptElement& x) const;
  /// Left iterate (D (x) id^{n-1}) ... D, of arity n+1. n = 0 is the identity.
  DiptTensor iterate(const DiptElement& x, std::size_t n) const;

 private:
  DiptTensor compute(const DiptBasis& x) const;

  CoproductParams params_;
  mutable std::shared_mutex mutex_;
  mutable std::map<DiptBasis, DiptTensor> cache_;
};

/// Shared coproduct instance for the given parameters.
const SemiInfinitesimalCoproduct& semi_infinitesimal(const CoproductParams& params = {});

DiptTensor delta(const DiptElement& x, const CoproductParams& params = {});
DiptTensor delta_iter(const DiptElement& x, std::size_t n, const CoproductParams& params = {});

/// dim of ker D^{(r)} on the degree-n component.
std::size_t filtration_dim(std::size_t r, std::size_t n, const CoproductParams& params = {});

/// Echelon basis of ker D in degree n.
std::vector<DiptElement> prim_basis(std::size_t n, std::string_view alphabet = std::string_view(&kDefaultGenerator, 1),
                                    const CoproductParams& params = {});

/// x > y - x * y.
DiptElement triangle(const DiptElement& x, const DiptElement& y);
/// x_1 <| (x_2 > (x_3 > ... > (x_{n-1} > x_n))). Needs at least two arguments.
DiptElement bracket(const std::vector<DiptElement>& xs);

/// Reads a Schröder tree as a nested bracket: leaves take the letters of
/// `word` left to right, a node with k children is the k-ary bracket.
DiptElement mag_graft_as_bracket(const PlanarTree& t, std::string_view word);

/// The n-bracket of generators is the corolla tree plus terms supported
/// on forests of at least two trees.
bool corolla_iso_check(std::size_t n);

/// e(x) = x - x1 * e(x2); a projection onto ker D.
DiptElement e_idempotent(const DiptElement& x, const CoproductParams& params = {});

/// Deconcatenation coproduct of the tensor coalgebra.
Tensor<std::string> asc_deconcat(const std::string& word);
Tensor<std::string> asc_deconcat(const AscElement& x);

/// Corestriction sum over n of the generator projections of D^{(n-1)}(x).
AscElement phi_corestrict(const DiptElement& x, const CoproductParams& params = {});

/// The all-leaf forest carrying `word`.
DiptElement s_section(const std::string& word);

struct PbwReport {
  std::vector<std::uint64_t> forests;     // r_n
  std::vector<std::uint64_t> primitives;  // m_n from ker D
  std::vector<std::uint64_t> composed;    // sum over compositions of m products
  bool ok = false;
};

PbwReport pbw_dim_check(std::size_t max_n);

}  // namespace dipt
