#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dipt/dipterous.hpp"
#include "dipt/lincomb.hpp"

namespace dipt {

/// None marks arity-1 chains, which carry no symbol.
enum class ChainSymbol { None, Star, Succ };

/// Basis chain symbol (x) x_1 (x) ... (x) x_n of C_n(Dipt(V)).
struct ChainKey {
  ChainSymbol symbol = ChainSymbol::None;
  std::vector<DiptBasis> slots;

  ChainKey(ChainSymbol s, std::vector<DiptBasis> xs);

  std::size_t arity() const { return slots.size(); }
  std::size_t weight() const;
  std::string str() const;

  friend bool operator==(const ChainKey&, const ChainKey&) = default;
  friend auto operator<=>(const ChainKey& a, const ChainKey& b) {
    if (auto c = a.symbol <=> b.symbol; c != 0) return c;
    return a.slots <=> b.slots;
  }
};

using ChainElement = LinComb<ChainKey>;

/// Face d_i, 1 <= i <= n-1: the * product of slots i, i+1, except the last
/// face of a > chain, which uses >. Landing in arity 1 drops the symbol.
ChainElement face(std::size_t i, const ChainElement& c);

struct DifferentialOptions {
  /// Negative control: flips the sign of the last face.
  bool inject_sign_fault = false;
};

/// d = sum (-1)^{i+1} d_i. Zero on arity-1 chains.
ChainElement differential(const ChainElement& c, const DifferentialOptions& opts = {});

/// Contracting homotopy: peels the last slot once through the canonical
/// decomposition (a tree splits along >, a forest sheds its last tree
/// along *), with sign (-1)^{n+1}.
ChainElement homotopy(const ChainElement& c);

/// All basis chains of the given arity and weight over one generator.
std::vector<ChainKey> chain_basis(std::size_t arity, std::size_t weight);

struct HomologyPiece {
  std::size_t arity = 0;
  std::size_t weight = 0;
  std::size_t kernel = 0;  // dim ker(d: C_n -> C_{n-1})
  std::size_t image = 0;   // rank(d: C_{n+1} -> C_n)
  std::size_t betti = 0;
};

HomologyPiece homology_piece(std::size_t arity, std::size_t weight, const DifferentialOptions& opts = {});
std::size_t homology_rank(std::size_t arity, std::size_t weight, const DifferentialOptions& opts = {});

struct HomologyReport {
  std::vector<HomologyPiece> pieces;
  bool d_squared_zero = true;
  bool simplicial = true;
  bool homotopy_ok = true;
  bool betti_ok = true;
  bool koszul_ok = false;
  /// First failing chain and the property it broke, if any.
  std::optional<std::string> witness;
};

/// Checks every piece with arity <= max_arity and weight <= weight_cap; the
/// chain-level identities are checked for weights <= homotopy_weight_cap.
HomologyReport homology_report(std::size_t max_arity, std::size_t weight_cap, std::size_t homotopy_weight_cap,
                               const DifferentialOptions& opts = {});

}  // namespace dipt
