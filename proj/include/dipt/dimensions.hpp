#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dipt {

/// Dimensions per degree 1..maxN, counted by direct enumeration of bases
/// (single generator): forests, binary trees, Schröder trees.
struct DimTable {
  std::vector<std::uint64_t> dipt;
  std::vector<std::uint64_t> ldipt;
  std::vector<std::uint64_t> mag;
};

DimTable dim_table(std::size_t max_n);

// Reference sequences, index 0 holding degree 1.
std::vector<std::uint64_t> large_schroeder(std::size_t max_n);
std::vector<std::uint64_t> little_schroeder(std::size_t max_n);
std::vector<std::uint64_t> catalan(std::size_t max_n);
/// Coefficients of x(1+x)/(1-x).
std::vector<std::uint64_t> qndipt_series(std::size_t max_n);

/// Inverse Euler transform: the p_n with prod_k (1-x^k)^{-p_k} = 1 + sum a_n x^n.
/// Input and output indexed from degree 1.
std::vector<std::int64_t> inverse_euler_transform(const std::vector<std::int64_t>& a);

/// Sum over compositions n = n_1 + ... + n_k of m_{n_1}...m_{n_k}; the
/// coefficients of m/(1-m).
std::vector<std::uint64_t> sequence_composition(const std::vector<std::uint64_t>& m);

}  // namespace dipt
