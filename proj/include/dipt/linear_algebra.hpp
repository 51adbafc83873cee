#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "dipt/lincomb.hpp"
#include "dipt/rational.hpp"

namespace dipt {

/// Row-sparse rational matrix. Zero entries are never stored.
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
  const Row& row(std::size_t r) const { return rows_.at(r); }

  /// Appends the rows of `other`, which must have the same column count.
  void stack(const SparseMatrix& other);

  /// Exact product with a column-index vector.
  std::vector<Rational> apply(const LinComb<std::size_t>& v) const;

  static SparseMatrix identity(std::size_t n);

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Reduced row echelon form: pivots strictly increasing, pivot entries 1,
/// pivot columns cleared in every other row. Zero rows dropped.
struct EchelonForm {
  std::vector<SparseMatrix::Row> rows;
  std::vector<std::size_t> pivots;
};

EchelonForm reduced_echelon(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Null-space basis over column indices, itself in reduced echelon form
/// (leading coefficient 1, leading columns increasing).
std::vector<LinComb<std::size_t>> kernel_basis(const SparseMatrix& m);

/// Basis of the intersection of the null spaces, i.e. the kernel of the
/// stacked matrix. All matrices must share the column count.
std::vector<LinComb<std::size_t>> intersect_kernels(std::span<const SparseMatrix> ms);

/// Matrix of a linear map written on an ordered column basis. Row keys are
/// indexed in increasing key order so the matrix is reproducible.
template <class ColKey, class RowKey>
class OperatorMatrix {
 public:
  template <class F>
  OperatorMatrix(std::vector<ColKey> columns, F&& image) : columns_(std::move(columns)) {
    std::vector<LinComb<RowKey>> images;
    images.reserve(columns_.size());
    for (const auto& c : columns_) {
      images.push_back(image(c));
      for (const auto& [rk, v] : images.back()) row_index_.emplace(rk, 0);
    }
    std::size_t next = 0;
    for (auto& [rk, idx] : row_index_) idx = next++;
    matrix_ = SparseMatrix(row_index_.size(), columns_.size());
    for (std::size_t j = 0; j < images.size(); ++j)
      for (const auto& [rk, v] : images[j]) matrix_.set(row_index_.at(rk), j, v);
  }

  const SparseMatrix& matrix() const { return matrix_; }
  const std::vector<ColKey>& columns() const { return columns_; }

  std::vector<LinComb<ColKey>> kernel() const { return to_keys(kernel_basis(matrix_)); }
  std::size_t rank() const { return dipt::rank(matrix_); }

  std::vector<LinComb<ColKey>> to_keys(const std::vector<LinComb<std::size_t>>& vs) const {
    std::vector<LinComb<ColKey>> out;
    out.reserve(vs.size());
    for (const auto& v : vs) {
      LinComb<ColKey> x;
      for (const auto& [j, c] : v) x.add_term(columns_.at(j), c);
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  std::vector<ColKey> columns_;
  std::map<RowKey, std::size_t> row_index_;
  SparseMatrix matrix_{0, 0};
};

/// Rank of a family of vectors, computed exactly.
template <class Key>
std::size_t span_rank(const std::vector<LinComb<Key>>& vectors) {
  std::map<Key, std::size_t> index;
  for (const auto& v : vectors)
    for (const auto& [k, c] : v) index.emplace(k, 0);
  std::size_t next = 0;
  for (auto& [k, i] : index) i = next++;
  SparseMatrix m(vectors.size(), index.size());
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto& [k, c] : vectors[r]) m.set(r, index.at(k), c);
  return rank(m);
}

}  // namespace dipt
