#include "dipt/linear_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace dipt {

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  if (v.is_zero())
    rows_[r].erase(c);
  else
    rows_[r][c] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  set(r, c, at(r, c) + v);
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  const auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational{} : it->second;
}

void SparseMatrix::stack(const SparseMatrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("stacking matrices with different column counts");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::vector<Rational> SparseMatrix::apply(const LinComb<std::size_t>& v) const {
  std::vector<Rational> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, x] : rows_[r]) {
      const Rational y = v.coeff(c);
      if (!y.is_zero()) out[r] += x * y;
    }
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

namespace {

// row -= factor * pivot_row
void eliminate(SparseMatrix::Row& row, const SparseMatrix::Row& pivot_row, const Rational& factor) {
  for (const auto& [c, v] : pivot_row) {
    auto it = row.find(c);
    if (it == row.end()) {
      row.emplace(c, -(factor * v));
    } else {
      it->second -= factor * v;
      if (it->second.is_zero()) row.erase(it);
    }
  }
}

}  // namespace

EchelonForm reduced_echelon(const SparseMatrix& m) {
  std::vector<SparseMatrix::Row> pending;
  pending.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) pending.push_back(m.row(r));

  EchelonForm out;
  // Pending rows are kept with their leading column >= the current column,
  // so the next pivot is the smallest leading column among them.
  while (!pending.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pending.size(); ++i) {
      const auto lead_i = pending[i].begin()->first;
      const auto lead_b = pending[best].begin()->first;
      if (lead_i < lead_b || (lead_i == lead_b && pending[i].size() < pending[best].size())) best = i;
    }
    SparseMatrix::Row pivot_row = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const std::size_t col = pivot_row.begin()->first;
    const Rational inv = Rational(1) / pivot_row.begin()->second;
    for (auto& [c, v] : pivot_row) v *= inv;

    for (auto& row : pending) {
      const auto it = row.find(col);
      if (it != row.end()) eliminate(row, pivot_row, Rational(it->second));
    }
    pending.erase(std::remove_if(pending.begin(), pending.end(), [](const auto& r) { return r.empty(); }),
                  pending.end());
    for (auto& row : out.rows) {
      const auto it = row.find(col);
      if (it != row.end()) eliminate(row, pivot_row, Rational(it->second));
    }
    out.rows.push_back(std::move(pivot_row));
    out.pivots.push_back(col);
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return reduced_echelon(m).pivots.size(); }

std::vector<LinComb<std::size_t>> kernel_basis(const SparseMatrix& m) {
  const EchelonForm ef = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;

  // One vector per free column: 1 there, minus the RREF column at the pivots.
  SparseMatrix raw(m.cols() - ef.pivots.size(), m.cols());
  std::size_t r = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    raw.set(r, free, 1);
    for (std::size_t i = 0; i < ef.rows.size(); ++i) {
      const auto it = ef.rows[i].find(free);
      if (it != ef.rows[i].end()) raw.set(r, ef.pivots[i], -it->second);
    }
    ++r;
  }

  const EchelonForm normalized = reduced_echelon(raw);
  std::vector<LinComb<std::size_t>> basis;
  basis.reserve(normalized.rows.size());
  for (const auto& row : normalized.rows) {
    LinComb<std::size_t> v;
    for (const auto& [c, x] : row) v.add_term(c, x);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<LinComb<std::size_t>> intersect_kernels(std::span<const SparseMatrix> ms) {
  if (ms.empty()) throw std::invalid_argument("intersect_kernels needs at least one matrix");
  SparseMatrix stacked(0, ms.front().cols());
  for (const auto& m : ms) stacked.stack(m);
  return kernel_basis(stacked);
}

}  // namespace dipt
