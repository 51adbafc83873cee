#include "dipt/dimensions.hpp"

#include <stdexcept>

#include "dipt/binary_tree.hpp"
#include "dipt/planar_tree.hpp"

namespace dipt {

DimTable dim_table(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("max degree must be at least 1");
  DimTable t;
  for (std::size_t n = 1; n <= max_n; ++n) {
    t.dipt.push_back(enumerate_forests(n).size());
    t.ldipt.push_back(enumerate_binary(n).size());
    t.mag.push_back(enumerate_trees(n).size());
  }
  return t;
}

std::vector<std::uint64_t> little_schroeder(std::size_t max_n) {
  // T = x + T^2/(1-T): a tree is a leaf or a graft of at least two trees.
  std::vector<std::uint64_t> m(max_n + 1, 0);
  if (max_n >= 1) m[1] = 1;
  for (std::size_t n = 2; n <= max_n; ++n) {
    // seq[k][d]: number of sequences of k trees with d leaves, k >= 2.
    std::vector<std::uint64_t> power(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n));
    power.resize(n + 1, 0);
    std::uint64_t total = 0;
    for (std::size_t k = 2; k <= n; ++k) {
      std::vector<std::uint64_t> next(n + 1, 0);
      for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; a + b <= n; ++b) next[a + b] += power[a] * m[b];
      power = std::move(next);
      total += power[n];
    }
    m[n] = total;
  }
  return {m.begin() + 1, m.end()};
}

std::vector<std::uint64_t> sequence_composition(const std::vector<std::uint64_t>& m) {
  const std::size_t n = m.size();
  std::vector<std::uint64_t> r(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    r[d] = m[d];
    for (std::size_t first = 0; first < d; ++first) r[d] += m[first] * r[d - first - 1];
  }
  return r;
}

std::vector<std::uint64_t> large_schroeder(std::size_t max_n) { return sequence_composition(little_schroeder(max_n)); }

std::vector<std::uint64_t> catalan(std::size_t max_n) {
  std::vector<std::uint64_t> c(max_n + 1, 0);
  c[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
  return {c.begin() + 1, c.end()};
}

std::vector<std::uint64_t> qndipt_series(std::size_t max_n) {
  std::vector<std::uint64_t> q(max_n, 2);
  if (max_n >= 1) q[0] = 1;
  return q;
}

std::vector<std::int64_t> inverse_euler_transform(const std::vector<std::int64_t>& a) {
  const std::size_t n = a.size();
  // c_k = k a_k - sum_{i<k} c_i a_{k-i}, and c_k = sum_{d | k} d p_d.
  std::vector<std::int64_t> c(n + 1, 0), p(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    std::int64_t v = static_cast<std::int64_t>(k) * a[k - 1];
    for (std::size_t i = 1; i < k; ++i) v -= c[i] * a[k - i - 1];
    c[k] = v;
    std::int64_t rest = c[k];
    for (std::size_t d = 1; d < k; ++d)
      if (k % d == 0) rest -= static_cast<std::int64_t>(d) * p[d];
    p[k] = rest / static_cast<std::int64_t>(k);
  }
  return {p.begin() + 1, p.end()};
}

}  // namespace dipt
