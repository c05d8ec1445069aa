// Sparse exact elimination over an arbitrary exact field (mpq_class or
// complex rationals), plus a small dense kernel routine for Cartan
// matrices. Row echelon with leftmost-pivot selection; rows are kept
// monic so reductions are one multiply per term.

#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "klein/rational.hpp"

namespace klein {

template <class F>
using SparseRow = std::vector<std::pair<int, F>>;  // sorted by column

namespace detail {

// r -= c * p, where p is monic with leading column p[0].first.
template <class F>
SparseRow<F> axpy(const SparseRow<F>& r, const F& c, const SparseRow<F>& p) {
  SparseRow<F> out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() && j < p.size()) {
    if (r[i].first < p[j].first) {
      out.push_back(r[i++]);
    } else if (r[i].first > p[j].first) {
      out.emplace_back(p[j].first, -(c * p[j].second));
      ++j;
    } else {
      F v = r[i].second - c * p[j].second;
      if (!(v == 0)) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  for (; i < r.size(); ++i) out.push_back(r[i]);
  for (; j < p.size(); ++j) out.emplace_back(p[j].first, -(c * p[j].second));
  return out;
}

}  // namespace detail

// Incremental row echelon basis. Columns are whatever integer indices the
// caller chooses; the pivot of each stored row is its smallest column, so
// callers that need "span intersected with a trailing coordinate block"
// order their columns accordingly.
template <class F>
class Echelon {
 public:
  // Reduces `row` against the current basis. Returns the pivot column if
  // the row was independent (and stored), or -1 if it reduced to zero.
  int add_row(SparseRow<F> row) {
    reduce(row);
    if (row.empty()) return -1;
    int lead = row[0].first;
    F inv = row[0].second;
    for (auto& t : row) t.second = t.second / inv;
    pivots_.emplace(lead, std::move(row));
    return lead;
  }

  // Span membership: does `row` reduce to zero?
  bool in_span(SparseRow<F> row) const {
    reduce(row);
    return row.empty();
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

  // Pivot columns in increasing column order.
  std::vector<int> pivot_columns() const {
    std::vector<int> out;
    out.reserve(pivots_.size());
    for (const auto& kv : pivots_) out.push_back(kv.first);
    return out;
  }

  // Number of pivots with column index >= c (used for flag intersections
  // when trailing columns form the subspace of interest).
  int pivots_at_or_after(int c) const {
    return static_cast<int>(std::distance(pivots_.lower_bound(c), pivots_.end()));
  }

 private:
  void reduce(SparseRow<F>& row) const {
    while (!row.empty()) {
      auto it = pivots_.find(row[0].first);
      if (it == pivots_.end()) return;
      row = detail::axpy(row, row[0].second, it->second);
    }
  }

  std::map<int, SparseRow<F>> pivots_;
};

// Kernel of a small dense integer matrix, as integer vectors with coprime
// entries. Plain fraction arithmetic; the matrices here are at most 9x9.
inline std::vector<IntVec> integer_kernel(const std::vector<IntVec>& mat) {
  if (mat.empty()) return {};
  size_t rows = mat.size(), cols = mat[0].size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(mat[i][j]);

  std::vector<int> pivot_col_of_row;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    Rat inv = a[r][c];
    for (size_t j = 0; j < cols; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;

  std::vector<IntVec> kernel;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free_c] = 1;
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
      v[pivot_col_of_row[i]] = -a[i][free_c];
    // Scale to coprime integers.
    mpz_class lcm_den = 1;
    for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
    mpz_class g = 0;
    std::vector<mpz_class> w(cols);
    for (size_t j = 0; j < cols; ++j) {
      w[j] = v[j].get_num() * (lcm_den / v[j].get_den());
      g = gcd(g, w[j]);
    }
    IntVec iv(cols);
    for (size_t j = 0; j < cols; ++j) {
      mpz_class q = w[j] / g;
      if (!q.fits_slong_p()) throw std::logic_error("kernel entry overflow");
      iv[j] = q.get_si();
    }
    kernel.push_back(std::move(iv));
  }
  return kernel;
}

}  // namespace klein
