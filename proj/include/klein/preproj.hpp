// Truncated filtration dimensions of deformed preprojective algebras.
//
// Paths compose right-to-left (p q means "q first"), so the (i, j) block
// of the path space consists of paths from j to i. The defining relation
// at vertex v is the v-component of sum_a [a, a*] - lambda:
//   rho_v = sum_{h(a)=v} a a*  -  sum_{t(a)=v} a* a  -  lambda_v e_v,
// an inhomogeneous element with a length-2 leading part. The computed
// quotient dimension is an UPPER BOUND on dim F_l(e_i Pi e_j): the span
// of p rho_v q with the length-2 part of length <= L + buffer is
// intersected with F_l exactly, but the full two-sided ideal may meet F_l
// in more elements via cancellation from longer products. Stabilization
// across buffers and the Molien oracle certify exactness where they agree.
//
// Linear algebra: sparse exact elimination with columns ordered by
// descending path length, so that pivots in the trailing block count
// dim(W /\ F_l) for every l at once.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klein/linalg.hpp"
#include "klein/quiver.hpp"
#include "klein/rational.hpp"

namespace klein {

struct FiltrationTable {
  int vertex_count = 0;
  int max_length = 0;  // L
  int buffer = 0;
  // dims[i][j][l] = computed dimension of F_l(e_i Pi e_j), l = 0..L.
  // Blocks not requested are left empty.
  std::vector<std::vector<std::vector<Int>>> dims;

  bool has_block(int i, int j) const { return !dims[i][j].empty(); }
};

namespace detail {

// Paths of the doubled quiver, grouped by (target, source, length).
struct PathIndex {
  // arrow sequences in traversal order; paths[t][s][l] lists them
  std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> paths;
  // column index of each path within its (t, s) block; columns are ordered
  // by descending length, then lexicographically by arrow sequence.
  std::vector<std::vector<std::map<std::vector<int>, int>>> column;
  // first column of each length band: band_start[t][s][l] .. band_end-1
  std::vector<std::vector<std::vector<int>>> band_start;
  std::vector<std::vector<int>> total_columns;
};

inline PathIndex enumerate_paths(const QuiverSpec& dq, int max_len) {
  int n = dq.vertex_count;
  std::vector<std::vector<int>> out_arrows(n);  // arrow indices by tail
  for (size_t a = 0; a < dq.arrows.size(); ++a)
    out_arrows[dq.arrows[a].tail].push_back(static_cast<int>(a));

  PathIndex px;
  px.paths.assign(
      n, std::vector<std::vector<std::vector<std::vector<int>>>>(
             n, std::vector<std::vector<std::vector<int>>>(max_len + 1)));
  for (int s = 0; s < n; ++s) {
    // Grow all paths out of s, tracking the current endpoint.
    std::vector<std::pair<int, std::vector<int>>> frontier = {{s, {}}};
    px.paths[s][s][0].push_back({});
    for (int l = 1; l <= max_len; ++l) {
      std::vector<std::pair<int, std::vector<int>>> next;
      for (const auto& [end, seq] : frontier) {
        for (int a : out_arrows[end]) {
          auto seq2 = seq;
          seq2.push_back(a);
          int t = dq.arrows[a].head;
          px.paths[t][s][l].push_back(seq2);
          next.emplace_back(t, std::move(seq2));
        }
      }
      frontier = std::move(next);
    }
  }
  px.column.assign(n, std::vector<std::map<std::vector<int>, int>>(n));
  px.band_start.assign(n, std::vector<std::vector<int>>(n));
  px.total_columns.assign(n, std::vector<int>(n, 0));
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s) {
      int col = 0;
      px.band_start[t][s].assign(max_len + 2, 0);
      for (int l = max_len; l >= 0; --l) {
        auto& bucket = px.paths[t][s][l];
        std::sort(bucket.begin(), bucket.end());
        for (const auto& p : bucket) px.column[t][s][p] = col++;
      }
      // band_start[l] = first column with length <= l, i.e. the count of
      // columns with length > l.
      int acc = 0;
      for (int l = max_len; l >= 0; --l) {
        px.band_start[t][s][l] = acc;
        acc += static_cast<int>(px.paths[t][s][l].size());
      }
      px.band_start[t][s][max_len + 1] = 0;
      px.total_columns[t][s] = col;
    }
  }
  return px;
}

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static Rat from(const CRat& c) {
    if (c.im != 0) throw std::logic_error("complex coefficient in rational path");
    return c.re;
  }
  static Rat one() { return Rat(1); }
};

template <>
struct FieldOps<CRat> {
  static CRat from(const CRat& c) { return c; }
  static CRat one() { return CRat(Rat(1)); }
};

template <class F>
std::vector<Int> block_dims(const QuiverSpec& dq, const ParamVector& lambda,
                            int big_l, int report_l, int target, int source,
                            const PathIndex& px) {
  int n = dq.vertex_count;
  const auto& column = px.column[target][source];
  Echelon<F> ech;

  // Generators p rho_v q with |p| + |q| + 2 <= big_l:
  //   q : source -> v of length lq, p : v -> target of length lp.
  for (int v = 0; v < n; ++v) {
    F lam = FieldOps<F>::from(lambda.at(v));
    for (int lq = 0; lq + 2 <= big_l; ++lq) {
      for (const auto& qseq : px.paths[v][source][lq]) {
        for (int lp = 0; lp + lq + 2 <= big_l; ++lp) {
          for (const auto& pseq : px.paths[target][v][lp]) {
            std::map<int, F> entries;
            auto add = [&](const std::vector<int>& mid, const F& coef) {
              std::vector<int> seq;
              seq.reserve(lq + mid.size() + lp);
              seq.insert(seq.end(), qseq.begin(), qseq.end());
              seq.insert(seq.end(), mid.begin(), mid.end());
              seq.insert(seq.end(), pseq.begin(), pseq.end());
              int col = column.at(seq);
              auto [it, fresh] = entries.emplace(col, coef);
              if (!fresh) it->second = it->second + coef;
            };
            for (size_t a = 0; a < dq.arrows.size(); ++a) {
              // a a* is the loop at the head of a; with right-to-left
              // composition its traversal order is (dual first).
              if (!dq.arrows[a].dual) {
                size_t dual_idx = a + dq.arrows.size() / 2;
                if (dq.arrows[a].head == v)
                  add({static_cast<int>(dual_idx), static_cast<int>(a)},
                      FieldOps<F>::one());
                if (dq.arrows[a].tail == v) {
                  F minus_one = F(0) - FieldOps<F>::one();
                  add({static_cast<int>(a), static_cast<int>(dual_idx)}, minus_one);
                }
              }
            }
            add({}, F(0) - lam);
            SparseRow<F> row;
            row.reserve(entries.size());
            for (auto& [c, coef] : entries)
              if (!(coef == 0)) row.emplace_back(c, std::move(coef));
            ech.add_row(std::move(row));
          }
        }
      }
    }
  }

  std::vector<Int> dims(report_l + 1, 0);
  Int total = 0;
  for (int l = 0; l <= report_l; ++l) {
    total += static_cast<Int>(px.paths[target][source][l].size());
    // Columns with length <= l start at band_start[l]; pivots there count
    // dim(W /\ F_l).
    Int cut = ech.pivots_at_or_after(px.band_start[target][source][l]);
    dims[l] = total - cut;
  }
  return dims;
}

}  // namespace detail

// Computes the truncated filtration table for the doubled quiver. When
// `only_block` is set, only that (target, source) pair is computed.
inline FiltrationTable truncated_dims(
    const QuiverSpec& dq, const ParamVector& lambda, int max_length,
    int buffer = 0, std::optional<std::pair<int, int>> only_block = std::nullopt) {
  if (!dq.doubled)
    throw std::invalid_argument("truncated_dims: expected the doubled quiver");
  if (max_length < 0 || buffer < 0)
    throw std::invalid_argument("truncated_dims: negative length bound");
  if (static_cast<int>(lambda.size()) != dq.vertex_count)
    throw std::invalid_argument("truncated_dims: parameter length mismatch");
  int n = dq.vertex_count;
  int big_l = max_length + buffer;

  // Resource ceiling: the path space is exponential in L.
  double est = 1.0;
  for (int l = 0; l < big_l; ++l) est *= 2.0 * dq.arrows.size() / (2.0 * n);
  if (est > 5e6)
    throw std::invalid_argument(
        "truncated_dims: ~" + std::to_string(static_cast<long long>(est)) +
        " paths of length " + std::to_string(big_l) +
        " per source exceed the ceiling of 5000000; lower L or the buffer");

  detail::PathIndex px = detail::enumerate_paths(dq, big_l);

  FiltrationTable table;
  table.vertex_count = n;
  table.max_length = max_length;
  table.buffer = buffer;
  table.dims.assign(n, std::vector<std::vector<Int>>(n));
  bool complex_param = !lambda.is_real();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (only_block && !(only_block->first == i && only_block->second == j))
        continue;
      table.dims[i][j] =
          complex_param
              ? detail::block_dims<CRat>(dq, lambda, big_l, max_length, i, j, px)
              : detail::block_dims<Rat>(dq, lambda, big_l, max_length, i, j, px);
    }
  }
  return table;
}

// The spherical corner: cumulative dimensions of F_l(e_0 Pi e_0).
inline std::vector<Int> spherical_dims(const QuiverSpec& dq,
                                       const ParamVector& lambda, int max_length,
                                       int buffer = 0) {
  FiltrationTable t =
      truncated_dims(dq, lambda, max_length, buffer, std::make_pair(0, 0));
  return t.dims[0][0];
}

}  // namespace klein
