// Lower-triangular Z-algebra truncations, the hat construction of a graded
// ring, exhaustive associativity checking, the finitely checkable half of
// the Morita condition (surjectivity of far-range multiplication), graded
// module truncations, and the integer decomposition n = k_1 + ... + k_r
// with N <= k_j <= 2N - 1.
//
// Everything here is truncation-based: component bases are finite, indexed
// by (power, internal degree, position), and multiplication is a sparse
// table on basis pairs. Category-level statements are out of reach of a
// truncation and the reports say so: the Morita check reports "surjective
// (isomorphism not refuted)", never "isomorphism".

#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "klein/linalg.hpp"
#include "klein/moment_fiber.hpp"
#include "klein/rational.hpp"

namespace klein {

// Sparse element of one graded component: (basis index, coefficient).
using BasisVec = std::vector<std::pair<int, Rat>>;

// A truncation A_0, ..., A_M of a graded ring, each component graded by an
// internal degree <= cap. Bases are opaque; labels are kept for witnesses.
struct GradedRingTruncation {
  int max_power = 0;  // M
  int cap = 0;        // internal degree cap

  // dims[m][d], labels[m][d][i]
  std::vector<std::vector<int>> dims;
  std::vector<std::vector<std::vector<std::string>>> labels;

  // (m1, d1, i1, m2, d2, i2) -> element of (A_{m1+m2})_{d1+d2}.
  // Missing keys mean the product is zero.
  std::map<std::array<int, 6>, BasisVec> mult;

  int dim(int m, int d) const {
    if (m < 0 || m > max_power || d < 0 || d > cap) return 0;
    return dims[m][d];
  }

  const BasisVec* product(int m1, int d1, int i1, int m2, int d2, int i2) const {
    auto it = mult.find({m1, d1, i1, m2, d2, i2});
    return it == mult.end() ? nullptr : &it->second;
  }
};

// The Z-algebra of a graded ring: B_ij = A_{i-j}, with multiplication
// inherited. Perturbations (for negative controls in tests) are recorded
// as overrides on specific (i, j, k) positions.
struct ZAlgebraTruncation {
  int max_index = 0;  // M: components B_ij for M >= i >= j >= 0
  GradedRingTruncation ring;
  std::map<std::array<int, 9>, BasisVec> overrides;  // (i,j,k,d1,i1,d2,i2,0,0)

  int dim(int i, int j, int d) const { return ring.dim(i - j, d); }

  BasisVec product(int i, int j, int k, int d1, int i1, int d2, int i2) const {
    auto it = overrides.find({i, j, k, d1, i1, d2, i2, 0, 0});
    if (it != overrides.end()) return it->second;
    const BasisVec* p = ring.product(i - j, d1, i1, j - k, d2, i2);
    return p ? *p : BasisVec{};
  }

  void set_override(int i, int j, int k, int d1, int i1, int d2, int i2,
                    BasisVec value) {
    overrides[{i, j, k, d1, i1, d2, i2, 0, 0}] = std::move(value);
  }

  std::string label(int i, int j, int d, int idx) const {
    return ring.labels[i - j][d][idx];
  }
};

inline void require_ring_complete(const GradedRingTruncation& ring) {
  // Every in-range product must be present (possibly as an explicit empty
  // vector) so that the hat construction never silently invents zeros.
  for (int m1 = 0; m1 <= ring.max_power; ++m1)
    for (int m2 = 0; m1 + m2 <= ring.max_power; ++m2)
      for (int d1 = 0; d1 <= ring.cap; ++d1)
        for (int d2 = 0; d1 + d2 <= ring.cap; ++d2)
          for (int i1 = 0; i1 < ring.dim(m1, d1); ++i1)
            for (int i2 = 0; i2 < ring.dim(m2, d2); ++i2)
              if (!ring.product(m1, d1, i1, m2, d2, i2))
                throw std::invalid_argument(
                    "hat: multiplication table is missing entries");
}

inline ZAlgebraTruncation hat(GradedRingTruncation ring, int max_index) {
  if (max_index < 0) throw std::invalid_argument("hat: negative max index");
  if (max_index > ring.max_power)
    throw std::invalid_argument(
        "hat: max index exceeds the supplied ring truncation");
  require_ring_complete(ring);
  if (ring.dim(0, 0) < 1)
    throw std::invalid_argument("hat: (A_0)_0 must contain the identity");
  ZAlgebraTruncation z;
  z.max_index = max_index;
  z.ring = std::move(ring);
  return z;
}

// Unitality of the diagonal components: the designated identity (the
// single degree-0 basis element of A_0) must act as the identity on every
// adjacent component, from both sides.
inline bool check_units(const ZAlgebraTruncation& z) {
  if (z.ring.dim(0, 0) != 1) return false;
  for (int i = 0; i <= z.max_index; ++i)
    for (int j = 0; j <= i; ++j)
      for (int d = 0; d <= z.ring.cap; ++d)
        for (int idx = 0; idx < z.dim(i, j, d); ++idx) {
          BasisVec left = z.product(i, i, j, 0, 0, d, idx);
          BasisVec right = z.product(i, j, j, d, idx, 0, 0);
          BasisVec expected = {{idx, Rat(1)}};
          if (left != expected || right != expected) return false;
        }
  return true;
}

struct AssocWitness {
  int i = 0, j = 0, k = 0, l = 0;
  int d1 = 0, i1 = 0, d2 = 0, i2 = 0, d3 = 0, i3 = 0;
  std::string x, y, z;
};

struct AssociativityReport {
  bool associative = false;
  long long triples_checked = 0;
  std::optional<AssocWitness> witness;
};

namespace detail {

inline BasisVec sparse_combine(const ZAlgebraTruncation& z, int i, int j, int k,
                               const BasisVec& left, int d2, int i2, int dl) {
  // (left) * e_{i2}, where left lives in B_ij degree dl and e in B_jk.
  BasisVec out;
  std::map<int, Rat> acc;
  for (const auto& [idx, c] : left)
    for (const auto& [ridx, rc] : z.product(i, j, k, dl, idx, d2, i2)) {
      auto [it, fresh] = acc.emplace(ridx, c * rc);
      if (!fresh) it->second += c * rc;
    }
  for (auto& [idx, c] : acc)
    if (c != 0) out.emplace_back(idx, std::move(c));
  return out;
}

}  // namespace detail

// Exhaustive (x y) z == x (y z) over all index quadruples and basis
// triples within the truncation (total internal degree <= cap).
inline AssociativityReport check_associativity(const ZAlgebraTruncation& z) {
  AssociativityReport rep;
  int m = z.max_index;
  int cap = z.ring.cap;
  for (int i = 0; i <= m; ++i)
   for (int j = 0; j <= i; ++j)
    for (int k = 0; k <= j; ++k)
     for (int l = 0; l <= k; ++l)
      for (int d1 = 0; d1 <= cap; ++d1)
       for (int d2 = 0; d1 + d2 <= cap; ++d2)
        for (int d3 = 0; d1 + d2 + d3 <= cap; ++d3) {
          int n1 = z.dim(i, j, d1), n2 = z.dim(j, k, d2), n3 = z.dim(k, l, d3);
          for (int i1 = 0; i1 < n1; ++i1)
           for (int i2 = 0; i2 < n2; ++i2)
            for (int i3 = 0; i3 < n3; ++i3) {
              BasisVec xy = z.product(i, j, k, d1, i1, d2, i2);
              BasisVec xy_z =
                  detail::sparse_combine(z, i, k, l, xy, d3, i3, d1 + d2);
              BasisVec yz = z.product(j, k, l, d2, i2, d3, i3);
              // x (yz): multiply x on the left of each term of yz.
              std::map<int, Rat> acc;
              for (const auto& [idx, c] : yz)
                for (const auto& [ridx, rc] :
                     z.product(i, j, l, d1, i1, d2 + d3, idx)) {
                  auto [it, fresh] = acc.emplace(ridx, c * rc);
                  if (!fresh) it->second += c * rc;
                }
              BasisVec x_yz;
              for (auto& [idx, c] : acc)
                if (c != 0) x_yz.emplace_back(idx, c);
              ++rep.triples_checked;
              if (xy_z != x_yz) {
                rep.associative = false;
                rep.witness = AssocWitness{
                    i, j, k, l, d1, i1, d2, i2, d3, i3,
                    z.label(i, j, d1, i1), z.label(j, k, d2, i2),
                    z.label(k, l, d3, i3)};
                return rep;
              }
            }
        }
  rep.associative = true;
  return rep;
}

struct MoritaWitness {
  int i = 0, j = 0, k = 0, degree = 0;
  std::string missing;  // label of a target basis element outside the span
};

struct MoritaReport {
  int n_threshold = 0;  // N
  bool vacuous = false;
  bool surjective = false;  // "surjective (isomorphism not refuted)" when true
  std::optional<MoritaWitness> witness;
  std::string verdict() const {
    if (vacuous) return "vacuous";
    return surjective ? "surjective (isomorphism not refuted)" : "not surjective";
  }
};

// Definition of a Morita Z-algebra, condition (ii), surjectivity half:
// for all i - j >= N and j - k >= N within the truncation, the span of
// B_ij . B_jk equals B_ik in every internal degree <= cap. Injectivity of
// the tensor-product map is not decidable from slice bases at a
// truncation and is deliberately not claimed.
inline MoritaReport morita_condition_ii(const ZAlgebraTruncation& z, int n_threshold) {
  if (n_threshold < 1)
    throw std::invalid_argument("morita_condition_ii: N >= 1 required");
  MoritaReport rep;
  rep.n_threshold = n_threshold;
  rep.vacuous = (2 * n_threshold > z.max_index);
  rep.surjective = true;
  int cap = z.ring.cap;
  for (int i = 0; i <= z.max_index; ++i) {
    for (int j = 0; i - j >= n_threshold; ++j) {
      for (int k = 0; j - k >= n_threshold; ++k) {
        for (int d = 0; d <= cap; ++d) {
          int target_dim = z.dim(i, k, d);
          if (target_dim == 0) continue;
          Echelon<Rat> span;
          for (int d1 = 0; d1 <= d; ++d1) {
            int n1 = z.dim(i, j, d1), n2 = z.dim(j, k, d - d1);
            for (int i1 = 0; i1 < n1; ++i1)
              for (int i2 = 0; i2 < n2; ++i2) {
                BasisVec p = z.product(i, j, k, d1, i1, d - d1, i2);
                SparseRow<Rat> row(p.begin(), p.end());
                span.add_row(std::move(row));
              }
          }
          if (span.rank() < target_dim) {
            // Identify a basis element outside the span for the witness.
            std::string missing = "?";
            for (int t = 0; t < target_dim; ++t) {
              if (!span.in_span({{t, Rat(1)}})) {
                missing = z.label(i, k, d, t);
                break;
              }
            }
            rep.surjective = false;
            rep.witness = MoritaWitness{i, j, k, d, missing};
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

// Graded module truncation over a Z-algebra truncation: components M_0..M_max
// with action maps B_ij x M_j -> M_i. The action is stored the same way as
// ring multiplication; who acts is determined by the index pair.
struct ZModuleTruncation {
  int max_index = 0;
  std::vector<std::vector<int>> dims;  // dims[i][d]
  // (i, j, d1, i1, d2, i2) -> element of (M_i)_{d1+d2}: action of the
  // basis element (d1, i1) of B_ij on the basis element (d2, i2) of M_j.
  std::map<std::array<int, 6>, BasisVec> action;

  int dim(int i, int d) const {
    if (i < 0 || i > max_index || d < 0 || d >= static_cast<int>(dims[i].size()))
      return 0;
    return dims[i][d];
  }

  // Zero in all components with index strictly above k (the truncated
  // stand-in for boundedness).
  bool vanishes_above(int k) const {
    for (int i = k + 1; i <= max_index; ++i)
      for (int d : dims[i])
        if (d > 0) return false;
    return true;
  }
};

// The column module of a hat algebra: M_i = B_{i0} = A_i, action by ring
// multiplication.
inline ZModuleTruncation column_module(const ZAlgebraTruncation& z) {
  ZModuleTruncation m;
  m.max_index = z.max_index;
  m.dims.resize(z.max_index + 1);
  for (int i = 0; i <= z.max_index; ++i) {
    m.dims[i].resize(z.ring.cap + 1);
    for (int d = 0; d <= z.ring.cap; ++d) m.dims[i][d] = z.dim(i, 0, d);
  }
  for (int i = 0; i <= z.max_index; ++i)
    for (int j = 0; j <= i; ++j)
      for (int d1 = 0; d1 <= z.ring.cap; ++d1)
        for (int d2 = 0; d1 + d2 <= z.ring.cap; ++d2)
          for (int i1 = 0; i1 < z.dim(i, j, d1); ++i1)
            for (int i2 = 0; i2 < z.dim(j, 0, d2); ++i2)
              m.action[{i, j, d1, i1, d2, i2}] =
                  z.product(i, j, 0, d1, i1, d2, i2);
  return m;
}

// Identity of B_i acting as identity on M_i, and grading respected by the
// stored action maps. The identity is located as the unique degree-0 basis
// element of A_0 (checked).
inline bool validate_module(const ZAlgebraTruncation& z, const ZModuleTruncation& m) {
  if (z.ring.dim(0, 0) != 1) return false;
  for (int i = 0; i <= m.max_index; ++i)
    for (int d = 0; d <= z.ring.cap; ++d)
      for (int idx = 0; idx < m.dim(i, d); ++idx) {
        auto it = m.action.find({i, i, 0, 0, d, idx});
        if (it == m.action.end()) return false;
        const BasisVec& v = it->second;
        if (v.size() != 1 || v[0].first != idx || v[0].second != 1) return false;
      }
  return true;
}

// Greedy decomposition of m as k_1 + ... + k_r with N <= k_j <= 2N - 1:
// emit parts of size N while the remainder is >= 2N, then one final part.
inline std::vector<Int> decompose_sum(Int m, Int n) {
  if (n < 1) throw std::invalid_argument("decompose_sum: N >= 1 required");
  if (m < n)
    throw std::invalid_argument("decompose_sum: m must be at least N");
  std::vector<Int> parts;
  Int r = m;
  while (r >= 2 * n) {
    parts.push_back(n);
    r -= n;
  }
  parts.push_back(r);
  Int total = 0;
  for (Int p : parts) {
    if (p < n || p > 2 * n - 1)
      throw std::logic_error("decompose_sum: part out of range");
    total += p;
  }
  if (total != m) throw std::logic_error("decompose_sum: parts do not sum");
  return parts;
}

// The commutative model: the semi-invariant ring of the cyclic quiver,
// truncated to powers <= M and internal degree <= cap, with monomial bases
// and multiplication through normal forms.
inline GradedRingTruncation build_type_a_ring(int n, const IntVec& chi, int max_power,
                                              int cap) {
  FiberRing fiber = build_fiber_ring(n);
  GradedRingTruncation ring;
  ring.max_power = max_power;
  ring.cap = cap;
  ring.dims.assign(max_power + 1, std::vector<int>(cap + 1, 0));
  ring.labels.assign(max_power + 1,
                     std::vector<std::vector<std::string>>(cap + 1));
  // index of each monomial within its (m, d) slice
  std::vector<std::vector<std::map<Expo, int>>> index(
      max_power + 1, std::vector<std::map<Expo, int>>(cap + 1));
  std::vector<std::vector<GradedSlice>> slices(max_power + 1);
  for (int m = 0; m <= max_power; ++m) {
    slices[m].reserve(cap + 1);
    for (int d = 0; d <= cap; ++d) {
      GradedSlice s = slice(fiber, chi, m, d);
      ring.dims[m][d] = s.dim();
      for (int t = 0; t < s.dim(); ++t) {
        index[m][d][s.basis[t]] = t;
        ring.labels[m][d].push_back(monomial_str(fiber, s.basis[t]));
      }
      slices[m].push_back(std::move(s));
    }
  }
  for (int m1 = 0; m1 <= max_power; ++m1)
    for (int m2 = 0; m1 + m2 <= max_power; ++m2)
      for (int d1 = 0; d1 <= cap; ++d1)
        for (int d2 = 0; d1 + d2 <= cap; ++d2)
          for (int i1 = 0; i1 < ring.dims[m1][d1]; ++i1)
            for (int i2 = 0; i2 < ring.dims[m2][d2]; ++i2) {
              Expo p(fiber.var_count());
              const Expo& u = slices[m1][d1].basis[i1];
              const Expo& v = slices[m2][d2].basis[i2];
              for (int t = 0; t < fiber.var_count(); ++t) p[t] = u[t] + v[t];
              normalize(fiber, p);
              int target = index[m1 + m2][d1 + d2].at(p);
              ring.mult[{m1, d1, i1, m2, d2, i2}] = {{target, Rat(1)}};
            }
  return ring;
}

// Truncation of the polynomial ring C[z] (degree = power, one basis
// element per component): the simplest hat example.
inline GradedRingTruncation build_polynomial_ring(int max_power) {
  GradedRingTruncation ring;
  ring.max_power = max_power;
  ring.cap = 0;
  ring.dims.assign(max_power + 1, std::vector<int>(1, 1));
  ring.labels.assign(max_power + 1, std::vector<std::vector<std::string>>(1));
  for (int m = 0; m <= max_power; ++m)
    ring.labels[m][0].push_back(m == 0 ? "1" : "z^" + std::to_string(m));
  for (int m1 = 0; m1 <= max_power; ++m1)
    for (int m2 = 0; m1 + m2 <= max_power; ++m2)
      ring.mult[{m1, 0, 0, m2, 0, 0}] = {{0, Rat(1)}};
  return ring;
}

}  // namespace klein
