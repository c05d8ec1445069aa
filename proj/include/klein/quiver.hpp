// Extended Dynkin (McKay) quivers, their doubles, the Tits form, the
// minimal positive imaginary root, and the defect vector.
//
// Vertex 0 is always the extending vertex. Canonical orientations:
//   A_n  : the (n+1)-cycle 0 -> 1 -> ... -> n -> 0 (A_1 is the 2-cycle,
//          i.e. the double edge 0 -> 1, 1 -> 0).
//   D_n  : leaves 0,1 attach to internal vertex 4; leaves 2,3 attach to
//          internal vertex n; internal chain 4 - 5 - ... - n. All arrows
//          point away from vertex 0 (BFS orientation). For D_4 the single
//          internal vertex 4 is the degree-4 star center.
//   E_6  : arms 0-1-2, 4-3-2, 6-5-2 meeting at the center 2.
//   E_7  : chain 0-1-2-3-4-5-6 with 7 attached to 3.
//   E_8  : chain 0-1-2-3-4-5-6-7 with 8 attached to 5.
// Trees are oriented away from vertex 0; arrow order is BFS discovery
// order with ascending neighbor indices.

#pragma once

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "klein/linalg.hpp"
#include "klein/rational.hpp"

namespace klein {

struct Arrow {
  int tail = 0;
  int head = 0;
  bool dual = false;
  bool operator==(const Arrow& o) const {
    return tail == o.tail && head == o.head && dual == o.dual;
  }
};

struct QuiverSpec {
  std::string type_label;  // "A3", "D4", "E6", ...
  int vertex_count = 0;
  std::vector<Arrow> arrows;
  bool doubled = false;

  int extending_vertex() const { return 0; }
};

namespace detail {

struct TypeLabel {
  char family;
  int rank;
};

inline TypeLabel parse_type_label(const std::string& label) {
  auto fail = [&]() -> TypeLabel {
    throw std::invalid_argument(
        "invalid quiver type '" + label +
        "'; admissible labels: A<n> (n>=1), D<n> (n>=4), E6, E7, E8");
  };
  if (label.size() < 2) return fail();
  char fam = label[0];
  for (size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return fail();
  int rank = std::atoi(label.c_str() + 1);
  if (fam == 'A' && rank >= 1) return {fam, rank};
  if (fam == 'D' && rank >= 4) return {fam, rank};
  if (fam == 'E' && rank >= 6 && rank <= 8) return {fam, rank};
  return fail();
}

// Undirected edges of the extended Dynkin diagram, in canonical order.
inline std::vector<std::pair<int, int>> diagram_edges(char family, int rank) {
  std::vector<std::pair<int, int>> e;
  if (family == 'A') {
    for (int i = 0; i <= rank; ++i) e.emplace_back(i, (i + 1) % (rank + 1));
  } else if (family == 'D') {
    e.emplace_back(0, 4);
    e.emplace_back(1, 4);
    for (int v = 4; v < rank; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(rank, 2);
    e.emplace_back(rank, 3);
  } else if (family == 'E' && rank == 6) {
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}};
  } else if (family == 'E' && rank == 7) {
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}};
  } else {
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
  }
  return e;
}

}  // namespace detail

inline QuiverSpec build_extended_dynkin(const std::string& type_label) {
  auto t = detail::parse_type_label(type_label);
  QuiverSpec q;
  q.type_label = type_label;
  q.vertex_count = t.rank + 1;
  if (t.family == 'A') {
    for (int i = 0; i <= t.rank; ++i)
      q.arrows.push_back({i, (i + 1) % (t.rank + 1), false});
    return q;
  }
  // Trees: BFS from the extending vertex, arrows parent -> child.
  auto edges = detail::diagram_edges(t.family, t.rank);
  std::vector<std::vector<int>> adj(q.vertex_count);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  std::vector<bool> seen(q.vertex_count, false);
  std::vector<int> frontier = {0};
  seen[0] = true;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        q.arrows.push_back({u, v, false});
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return q;
}

inline QuiverSpec double_quiver(const QuiverSpec& q) {
  for (const auto& a : q.arrows)
    if (a.dual)
      throw std::invalid_argument("double_quiver: input is already doubled");
  QuiverSpec d = q;
  d.doubled = true;
  size_t n = q.arrows.size();
  for (size_t i = 0; i < n; ++i)
    d.arrows.push_back({q.arrows[i].head, q.arrows[i].tail, true});
  return d;
}

// Symmetrized Cartan matrix and the Tits form q(a) = (1/2) a^T C a.
struct CartanData {
  std::vector<IntVec> c;

  Int tits(const IntVec& alpha) const {
    size_t n = c.size();
    if (alpha.size() != n) throw std::invalid_argument("tits: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) s += alpha[i] * c[i][j] * alpha[j];
    if (s % 2 != 0) throw std::logic_error("tits form not integral");
    return s / 2;
  }

  // Column pairing (C alpha)_i, used by simple reflections.
  Int pairing(const IntVec& alpha, int i) const {
    Int s = 0;
    for (size_t j = 0; j < c.size(); ++j) s += c[i][j] * alpha[j];
    return s;
  }
};

inline CartanData cartan(const QuiverSpec& q) {
  if (q.doubled)
    throw std::invalid_argument("cartan: expected an undoubled quiver");
  CartanData cd;
  cd.c.assign(q.vertex_count, IntVec(q.vertex_count, 0));
  for (int i = 0; i < q.vertex_count; ++i) cd.c[i][i] = 2;
  for (const auto& a : q.arrows) {
    cd.c[a.tail][a.head] -= 1;
    cd.c[a.head][a.tail] -= 1;
  }
  return cd;
}

// Tits form evaluated directly from the arrow table:
//   q(a) = sum_i a_i^2 - sum_{arrows} a_tail * a_head.
inline Int tits_via_arrows(const QuiverSpec& q, const IntVec& alpha) {
  if (q.doubled)
    throw std::invalid_argument("tits_via_arrows: expected an undoubled quiver");
  Int s = 0;
  for (Int x : alpha) s += x * x;
  for (const auto& a : q.arrows) s -= alpha[a.tail] * alpha[a.head];
  return s;
}

// Minimal positive imaginary root: the coprime positive generator of
// ker C, normalized so delta_0 = 1.
inline IntVec delta(const QuiverSpec& q) {
  CartanData cd = cartan(q);
  auto kernel = integer_kernel(cd.c);
  if (kernel.size() != 1)
    throw std::logic_error("delta: Cartan kernel is not 1-dimensional");
  IntVec d = kernel[0];
  bool all_nonneg = true, all_nonpos = true;
  for (Int x : d) {
    all_nonneg = all_nonneg && x >= 0;
    all_nonpos = all_nonpos && x <= 0;
  }
  if (!all_nonneg && !all_nonpos)
    throw std::logic_error("delta: kernel generator has mixed signs");
  if (all_nonpos)
    for (auto& x : d) x = -x;
  for (Int x : d)
    if (x == 0) throw std::logic_error("delta: kernel generator has a zero entry");
  if (d[0] != 1)
    throw std::logic_error("delta: extending coordinate is not 1");
  return d;
}

// Defect of the chosen orientation: defect_i = -delta_i + sum over arrows
// with tail i of delta_head.
inline IntVec defect(const QuiverSpec& q) {
  if (q.doubled)
    throw std::invalid_argument("defect: expected an undoubled quiver");
  IntVec d = delta(q);
  IntVec out(q.vertex_count);
  for (int i = 0; i < q.vertex_count; ++i) out[i] = -d[i];
  for (const auto& a : q.arrows) out[a.tail] += d[a.head];
  return out;
}

}  // namespace klein
