// The affine root system of an extended Dynkin quiver: enumeration inside
// a coordinate box, classification (real/imaginary, Dynkin, sign), the
// character lattices Lambda / Lambda_+ / Lambda_++, the finite set of
// roots annihilated by a parameter pairing to 1 with delta, and the shift
// bijection alpha -> alpha - (xi . alpha) delta.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "klein/quiver.hpp"
#include "klein/rational.hpp"

namespace klein {

struct Root {
  IntVec coords;
  bool is_real = false;      // q(coords) == 1
  bool is_dynkin = false;    // extending coordinate is zero
  bool is_positive = false;  // all coordinates >= 0

  bool operator==(const Root& o) const { return coords == o.coords; }
  bool operator<(const Root& o) const { return coords < o.coords; }
};

enum class WeightClass { NotInLambda, LambdaOnly, LambdaPlus, LambdaPlusPlus };

namespace detail {

// Classifies a nonzero vector already known to satisfy q(alpha) <= 1.
inline Root classify_root(const CartanData& cd, const IntVec& delta_vec,
                          IntVec coords) {
  Root r;
  Int qv = cd.tits(coords);
  r.is_real = (qv == 1);
  if (qv == 0) {
    // Imaginary roots must be integer multiples of delta.
    Int k = coords[0];  // delta_0 = 1
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != k * delta_vec[i])
        throw std::logic_error("imaginary root is not a multiple of delta");
    if (k == 0) throw std::logic_error("zero vector classified as root");
  }
  r.is_dynkin = (coords[0] == 0);
  if (r.is_dynkin && !r.is_real)
    throw std::logic_error("Dynkin root must be real");
  bool all_nonneg = true, all_nonpos = true;
  for (Int x : coords) {
    all_nonneg = all_nonneg && x >= 0;
    all_nonpos = all_nonpos && x <= 0;
  }
  if (!all_nonneg && !all_nonpos)
    throw std::logic_error("root with mixed-sign coordinates");
  r.is_positive = all_nonneg;
  r.coords = std::move(coords);
  return r;
}

}  // namespace detail

// All roots with every coordinate in [-bound, bound], fully classified,
// in lexicographic order of coordinate vectors.
inline std::vector<Root> enumerate_roots(const QuiverSpec& q, Int bound) {
  if (bound < 1) throw std::invalid_argument("enumerate_roots: bound >= 1");
  CartanData cd = cartan(q);
  IntVec dl = delta(q);
  int n = q.vertex_count;
  std::vector<Root> out;
  IntVec v(n, -bound);
  while (true) {
    bool zero = std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
    if (!zero && cd.tits(v) <= 1)
      out.push_back(detail::classify_root(cd, dl, v));
    int k = n - 1;
    while (k >= 0 && v[k] == bound) v[k--] = -bound;
    if (k < 0) break;
    ++v[k];
  }
  return out;  // box scan order is lexicographic
}

// Positive Dynkin roots, enumerated in the exact box 0 <= alpha_i <= delta_i
// (finite positive roots are bounded by the highest root, whose coordinates
// are those of delta away from the extending vertex). Lexicographic order.
inline std::vector<Root> positive_dynkin_roots(const QuiverSpec& q) {
  CartanData cd = cartan(q);
  IntVec dl = delta(q);
  int n = q.vertex_count;
  std::vector<Root> out;
  IntVec v(n, 0);
  auto scan = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      bool zero = std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
      if (!zero && cd.tits(v) == 1) out.push_back(detail::classify_root(cd, dl, v));
      return;
    }
    Int hi = (idx == 0) ? 0 : dl[idx];
    for (Int x = 0; x <= hi; ++x) {
      v[idx] = x;
      self(self, idx + 1);
    }
    v[idx] = 0;
  };
  scan(scan, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Independent route: close the simple Dynkin roots (coordinate vectors at
// non-extending vertices) under the simple reflections of the finite
// system. Returns all Dynkin roots, positive and negative.
inline std::set<IntVec> dynkin_roots_by_reflection(const QuiverSpec& q) {
  CartanData cd = cartan(q);
  int n = q.vertex_count;
  std::set<IntVec> roots;
  std::vector<IntVec> frontier;
  for (int i = 1; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& a : frontier) {
      for (int j = 1; j < n; ++j) {
        IntVec b = a;
        Int p = cd.pairing(a, j);
        b[j] -= p;
        if (roots.insert(b).second) next.push_back(b);
      }
    }
    frontier = std::move(next);
  }
  return roots;
}

inline WeightClass classify_weight(const QuiverSpec& q, const IntVec& xi) {
  IntVec dl = delta(q);
  if (dot(xi, dl) != 0) return WeightClass::NotInLambda;
  bool plus = true, plusplus = true;
  for (const auto& r : positive_dynkin_roots(q)) {
    Int p = dot(xi, r.coords);
    if (p < 0) plus = false;
    if (p <= 0) plusplus = false;
  }
  if (plusplus) return WeightClass::LambdaPlusPlus;
  if (plus) return WeightClass::LambdaPlus;
  return WeightClass::LambdaOnly;
}

namespace detail {

inline void require_pairs_to_one(const QuiverSpec& q, const ParamVector& lambda) {
  IntVec dl = delta(q);
  CRat p = lambda.dot(dl);
  if (!(p.re == 1 && p.im == 0))
    throw std::invalid_argument("parameter must satisfy lambda . delta = 1");
}

}  // namespace detail

// The finite set { roots alpha : lambda . alpha = 0 }, for lambda with
// lambda . delta = 1. Every real root is alpha' + k delta for a unique
// Dynkin root alpha'; the pairing forces k = -(lambda . alpha'), which is
// admissible exactly when that value is a (real) integer. Imaginary roots
// pair to k != 0 and never occur. Lexicographic order.
inline std::vector<Root> annihilated_roots(const QuiverSpec& q,
                                           const ParamVector& lambda) {
  detail::require_pairs_to_one(q, lambda);
  CartanData cd = cartan(q);
  IntVec dl = delta(q);
  std::vector<Root> out;
  auto consider = [&](const IntVec& dynkin) {
    CRat p = lambda.dot(dynkin);
    if (p.im != 0) return;
    if (p.re.get_den() != 1) return;
    if (!p.re.get_num().fits_slong_p()) return;
    Int k = -p.re.get_num().get_si();
    IntVec a = dynkin;
    for (size_t i = 0; i < a.size(); ++i) a[i] += k * dl[i];
    out.push_back(detail::classify_root(cd, dl, a));
  };
  for (const auto& r : positive_dynkin_roots(q)) {
    consider(r.coords);
    IntVec neg = r.coords;
    for (auto& x : neg) x = -x;
    consider(neg);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// alpha -> alpha - (xi . alpha) delta, a bijection on any root list for
// xi in Lambda.
inline std::vector<Root> shift_roots(const QuiverSpec& q, const IntVec& xi,
                                     const std::vector<Root>& roots) {
  IntVec dl = delta(q);
  if (dot(xi, dl) != 0)
    throw std::invalid_argument("shift_roots: xi must pair to 0 with delta");
  CartanData cd = cartan(q);
  std::vector<Root> out;
  out.reserve(roots.size());
  for (const auto& r : roots) {
    Int p = dot(xi, r.coords);
    IntVec b = r.coords;
    for (size_t i = 0; i < b.size(); ++i) b[i] -= p * dl[i];
    out.push_back(detail::classify_root(cd, dl, b));
  }
  return out;
}

}  // namespace klein
