// Finite subgroups of SL_2 as exact 2x2 matrices over a cyclotomic ring
// Z[zeta_M] (represented mod the M-th cyclotomic polynomial), and the
// Molien dimensions of their polynomial invariants.
//
// The degree-d invariant dimension is the group average of the complete
// homogeneous symmetric character h_d(g), computed by the recurrence
// h_d = tr(g) h_{d-1} - h_{d-2} (det = 1). The average is a rational
// number recovered exactly from the cyclotomic sum via the field trace:
// for rational v in Q(zeta_M), v = Tr(v) / phi(M), and
// Tr(zeta_M^j) = mu(M_j) phi(M) / phi(M_j) with M_j = M / gcd(j, M).

#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "klein/rational.hpp"

namespace klein {

namespace cyclo {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

using Poly = std::vector<mpz_class>;  // dense, ascending degree

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Exact division of integer polynomials (remainder must vanish).
inline Poly poly_div(Poly num, const Poly& den) {
  Poly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, 0);
  for (int i = static_cast<int>(num.size()) - 1;
       i >= static_cast<int>(den.size()) - 1; --i) {
    if (num[i] == 0) continue;
    mpz_class c = num[i] / den.back();
    if (c * den.back() != num[i])
      throw std::logic_error("cyclotomic division is not exact");
    int off = i - static_cast<int>(den.size()) + 1;
    q[off] = c;
    for (size_t j = 0; j < den.size(); ++j) num[off + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("cyclotomic division has a remainder");
  return poly_trim(std::move(q));
}

inline Poly cyclotomic_polynomial(int n) {
  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div(std::move(p), cyclotomic_polynomial(d));
  return p;
}

}  // namespace cyclo

// An element of Z[zeta_M], reduced mod Phi_M.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int level, const cyclo::Poly* modulus) : level_(level), mod_(modulus) {
    coeffs_.assign(mod_->size() - 1, 0);
  }

  static Cyclotomic root_power(int level, const cyclo::Poly* modulus, int k) {
    Cyclotomic c(level, modulus);
    k = ((k % level) + level) % level;
    cyclo::Poly p(k + 1, 0);
    p[k] = 1;
    c.assign_reduced(std::move(p));
    return c;
  }

  static Cyclotomic integer(int level, const cyclo::Poly* modulus, long v) {
    Cyclotomic c(level, modulus);
    if (!c.coeffs_.empty()) c.coeffs_[0] = v;
    return c;
  }

  int level() const { return level_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  bool operator==(const Cyclotomic& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic operator+(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }
  Cyclotomic operator-(const Cyclotomic& o) const {
    Cyclotomic r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }
  Cyclotomic operator*(const Cyclotomic& o) const {
    cyclo::Poly prod(2 * coeffs_.size(), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (size_t j = 0; j < o.coeffs_.size(); ++j)
        prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    Cyclotomic r(level_, mod_);
    r.assign_reduced(std::move(prod));
    return r;
  }

  // Exact rational value of this element, valid when it is known to be
  // rational (e.g. a full character sum): v = Tr(v) / phi(M).
  Rat rational_value() const {
    Rat tr = 0;
    int phi_m = cyclo::euler_phi(level_);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      int mj = level_ / std::gcd(static_cast<int>(j), level_);
      Rat t = make_rat(cyclo::moebius(mj) * phi_m, cyclo::euler_phi(mj));
      tr += Rat(coeffs_[j]) * t;
    }
    return tr / phi_m;
  }

 private:
  void assign_reduced(cyclo::Poly p) {
    // Reduce mod Phi_M by long division (monic modulus).
    int deg_mod = static_cast<int>(mod_->size()) - 1;
    for (int i = static_cast<int>(p.size()) - 1; i >= deg_mod; --i) {
      if (p[i] == 0) continue;
      mpz_class c = p[i];
      for (int j = 0; j <= deg_mod; ++j) p[i - deg_mod + j] -= c * (*mod_)[j];
    }
    coeffs_.assign(deg_mod, 0);
    for (int j = 0; j < deg_mod && j < static_cast<int>(p.size()); ++j)
      coeffs_[j] = p[j];
  }

  int level_ = 1;
  const cyclo::Poly* mod_ = nullptr;
  std::vector<mpz_class> coeffs_;
};

struct Mat2 {
  Cyclotomic a, b, c, d;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  Cyclotomic trace() const { return a + d; }
  Cyclotomic det() const { return a * d - b * c; }
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const Mat2& o) const {
    auto key = [](const Mat2& m) {
      return std::tie(m.a.coeffs(), m.b.coeffs(), m.c.coeffs(), m.d.coeffs());
    };
    return key(*this) < key(o);
  }
};

// A finite subgroup of SL_2(C) with exact matrix entries. The element list
// is generated by closure; determinant 1 and the expected order are
// verified at construction.
struct FiniteSubgroupSL2 {
  std::string label;
  int level = 1;  // entries live in Z[zeta_level]
  std::shared_ptr<cyclo::Poly> modulus;
  std::vector<Mat2> elements;

  int order() const { return static_cast<int>(elements.size()); }
};

namespace detail {

inline void close_group(FiniteSubgroupSL2& g, std::vector<Mat2> generators,
                        int expected_order) {
  Cyclotomic one = Cyclotomic::integer(g.level, g.modulus.get(), 1);
  Cyclotomic zero = Cyclotomic::integer(g.level, g.modulus.get(), 0);
  Mat2 id{one, zero, zero, one};
  std::set<Mat2> seen{id};
  std::vector<Mat2> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const auto& x : frontier) {
      for (const auto& gen : generators) {
        Mat2 y = x * gen;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
    if (static_cast<int>(seen.size()) > expected_order)
      throw std::logic_error("group closure exceeded expected order");
  }
  g.elements.assign(seen.begin(), seen.end());
  if (static_cast<int>(g.elements.size()) != expected_order)
    throw std::logic_error("group closure has wrong order");
  for (const auto& m : g.elements)
    if (!(m.det() == one)) throw std::logic_error("group element with det != 1");
}

}  // namespace detail

// Cyclic group Z/n embedded as diag(zeta_n^k, zeta_n^-k).
inline FiniteSubgroupSL2 cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n >= 1");
  FiniteSubgroupSL2 g;
  g.label = "Z" + std::to_string(n);
  g.level = n;
  g.modulus = std::make_shared<cyclo::Poly>(cyclo::cyclotomic_polynomial(n));
  Cyclotomic zero = Cyclotomic::integer(n, g.modulus.get(), 0);
  Mat2 gen{Cyclotomic::root_power(n, g.modulus.get(), 1), zero, zero,
           Cyclotomic::root_power(n, g.modulus.get(), -1)};
  detail::close_group(g, {gen}, n);
  return g;
}

// Binary dihedral group of order 4n: generated by diag(zeta_2n, zeta_2n^-1)
// and [[0,1],[-1,0]].
inline FiniteSubgroupSL2 binary_dihedral(int order) {
  if (order < 4 || order % 4 != 0)
    throw std::invalid_argument("binary_dihedral: order must be a positive multiple of 4");
  int n = order / 4;
  int level = 2 * n;
  FiniteSubgroupSL2 g;
  g.label = "BD" + std::to_string(order);
  g.level = level;
  g.modulus = std::make_shared<cyclo::Poly>(cyclo::cyclotomic_polynomial(level));
  Cyclotomic zero = Cyclotomic::integer(level, g.modulus.get(), 0);
  Cyclotomic one = Cyclotomic::integer(level, g.modulus.get(), 1);
  Cyclotomic minus_one = Cyclotomic::integer(level, g.modulus.get(), -1);
  Mat2 a{Cyclotomic::root_power(level, g.modulus.get(), 1), zero, zero,
         Cyclotomic::root_power(level, g.modulus.get(), -1)};
  Mat2 b{zero, one, minus_one, zero};
  detail::close_group(g, {a, b}, order);
  return g;
}

inline FiniteSubgroupSL2 parse_group_label(const std::string& label) {
  if (label.size() >= 2 && label[0] == 'Z')
    return cyclic_group(std::atoi(label.c_str() + 1));
  if (label.size() >= 3 && label[0] == 'B' && label[1] == 'D')
    return binary_dihedral(std::atoi(label.c_str() + 2));
  throw std::invalid_argument("unknown group label '" + label +
                              "' (use Z<n> or BD<4n>)");
}

// Dimensions of degree-d invariants of C[x,y], d = 0..d_max.
inline std::vector<Int> molien_dims(const FiniteSubgroupSL2& g, int d_max) {
  if (d_max < 0) throw std::invalid_argument("molien_dims: d_max >= 0");
  std::vector<Int> dims;
  dims.reserve(d_max + 1);
  Cyclotomic one = Cyclotomic::integer(g.level, g.modulus.get(), 1);
  // Per element: h_0 = 1, h_1 = tr, h_d = tr h_{d-1} - h_{d-2}.
  std::vector<Cyclotomic> hm1(g.elements.size(), one);  // h_{d-1}
  std::vector<Cyclotomic> hm2(g.elements.size());       // h_{d-2}
  for (int d = 0; d <= d_max; ++d) {
    if (d == 1) {
      for (size_t i = 0; i < g.elements.size(); ++i) {
        hm2[i] = hm1[i];
        hm1[i] = g.elements[i].trace();
      }
    } else if (d >= 2) {
      for (size_t i = 0; i < g.elements.size(); ++i) {
        Cyclotomic h = g.elements[i].trace() * hm1[i] - hm2[i];
        hm2[i] = hm1[i];
        hm1[i] = h;
      }
    }
    Cyclotomic total = Cyclotomic::integer(g.level, g.modulus.get(), 0);
    for (const auto& h : hm1) total = total + h;
    Rat v = total.rational_value() / g.order();
    if (v.get_den() != 1 || v < 0)
      throw std::logic_error("Molien average is not a nonnegative integer");
    dims.push_back(v.get_num().get_si());
  }
  return dims;
}

inline std::vector<Int> cumulative(const std::vector<Int>& v) {
  std::vector<Int> out(v.size());
  Int s = 0;
  for (size_t i = 0; i < v.size(); ++i) out[i] = (s += v[i]);
  return out;
}

}  // namespace klein
