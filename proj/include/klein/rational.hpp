// Exact rational scalars and small vector types shared by all modules.
//
// Rationals are GMP mpq_class throughout; nothing in this library ever
// rounds. Complex parameters are kept as (re, im) pairs of rationals so
// that conditions like "Re(x) > 0" and "x != 0" are decided exactly.

#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein {

using Rat = mpq_class;
using Int = long long;
using IntVec = std::vector<Int>;

inline Rat make_rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

// Parses "p", "-p", or "p/q". Whitespace is not accepted.
inline Rat parse_rat(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty rational token");
  for (char c : token) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("malformed rational token: '" + token + "'");
  }
  Rat r;
  if (r.set_str(token, 10) != 0)
    throw std::invalid_argument("malformed rational token: '" + token + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in token: '" + token + "'");
  r.canonicalize();
  return r;
}

// Canonical "p/q" (or "p" when the denominator is 1).
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  for (const auto& tok : split_csv(csv)) out.push_back(parse_rat(tok));
  return out;
}

inline IntVec parse_int_list(const std::string& csv) {
  IntVec out;
  for (const auto& tok : split_csv(csv)) {
    Rat r = parse_rat(tok);
    if (r.get_den() != 1)
      throw std::invalid_argument("expected integer, got '" + tok + "'");
    if (!r.get_num().fits_slong_p())
      throw std::invalid_argument("integer out of range: '" + tok + "'");
    out.push_back(r.get_num().get_si());
  }
  return out;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Complex rational scalar.
struct CRat {
  Rat re, im;

  CRat() : re(0), im(0) {}
  CRat(Rat r) : re(std::move(r)), im(0) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
  CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
  CRat operator*(const CRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CRat operator/(const CRat& o) const {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::invalid_argument("division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  CRat operator-() const { return {-re, -im}; }
  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CRat& o) const { return !(*this == o); }
};

inline bool operator==(const CRat& a, int b) { return a.re == b && a.im == 0; }
inline bool operator!=(const CRat& a, int b) { return !(a == b); }

// A parameter vector indexed by quiver vertices: exact rational real and
// imaginary parts. Houses the deformation parameter and its shifts.
struct ParamVector {
  std::vector<Rat> re, im;

  ParamVector() = default;
  explicit ParamVector(std::vector<Rat> real_part)
      : re(std::move(real_part)), im(re.size(), Rat(0)) {}
  ParamVector(std::vector<Rat> real_part, std::vector<Rat> imag_part)
      : re(std::move(real_part)), im(std::move(imag_part)) {
    if (re.size() != im.size())
      throw std::invalid_argument("ParamVector: re/im length mismatch");
  }

  size_t size() const { return re.size(); }

  bool is_real() const {
    for (const auto& x : im)
      if (x != 0) return false;
    return true;
  }

  CRat at(size_t i) const { return {re[i], im[i]}; }

  CRat dot(const IntVec& v) const {
    if (v.size() != re.size())
      throw std::invalid_argument("ParamVector::dot: length mismatch");
    CRat s;
    for (size_t i = 0; i < v.size(); ++i) {
      s.re += re[i] * static_cast<long>(v[i]);
      s.im += im[i] * static_cast<long>(v[i]);
    }
    return s;
  }

  ParamVector shifted(const IntVec& xi) const {
    if (xi.size() != re.size())
      throw std::invalid_argument("ParamVector::shifted: length mismatch");
    ParamVector out = *this;
    for (size_t i = 0; i < xi.size(); ++i)
      out.re[i] += static_cast<long>(xi[i]);
    return out;
  }

  bool operator==(const ParamVector& o) const { return re == o.re && im == o.im; }
};

inline ParamVector parse_param(const std::string& re_csv,
                               const std::string& im_csv = "") {
  std::vector<Rat> re = parse_rat_list(re_csv);
  if (im_csv.empty()) return ParamVector(std::move(re));
  return ParamVector(std::move(re), parse_rat_list(im_csv));
}

}  // namespace klein
