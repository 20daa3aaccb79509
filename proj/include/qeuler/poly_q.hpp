#pragma once

#include "qeuler/int_poly.hpp"
#include "qeuler/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qeuler {

/// Dense univariate polynomial over BigRat, indexed by power of q (or x for
/// the classical Euler tables). Invariant: the highest stored coefficient is
/// nonzero; the zero polynomial stores no coefficients.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(long c) { set_constant(BigRat(c)); }
  explicit PolyQ(BigRat c) { set_constant(std::move(c)); }
  explicit PolyQ(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  PolyQ(std::initializer_list<BigRat> coeffs) : c_(coeffs) { trim(); }

  static PolyQ monomial(BigRat coeff, int exp) {
    PolyQ p;
    if (coeff != 0) {
      p.c_.assign(static_cast<size_t>(exp) + 1, BigRat(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  static PolyQ from_int(const IntPoly& p) {
    PolyQ r;
    r.c_.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) r.c_.emplace_back(x);
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigRat>& coeffs() const { return c_; }

  const BigRat& coeff(int i) const {
    static const BigRat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
  }
  const BigRat& leading() const { return c_.back(); }

  bool operator==(const PolyQ& o) const { return c_ == o.c_; }

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size()) r.c_[i] = a.c_[i];
      if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
  }

  friend PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    PolyQ r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size()) r.c_[i] = a.c_[i];
      if (i < b.c_.size()) r.c_[i] -= b.c_[i];
    }
    r.trim();
    return r;
  }

  PolyQ operator-() const {
    PolyQ r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    auto [ca, pa] = a.content_primitive();
    auto [cb, pb] = b.content_primitive();
    return from_int(IntPoly::mul(pa, pb)).mul_scalar(ca * cb);
  }

  PolyQ& operator+=(const PolyQ& o) { return *this = *this + o; }
  PolyQ& operator-=(const PolyQ& o) { return *this = *this - o; }
  PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

  PolyQ mul_scalar(const BigRat& s) const {
    if (s == 0) return PolyQ();
    PolyQ r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  BigRat eval(const BigRat& q0) const {
    BigRat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + c_[i];
    return acc;
  }

  /// q -> q^a.
  PolyQ subst_power(int a) const {
    if (a < 1) throw std::invalid_argument("subst_power requires a >= 1");
    if (a == 1 || is_zero()) return *this;
    PolyQ r;
    r.c_.assign(static_cast<size_t>(degree()) * a + 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * a] = c_[i];
    return r;
  }

  PolyQ monic() const {
    if (is_zero()) return *this;
    return mul_scalar(BigRat(1) / leading());
  }

  /// Splits into rational content and primitive integer part with positive
  /// leading coefficient: *this == content * primitive.
  std::pair<BigRat, IntPoly> content_primitive() const {
    if (is_zero()) return {BigRat(0), IntPoly()};
    BigInt den_lcm(1);
    for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> ints(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
      BigInt f;
      mpz_divexact(f.get_mpz_t(), den_lcm.get_mpz_t(), c_[i].get_den_mpz_t());
      ints[i] = BigInt(c_[i].get_num()) * f;
    }
    IntPoly ip{std::move(ints)};
    auto [ic, prim] = ip.content_primitive();
    BigRat content(ic, den_lcm);
    content.canonicalize();
    return {content, std::move(prim)};
  }

  /// Monic gcd over Q[q]; gcd(0, 0) = 0.
  static PolyQ gcd_monic(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) return PolyQ();
    IntPoly g = IntPoly::gcd(a.content_primitive().second, b.content_primitive().second);
    return from_int(g).monic();
  }

  std::string to_string(const std::string& var = "q") const;

 private:
  void set_constant(BigRat c) {
    c_.clear();
    if (c != 0) c_.push_back(std::move(c));
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigRat> c_;
};

inline std::string PolyQ::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string coef = rat_to_string(c_[i]);
    bool neg = coef[0] == '-';
    if (neg) coef = coef.substr(1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace qeuler
