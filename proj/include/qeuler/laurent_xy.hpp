#pragma once

#include "qeuler/rat_q.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qeuler {

enum class Var { X, Y };

struct XYExp {
  int x = 0;
  int y = 0;
  auto operator<=>(const XYExp&) const = default;
};

/// Laurent polynomial in X = q^x and Y = q^y with RatQ coefficients, stored
/// sparsely by exponent pair. No stored coefficient is zero; iteration order
/// is the deterministic lexicographic exponent order. One-variable objects
/// simply never use Y; scalars live at (0,0).
class LaurentXY {
 public:
  LaurentXY() = default;

  static LaurentXY from_scalar(RatQ c) {
    LaurentXY p;
    if (!c.is_zero()) p.t_.emplace(XYExp{0, 0}, std::move(c));
    return p;
  }

  static LaurentXY monomial(RatQ c, int ex, int ey) {
    LaurentXY p;
    if (!c.is_zero()) p.t_.emplace(XYExp{ex, ey}, std::move(c));
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<XYExp, RatQ>& terms() const { return t_; }

  RatQ coeff(int ex, int ey) const {
    auto it = t_.find(XYExp{ex, ey});
    return it == t_.end() ? RatQ() : it->second;
  }

  bool operator==(const LaurentXY& o) const { return t_ == o.t_; }

  friend LaurentXY operator+(const LaurentXY& a, const LaurentXY& b) {
    LaurentXY r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }

  friend LaurentXY operator-(const LaurentXY& a, const LaurentXY& b) {
    LaurentXY r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
  }

  LaurentXY operator-() const {
    LaurentXY r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }

  friend LaurentXY operator*(const LaurentXY& a, const LaurentXY& b) {
    LaurentXY r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_)
        r.add_term(XYExp{ea.x + eb.x, ea.y + eb.y}, ca * cb);
    return r;
  }

  LaurentXY& operator+=(const LaurentXY& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  LaurentXY& operator-=(const LaurentXY& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  LaurentXY& operator*=(const LaurentXY& o) { return *this = *this * o; }

  LaurentXY scale(const RatQ& s) const {
    LaurentXY r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, s * c);
    return r;
  }

  /// Multiplies the chosen variable's exponent by k in every term (the
  /// rewrite q^x -> q^{kx}); coefficients are untouched.
  LaurentXY subst_var(Var v, int k) const {
    if (k == 0) throw std::invalid_argument("subst_var requires a nonzero exponent factor");
    LaurentXY r;
    for (const auto& [e, c] : t_) {
      XYExp ne = v == Var::X ? XYExp{e.x * k, e.y} : XYExp{e.x, e.y * k};
      r.t_.emplace(ne, c);
    }
    return r;
  }

  /// Sets the chosen variable to 1 (x = 0 resp. y = 0), merging terms.
  LaurentXY subst_one(Var v) const {
    LaurentXY r;
    for (const auto& [e, c] : t_) {
      XYExp ne = v == Var::X ? XYExp{0, e.y} : XYExp{e.x, 0};
      r.add_term(ne, c);
    }
    return r;
  }

  /// The scalar value when the polynomial is constant; errors otherwise.
  RatQ constant_term() const {
    if (t_.empty()) return RatQ();
    if (t_.size() != 1 || t_.begin()->first != XYExp{0, 0})
      throw std::domain_error("Laurent polynomial is not a scalar");
    return t_.begin()->second;
  }

  /// Lexicographically first term, as an identity-failure witness.
  std::optional<std::pair<XYExp, RatQ>> first_term() const {
    if (t_.empty()) return std::nullopt;
    return *t_.begin();
  }

  /// Linear combination sum_i s_i * p_i with one canonicalization per
  /// exponent; the workhorse for assembling identity sides.
  static LaurentXY scaled_sum(const std::vector<std::pair<RatQ, const LaurentXY*>>& terms) {
    std::map<XYExp, RatQSum> acc;
    for (const auto& [s, p] : terms) {
      if (s.is_zero()) continue;
      for (const auto& [e, c] : p->terms()) acc[e].add_scaled(BigRat(1), s * c);
    }
    LaurentXY r;
    for (auto& [e, sum] : acc) {
      RatQ v = sum.value();
      if (!v.is_zero()) r.t_.emplace(e, std::move(v));
    }
    return r;
  }

  std::string to_string() const;

 private:
  void add_term(const XYExp& e, RatQ c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(e, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  std::map<XYExp, RatQ> t_;
};

inline std::string LaurentXY::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (e.x != 0) out += "*X^" + std::to_string(e.x);
    if (e.y != 0) out += "*Y^" + std::to_string(e.y);
  }
  return out;
}

}  // namespace qeuler
