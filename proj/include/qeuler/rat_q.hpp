#pragma once

#include "qeuler/int_poly.hpp"
#include "qeuler/poly_q.hpp"
#include "qeuler/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qeuler {

/// Reduced rational function in q over the rationals. Stored as
/// scale * num / den with num, den primitive integer polynomials with
/// positive leading coefficients and gcd(num, den) = 1; zero is scale 0 with
/// num = den = 1. This is in bijection with the (numerator, monic
/// denominator) canonical form exposed by num()/den(), so equality of values
/// is structural equality.
class RatQ {
 public:
  RatQ() : scale_(0), num_(IntPoly(1)), den_(IntPoly(1)) {}
  RatQ(long v) : RatQ(BigRat(v)) {}  // NOLINT: implicit by design
  RatQ(BigRat v) : scale_(std::move(v)), num_(IntPoly(1)), den_(IntPoly(1)) {}
  explicit RatQ(const PolyQ& p) {
    auto [c, prim] = p.content_primitive();
    scale_ = std::move(c);
    num_ = scale_ == 0 ? IntPoly(1) : std::move(prim);
    den_ = IntPoly(1);
  }

  /// Canonical constructor: reduces num/den, errors on a zero denominator.
  RatQ(const PolyQ& num, const PolyQ& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    auto [cn, pn] = num.content_primitive();
    auto [cd, pd] = den.content_primitive();
    if (cn == 0) {
      scale_ = 0;
      num_ = IntPoly(1);
      den_ = IntPoly(1);
      return;
    }
    IntPoly g = IntPoly::gcd(pn, pd);
    if (!g.is_one()) {
      IntPoly q;
      pn.try_divide(g, q);
      pn = q;
      pd.try_divide(g, q);
      pd = q;
    }
    scale_ = cn / cd;
    num_ = std::move(pn);
    den_ = std::move(pd);
  }

  static RatQ q_power(int k) {
    if (k >= 0) return from_parts(BigRat(1), IntPoly::monomial(BigInt(1), k), IntPoly(1));
    return from_parts(BigRat(1), IntPoly(1), IntPoly::monomial(BigInt(1), -k));
  }

  bool is_zero() const { return scale_ == 0; }
  bool is_one() const { return scale_ == 1 && num_.is_one() && den_.is_one(); }

  /// Numerator in the (num, monic den) canonical pair.
  PolyQ num() const { return PolyQ::from_int(num_).mul_scalar(scale_ / BigRat(den_.leading())); }
  /// Monic denominator.
  PolyQ den() const { return PolyQ::from_int(den_).mul_scalar(BigRat(1) / BigRat(den_.leading())); }

  const BigRat& scale_part() const { return scale_; }
  const IntPoly& num_part() const { return num_; }
  const IntPoly& den_part() const { return den_; }

  bool operator==(const RatQ& o) const {
    return scale_ == o.scale_ && num_ == o.num_ && den_ == o.den_;
  }

  friend RatQ operator*(const RatQ& a, const RatQ& b) {
    if (a.is_zero() || b.is_zero()) return RatQ();
    IntPoly n1 = a.num_, d2 = b.den_;
    cross_cancel(n1, d2);
    IntPoly n2 = b.num_, d1 = a.den_;
    cross_cancel(n2, d1);
    return from_parts(a.scale_ * b.scale_, IntPoly::mul(n1, n2), IntPoly::mul(d1, d2));
  }

  friend RatQ operator+(const RatQ& a, const RatQ& b) { return add_impl(a, b, false); }
  friend RatQ operator-(const RatQ& a, const RatQ& b) { return add_impl(a, b, true); }

  RatQ operator-() const {
    RatQ r = *this;
    r.scale_ = -r.scale_;
    return r;
  }

  RatQ inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return from_parts(BigRat(1) / scale_, den_, num_);
  }

  friend RatQ operator/(const RatQ& a, const RatQ& b) { return a * b.inverse(); }

  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

  RatQ pow(unsigned e) const {
    // Powers of a canonical form stay canonical.
    if (e == 0) return RatQ(BigRat(1));
    return from_parts(rat_pow(scale_, static_cast<long>(e)), IntPoly::pow(num_, e),
                      IntPoly::pow(den_, e));
  }

  /// Exact value at q = q0; errors on a pole naming the point.
  BigRat eval(const BigRat& q0) const {
    BigRat d = den_.eval(q0);
    if (d == 0)
      throw std::domain_error("pole of rational function at q = " + rat_to_string(q0));
    return scale_ * num_.eval(q0) / d;
  }

  /// q -> q^a. Canonical form is preserved by the substitution.
  RatQ subst_power(int a) const {
    if (a < 1) throw std::invalid_argument("subst_power requires a >= 1");
    if (a == 1) return *this;
    RatQ r;
    r.scale_ = scale_;
    r.num_ = num_.subst_power(a);
    r.den_ = den_.subst_power(a);
    return r;
  }

  std::string to_string(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string n = num().to_string(var);
    if (den_.is_one()) return n;
    return "(" + n + ")/(" + den().to_string(var) + ")";
  }

  /// Internal: assembles from parts, normalizing signs/contents but not
  /// re-running gcd. Callers must guarantee gcd(num, den) = 1.
  static RatQ from_parts(BigRat scale, IntPoly num, IntPoly den) {
    RatQ r;
    if (scale == 0 || num.is_zero()) return r;
    auto [cn, pn] = num.content_primitive();
    auto [cd, pd] = den.content_primitive();
    r.scale_ = scale * BigRat(cn) / BigRat(cd);
    r.num_ = std::move(pn);
    r.den_ = std::move(pd);
    return r;
  }

 private:
  static void cross_cancel(IntPoly& n, IntPoly& d) {
    if (d.is_one() || n.is_one()) return;
    IntPoly g = IntPoly::gcd(n, d);
    if (!g.is_one()) {
      IntPoly q;
      n.try_divide(g, q);
      n = q;
      d.try_divide(g, q);
      d = q;
    }
  }

  static RatQ add_impl(const RatQ& a, const RatQ& b, bool subtract) {
    if (a.is_zero()) {
      RatQ r = b;
      if (subtract) r.scale_ = -r.scale_;
      return r;
    }
    if (b.is_zero()) return a;
    const BigRat sb = subtract ? BigRat(-b.scale_) : b.scale_;

    // Split the rational contents so the combined numerator stays integral:
    // a + b = gamma * (ia*N1*D2' + ib*N2*D1') / (g0*D1'*D2').
    BigRat gamma;
    BigInt ia, ib;
    split_contents(a.scale_, sb, gamma, ia, ib);

    if (a.den_ == b.den_) {
      IntPoly u = a.num_.mul_scalar(ia);
      u.add_scaled(ib, b.num_);
      if (u.is_zero()) return RatQ();
      IntPoly g = IntPoly::gcd(u, a.den_);
      if (g.is_one()) return from_parts(gamma, std::move(u), a.den_);
      IntPoly q, d;
      u.try_divide(g, q);
      a.den_.try_divide(g, d);
      return from_parts(gamma, std::move(q), std::move(d));
    }

    IntPoly g0 = IntPoly::gcd(a.den_, b.den_);
    IntPoly d1p = a.den_, d2p = b.den_;
    if (!g0.is_one()) {
      IntPoly q;
      a.den_.try_divide(g0, q);
      d1p = q;
      b.den_.try_divide(g0, q);
      d2p = q;
    }
    IntPoly u = IntPoly::mul(a.num_, d2p).mul_scalar(ia);
    u.add_scaled(BigInt(1), IntPoly::mul(b.num_, d1p).mul_scalar(ib));
    if (u.is_zero()) return RatQ();
    IntPoly den = IntPoly::mul(g0, IntPoly::mul(d1p, d2p));
    if (!g0.is_one()) {
      // Any common factor of u and den divides g0.
      IntPoly h = IntPoly::gcd(u, g0);
      if (!h.is_one()) {
        IntPoly q;
        u.try_divide(h, q);
        u = q;
        den.try_divide(h, q);
        den = q;
      }
    }
    return from_parts(gamma, std::move(u), std::move(den));
  }

  /// gamma, ia, ib with sa = gamma*ia, sb = gamma*ib, ia/ib coprime integers.
  static void split_contents(const BigRat& sa, const BigRat& sb, BigRat& gamma, BigInt& ia,
                             BigInt& ib) {
    BigInt gn;
    mpz_gcd(gn.get_mpz_t(), sa.get_num_mpz_t(), sb.get_num_mpz_t());
    BigInt dl;
    mpz_lcm(dl.get_mpz_t(), sa.get_den_mpz_t(), sb.get_den_mpz_t());
    gamma = BigRat(gn, dl);
    gamma.canonicalize();
    BigRat ra = sa / gamma;
    BigRat rb = sb / gamma;
    ia = ra.get_num();
    ib = rb.get_num();
  }

  BigRat scale_;
  IntPoly num_, den_;
};

inline RatQ operator*(const BigRat& s, const RatQ& r) { return RatQ(s) * r; }

/// Accumulates a linear combination of RatQ values over a running common
/// denominator and canonicalizes once. Equivalent to folding operator+ but
/// performs a single gcd-reduction at the end.
class RatQSum {
 public:
  RatQSum() : den_(IntPoly(1)) {}

  void add(const RatQ& t) { add_scaled(BigRat(1), t); }

  void add_scaled(const BigRat& s, const RatQ& t) {
    if (s == 0 || t.is_zero()) return;
    const BigRat c = s * t.scale_part();

    // Grow the polynomial denominator so t's denominator divides it.
    const IntPoly& d = t.den_part();
    IntPoly cof;
    if (d.is_one()) {
      cof = den_;
    } else if (!den_.try_divide(d, cof)) {
      IntPoly g = IntPoly::gcd(den_, d);
      IntPoly grow;
      d.try_divide(g, grow);
      num_ = IntPoly::mul(num_, grow);
      den_ = IntPoly::mul(den_, grow);
      den_.try_divide(d, cof);
    }

    // Grow the scalar denominator so c's denominator divides it.
    BigInt r(c.get_den());
    BigInt g2;
    mpz_gcd(g2.get_mpz_t(), scalar_den_.get_mpz_t(), r.get_mpz_t());
    BigInt grow2;
    mpz_divexact(grow2.get_mpz_t(), r.get_mpz_t(), g2.get_mpz_t());
    if (grow2 != 1) {
      num_ = num_.mul_scalar(grow2);
      scalar_den_ *= grow2;
    }
    BigInt f;
    mpz_divexact(f.get_mpz_t(), scalar_den_.get_mpz_t(), r.get_mpz_t());
    f *= c.get_num();

    num_.add_scaled(f, cof.is_one() ? t.num_part() : IntPoly::mul(t.num_part(), cof));
  }

  RatQ value() const {
    if (num_.is_zero()) return RatQ();
    IntPoly g = IntPoly::gcd(num_, den_);
    IntPoly n = num_, d = den_;
    if (!g.is_one()) {
      IntPoly q;
      num_.try_divide(g, q);
      n = q;
      den_.try_divide(g, q);
      d = q;
    }
    return RatQ::from_parts(BigRat(1, scalar_den_), std::move(n), std::move(d));
  }

 private:
  IntPoly num_;
  IntPoly den_;
  BigInt scalar_den_{1};
};

}  // namespace qeuler
