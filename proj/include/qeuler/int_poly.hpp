#pragma once

#include "qeuler/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace qeuler {

/// Dense polynomial over the integers, the workhorse behind all rational
/// function arithmetic. Invariant: the highest stored coefficient is nonzero;
/// the zero polynomial stores no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(long c) { set_constant(BigInt(c)); }
  explicit IntPoly(BigInt c) { set_constant(std::move(c)); }
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly monomial(BigInt coeff, int exp) {
    IntPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<size_t>(exp) + 1, BigInt(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  const BigInt& coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
  }
  const BigInt& leading() const { return c_.back(); }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size()) r.c_[i] = a.c_[i];
      if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size()) r.c_[i] = a.c_[i];
      if (i < b.c_.size()) r.c_[i] -= b.c_[i];
    }
    r.trim();
    return r;
  }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }

  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = mul(*this, o); }

  /// Adds c * o in place; used by accumulation loops.
  void add_scaled(const BigInt& s, const IntPoly& o) {
    if (s == 0 || o.is_zero()) return;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
      mpz_addmul(c_[i].get_mpz_t(), s.get_mpz_t(), o.c_[i].get_mpz_t());
    trim();
  }

  IntPoly mul_scalar(const BigInt& s) const {
    if (s == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  /// Exact scalar division; every coefficient must be divisible.
  IntPoly div_scalar_exact(const BigInt& s) const {
    IntPoly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    return r;
  }

  /// Multiply by q^k.
  IntPoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.c_.assign(static_cast<size_t>(k), BigInt(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  /// q -> q^a (exponent spread).
  IntPoly subst_power(int a) const {
    if (a == 1 || is_zero()) return *this;
    IntPoly r;
    r.c_.assign(static_cast<size_t>(degree()) * a + 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * a] = c_[i];
    return r;
  }

  BigRat eval(const BigRat& q0) const {
    BigRat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + BigRat(c_[i]);
    return acc;
  }

  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  BigInt content() const {
    BigInt g(0);
    for (const auto& x : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// content * primitive part, primitive part with positive leading coefficient.
  std::pair<BigInt, IntPoly> content_primitive() const {
    if (is_zero()) return {BigInt(0), IntPoly()};
    BigInt g = content();
    if (leading() < 0) g = -g;
    if (g == 1) return {g, *this};
    return {g, div_scalar_exact(g)};
  }

  /// Index of the lowest nonzero coefficient (-1 for zero).
  int low_order() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }

  size_t max_coeff_bits() const {
    size_t m = 0;
    for (const auto& x : c_) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    return m;
  }

  /// Quotient of an exact division, or false when the division leaves a
  /// remainder (including non-integer quotient coefficients).
  bool try_divide(const IntPoly& d, IntPoly& quot) const;

  static IntPoly mul(const IntPoly& a, const IntPoly& b);
  static IntPoly pow(const IntPoly& base, unsigned e);

  /// gcd over Z[q] (content gcd times primitive gcd), positive leading
  /// coefficient. Modular CRT algorithm with a subresultant fallback.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  std::string to_string(const std::string& var = "q") const;

 private:
  void set_constant(BigInt c) {
    c_.clear();
    if (c != 0) c_.push_back(std::move(c));
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static IntPoly mul_mpz(const IntPoly& a, const IntPoly& b);
  static IntPoly subresultant_gcd(IntPoly a, IntPoly b);

  std::vector<BigInt> c_;
};

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t p) {
  uint64_t acc = 1 % p;
  while (e) {
    if (e & 1) acc = mulmod_u64(acc, base, p);
    base = mulmod_u64(base, base, p);
    e >>= 1;
  }
  return acc;
}

inline uint64_t invmod_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

/// Deterministic list of 62-bit primes used by the modular gcd.
inline const std::vector<uint64_t>& gcd_primes() {
  static const std::vector<uint64_t> primes = [] {
    std::vector<uint64_t> v;
    BigInt p = (BigInt(1) << 62) + 1;
    for (int i = 0; i < 64; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      v.push_back(p.get_ui());
    }
    return v;
  }();
  return primes;
}

inline std::vector<uint64_t> reduce_mod(const std::vector<BigInt>& c, uint64_t p) {
  std::vector<uint64_t> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = mpz_fdiv_ui(c[i].get_mpz_t(), p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

/// In-place a mod b over Z/p; b monic is not required.
inline void rem_mod(std::vector<uint64_t>& a, const std::vector<uint64_t>& b, uint64_t p) {
  const size_t db = b.size() - 1;
  const uint64_t inv_lb = invmod_u64(b.back(), p);
  while (a.size() >= b.size()) {
    uint64_t f = mulmod_u64(a.back(), inv_lb, p);
    if (f != 0) {
      const size_t off = a.size() - b.size();
      for (size_t i = 0; i < db; ++i) {
        uint64_t s = mulmod_u64(f, b[i], p);
        uint64_t& t = a[off + i];
        t = (t >= s) ? t - s : t + p - s;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) return;
  }
}

/// Monic gcd over Z/p.
inline std::vector<uint64_t> gcd_mod(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
  if (a.size() < b.size()) a.swap(b);
  while (!b.empty()) {
    rem_mod(a, b, p);
    a.swap(b);
  }
  const uint64_t inv = invmod_u64(a.back(), p);
  for (auto& x : a) x = mulmod_u64(x, inv, p);
  return a;
}

}  // namespace detail

inline IntPoly IntPoly::mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  if (a.degree() == 0) return b.mul_scalar(a.c_[0]);
  if (b.degree() == 0) return a.mul_scalar(b.c_[0]);

  // Fast path: schoolbook in native 128-bit arithmetic when every
  // intermediate provably fits.
  const size_t bits_a = a.max_coeff_bits();
  const size_t bits_b = b.max_coeff_bits();
  const size_t min_len = std::min(a.c_.size(), b.c_.size());
  size_t log_len = 0;
  while ((size_t{1} << log_len) < min_len) ++log_len;
  if (bits_a <= 62 && bits_b <= 62 && bits_a + bits_b + log_len <= 126) {
    std::vector<int64_t> va(a.c_.size()), vb(b.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) va[i] = mpz_get_si(a.c_[i].get_mpz_t());
    for (size_t i = 0; i < b.c_.size(); ++i) vb[i] = mpz_get_si(b.c_[i].get_mpz_t());
    std::vector<__int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < va.size(); ++i) {
      const __int128 ai = va[i];
      if (ai == 0) continue;
      for (size_t j = 0; j < vb.size(); ++j) acc[i + j] += ai * vb[j];
    }
    IntPoly r;
    r.c_.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
      __int128 v = acc[i];
      bool neg = v < 0;
      unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
      BigInt hi(static_cast<unsigned long>(u >> 64));
      BigInt lo(static_cast<unsigned long>(u & ~uint64_t{0}));
      r.c_[i] = (hi << 64) + lo;
      if (neg) r.c_[i] = -r.c_[i];
    }
    r.trim();
    return r;
  }
  return mul_mpz(a, b);
}

inline IntPoly IntPoly::mul_mpz(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

inline IntPoly IntPoly::pow(const IntPoly& base, unsigned e) {
  IntPoly acc(1);
  IntPoly b = base;
  while (e) {
    if (e & 1) acc = mul(acc, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return acc;
}

inline bool IntPoly::try_divide(const IntPoly& d, IntPoly& quot) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) {
    quot = IntPoly();
    return true;
  }
  if (degree() < d.degree()) return false;
  if (d.degree() == 0) {
    IntPoly q = *this;
    for (auto& x : q.c_) {
      if (!mpz_divisible_p(x.get_mpz_t(), d.c_[0].get_mpz_t())) return false;
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.c_[0].get_mpz_t());
    }
    quot = std::move(q);
    return true;
  }
  std::vector<BigInt> rem = c_;
  const int dd = d.degree();
  std::vector<BigInt> q(static_cast<size_t>(degree() - dd) + 1);
  for (int k = degree(); k >= dd; --k) {
    BigInt& top = rem[static_cast<size_t>(k)];
    if (top == 0) {
      q[static_cast<size_t>(k - dd)] = 0;
      continue;
    }
    if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t())) return false;
    BigInt f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
    for (int i = 0; i < dd; ++i)
      mpz_submul(rem[static_cast<size_t>(k - dd + i)].get_mpz_t(), f.get_mpz_t(),
                 d.c_[static_cast<size_t>(i)].get_mpz_t());
    top = 0;
    q[static_cast<size_t>(k - dd)] = std::move(f);
  }
  for (int i = 0; i < dd; ++i)
    if (rem[static_cast<size_t>(i)] != 0) return false;
  IntPoly qq;
  qq.c_ = std::move(q);
  qq.trim();
  quot = std::move(qq);
  return true;
}

inline IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? IntPoly() : b.content_primitive().second.mul_scalar(abs(b.content()));
  if (b.is_zero()) return a.content_primitive().second.mul_scalar(abs(a.content()));

  auto [ca, pa] = a.content_primitive();
  auto [cb, pb] = b.content_primitive();
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

  if (pa.degree() == 0 || pb.degree() == 0) return IntPoly(cg);

  // gcd with a monomial: only the q^min(low orders) part can be shared.
  if (pa.c_.size() == static_cast<size_t>(pa.low_order()) + 1 ||
      pb.c_.size() == static_cast<size_t>(pb.low_order()) + 1) {
    int k = std::min(pa.low_order(), pb.low_order());
    return IntPoly::monomial(cg, k);
  }

  BigInt lc_g;
  mpz_gcd(lc_g.get_mpz_t(), pa.leading().get_mpz_t(), pb.leading().get_mpz_t());

  BigInt modulus(0);
  std::vector<BigInt> image;
  int best_deg = std::min(pa.degree(), pb.degree()) + 1;
  int primes_used = 0;

  for (uint64_t p : detail::gcd_primes()) {
    if (mpz_fdiv_ui(pa.leading().get_mpz_t(), p) == 0) continue;
    if (mpz_fdiv_ui(pb.leading().get_mpz_t(), p) == 0) continue;
    auto ra = detail::reduce_mod(pa.c_, p);
    auto rb = detail::reduce_mod(pb.c_, p);
    auto g = detail::gcd_mod(std::move(ra), std::move(rb), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return IntPoly(cg);
    if (dg > best_deg) continue;  // unlucky prime
    const uint64_t lg = mpz_fdiv_ui(lc_g.get_mpz_t(), p);
    for (auto& x : g) x = detail::mulmod_u64(x, lg, p);

    if (dg < best_deg) {
      best_deg = dg;
      modulus = 0;
      image.assign(g.size(), BigInt(0));
    }
    if (modulus == 0) {
      for (size_t i = 0; i < g.size(); ++i) {
        BigInt v(static_cast<unsigned long>(g[i]));
        if (v * 2 > BigInt(static_cast<unsigned long>(p))) v -= BigInt(static_cast<unsigned long>(p));
        image[i] = v;
      }
      modulus = BigInt(static_cast<unsigned long>(p));
    } else {
      const BigInt P(static_cast<unsigned long>(p));
      const uint64_t m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
      const uint64_t inv_m = detail::invmod_u64(m_mod_p, p);
      BigInt new_mod = modulus * P;
      for (size_t i = 0; i < image.size(); ++i) {
        const uint64_t cur = mpz_fdiv_ui(image[i].get_mpz_t(), p);
        uint64_t delta = g[i] >= cur ? g[i] - cur : g[i] + p - cur;
        uint64_t t = detail::mulmod_u64(delta, inv_m, p);
        if (t != 0) {
          BigInt next = image[i] + modulus * BigInt(static_cast<unsigned long>(t));
          // symmetric representative
          if (next * 2 > new_mod) next -= new_mod;
          image[i] = next;
        }
      }
      modulus = new_mod;
    }
    ++primes_used;

    IntPoly cand;
    cand.c_ = image;
    cand.trim();
    if (!cand.is_zero()) {
      cand = cand.content_primitive().second;
      IntPoly q;
      if (pa.try_divide(cand, q) && pb.try_divide(cand, q)) return cand.mul_scalar(cg);
    }
    if (primes_used >= 24) break;
  }

  // Safety net; correct for any input.
  IntPoly g = subresultant_gcd(pa, pb);
  return g.content_primitive().second.mul_scalar(cg);
}

inline IntPoly IntPoly::subresultant_gcd(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  BigInt g(1), h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    // pseudo-remainder prem(a, b)
    IntPoly r = a;
    const BigInt lb = b.leading();
    int steps = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      IntPoly t = b.shifted(r.degree() - b.degree()).mul_scalar(r.leading());
      r = r.mul_scalar(lb) - t;
      ++steps;
    }
    if (steps < delta + 1) {
      BigInt f;
      mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
      r = r.mul_scalar(f);
    }
    if (r.is_zero()) return b.content_primitive().second;
    if (r.degree() == 0) return IntPoly(1);
    BigInt divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    a = std::move(b);
    b = r.div_scalar_exact(divisor);
    g = a.leading();
    if (delta >= 1) {
      BigInt gp;
      mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      if (delta == 1) {
        h = gp;
      } else {
        BigInt hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
        h = gp / hp;
      }
    }
  }
}

inline std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string coef = c_[i].get_str();
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
