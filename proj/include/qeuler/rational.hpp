#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qeuler {

/// Arbitrary-precision rational scalar. Canonical form is maintained by GMP:
/// gcd(|numerator|, denominator) = 1, denominator > 0, zero is 0/1.
using BigRat = mpq_class;
using BigInt = mpz_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

/// "p/q" when the denominator is not 1, plain "p" otherwise.
inline std::string rat_to_string(const BigRat& r) { return r.get_str(); }

/// Accepts "p/q", plain integers, and finite decimal strings ("0.7" == 7/10).
inline BigRat parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw std::invalid_argument("malformed rational literal: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("malformed rational literal: " + s);
    BigInt num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw std::invalid_argument("malformed rational literal: " + s);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    BigRat r(num, den);
    r.canonicalize();
    return r;
  }
  BigRat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

namespace detail {
inline void require_q_in_unit_interval(const BigRat& q0) {
  if (q0 <= 0 || q0 >= 1)
    throw std::domain_error("q must lie in (0,1), got " + rat_to_string(q0));
}
}  // namespace detail

inline BigRat rat_pow(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  BigRat b = base;
  if (e < 0) {
    if (b == 0) throw std::domain_error("0 raised to a negative power");
    b = BigRat(base.get_den(), base.get_num());
    b.canonicalize();
    e = -e;
  }
  BigRat acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace qeuler
