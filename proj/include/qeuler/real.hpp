#pragma once

#include <mpfr.h>

#include "qeuler/rational.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace qeuler {

inline constexpr mpfr_prec_t kDefaultPrec = 256;

/// RAII wrapper over an mpfr_t. Results carry max(operand precisions);
/// rounding is to nearest unless stated otherwise.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  static Real of(long v, mpfr_prec_t prec = kDefaultPrec) {
    Real r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
  }

  static Real of(const BigRat& v, mpfr_prec_t prec = kDefaultPrec) {
    Real r(prec);
    mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  static Real parse(const std::string& s, mpfr_prec_t prec = kDefaultPrec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("malformed real literal: " + s);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  Real abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

  /// this^e for a real exponent; requires a nonnegative base.
  Real pow(const Real& e) const {
    Real r(std::max(prec(), e.prec()));
    mpfr_pow(r.v_, v_, e.v_, MPFR_RNDN);
    return r;
  }

  Real pow_si(long e) const {
    Real r(prec());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  /// Fixed scientific notation; digit count tied to the working precision
  /// unless overridden.
  std::string to_string(int digits = 0) const {
    if (digits <= 0)
      digits = static_cast<int>(static_cast<double>(prec()) * 0.30103) + 1;
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Re", digits, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }

 private:
  mpfr_t v_;
};

}  // namespace qeuler
