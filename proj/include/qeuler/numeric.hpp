#pragma once

#include "qeuler/q_euler.hpp"
#include "qeuler/real.hpp"

#include <cmath>

namespace qeuler {

namespace detail {

/// Upper bound on the series tail of the E_{n,q}(x) generating sum after N
/// terms: [2]_q * q^N * (1-q)^{-(n+1)}, evaluated with upward rounding.
inline Real euler_series_tail_bound(int n, const BigRat& q0, long N, mpfr_prec_t prec) {
  Real b(prec);
  BigRat two_q = 1 + q0;
  BigRat one_minus_q = 1 - q0;
  mpfr_set_q(b.raw(), q0.get_mpq_t(), MPFR_RNDU);
  mpfr_pow_ui(b.raw(), b.raw(), static_cast<unsigned long>(N), MPFR_RNDU);
  Real t(prec);
  mpfr_set_q(t.raw(), two_q.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(b.raw(), b.raw(), t.raw(), MPFR_RNDU);
  mpfr_set_q(t.raw(), one_minus_q.get_mpq_t(), MPFR_RNDD);
  mpfr_pow_si(t.raw(), t.raw(), -(n + 1), MPFR_RNDU);
  mpfr_mul(b.raw(), b.raw(), t.raw(), MPFR_RNDU);
  return b;
}

/// Smallest N with bound(N) <= tol, where bound(N) = C * r^N for some fixed
/// C > 0 and ratio r in (0,1). bound_at must be monotone decreasing in N.
template <typename BoundFn>
long minimal_tail_terms(const BoundFn& bound_at, const Real& tol, double ratio) {
  // Estimate via doubles, then settle with exact comparisons.
  long n = 0;
  double b0 = bound_at(0).to_double();
  double t = tol.to_double();
  if (b0 > 0 && t > 0 && std::isfinite(b0)) {
    double est = (std::log(t) - std::log(b0)) / std::log(ratio);
    if (est > 0 && std::isfinite(est)) n = static_cast<long>(est);
  }
  if (n < 0) n = 0;
  while (!(bound_at(n) <= tol)) ++n;
  while (n > 0 && bound_at(n - 1) <= tol) --n;
  return n;
}

}  // namespace detail

/// Truncated-series evaluation of E_{n,q}(x0) directly from the generating
/// sum [2]_q sum_{k>=0} (-1)^k q^k [k+x0]_q^n, with the truncation index
/// chosen from the closed-form tail bound so that |S_inf - S_N| <= tol.
/// Independent of the recurrence path; serves as its oracle.
inline Real euler_number_series_oracle(int n, const BigRat& q0, const BigRat& x0, const Real& tol,
                                       mpfr_prec_t prec = kDefaultPrec) {
  if (n < 0) throw std::invalid_argument("series oracle requires n >= 0");
  detail::require_q_in_unit_interval(q0);
  if (x0 < 0) throw std::domain_error("series oracle requires x0 >= 0");
  if (!(Real::of(0L, tol.prec()) < tol)) throw std::invalid_argument("tol must be positive");

  const long N = detail::minimal_tail_terms(
      [&](long k) { return detail::euler_series_tail_bound(n, q0, k, prec); }, tol,
      mpq_get_d(q0.get_mpq_t()));

  Real q(prec);
  mpfr_set_q(q.raw(), q0.get_mpq_t(), MPFR_RNDN);
  Real inv_one_minus_q = Real::of(1L, prec) / (Real::of(1L, prec) - q);

  Real qx(prec);  // q^{x0}
  {
    Real xr = Real::of(x0, prec);
    mpfr_pow(qx.raw(), q.raw(), xr.raw(), MPFR_RNDN);
  }

  Real sum(prec);
  Real qk = Real::of(1L, prec);  // q^k
  for (long k = 0; k < N; ++k) {
    Real bracket = (Real::of(1L, prec) - qx * qk) * inv_one_minus_q;  // [k+x0]_q
    Real term(prec);
    mpfr_pow_ui(term.raw(), bracket.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
    term *= qk;
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    qk *= q;
  }
  return sum * Real::of(1 + q0, prec);
}

/// E_{n,q0}(x0) = sum_l C(n,l) q0^{x0 l} E_{l,q0} [x0]_{q0}^{n-l}, with the
/// exact recurrence table supplying E_{l,q0}.
inline Real euler_poly_eval(int n, const BigRat& q0, const BigRat& x0,
                            mpfr_prec_t prec = kDefaultPrec) {
  if (n < 0) throw std::invalid_argument("euler_poly_eval requires n >= 0");
  detail::require_q_in_unit_interval(q0);
  QEulerTable table = euler_numbers(n);

  Real q(prec);
  mpfr_set_q(q.raw(), q0.get_mpq_t(), MPFR_RNDN);
  Real qx(prec);
  {
    Real xr = Real::of(x0, prec);
    mpfr_pow(qx.raw(), q.raw(), xr.raw(), MPFR_RNDN);
  }
  Real bracket = (Real::of(1L, prec) - qx) / (Real::of(1L, prec) - q);  // [x0]_{q0}

  Real sum(prec);
  Real qxl = Real::of(1L, prec);  // q^{x0 l}
  for (int l = 0; l <= n; ++l) {
    Real term(prec);
    mpfr_pow_ui(term.raw(), bracket.raw(), static_cast<unsigned long>(n - l), MPFR_RNDN);
    term *= qxl;
    term *= Real::of(table.entries[static_cast<size_t>(l)].eval(q0), prec);
    term *= Real::of(BigRat(binomial(n, l)), prec);
    sum += term;
    qxl *= qx;
  }
  return sum;
}

}  // namespace qeuler
