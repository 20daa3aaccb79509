#pragma once

#include "qeuler/numeric.hpp"
#include "qeuler/report.hpp"

namespace qeuler {

/// Certified evaluation of the q-Euler zeta series
/// [2]_{q^a} sum_{n>=0} (-1)^n q^{an} [n+x]_{q^a}^{-s}.
struct ZetaValue {
  Real value;
  Real tail_bound;   // <= the requested tolerance
  long terms_used;   // minimal N satisfying the closed-form tail bound
  Real s;
  BigRat x;
  BigRat q0;
  int base_power;
};

namespace detail {

/// Upper bound on |sum_{n>=N} term_n|: [2]_{qa} * qa^N * B / (1 - qa) with
/// B = [x]_{qa}^{-s} for s >= 0 (term magnitudes decrease from n = 0) and
/// B = (1 - qa)^s for s < 0 ([n+x]_{qa} < 1/(1-qa)). Upward rounded.
inline Real zeta_tail_bound_impl(const Real& s, const BigRat& x, const BigRat& qa, long N,
                                 mpfr_prec_t prec) {
  BigRat two_qa = 1 + qa;
  BigRat one_minus_qa = 1 - qa;

  Real b(prec);
  mpfr_set_q(b.raw(), qa.get_mpq_t(), MPFR_RNDU);
  mpfr_pow_ui(b.raw(), b.raw(), static_cast<unsigned long>(N), MPFR_RNDU);

  Real t(prec);
  mpfr_set_q(t.raw(), two_qa.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(b.raw(), b.raw(), t.raw(), MPFR_RNDU);

  mpfr_set_q(t.raw(), one_minus_qa.get_mpq_t(), MPFR_RNDD);
  mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDU);
  mpfr_mul(b.raw(), b.raw(), t.raw(), MPFR_RNDU);

  Real factor(prec);
  if (!s.is_negative()) {
    // [x]_{qa} rounded down, then the decreasing power rounded up.
    Real qax(prec);
    Real xr = Real::of(x, prec);
    Real qar(prec);
    mpfr_set_q(qar.raw(), qa.get_mpq_t(), MPFR_RNDU);
    mpfr_pow(qax.raw(), qar.raw(), xr.raw(), MPFR_RNDU);  // q^{ax} up => bracket down
    Real bracket(prec);
    mpfr_ui_sub(bracket.raw(), 1, qax.raw(), MPFR_RNDD);
    mpfr_set_q(t.raw(), one_minus_qa.get_mpq_t(), MPFR_RNDU);
    mpfr_div(bracket.raw(), bracket.raw(), t.raw(), MPFR_RNDD);
    Real neg_s = -s;
    mpfr_pow(factor.raw(), bracket.raw(), neg_s.raw(), MPFR_RNDU);
  } else {
    mpfr_set_q(factor.raw(), one_minus_qa.get_mpq_t(), MPFR_RNDD);
    mpfr_pow(factor.raw(), factor.raw(), s.raw(), MPFR_RNDU);
  }
  mpfr_mul(b.raw(), b.raw(), factor.raw(), MPFR_RNDU);
  return b;
}

}  // namespace detail

/// Tail bound after N terms for the zeta series parameters; exposed so the
/// minimality of terms_used is testable.
inline Real zeta_tail_bound(const Real& s, const BigRat& x, const BigRat& q0, int base_power,
                            long N, mpfr_prec_t prec = kDefaultPrec) {
  BigRat qa = rat_pow(q0, base_power);
  return detail::zeta_tail_bound_impl(s, x, qa, N, prec);
}

inline ZetaValue zeta_eval(const Real& s, const BigRat& x, const BigRat& q0, int base_power,
                           const Real& tol, mpfr_prec_t prec = kDefaultPrec) {
  if (x <= 0) throw std::domain_error("zeta requires x > 0, got " + rat_to_string(x));
  detail::require_q_in_unit_interval(q0);
  if (base_power < 1) throw std::invalid_argument("zeta requires base_power >= 1");
  if (!(Real::of(0L, tol.prec()) < tol)) throw std::invalid_argument("tol must be positive");

  const BigRat qa = rat_pow(q0, base_power);
  const long N = detail::minimal_tail_terms(
      [&](long k) { return detail::zeta_tail_bound_impl(s, x, qa, k, prec); }, tol,
      mpq_get_d(qa.get_mpq_t()));

  Real q(prec);
  mpfr_set_q(q.raw(), qa.get_mpq_t(), MPFR_RNDN);
  Real inv_one_minus_q = Real::of(1L, prec) / (Real::of(1L, prec) - q);
  Real qax(prec);  // qa^x
  {
    Real xr = Real::of(x, prec);
    mpfr_pow(qax.raw(), q.raw(), xr.raw(), MPFR_RNDN);
  }
  Real neg_s = -s;

  Real sum(prec);
  Real qn = Real::of(1L, prec);  // qa^n
  for (long n = 0; n < N; ++n) {
    Real bracket = (Real::of(1L, prec) - qax * qn) * inv_one_minus_q;  // [n+x]_{qa}
    Real term = bracket.pow(neg_s);
    term *= qn;
    if (n % 2 == 0)
      sum += term;
    else
      sum -= term;
    qn *= q;
  }
  sum *= Real::of(1 + qa, prec);

  ZetaValue zv{std::move(sum), detail::zeta_tail_bound_impl(s, x, qa, N, prec), N, s, x, q0,
               base_power};
  return zv;
}

/// Checks the interpolation of E_{m,q}(x) by zeta at s = -m against the
/// umbral-expansion evaluation; both sides go through independent code paths.
inline VerificationReport interpolation_check(int m, const BigRat& x, const BigRat& q0,
                                              const Real& tol, mpfr_prec_t prec = kDefaultPrec) {
  if (m < 0) throw std::invalid_argument("interpolation_check requires m >= 0");
  ZetaValue z = zeta_eval(Real::of(-static_cast<long>(m), prec), x, q0, 1, tol, prec);
  Real poly = euler_poly_eval(m, q0, x, prec);
  Real dev = (z.value - poly).abs();
  Real bound = Real::of(2L, tol.prec()) * tol;

  VerificationReport r;
  r.id = IdentityId::Eq5;
  r.mode = CheckMode::Numeric;
  r.param("m", std::to_string(m));
  r.param("x", rat_to_string(x));
  r.param("q", rat_to_string(q0));
  r.param("tol", tol.to_string());
  r.param("zeta_value", z.value.to_string());
  r.param("poly_value", poly.to_string());
  r.param("certified_bound", bound.to_string());
  r.passed = dev <= bound;
  r.deviation = dev.to_string();
  return r;
}

/// Numeric verification of the zeta-level symmetry at real s:
/// [2]_{q^b}[b]^s_q sum_{j<a} (-1)^j q^{bj} zeta_{E,q^a}(s, bx + bj/a)
///   == [2]_{q^a}[a]^s_q sum_{j<b} (-1)^j q^{aj} zeta_{E,q^b}(s, ax + aj/b),
/// with the per-call tolerance budgeted so each side's certified error
/// stays below tol.
inline VerificationReport thm21_check(const Real& s, int a, int b, const BigRat& x,
                                      const BigRat& q0, const Real& tol,
                                      bool override_parity = false,
                                      mpfr_prec_t prec = kDefaultPrec) {
  if (a < 1 || b < 1) throw std::invalid_argument("thm21 requires positive a, b");
  if ((a % 2 == 0 || b % 2 == 0) && !override_parity)
    throw std::invalid_argument("thm21 requires odd a and b (pass the parity override to probe)");
  if (x <= 0) throw std::domain_error("thm21 requires x > 0");
  detail::require_q_in_unit_interval(q0);

  auto side = [&](int outer, int inner, Real& certified) {
    // prefactor [2]_{q^inner} [inner]_q^s, upper bounded for the budget
    BigRat two_rat = 1 + rat_pow(q0, inner);
    BigRat bracket_rat = (1 - rat_pow(q0, inner)) / (1 - q0);  // [inner]_q, exact
    Real pref_up(prec);
    {
      Real base(prec);
      mpfr_set_q(base.raw(), bracket_rat.get_mpq_t(), MPFR_RNDU);
      mpfr_pow(pref_up.raw(), base.raw(), s.raw(), MPFR_RNDU);
      if (s.is_negative()) {
        // decreasing in the base: redo with the base rounded down
        mpfr_set_q(base.raw(), bracket_rat.get_mpq_t(), MPFR_RNDD);
        mpfr_pow(pref_up.raw(), base.raw(), s.raw(), MPFR_RNDU);
      }
      Real two_up(prec);
      mpfr_set_q(two_up.raw(), two_rat.get_mpq_t(), MPFR_RNDU);
      mpfr_mul(pref_up.raw(), pref_up.raw(), two_up.raw(), MPFR_RNDU);
    }
    Real call_tol(prec);
    mpfr_div_ui(call_tol.raw(), tol.raw(), static_cast<unsigned long>(outer), MPFR_RNDD);
    mpfr_div(call_tol.raw(), call_tol.raw(), pref_up.raw(), MPFR_RNDD);

    Real sum(prec);
    certified = Real(prec);
    for (int j = 0; j < outer; ++j) {
      BigRat arg = BigRat(inner) * x + BigRat(inner * j, outer);
      arg.canonicalize();
      ZetaValue z = zeta_eval(s, arg, q0, outer, call_tol, prec);
      BigRat weight = rat_pow(q0, inner * j);
      Real w = Real::of(weight, prec);
      if (j % 2 == 0)
        sum += w * z.value;
      else
        sum -= w * z.value;
      // certified += prefactor * weight * tail (upward)
      Real contrib(prec);
      mpfr_set_q(contrib.raw(), weight.get_mpq_t(), MPFR_RNDU);
      mpfr_mul(contrib.raw(), contrib.raw(), z.tail_bound.raw(), MPFR_RNDU);
      mpfr_mul(contrib.raw(), contrib.raw(), pref_up.raw(), MPFR_RNDU);
      mpfr_add(certified.raw(), certified.raw(), contrib.raw(), MPFR_RNDU);
    }
    Real pref(prec);
    {
      Real base = Real::of(bracket_rat, prec);
      mpfr_pow(pref.raw(), base.raw(), s.raw(), MPFR_RNDN);
      pref *= Real::of(two_rat, prec);
    }
    return pref * sum;
  };

  Real cert_l(prec), cert_r(prec);
  Real lhs = side(a, b, cert_l);
  Real rhs = side(b, a, cert_r);
  Real dev = (lhs - rhs).abs();
  Real bound = cert_l + cert_r;

  VerificationReport r;
  r.id = IdentityId::Thm21;
  r.mode = CheckMode::Numeric;
  r.param("s", s.to_string());
  r.param("a", std::to_string(a));
  r.param("b", std::to_string(b));
  r.param("x", rat_to_string(x));
  r.param("q", rat_to_string(q0));
  r.param("tol", tol.to_string());
  r.param("lhs", lhs.to_string());
  r.param("rhs", rhs.to_string());
  r.param("certified_bound", bound.to_string());
  r.passed = dev <= bound;
  r.deviation = dev.to_string();
  return r;
}

}  // namespace qeuler
