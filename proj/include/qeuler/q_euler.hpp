#pragma once

#include "qeuler/laurent_xy.hpp"
#include "qeuler/poly_q.hpp"
#include "qeuler/rat_q.hpp"
#include "qeuler/report.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace qeuler {

/// [n]_{q^a} = 1 + q^a + ... + q^{a(n-1)}; [0] = 0.
inline PolyQ q_bracket_int(int n, int base_power = 1) {
  if (n < 0) throw std::invalid_argument("q_bracket_int requires n >= 0");
  if (base_power < 1) throw std::invalid_argument("q_bracket_int requires base_power >= 1");
  std::vector<BigRat> c(static_cast<size_t>(n > 0 ? base_power * (n - 1) + 1 : 0), BigRat(0));
  for (int k = 0; k < n; ++k) c[static_cast<size_t>(base_power) * k] = 1;
  return PolyQ(std::move(c));
}

/// [2]_{q^a} = 1 + q^a as a rational function.
inline RatQ q_two_bracket(int base_power = 1) {
  return RatQ(q_bracket_int(2, base_power));
}

enum class BracketArg { X, Y, XY, XInverse };

/// Symbolic q-brackets under X = q^x, Y = q^y:
/// [x]_{q^a} = (1 - X^a)/(1 - q^a), [-x]_q = (1 - X^{-1})/(1 - q),
/// [x+y]_{q^a} = (1 - (XY)^a)/(1 - q^a).
inline LaurentXY q_bracket_symbolic(BracketArg arg, int base_power = 1) {
  if (base_power < 1) throw std::invalid_argument("q_bracket_symbolic requires base_power >= 1");
  const int a = base_power;
  RatQ inv(PolyQ(1), PolyQ(1) - PolyQ::monomial(BigRat(1), a));  // 1/(1 - q^a)
  LaurentXY r = LaurentXY::from_scalar(inv);
  switch (arg) {
    case BracketArg::X: return r - LaurentXY::monomial(inv, a, 0);
    case BracketArg::Y: return r - LaurentXY::monomial(inv, 0, a);
    case BracketArg::XY: return r - LaurentXY::monomial(inv, a, a);
    case BracketArg::XInverse: return r - LaurentXY::monomial(inv, -a, 0);
  }
  return r;
}

/// Exact q-Euler numbers E_{n,q^a} for n = 0..N. entries[0] = 1; reduced
/// denominators divide prod_{k=1..n} (1 + q^{a(k+1)}).
struct QEulerTable {
  int base_power = 1;
  std::vector<RatQ> entries;
};

namespace detail {

/// Extends a table of E_{n,q^a} via the terminating recurrence
/// (q^{a(n+1)} + 1) E_n = [2]_{q^a} delta_{n,0} - q^a sum_{l<n} C(n,l) q^{al} E_l.
inline void extend_euler_table(std::vector<RatQ>& e, int a, int upto) {
  for (int n = static_cast<int>(e.size()); n <= upto; ++n) {
    RatQ rhs;
    if (n == 0) {
      rhs = q_two_bracket(a);
    } else {
      RatQSum sum;
      for (int l = 0; l < n; ++l)
        sum.add_scaled(BigRat(binomial(n, l)), RatQ::q_power(a * (l + 1)) * e[static_cast<size_t>(l)]);
      rhs = -sum.value();
    }
    PolyQ divisor = PolyQ::monomial(BigRat(1), a * (n + 1)) + PolyQ(1);
    e.push_back(rhs / RatQ(divisor));
  }
}

inline std::mutex& euler_cache_mutex() {
  static std::mutex m;
  return m;
}

inline std::map<int, std::vector<RatQ>>& euler_cache() {
  static std::map<int, std::vector<RatQ>> c;
  return c;
}

}  // namespace detail

/// E_{0..N, q^a}, built incrementally and cached per base power.
inline QEulerTable euler_numbers(int N, int base_power = 1) {
  if (N < 0) throw std::invalid_argument("euler_numbers requires N >= 0");
  if (base_power < 1) throw std::invalid_argument("euler_numbers requires base_power >= 1");
  std::lock_guard<std::mutex> lock(detail::euler_cache_mutex());
  auto& cache = detail::euler_cache()[base_power];
  detail::extend_euler_table(cache, base_power, N);
  QEulerTable t;
  t.base_power = base_power;
  t.entries.assign(cache.begin(), cache.begin() + N + 1);
  return t;
}

/// Descriptor of the monomial playing the role of q^{a * argument} in the
/// umbral expansion: weight * X^{e_x} * Y^{e_y} with weight a power of q.
struct ArgMonomial {
  int e_x = 0;
  int e_y = 0;
  RatQ weight = RatQ(BigRat(1));
};

/// E_{n,q^a}(arg) = sum_{l=0..n} C(n,l) M^l E_{l,q^a} [arg]_{q^a}^{n-l} with
/// M = q^{a*arg} and [arg]_{q^a} = (1 - M)/(1 - q^a), assembled on the
/// exponent lattice of M with one canonicalization per lattice point.
inline LaurentXY euler_poly_arg(int n, int base_power, const ArgMonomial& m) {
  if (n < 0) throw std::invalid_argument("euler_poly_arg requires n >= 0");
  const int a = base_power;
  QEulerTable table = euler_numbers(n, a);

  PolyQ one_minus_qa = PolyQ(1) - PolyQ::monomial(BigRat(1), a);
  std::vector<RatQ> inv_pow(static_cast<size_t>(n) + 1);
  inv_pow[0] = RatQ(BigRat(1));
  if (n >= 1) {
    RatQ inv = RatQ(PolyQ(1), one_minus_qa);
    for (int k = 1; k <= n; ++k) inv_pow[static_cast<size_t>(k)] = inv_pow[k - 1] * inv;
  }

  std::vector<RatQ> weight_pow(static_cast<size_t>(n) + 1);
  weight_pow[0] = RatQ(BigRat(1));
  for (int t = 1; t <= n; ++t) weight_pow[static_cast<size_t>(t)] = weight_pow[t - 1] * m.weight;

  LaurentXY result;
  for (int t = 0; t <= n; ++t) {
    RatQSum sum;
    for (int l = 0; l <= t; ++l) {
      BigRat s(binomial(n, l) * binomial(n - l, t - l));
      if ((t - l) % 2 != 0) s = -s;
      sum.add_scaled(s, table.entries[static_cast<size_t>(l)] * inv_pow[static_cast<size_t>(n - l)]);
    }
    RatQ c = sum.value() * weight_pow[static_cast<size_t>(t)];
    if (!c.is_zero()) result += LaurentXY::monomial(c, m.e_x * t, m.e_y * t);
  }
  return result;
}

enum class PolyArg { X, Y, XY };

/// E_{n,q^a}(x), E_{n,q^a}(y), or E_{n,q^a}(x+y) as a Laurent polynomial.
inline LaurentXY euler_poly_symbolic(int n, int base_power, PolyArg arg) {
  const int a = base_power;
  switch (arg) {
    case PolyArg::X: return euler_poly_arg(n, a, ArgMonomial{a, 0});
    case PolyArg::Y: return euler_poly_arg(n, a, ArgMonomial{0, a});
    case PolyArg::XY: return euler_poly_arg(n, a, ArgMonomial{a, a});
  }
  throw std::logic_error("unreachable");
}

/// E_{n,q^a}(b x + b j / a): q^{a*arg} = q^{bj} X^{ab}.
inline LaurentXY euler_poly_scaled(int n, int a, int b, int j) {
  return euler_poly_arg(n, a, ArgMonomial{a * b, 0, RatQ::q_power(b * j)});
}

enum class AdditionForm { First, Second };

/// The two displayed expansions of E_{n,q}(x+y):
///   first:  sum_i C(n,i) q^{xi} E_{i,q}(y) [x]_q^{n-i}
///   second: sum_i C(n,i) q^{(n-i)x} E_{n-i,q}(y) [x]_q^i
inline LaurentXY addition_theorem_expand(int n, AdditionForm form) {
  if (n < 0) throw std::invalid_argument("addition_theorem_expand requires n >= 0");
  LaurentXY bracket_x = q_bracket_symbolic(BracketArg::X);
  std::vector<LaurentXY> bracket_pow(static_cast<size_t>(n) + 1);
  bracket_pow[0] = LaurentXY::from_scalar(RatQ(BigRat(1)));
  for (int k = 1; k <= n; ++k) bracket_pow[static_cast<size_t>(k)] = bracket_pow[k - 1] * bracket_x;

  std::vector<LaurentXY> pieces;
  pieces.reserve(static_cast<size_t>(n) + 1);
  std::vector<std::pair<RatQ, const LaurentXY*>> terms;
  for (int i = 0; i <= n; ++i) {
    const int ei = form == AdditionForm::First ? i : n - i;
    LaurentXY piece = LaurentXY::monomial(RatQ(BigRat(1)), ei, 0) *
                      euler_poly_symbolic(ei, 1, PolyArg::Y) *
                      bracket_pow[static_cast<size_t>(n - ei)];
    pieces.push_back(std::move(piece));
  }
  terms.reserve(pieces.size());
  for (int i = 0; i <= n; ++i)
    terms.emplace_back(RatQ(BigRat(binomial(n, i))), &pieces[static_cast<size_t>(i)]);
  return LaurentXY::scaled_sum(terms);
}

/// Classical Euler polynomials E_n(x): E_0 = 1, deg E_n = n, monic.
struct ClassicalEulerTable {
  std::vector<PolyQ> entries;
};

/// Built from the terminating recurrence
/// sum_{k=0..n} C(n,k) E_k(x) + E_n(x) = 2 x^n.
inline ClassicalEulerTable classical_euler(int N) {
  if (N < 0) throw std::invalid_argument("classical_euler requires N >= 0");
  ClassicalEulerTable t;
  t.entries.reserve(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    PolyQ rhs = PolyQ::monomial(BigRat(1), n);
    for (int k = 0; k < n; ++k)
      rhs -= t.entries[static_cast<size_t>(k)].mul_scalar(BigRat(binomial(n, k), 2));
    t.entries.push_back(std::move(rhs));
  }
  return t;
}

/// Exact q -> 1 bridge: ratq_eval(E_{n,q}, 1) must equal the classical E_n(0)
/// for every n <= N.
inline VerificationReport q_limit_check(int N) {
  VerificationReport r;
  r.id = IdentityId::Limit;
  r.mode = CheckMode::Symbolic;
  r.param("n_max", std::to_string(N));
  QEulerTable q_table = euler_numbers(N);
  ClassicalEulerTable c_table = classical_euler(N);
  for (int n = 0; n <= N; ++n) {
    BigRat lhs = q_table.entries[static_cast<size_t>(n)].eval(BigRat(1));
    BigRat rhs = c_table.entries[static_cast<size_t>(n)].eval(BigRat(0));
    if (lhs != rhs) {
      r.passed = false;
      r.deviation = "nonzero";
      r.param("first_failing_n", std::to_string(n));
      r.witness = Witness{n, 0, rat_to_string(lhs - rhs)};
      return r;
    }
  }
  r.passed = true;
  r.deviation = "exact-zero";
  return r;
}

}  // namespace qeuler
