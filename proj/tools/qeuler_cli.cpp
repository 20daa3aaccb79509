// Command-line frontend: exact q-Euler tables, numeric evaluation, and
// identity verification with machine-readable output.
//
// Exit codes: 0 = success / all checks passed, 1 = a check failed,
// 2 = usage error.

#include <CLI11.hpp>

#include "qeuler/qeuler.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace qeuler;
using nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  long precision_bits = 256;
  std::string tol_text = "1e-30";
  bool force = false;
  bool check_intermediates = false;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--precision-bits", opt.precision_bits, "Working precision in bits (>= 64)")
      ->capture_default_str();
}

void validate_common(const Options& opt) {
  if (opt.precision_bits < 64) throw std::invalid_argument("--precision-bits must be >= 64");
}

Real parse_tol(const Options& opt) {
  Real tol = Real::parse(opt.tol_text, static_cast<mpfr_prec_t>(opt.precision_bits));
  if (!(Real::of(0L) < tol)) throw std::invalid_argument("--tol must be positive");
  return tol;
}

ordered_json poly_coeffs(const PolyQ& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat_to_string(c));
  if (p.is_zero()) a.push_back("0");
  return a;
}

std::string poly_coeffs_flat(const PolyQ& p) {
  std::string out;
  for (const auto& c : p.coeffs()) {
    if (!out.empty()) out += ' ';
    out += rat_to_string(c);
  }
  return out.empty() ? "0" : out;
}

/// Sorted [e_X, e_Y, num-coeffs, den-coeffs] tuples.
ordered_json laurent_terms(const LaurentXY& p) {
  ordered_json rows = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    ordered_json t = ordered_json::array();
    t.push_back(e.x);
    t.push_back(e.y);
    t.push_back(poly_coeffs(c.num()));
    t.push_back(poly_coeffs(c.den()));
    rows.push_back(t);
  }
  return rows;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::string params_flat(const VerificationReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

void print_report_text(const VerificationReport& r) {
  std::cout << identity_name(r.id) << " [" << (r.mode == CheckMode::Symbolic ? "symbolic" : "numeric")
            << "] " << (r.passed ? "PASS" : "FAIL") << "  deviation=" << r.deviation;
  std::string p = params_flat(r);
  if (!p.empty()) std::cout << "  (" << p << ")";
  if (r.witness)
    std::cout << "  witness: X^" << r.witness->e_x << " Y^" << r.witness->e_y << " -> "
              << r.witness->coefficient;
  std::cout << "\n";
}

const char* kReportCsvHeader = "identity,mode,passed,deviation,params,witness";

std::string report_csv_row(const VerificationReport& r) {
  std::string w;
  if (r.witness)
    w = "X^" + std::to_string(r.witness->e_x) + " Y^" + std::to_string(r.witness->e_y) + " -> " +
        r.witness->coefficient;
  return std::string(identity_name(r.id)) + "," +
         (r.mode == CheckMode::Symbolic ? "symbolic" : "numeric") + "," +
         (r.passed ? "true" : "false") + "," + csv_quote(r.deviation) + "," +
         csv_quote(params_flat(r)) + "," + csv_quote(w);
}

int emit_single_report(const VerificationReport& r, const Options& opt) {
  if (opt.format == "json") {
    emit(report_to_json(r));
  } else if (opt.format == "csv") {
    std::cout << kReportCsvHeader << "\n" << report_csv_row(r) << "\n";
  } else {
    print_report_text(r);
  }
  return r.passed ? 0 : 1;
}

int emit_sweep(const std::string& identity, const ordered_json& grid,
               const std::vector<VerificationReport>& rows, const Options& opt) {
  bool all = true;
  for (const auto& r : rows) all = all && r.passed;
  if (opt.format == "json") {
    ordered_json j;
    j["command"] = "sweep";
    j["identity"] = identity;
    j["grid"] = grid;
    j["cases"] = rows.size();
    j["all_passed"] = all;
    ordered_json jr = ordered_json::array();
    for (const auto& r : rows) jr.push_back(report_to_json(r));
    j["rows"] = jr;
    emit(j);
  } else if (opt.format == "csv") {
    std::cout << kReportCsvHeader << "\n";
    for (const auto& r : rows) std::cout << report_csv_row(r) << "\n";
  } else {
    for (const auto& r : rows) print_report_text(r);
    std::cout << "sweep " << identity << ": " << rows.size() << " cases, "
              << (all ? "all passed" : "FAILURES present") << "\n";
  }
  return all ? 0 : 1;
}

std::vector<int> odd_values_up_to(int m) {
  std::vector<int> v;
  for (int k = 1; k <= m; k += 2) v.push_back(k);
  return v;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact q-Euler numbers, polynomials, zeta values, and identity checks"};
  app.require_subcommand(1);

  Options opt;

  // ---- numbers ----------------------------------------------------------
  auto* numbers = app.add_subcommand("numbers", "q-Euler numbers E_{n,q^a} for n = 0..N");
  int num_n = 0, num_a = 1;
  std::string num_q;
  numbers->add_option("--n", num_n, "Largest index N")->required()->check(CLI::NonNegativeNumber);
  numbers->add_option("--a", num_a, "Base power a (table for q^a)")->check(CLI::PositiveNumber);
  numbers->add_option("--q", num_q, "Optional rational q in (0,1): also print exact values");
  add_common(numbers, opt);

  // ---- poly -------------------------------------------------------------
  auto* poly = app.add_subcommand("poly", "q-Euler polynomials E_{n,q^a}(x) for n = 0..N");
  int poly_n = 0, poly_a = 1;
  poly->add_option("--n", poly_n, "Largest index N")->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--a", poly_a, "Base power a")->check(CLI::PositiveNumber);
  add_common(poly, opt);

  // ---- eval -------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "Numeric value of E_{n,q}(x)");
  int eval_n = 0;
  std::string eval_q, eval_x = "0";
  eval->add_option("--n", eval_n, "Index n")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--q", eval_q, "Rational q in (0,1)")->required();
  eval->add_option("--x", eval_x, "Rational argument x")->capture_default_str();
  add_common(eval, opt);

  // ---- zeta -------------------------------------------------------------
  auto* zeta = app.add_subcommand("zeta", "Certified q-Euler zeta value");
  std::string zeta_s, zeta_x, zeta_q;
  int zeta_a = 1;
  zeta->add_option("--s", zeta_s, "Real s")->required();
  zeta->add_option("--x", zeta_x, "Rational x > 0")->required();
  zeta->add_option("--q", zeta_q, "Rational q in (0,1)")->required();
  zeta->add_option("--a", zeta_a, "Base power a")->check(CLI::PositiveNumber);
  zeta->add_option("--tol", opt.tol_text, "Certified truncation tolerance")->capture_default_str();
  add_common(zeta, opt);

  // ---- verify -----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Verify one identity instance");
  verify->require_subcommand(1);
  int v_n = 0, v_m = 0, v_a = 1, v_b = 1;
  std::string v_s = "0", v_x = "1/2", v_y = "0", v_u = "0", v_v = "0", v_q = "1/2";

  auto* v21 = verify->add_subcommand("thm21", "Zeta-level symmetry at real s (numeric)");
  v21->add_option("--s", v_s, "Real s")->required();
  v21->add_option("--a", v_a)->required();
  v21->add_option("--b", v_b)->required();
  v21->add_option("--x", v_x, "Rational x > 0")->capture_default_str();
  v21->add_option("--q", v_q, "Rational q in (0,1)")->capture_default_str();
  v21->add_option("--tol", opt.tol_text)->capture_default_str();
  v21->add_flag("--force", opt.force, "Allow even a or b (parity probe)");
  add_common(v21, opt);

  auto* v22 = verify->add_subcommand("thm22", "Polynomial-level symmetry (exact)");
  v22->add_option("--n", v_n)->required()->check(CLI::NonNegativeNumber);
  v22->add_option("--a", v_a)->required();
  v22->add_option("--b", v_b)->required();
  v22->add_flag("--force", opt.force, "Allow even a or b (parity probe)");
  add_common(v22, opt);

  auto* v24 = verify->add_subcommand("thm24", "S*-sum symmetry (exact)");
  v24->add_option("--n", v_n)->required()->check(CLI::NonNegativeNumber);
  v24->add_option("--a", v_a)->required();
  v24->add_option("--b", v_b)->required();
  v24->add_flag("--check-intermediates", opt.check_intermediates,
                "Also verify the rearrangements against the thm22 sides");
  v24->add_flag("--force", opt.force, "Allow even a or b (parity probe)");
  add_common(v24, opt);

  auto* v23 = verify->add_subcommand("prop23", "Addition theorem (exact)");
  v23->add_option("--n", v_n)->required()->check(CLI::NonNegativeNumber);
  add_common(v23, opt);

  auto* v5 = verify->add_subcommand("eq5", "Zeta interpolation at s = -m (numeric)");
  v5->add_option("--m", v_m)->required()->check(CLI::NonNegativeNumber);
  v5->add_option("--x", v_x, "Rational x > 0")->required();
  v5->add_option("--q", v_q, "Rational q in (0,1)")->required();
  v5->add_option("--tol", opt.tol_text)->capture_default_str();
  add_common(v5, opt);

  auto* v13 = verify->add_subcommand("eq13", "Bracket addition lemma (exact scalar)");
  v13->add_option("--x", v_x)->required();
  v13->add_option("--y", v_y)->required();
  v13->add_option("--m", v_m)->required()->check(CLI::NonNegativeNumber);
  v13->add_option("--u", v_u)->required();
  v13->add_option("--v", v_v)->required();
  v13->add_option("--q", v_q)->required();
  add_common(v13, opt);

  auto* v17 = verify->add_subcommand("eq17", "Two-variable umbral identity (exact)");
  v17->add_option("--m", v_m)->required()->check(CLI::NonNegativeNumber);
  v17->add_option("--n", v_n)->required()->check(CLI::NonNegativeNumber);
  add_common(v17, opt);

  // ---- sweep ------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Verify an identity over a grid");
  sweep->require_subcommand(1);
  int s_nmax = 10, s_oddmax = 7, s_mnmax = 12, s_mmax = 8, s_limitmax = 20;

  auto* s22 = sweep->add_subcommand("thm22", "n <= n-max, odd a,b <= odd-max");
  s22->add_option("--n-max", s_nmax)->capture_default_str()->check(CLI::NonNegativeNumber);
  s22->add_option("--odd-max", s_oddmax)->capture_default_str()->check(CLI::PositiveNumber);
  add_common(s22, opt);

  auto* s24 = sweep->add_subcommand("thm24", "n <= n-max, odd a,b <= odd-max");
  s24->add_option("--n-max", s_nmax)->capture_default_str()->check(CLI::NonNegativeNumber);
  s24->add_option("--odd-max", s_oddmax)->capture_default_str()->check(CLI::PositiveNumber);
  s24->add_flag("--check-intermediates", opt.check_intermediates);
  add_common(s24, opt);

  auto* s23 = sweep->add_subcommand("prop23", "n <= n-max");
  int s23_nmax = 12;
  s23->add_option("--n-max", s23_nmax)->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(s23, opt);

  auto* s17 = sweep->add_subcommand("eq17", "all m, n with m + n <= mn-max");
  s17->add_option("--mn-max", s_mnmax)->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(s17, opt);

  auto* s5 = sweep->add_subcommand("eq5", "m <= m-max over the default x, q grid");
  s5->add_option("--m-max", s_mmax)->capture_default_str()->check(CLI::NonNegativeNumber);
  s5->add_option("--tol", opt.tol_text)->capture_default_str();
  add_common(s5, opt);

  auto* slimit = sweep->add_subcommand("limit", "classical-limit rows for n <= n-max");
  slimit->add_option("--n-max", s_limitmax)->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(slimit, opt);

  // ---- limit ------------------------------------------------------------
  auto* limit = app.add_subcommand("limit", "Exact q -> 1 check against classical Euler numbers");
  int limit_nmax = 20;
  limit->add_option("--n-max", limit_nmax)->capture_default_str()->check(CLI::NonNegativeNumber);
  add_common(limit, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  validate_common(opt);
  const auto prec = static_cast<mpfr_prec_t>(opt.precision_bits);

  if (*numbers) {
    QEulerTable t = euler_numbers(num_n, num_a);
    bool with_value = !num_q.empty();
    BigRat q0;
    if (with_value) {
      q0 = parse_rational(num_q);
      detail::require_q_in_unit_interval(q0);
    }
    if (opt.format == "json") {
      ordered_json j;
      j["command"] = "numbers";
      j["base_power"] = num_a;
      ordered_json rows = ordered_json::array();
      for (int n = 0; n <= num_n; ++n) {
        const RatQ& e = t.entries[static_cast<size_t>(n)];
        ordered_json row;
        row["n"] = n;
        row["num"] = poly_coeffs(e.num());
        row["den"] = poly_coeffs(e.den());
        if (with_value) row["value"] = rat_to_string(e.eval(q0));
        rows.push_back(row);
      }
      j["rows"] = rows;
      emit(j);
    } else if (opt.format == "csv") {
      std::cout << (with_value ? "n,num,den,value" : "n,num,den") << "\n";
      for (int n = 0; n <= num_n; ++n) {
        const RatQ& e = t.entries[static_cast<size_t>(n)];
        std::cout << n << "," << csv_quote(poly_coeffs_flat(e.num())) << ","
                  << csv_quote(poly_coeffs_flat(e.den()));
        if (with_value) std::cout << "," << rat_to_string(e.eval(q0));
        std::cout << "\n";
      }
    } else {
      for (int n = 0; n <= num_n; ++n) {
        const RatQ& e = t.entries[static_cast<size_t>(n)];
        std::cout << "E_" << n << (num_a == 1 ? "" : (",[q^" + std::to_string(num_a) + "]"))
                  << " = " << e.to_string();
        if (with_value) std::cout << "  |q=" << rat_to_string(q0) << " -> " << rat_to_string(e.eval(q0));
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (*poly) {
    if (opt.format == "json") {
      ordered_json j;
      j["command"] = "poly";
      j["base_power"] = poly_a;
      ordered_json rows = ordered_json::array();
      for (int n = 0; n <= poly_n; ++n) {
        ordered_json row;
        row["n"] = n;
        row["terms"] = laurent_terms(euler_poly_symbolic(n, poly_a, PolyArg::X));
        rows.push_back(row);
      }
      j["rows"] = rows;
      emit(j);
    } else if (opt.format == "csv") {
      std::cout << "n,terms\n";
      for (int n = 0; n <= poly_n; ++n)
        std::cout << n << ","
                  << csv_quote(laurent_terms(euler_poly_symbolic(n, poly_a, PolyArg::X)).dump())
                  << "\n";
    } else {
      for (int n = 0; n <= poly_n; ++n)
        std::cout << "E_" << n << "(x) = "
                  << euler_poly_symbolic(n, poly_a, PolyArg::X).to_string() << "\n";
    }
    return 0;
  }

  if (*eval) {
    BigRat q0 = parse_rational(eval_q);
    BigRat x0 = parse_rational(eval_x);
    Real v = euler_poly_eval(eval_n, q0, x0, prec);
    if (opt.format == "json") {
      ordered_json j;
      j["command"] = "eval";
      j["n"] = eval_n;
      j["q"] = rat_to_string(q0);
      j["x"] = rat_to_string(x0);
      j["value"] = v.to_string();
      emit(j);
    } else if (opt.format == "csv") {
      std::cout << "n,q,x,value\n"
                << eval_n << "," << rat_to_string(q0) << "," << rat_to_string(x0) << ","
                << v.to_string() << "\n";
    } else {
      std::cout << "E_" << eval_n << "(" << rat_to_string(x0) << ") at q=" << rat_to_string(q0)
                << " = " << v.to_string() << "\n";
    }
    return 0;
  }

  if (*zeta) {
    BigRat q0 = parse_rational(zeta_q);
    BigRat x0 = parse_rational(zeta_x);
    Real s = Real::parse(zeta_s, prec);
    ZetaValue z = zeta_eval(s, x0, q0, zeta_a, parse_tol(opt), prec);
    if (opt.format == "json") {
      ordered_json j;
      j["command"] = "zeta";
      j["s"] = s.to_string();
      j["x"] = rat_to_string(x0);
      j["q"] = rat_to_string(q0);
      j["base_power"] = zeta_a;
      j["value"] = z.value.to_string();
      j["tail_bound"] = z.tail_bound.to_string();
      j["terms_used"] = z.terms_used;
      emit(j);
    } else if (opt.format == "csv") {
      std::cout << "s,x,q,base_power,value,tail_bound,terms_used\n"
                << s.to_string() << "," << rat_to_string(x0) << "," << rat_to_string(q0) << ","
                << zeta_a << "," << z.value.to_string() << "," << z.tail_bound.to_string() << ","
                << z.terms_used << "\n";
    } else {
      std::cout << "zeta(s=" << s.to_string() << ", x=" << rat_to_string(x0) << ") = "
                << z.value.to_string() << "  (+/- " << z.tail_bound.to_string() << ", "
                << z.terms_used << " terms)\n";
    }
    return 0;
  }

  if (*verify) {
    VerificationReport r;
    if (*v21) {
      r = thm21_check(Real::parse(v_s, prec), v_a, v_b, parse_rational(v_x), parse_rational(v_q),
                      parse_tol(opt), opt.force, prec);
    } else if (*v22) {
      r = verify_thm22(v_n, v_a, v_b, opt.force);
    } else if (*v24) {
      r = verify_thm24(v_n, v_a, v_b, opt.check_intermediates, opt.force);
    } else if (*v23) {
      r = verify_prop23(v_n);
    } else if (*v5) {
      r = interpolation_check(v_m, parse_rational(v_x), parse_rational(v_q), parse_tol(opt), prec);
    } else if (*v13) {
      r = verify_eq13(parse_rational(v_x), parse_rational(v_y), v_m, parse_rational(v_u),
                      parse_rational(v_v), parse_rational(v_q));
    } else {
      r = verify_eq17(v_m, v_n);
    }
    return emit_single_report(r, opt);
  }

  if (*sweep) {
    std::vector<VerificationReport> rows;
    ordered_json grid = ordered_json::object();
    std::string identity;
    if (*s22 || *s24) {
      identity = *s22 ? "thm22" : "thm24";
      grid["n_max"] = s_nmax;
      grid["odd_max"] = s_oddmax;
      auto odds = odd_values_up_to(s_oddmax);
      if (odds.empty()) throw std::invalid_argument("empty grid: --odd-max must be >= 1");
      for (int n = 0; n <= s_nmax; ++n)
        for (int a : odds)
          for (int b : odds)
            rows.push_back(*s22 ? verify_thm22(n, a, b)
                                : verify_thm24(n, a, b, opt.check_intermediates));
    } else if (*s23) {
      identity = "prop23";
      grid["n_max"] = s23_nmax;
      for (int n = 0; n <= s23_nmax; ++n) rows.push_back(verify_prop23(n));
    } else if (*s17) {
      identity = "eq17";
      grid["mn_max"] = s_mnmax;
      for (int m = 0; m <= s_mnmax; ++m)
        for (int n = 0; n + m <= s_mnmax; ++n) rows.push_back(verify_eq17(m, n));
    } else if (*s5) {
      identity = "eq5";
      grid["m_max"] = s_mmax;
      grid["x"] = {"1/4", "1/2", "3/4"};
      grid["q"] = {"3/10", "1/2", "7/10"};
      Real tol = parse_tol(opt);
      for (int m = 0; m <= s_mmax; ++m)
        for (const char* xs : {"1/4", "1/2", "3/4"})
          for (const char* qs : {"3/10", "1/2", "7/10"})
            rows.push_back(
                interpolation_check(m, parse_rational(xs), parse_rational(qs), tol, prec));
    } else {
      identity = "limit";
      grid["n_max"] = s_limitmax;
      for (int n = 0; n <= s_limitmax; ++n) rows.push_back(q_limit_check(n));
    }
    return emit_sweep(identity, grid, rows, opt);
  }

  // limit
  VerificationReport r = q_limit_check(limit_nmax);
  return emit_single_report(r, opt);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
