#pragma once

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coinrace/advantage.hpp"
#include "coinrace/exact_poly.hpp"
#include "coinrace/game.hpp"
#include "coinrace/minimizer.hpp"
#include "coinrace/simulator.hpp"
#include "coinrace/stopping_dist.hpp"
#include "coinrace/verify.hpp"
#include "reference_tables.hpp"

namespace coinrace::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

enum class Format { text, json, csv, latex };

using json = nlohmann::ordered_json;

inline std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

/// Exact coefficients as decimal strings; JSON numbers would lose digits past 2^53.
inline json coefficients_json(const Poly& poly) {
  json arr = json::array();
  for (const auto& c : poly.coefficients()) arr.push_back(to_string(c));
  return arr;
}

/// Integer coefficient as a JSON number when it fits in 64 bits, else a string.
inline json integer_json(const Rational& c) {
  const BigInt v = numerator_of(c);
  if (is_integer(c) && v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(c);
}

inline std::string latex_poly(const Poly& poly) {
  std::string s = to_string(poly);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += s[i];
    }
  }
  return "$" + out + "$";
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

inline json poly_document(const AdvantageResult& adv) {
  return json{{"n", adv.params.n.str()},
              {"alpha", adv.params.alpha.str()},
              {"beta", adv.params.beta.str()},
              {"l", adv.bounds.l},
              {"m", adv.bounds.m},
              {"degree", adv.poly.degree() ? json(*adv.poly.degree()) : json(nullptr)},
              {"degenerate", adv.degenerate},
              {"coefficients", coefficients_json(adv.poly)}};
}

inline void emit_poly(std::ostream& out, const AdvantageResult& adv, Format format) {
  switch (format) {
    case Format::text:
      out << to_string(adv.poly);
      if (adv.degenerate) out << " (degenerate: I \u2261 1)";
      out << "\n";
      break;
    case Format::json:
      out << poly_document(adv).dump() << "\n";
      break;
    case Format::csv:
      out << "power,coefficient\n";
      for (std::size_t i = 0; i < adv.poly.coefficients().size(); ++i) {
        out << i << "," << to_string(adv.poly.coefficients()[i]) << "\n";
      }
      break;
    case Format::latex:
      out << latex_poly(adv.poly) << "\n";
      break;
  }
}

inline void emit_pmf(std::ostream& out, const TauDistribution& dist, Format format) {
  switch (format) {
    case Format::text:
      for (const auto& [k, poly] : dist.pmf) out << "k=" << k << ": " << to_string(poly) << "\n";
      break;
    case Format::json: {
      json pmf = json::object();
      for (const auto& [k, poly] : dist.pmf) {
        json arr = json::array();
        for (const auto& c : poly.coefficients()) arr.push_back(integer_json(c));
        pmf[std::to_string(k)] = arr;
      }
      out << json{{"l", dist.bounds.l}, {"m", dist.bounds.m}, {"pmf", pmf}}.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "k,power,coefficient\n";
      for (const auto& [k, poly] : dist.pmf) {
        for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
          out << k << "," << i << "," << to_string(poly.coefficients()[i]) << "\n";
        }
      }
      break;
    case Format::latex:
      for (const auto& [k, poly] : dist.pmf) out << k << " & " << latex_poly(poly) << " \\\\\n";
      break;
  }
}

inline void emit_minimize(std::ostream& out, const GameParams& params, const MinimizationResult& r, Format format) {
  const std::string p = r.p_star_n ? fixed(*r.p_star_n, 12) : "";
  switch (format) {
    case Format::text:
      if (r.degenerate) {
        out << "degenerate: advantage is 1 for every p\n";
      } else {
        out << "p_n* = " << p << "\n"
            << "I(p_n*) = " << fixed(r.value, 12) << "\n"
            << "bracket = [" << fixed(static_cast<double>(r.bracket_lo), 12) << ", "
            << fixed(static_cast<double>(r.bracket_hi), 12) << "]\n"
            << "critical points in (0,1): " << r.critical_points << (r.tie ? " (exact tie broken toward smaller p)" : "")
            << "\n";
      }
      break;
    case Format::json:
      out << json{{"degenerate", r.degenerate},
                  {"p_star_n", r.p_star_n ? json(*r.p_star_n) : json(nullptr)},
                  {"value", r.value},
                  {"exact_value", to_string(r.exact_value)},
                  {"bracket", r.degenerate ? json(nullptr) : json::array({to_string(r.bracket_lo), to_string(r.bracket_hi)})},
                  {"tol", r.tol},
                  {"tie", r.tie},
                  {"critical_points", r.critical_points}}
                 .dump()
          << "\n";
      break;
    case Format::csv:
      out << "n,alpha,beta,degenerate,p_star_n,value\n"
          << to_string(params.n) << "," << to_string(params.alpha) << "," << to_string(params.beta) << ","
          << (r.degenerate ? "true" : "false") << "," << p << "," << fixed(r.value, 12) << "\n";
      break;
    case Format::latex:
      out << to_string(params.n) << " & " << to_string(params.alpha) << " & " << to_string(params.beta) << " & "
          << fixed(r.value, 3) << " \\\\\n";
      break;
  }
}

inline void emit_pstar(std::ostream& out, const Rational& alpha, const Rational& beta, Format format) {
  const auto opt = asymptotic_pstar(alpha, beta);
  switch (format) {
    case Format::text:
      out << "p* = " << fixed(opt.p_star, 12) << "\n"
          << "t = " << to_string(opt.t) << "\n"
          << "sigma^2(p*) = " << fixed(opt.sigma_sq_at_p_star, 12) << "\n";
      break;
    case Format::json:
      out << json{{"t", to_string(opt.t)}, {"p_star", opt.p_star}, {"sigma_sq_at_p_star", opt.sigma_sq_at_p_star}}.dump()
          << "\n";
      break;
    case Format::csv:
      out << "alpha,beta,t,p_star,sigma_sq_at_p_star\n"
          << to_string(alpha) << "," << to_string(beta) << "," << to_string(opt.t) << "," << fixed(opt.p_star, 12) << ","
          << fixed(opt.sigma_sq_at_p_star, 12) << "\n";
      break;
    case Format::latex:
      out << to_string(alpha) << " & " << to_string(beta) << " & " << fixed(opt.p_star, 9) << " \\\\\n";
      break;
  }
}

inline void emit_simulation(std::ostream& out, const SimConfig& config, const SimResult& r, Format format) {
  switch (format) {
    case Format::text:
      out << "p = " << fixed(config.p, 12) << "\n"
          << "trials = " << r.trials << "\n"
          << "wins = " << r.wins << "\n"
          << "frequency = " << fixed(r.frequency, 6) << "\n"
          << "stderr = " << fixed(r.standard_error, 6) << "\n"
          << "seed = " << r.seed << "\n";
      break;
    case Format::json: {
      json hist = json::object();
      for (const auto& [turn, f] : r.turn_histogram()) hist[std::to_string(turn)] = f;
      out << json{{"p", config.p},       {"trials", r.trials}, {"wins", r.wins},
                  {"frequency", r.frequency}, {"stderr", r.standard_error}, {"seed", r.seed},
                  {"workers", config.workers}, {"turn_histogram", hist}}
                 .dump()
          << "\n";
      break;
    }
    case Format::csv:
      out << "p,trials,wins,frequency,stderr,seed\n"
          << fixed(config.p, 12) << "," << r.trials << "," << r.wins << "," << fixed(r.frequency, 6) << ","
          << fixed(r.standard_error, 6) << "," << r.seed << "\n";
      break;
    case Format::latex:
      out << fixed(config.p, 6) << " & " << r.trials << " & " << fixed(r.frequency, 3) << " \\\\\n";
      break;
  }
}

inline void emit_polynomial_table(std::ostream& out, const tables::PolynomialTable& table, Format format) {
  json rows = json::array();
  if (format == Format::csv) out << "n,alpha,beta,degree,polynomial\n";
  if (format == Format::latex) {
    out << "\\begin{tabular}{l|l}\n"
        << "$n$ & $I(p \\mid n, \\alpha = " << table.alpha << ", \\beta = " << table.beta << ")$ \\\\\n\\hline\n";
  }
  if (format == Format::text) out << "n\tI(p | n, alpha=" << table.alpha << ", beta=" << table.beta << ")\n";
  for (const auto n : table.ns) {
    const auto adv = advantage_polynomial(GameParams{n, table.alpha, table.beta});
    const auto degree = adv.poly.degree().value_or(0);
    switch (format) {
      case Format::text:
        out << n << "\t" << to_string(adv.poly) << "\n";
        break;
      case Format::csv:
        out << n << "," << table.alpha << "," << table.beta << "," << degree << "," << csv_quote(to_string(adv.poly))
            << "\n";
        break;
      case Format::latex:
        out << n << " & " << latex_poly(adv.poly) << " \\\\\n";
        break;
      case Format::json:
        rows.push_back(json{{"n", n},
                            {"alpha", table.alpha},
                            {"beta", table.beta},
                            {"degree", degree},
                            {"degenerate", adv.degenerate},
                            {"coefficients", coefficients_json(adv.poly)}});
        break;
    }
  }
  if (format == Format::latex) out << "\\end{tabular}\n";
  if (format == Format::json) out << json{{"table", table.id}, {"rows", rows}}.dump() << "\n";
}

struct MinimizedRowResult {
  tables::MinimizedRow row;
  MinimizationResult min;
  double at_pstar = 1.0;
};

inline std::vector<MinimizedRowResult> compute_minimized_table(double tol = kDefaultTolerance) {
  std::vector<MinimizedRowResult> out;
  for (const auto& row : tables::minimized_rows()) {
    const GameParams params{row.game.n, row.game.alpha, row.game.beta};
    const auto adv = advantage_polynomial(params);
    out.push_back({row, minimize_advantage(adv, tol), advantage_at_asymptotic(adv, params.alpha, params.beta)});
  }
  return out;
}

inline void emit_minimized_table(std::ostream& out, Format format) {
  const auto rows = compute_minimized_table();
  json arr = json::array();
  switch (format) {
    case Format::text:
      out << "n\talpha\tbeta\tI(p_n*)\tI(p*)\tnote\n";
      break;
    case Format::csv:
      out << "n,alpha,beta,I_pn_star,I_p_star,note\n";
      break;
    case Format::latex:
      out << "\\begin{tabular}{rrr|rr}\n$n$ & $\\alpha$ & $\\beta$ & $I(p_n^* \\mid n, \\alpha, \\beta)$ & "
             "$I(p^* \\mid n, \\alpha, \\beta)$ \\\\\n\\hline\n";
      break;
    case Format::json:
      break;
  }
  for (const auto& r : rows) {
    const auto& g = r.row.game;
    switch (format) {
      case Format::text:
        out << g.n << "\t" << g.alpha << "\t" << g.beta << "\t" << fixed(r.min.value, 3) << "\t" << fixed(r.at_pstar, 3)
            << "\t" << r.row.note << "\n";
        break;
      case Format::csv:
        out << g.n << "," << g.alpha << "," << g.beta << "," << fixed(r.min.value, 3) << "," << fixed(r.at_pstar, 3)
            << "," << csv_quote(r.row.note) << "\n";
        break;
      case Format::latex:
        out << g.n << " & " << g.alpha << " & " << g.beta << " & " << fixed(r.min.value, 3) << " & "
            << fixed(r.at_pstar, 3) << " \\\\\n";
        break;
      case Format::json:
        arr.push_back(json{{"n", g.n},
                           {"alpha", g.alpha},
                           {"beta", g.beta},
                           {"p_star_n", r.min.p_star_n ? json(*r.min.p_star_n) : json(nullptr)},
                           {"I_pn_star", r.min.value},
                           {"I_p_star", r.at_pstar},
                           {"note", r.row.note}});
        break;
    }
  }
  if (format == Format::latex) out << "\\end{tabular}\n";
  if (format == Format::json) out << json{{"table", 6}, {"rows", arr}}.dump() << "\n";
}

inline void emit_verify(std::ostream& out, const VerifyReport& report, Format format) {
  if (format == Format::json) {
    json mism = json::array();
    for (const auto& m : report.mismatches) mism.push_back(json{{"n", m.n}, {"alpha", m.alpha}, {"beta", m.beta}, {"k", m.k}});
    out << json{{"cases", report.cases}, {"matched", report.matched}, {"mismatches", mism}}.dump() << "\n";
    return;
  }
  out << report.matched << "/" << report.cases << " cases match\n";
  for (const auto& m : report.mismatches) {
    out << "mismatch n=" << m.n << " alpha=" << m.alpha << " beta=" << m.beta << " k=" << m.k << "\n";
  }
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const DistributionBuilder& verify_builder = {}) {
  CLI::App app{"Exact analysis of the alternating biased-coin race game", "coinrace"};
  app.require_subcommand(1);

  std::string n_text, alpha_text, beta_text, p_text;
  std::string format_text = "text";
  double tol = kDefaultTolerance;
  bool at_pstar = false;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  int table_id = 0;
  std::int64_t max_n = 10, max_alpha = 4, max_beta = 4;

  const std::vector<std::string> formats{"text", "json", "csv", "latex"};
  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "points needed to win (a, a/b or decimal)")->required();
    sub->add_option("--alpha", alpha_text, "points per toss")->required();
    sub->add_option("--beta", beta_text, "bonus points per head")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "output format")->check(CLI::IsMember(formats));
  };

  auto* poly = app.add_subcommand("poly", "advantage polynomial I(p)");
  add_game(poly);
  add_format(poly);
  auto* pmf = app.add_subcommand("pmf", "hit-time distribution P(tau = k)");
  add_game(pmf);
  add_format(pmf);
  auto* minimize = app.add_subcommand("minimize", "bias minimizing the first player's advantage");
  add_game(minimize);
  add_format(minimize);
  minimize->add_option("--tol", tol, "bracket width for the minimizer");
  auto* pstar = app.add_subcommand("pstar", "large-n optimal bias");
  pstar->add_option("--alpha", alpha_text)->required();
  pstar->add_option("--beta", beta_text)->required();
  add_format(pstar);
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the advantage");
  add_game(simulate_cmd);
  add_format(simulate_cmd);
  auto* p_opt = simulate_cmd->add_option("--p", p_text, "coin bias");
  auto* star_opt = simulate_cmd->add_flag("--at-pstar", at_pstar, "use the large-n optimal bias");
  p_opt->excludes(star_opt);
  simulate_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", seed);
  simulate_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);
  auto* table = app.add_subcommand("table", "regenerate a published table (1-6)");
  table->add_option("which", table_id, "table index")->required()->check(CLI::Range(1, 6));
  add_format(table);
  auto* verify = app.add_subcommand("verify", "closed form vs enumeration on an integer grid");
  verify->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  verify->add_option("--max-alpha", max_alpha)->check(CLI::PositiveNumber);
  verify->add_option("--max-beta", max_beta)->check(CLI::PositiveNumber);
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Format format = format_text == "json"  ? Format::json
                        : format_text == "csv" ? Format::csv
                        : format_text == "latex" ? Format::latex
                                                 : Format::text;
  try {
    auto game = [&] { return validate(GameParams{parse_rational(n_text), parse_rational(alpha_text), parse_rational(beta_text)}); };
    if (*poly) {
      emit_poly(out, advantage_polynomial(game()), format);
    } else if (*pmf) {
      emit_pmf(out, tau_distribution(game()), format);
    } else if (*minimize) {
      const auto params = game();
      emit_minimize(out, params, minimize_advantage(params, tol), format);
    } else if (*pstar) {
      emit_pstar(out, parse_rational(alpha_text), parse_rational(beta_text), format);
    } else if (*simulate_cmd) {
      const auto params = game();
      SimConfig config{params, 0.0, trials, seed, workers};
      if (at_pstar) {
        config.p = asymptotic_pstar(params.alpha, params.beta).p_star;
      } else if (!p_text.empty()) {
        const Rational p = parse_rational(p_text);
        if (p < 0 || p > 1) throw DomainError("p must lie in [0, 1]");
        config.p = static_cast<double>(p);
      } else {
        throw DomainError("simulate needs --p or --at-pstar");
      }
      emit_simulation(out, config, simulate(config), format);
    } else if (*table) {
      if (table_id == 6) {
        emit_minimized_table(out, format);
      } else {
        emit_polynomial_table(out, tables::polynomial_tables().at(static_cast<std::size_t>(table_id - 1)), format);
      }
    } else if (*verify) {
      const auto report = verify_builder ? verify_grid(max_n, max_alpha, max_beta, verify_builder)
                                         : verify_grid(max_n, max_alpha, max_beta);
      emit_verify(out, report, format);
      if (!report.ok()) return kVerifyFailed;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace coinrace::cli
