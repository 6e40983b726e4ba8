#include "morsesusy/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <variant>

#include "morsesusy/morse.hpp"
#include "morsesusy/orthopoly.hpp"
#include "morsesusy/spectrum.hpp"
#include "morsesusy/susy.hpp"
#include "morsesusy/verify.hpp"

namespace morsesusy {

using json = nlohmann::json;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
  return buf;
}

namespace {

struct RunConfig {
  double V0 = 8.0;
  double alpha = 1.0;
  double gamma = 0.0;
  Index n_max = 12;
  double e_min = 0.0;
  double e_max = 30.0;
  Index e_steps = 31;
  std::string format = "csv";
  bool oracle = false;
  Index corrupt_b = -1;

  std::vector<double> grid() const {
    std::vector<double> g;
    if (e_steps == 1) return {e_min};
    for (Index i = 0; i < e_steps; ++i) {
      g.push_back(e_min + (e_max - e_min) * static_cast<double>(i) / static_cast<double>(e_steps - 1));
    }
    return g;
  }
};

// A cell is a number, an integer, text, or empty.
using Cell = std::variant<std::monostate, double, Index, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_number(std::get<double>(c));
  if (std::holds_alternative<Index>(c)) return std::to_string(std::get<Index>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

// Rounded to the printed precision, so that re-serializing parsed output is byte-identical.
json cell_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) return std::stod(format_number(std::get<double>(c)));
  if (std::holds_alternative<Index>(c)) return std::get<Index>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

json table_json(const Table& t) {
  json arr = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

json params_json(const MorseParams& p) {
  return {{"V0", std::stod(format_number(p.V0))},
          {"alpha", std::stod(format_number(p.alpha))},
          {"gamma", std::stod(format_number(p.gamma))},
          {"D", std::stod(format_number(p.D))},
          {"shift", std::stod(format_number(p.shift))}};
}

// Several named tables; CSV prints each under a "# name" line, JSON nests them by name.
struct Document {
  std::vector<std::pair<std::string, Table>> tables;
  std::vector<std::pair<std::string, double>> scalars;

  void write(std::ostream& out, const RunConfig& cfg, const MorseParams& p) const {
    if (cfg.format == "json") {
      json doc = json::object();
      doc["params"] = params_json(p);
      for (const auto& [name, t] : tables) doc[name] = table_json(t);
      for (const auto& [name, v] : scalars) doc[name] = std::stod(format_number(v));
      out << doc.dump(2) << '\n';
      return;
    }
    const bool headers = tables.size() > 1;
    for (const auto& [name, t] : tables) {
      if (headers) out << "# " << name << '\n';
      write_csv(out, t);
    }
    for (const auto& [name, v] : scalars) out << "# " << name << '=' << format_number(v) << '\n';
  }
};

Cell opt_cell(bool present, double v) { return present ? Cell{v} : Cell{}; }

Document cmd_spectrum(const MorseParams& p) {
  const BoundStateSet bs = bound_energies(p);
  const auto w = discrete_weights(p);
  const auto wp = partner_discrete_weights(p);
  Table combined{{"m", "energy", "unshifted_energy", "weight", "partner_energy", "partner_weight"}, {}};
  Table bound{{"m", "energy", "unshifted_energy", "weight"}, {}};
  Table partner{{"m", "energy", "weight"}, {}};
  for (Index m = 0; m < bs.count; ++m) {
    const auto i = static_cast<std::size_t>(m);
    const bool has_partner = i < wp.size();
    const double wm = i < w.size() ? w[i] : 0.0;
    combined.rows.push_back({m, bs.energies(m), bs.unshifted(m), wm,
                             opt_cell(has_partner, bound_energy(p, m + 1)), opt_cell(has_partner, has_partner ? wp[i] : 0.0)});
    bound.rows.push_back({m, bs.energies(m), bs.unshifted(m), wm});
    if (has_partner) partner.rows.push_back({m, bound_energy(p, m + 1), wp[i]});
  }
  Document doc;
  doc.tables.push_back({"bound_states", std::move(bound)});
  doc.tables.push_back({"partner", std::move(partner)});
  doc.tables.push_back({"combined", std::move(combined)});
  return doc;
}

Document cmd_coefficients(const MorseParams& p, const RunConfig& cfg) {
  Table t{{"n", "a_tilde", "a", "b", "c", "d_next", "a_plus", "b_plus", "truncation"}, {}};
  const TridiagonalOperator op = shifted_operator(p);
  for (Index n = 0; n <= cfg.n_max; ++n) {
    const CdPair cd = closed_form_cd(p, n);
    const CoefficientPair pc = partner_coefficients(p, n);
    const double b = op.b(n);
    t.rows.push_back({n, h_tilde_coefficients(p, n).a, op.a(n), b, cd.c, cd.d_next, pc.a, pc.b,
                      std::string(b == 0.0 ? "yes" : "no")});
  }
  Document doc;
  doc.tables.push_back({"coefficients", std::move(t)});
  return doc;
}

Document cmd_poly(const MorseParams& p, const RunConfig& cfg, std::ostream& err) {
  const PolyFamily fam = morse_family(p);
  const PolyFamily pfam = morse_partner_family(p);
  const Index top = std::min(cfg.n_max, family_extent(fam, cfg.n_max) - 1);
  const Index ptop = std::min(cfg.n_max, family_extent(pfam, cfg.n_max) - 1);
  if (top < cfg.n_max) {
    err << "note: natural truncation, polynomials stop at n = " << top << '\n';
  }
  Table t{{"energy", "n", "P_recursion", "P_closed", "P_plus_recursion", "P_plus_closed", "K_recursion", "K_closed"},
          {}};
  double dp = 0.0;
  double dpp = 0.0;
  double dk = 0.0;
  for (double e : cfg.grid()) {
    const Eigen::VectorXd P = eval_recursion(fam, e, top);
    const Eigen::VectorXd Pp = partner_eval_recursion(pfam.op, e, ptop);
    const Eigen::VectorXd K = kernel_values(fam, e, top);
    for (Index n = 0; n <= top; ++n) {
      const double pc = eval_closed_form(p, e, n);
      const double kc = kernel_closed_form(p, e, n);
      dp = std::max(dp, std::abs(pc - P(n)) / std::max(1.0, std::abs(P(n))));
      dk = std::max(dk, std::abs(kc - K(n)) / std::max(1.0, std::abs(K(n))));
      Cell ppr;
      Cell ppc;
      if (n <= ptop) {
        const double v = partner_closed_form(p, e, n);
        dpp = std::max(dpp, std::abs(v - Pp(n)) / std::max(1.0, std::abs(Pp(n))));
        ppr = Pp(n);
        ppc = v;
      }
      t.rows.push_back({e, n, P(n), pc, ppr, ppc, K(n), kc});
    }
  }
  Document doc;
  doc.tables.push_back({"polynomials", std::move(t)});
  doc.scalars = {{"max_discrepancy_P", dp}, {"max_discrepancy_P_plus", dpp}, {"max_discrepancy_K", dk}};
  return doc;
}

Document cmd_factor(const MorseParams& p, const RunConfig& cfg, std::ostream& err) {
  const PolyFamily fam = morse_family(p);
  const Index nf = std::min(cfg.n_max, family_extent(fam, cfg.n_max + 1) - 1);
  std::vector<double> p0;
  for (Index n = 0; n <= nf + 1; ++n) p0.push_back(p_at_zero(p, n));
  const FactorCoefficients fc = factor_from_polynomials(fam.op, p0, nf);
  for (const auto& w : fc.warnings) err << "warning: " << w << '\n';
  Table t{{"n", "c_polynomial", "c_closed", "d_next_polynomial", "d_next_closed", "c2_plus_d2", "a", "c_d_next", "b"},
          {}};
  for (Index n = 0; n < *fc.c_extent; ++n) {
    const CdPair cd = closed_form_cd(p, n);
    const bool has_d = n + 1 < *fc.d_extent;
    const double d_next = has_d ? fc.d(n + 1) : 0.0;
    t.rows.push_back({n, fc.c(n), cd.c, opt_cell(has_d, d_next), cd.d_next, fc.c(n) * fc.c(n) + fc.d(n) * fc.d(n),
                      fam.op.a(n), opt_cell(has_d, fc.c(n) * d_next), fam.op.b(n)});
  }
  Document doc;
  doc.tables.push_back({"factor", std::move(t)});
  return doc;
}

Table discrete_table(const SpectralMeasure& mu) {
  Table t{{"m", "energy", "weight"}, {}};
  for (const auto& pt : mu.discrete) t.rows.push_back({pt.m, pt.energy, pt.weight});
  return t;
}

Document cmd_measure(const MorseParams& p, const RunConfig& cfg) {
  const SpectralMeasure mu = spectral_measure(p);
  const SpectralMeasure mp = partner_measure(p);
  Table dens{{"energy", "lambda", "omega", "omega_plus"}, {}};
  for (double e : cfg.grid()) {
    if (!(lambda_squared(p, e) > 0.0)) continue;
    dens.rows.push_back({e, std::sqrt(lambda_squared(p, e)), mu.density(e), mp.density(e)});
  }
  Document doc;
  doc.tables.push_back({"discrete", discrete_table(mu)});
  doc.tables.push_back({"partner_discrete", discrete_table(mp)});
  doc.tables.push_back({"density", std::move(dens)});
  doc.scalars = {{"continuous_edge", mu.continuous_edge}, {"total_mass", total_mass(mu)},
                 {"partner_total_mass", total_mass(mp)}};
  return doc;
}

int cmd_verify(const MorseParams& p, const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.n_max = cfg.n_max;
  opt.oracle = cfg.oracle;
  if (cfg.corrupt_b >= 0) opt.corrupt_b = cfg.corrupt_b;
  opt.energy_grid = cfg.grid();
  const VerificationReport rep = run_verification(p, opt);
  Table t{{"check", "status", "deviation", "tolerance", "note"}, {}};
  for (const auto& c : rep.checks) {
    t.rows.push_back({c.name, std::string(c.passed ? "pass" : "FAIL"), c.deviation, c.tolerance, c.note});
  }
  Document doc;
  doc.tables.push_back({"checks", std::move(t)});
  doc.write(out, cfg, p);
  return rep.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tridiagonal SUSY factorization of the Morse oscillator"};
  app.name(args.empty() ? "morsesusy" : args.front());
  RunConfig cfg;
  app.add_option("--V0", cfg.V0, "potential depth")->capture_default_str();
  app.add_option("--alpha", cfg.alpha, "inverse width")->capture_default_str();
  app.add_option("--gamma", cfg.gamma, "basis scale parameter")->capture_default_str();
  app.add_option("--nmax", cfg.n_max, "highest index")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--emin", cfg.e_min, "first grid energy")->capture_default_str();
  app.add_option("--emax", cfg.e_max, "last grid energy")->capture_default_str();
  app.add_option("--esteps", cfg.e_steps, "number of grid energies")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--oracle", cfg.oracle, "add finite-difference and quadrature checks to verify");
  app.add_option("--corrupt-b", cfg.corrupt_b, "test hook: scale b_n by 1.5 before verify")->group("");
  app.set_config("--config", "", "key=value file; flags override it");
  app.require_subcommand(1, 1);

  std::string command;
  for (const char* name : {"spectrum", "coefficients", "poly", "factor", "measure", "verify"}) {
    app.add_subcommand(name)->fallthrough()->callback([&command, name] { command = name; });
  }
  app.get_subcommand("spectrum")->description("bound and partner energies with their weights");
  app.get_subcommand("coefficients")->description("tridiagonal, factor and partner coefficients");
  app.get_subcommand("poly")->description("polynomials, partner polynomials and kernel over the energy grid");
  app.get_subcommand("factor")->description("c_n, d_n from P_n(0) next to their closed forms");
  app.get_subcommand("measure")->description("discrete weights, densities and total mass");
  app.get_subcommand("verify")->description("run the verification suite");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadParams;
  }

  try {
    const MorseParams p = derive_params(cfg.V0, cfg.alpha, cfg.gamma);
    if (cfg.e_steps > 1 && !(cfg.e_max > cfg.e_min)) {
      throw InvalidParameter("--emax must exceed --emin");
    }
    if (command == "verify") return cmd_verify(p, cfg, out);
    Document doc;
    if (command == "spectrum") {
      doc = cmd_spectrum(p);
      if (cfg.format == "csv") {
        // one table with the partner columns alongside
        write_csv(out, doc.tables.back().second);
        return kExitOk;
      }
      doc.tables.pop_back();
    } else if (command == "coefficients") {
      doc = cmd_coefficients(p, cfg);
    } else if (command == "poly") {
      doc = cmd_poly(p, cfg, err);
    } else if (command == "factor") {
      doc = cmd_factor(p, cfg, err);
    } else {
      doc = cmd_measure(p, cfg);
    }
    doc.write(out, cfg, p);
    return kExitOk;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadParams;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

}  // namespace morsesusy
