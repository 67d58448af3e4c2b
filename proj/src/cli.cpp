#include "zalcman/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "zalcman/bounds.hpp"
#include "zalcman/falpha.hpp"
#include "zalcman/functional.hpp"
#include "zalcman/report.hpp"
#include "zalcman/search.hpp"
#include "zalcman/selfcheck.hpp"

namespace zalcman {

namespace {

constexpr const char* kFeketeSzegoNote =
    "class S bound, exponent read as -2*lambda/(1-lambda) so that lambda->1 gives 1";

struct Options {
  std::string alpha;
  std::string lambda;
  std::string n;
  std::optional<int> atoms;
  int starts = 32;
  int iters = 2000;
  std::uint64_t seed = 0;
  std::string format = "pretty";
  bool json = false;
  std::string out_path;
  std::string measure_path;
};

double parse_real(const std::string& text, const char* what) {
  const auto list = parse_real_list(text);
  if (list.size() != 1) throw UsageError(fmt::format("--{} expects a single real", what));
  return list.front();
}

double required_real(const std::string& text, const char* what) {
  if (text.empty()) throw UsageError(fmt::format("--{} is required", what));
  return parse_real(text, what);
}

OutputFormat output_format(const Options& o) {
  if (o.json || o.format == "json") return OutputFormat::Json;
  if (o.format == "csv") return OutputFormat::Csv;
  if (o.format == "pretty") return OutputFormat::Pretty;
  throw UsageError("--format must be json, csv or pretty");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.atom_count = o.atoms;
  cfg.starts = o.starts;
  cfg.max_iters = o.iters;
  cfg.seed = o.seed;
  cfg.validate();
  return cfg;
}

Table bound_table(const Options& o) {
  const double lam = required_real(o.lambda, "lambda");
  const auto ns = parse_n_range(o.n.empty() ? "3" : o.n);
  Table t{{"alpha", "lambda", "n", "A_n", "A_2n1", "C_n", "regime", "bound", "theorem", "note"}};
  for (int n : ns) {
    if (n == 2) {
      if (!(lam < 1.0)) throw UsageError("n=2 reports the class S bound, which needs lambda < 1");
      t.add({{}, lam, 2LL, {}, {}, {}, {}, fekete_szego_S(lam), std::string("class-S:fekete-szego"),
             std::string(kFeketeSzegoNote)});
      continue;
    }
    if (n < 3) throw UsageError("--n must be >= 2");
    const Alpha alpha{required_real(o.alpha, "alpha")};
    const auto b = sharp_bound(alpha, Lambda{lam}, n);
    t.add({alpha.value(), lam, static_cast<long long>(n), b.a_n, b.a_2n_1, b.c_n,
           std::string(to_string(b.regime)), b.value, std::string(b.theorem_tag()), {}});
  }
  return t;
}

Table coeffs_table(const Options& o) {
  const Alpha alpha{required_real(o.alpha, "alpha")};
  const auto ns = parse_n_range(o.n.empty() ? "8" : o.n);
  const int n_max = std::max(2, *std::max_element(ns.begin(), ns.end()));
  const auto f = o.measure_path.empty()
                     ? extremal_falpha_coeffs(alpha, n_max)
                     : coeffs_from_measure(alpha, parse_measure(read_file(o.measure_path)), n_max);
  const auto A = An_table(alpha, n_max);
  Table t{{"n", "re", "im", "abs", "A_n"}};
  for (int n = 1; n <= n_max; ++n) {
    t.add({static_cast<long long>(n), f(n).real(), f(n).imag(), std::abs(f(n)), A[n - 1]});
  }
  return t;
}

Table phi_table(const Options& o) {
  const Alpha alpha{required_real(o.alpha, "alpha")};
  const Lambda lambda{required_real(o.lambda, "lambda")};
  const int n = static_cast<int>(required_real(o.n, "n"));
  if (n < 3) throw UsageError("--n must be >= 3");
  const auto mu = o.measure_path.empty() ? extremal_measure(alpha, lambda, n)
                                         : parse_measure(read_file(o.measure_path));
  const auto value = phi(lambda, n, coeffs_from_measure(alpha, mu, 2 * n - 1));
  const auto b = sharp_bound(alpha, lambda, n);
  Table t{{"alpha", "lambda", "n", "phi_re", "phi_im", "modulus", "bound", "gap"}};
  t.add({alpha.value(), lambda.value(), static_cast<long long>(n), value.value.real(),
         value.value.imag(), value.modulus, b.value, b.value - value.modulus});
  return t;
}

const std::vector<std::string> kSearchColumns{
    "alpha", "lambda", "n", "A_n", "A_2n1", "C_n", "regime", "bound", "theorem",
    "best_modulus", "gap", "seeded_gap", "starts_used", "iterations_total", "converged",
    "violations", "extremal"};

std::vector<Cell> search_row(double alpha, double lambda, int n, const SearchResult& r) {
  const auto& b = r.bound;
  return {alpha, lambda, static_cast<long long>(n), b.a_n, b.a_2n_1, b.c_n,
          std::string(to_string(b.regime)), b.value, std::string(b.theorem_tag()), r.best_modulus,
          r.gap, b.value - r.seeded_modulus, static_cast<long long>(r.starts_used),
          static_cast<long long>(r.iterations_total), std::string(r.converged ? "true" : "false"),
          static_cast<long long>(r.violations), std::string(to_string(b.extremal))};
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw UsageError("cannot write " + o.out_path);
  file << text;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const Alpha alpha{required_real(o.alpha, "alpha")};
  const Lambda lambda{required_real(o.lambda, "lambda")};
  const int n = static_cast<int>(required_real(o.n, "n"));
  if (n < 3) throw UsageError("--n must be >= 3");
  const auto cfg = search_config(o);
  const auto r = maximize_phi(alpha, lambda, n, cfg);

  Table t{kSearchColumns};
  t.add(search_row(alpha.value(), lambda.value(), n, r));
  const auto format = output_format(o);
  std::string text;
  if (format == OutputFormat::Json) {
    auto doc = to_json(t).front();
    doc["measure"] = measure_to_json(r.best_measure);
    if (r.worst_measure) doc["violating_measure"] = measure_to_json(*r.worst_measure);
    text = doc.dump(2) + "\n";
  } else {
    text = render(t, format);
    if (format == OutputFormat::Pretty) {
      text += "\nbest measure:\n";
      for (const auto& a : r.best_measure.atoms()) {
        text += fmt::format("  theta={:.12g}  w={:.12g}\n", a.theta, a.weight);
      }
    }
  }
  emit(o, text, out);
  if (!r.sound()) {
    err << fmt::format("bound violated: alpha={} lambda={} n={} excess={}\n", alpha.value(),
                       lambda.value(), n, r.worst_excess);
    return kExitBoundViolation;
  }
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepGrid grid = SweepGrid::defaults();
  if (!o.alpha.empty()) grid.alphas = parse_real_list(o.alpha);
  if (!o.lambda.empty()) grid.lambdas = parse_real_list(o.lambda);
  if (!o.n.empty()) grid.ns = parse_n_range(o.n);
  const auto report = falsification_sweep(grid, search_config(o));

  Table t{kSearchColumns};
  t.columns.push_back("attainment_asserted");
  for (const auto& row : report.rows) {
    auto cells = search_row(row.alpha, row.lambda, row.n, row.result);
    cells.emplace_back(std::string(row.attainment_asserted ? "true" : "false"));
    t.add(std::move(cells));
  }
  const auto format = output_format(o);
  std::string text;
  if (format == OutputFormat::Json) {
    nlohmann::json doc;
    doc["rows"] = to_json(t);
    doc["violations"] = report.violations;
    doc["attainment_failures"] = report.attainment_failures;
    doc["status"] = report.failed() ? "FAILED" : "OK";
    for (const auto& [regime, gap] : report.worst_gap) {
      doc["worst_gap"][std::string(to_string(regime))] = gap;
    }
    text = doc.dump(2) + "\n";
  } else {
    text = render(t, format);
    if (format == OutputFormat::Pretty) {
      for (const auto& [regime, gap] : report.worst_gap) {
        text += fmt::format("worst gap {}: {:.3g}\n", to_string(regime), gap);
      }
      text += fmt::format("status: {} ({} violations, {} attainment failures)\n",
                          report.failed() ? "FAILED" : "OK", report.violations,
                          report.attainment_failures);
    }
  }
  emit(o, text, out);
  if (report.failed()) {
    for (const auto& row : report.rows) {
      if (!row.result.sound()) {
        err << fmt::format("bound violated: alpha={} lambda={} n={} excess={}\n", row.alpha,
                           row.lambda, row.n, row.result.worst_excess);
      }
    }
    return kExitBoundViolation;
  }
  return kExitOk;
}

int cmd_selfcheck(const Options& o, std::ostream& out, std::ostream& err) {
  const auto report = run_selfcheck();
  const auto format = output_format(o);
  std::string text;
  if (format == OutputFormat::Json) {
    nlohmann::json doc;
    doc["ok"] = report.ok();
    for (const auto& s : report.suites) {
      nlohmann::json j{{"name", s.name}, {"passed", s.passed}, {"cases", s.cases}};
      if (!s.detail.empty()) j["detail"] = s.detail;
      doc["suites"].push_back(std::move(j));
    }
    text = doc.dump(2) + "\n";
  } else {
    for (const auto& s : report.suites) {
      text += fmt::format("{} {} ({} cases){}\n", s.passed ? "PASS" : "FAIL", s.name, s.cases,
                          s.detail.empty() ? "" : ": " + s.detail);
    }
  }
  emit(o, text, out);
  if (!report.ok()) {
    for (const auto& s : report.suites) {
      if (!s.passed) err << "self-check failed: " << s.name << ": " << s.detail << "\n";
    }
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

std::vector<int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad n value '" + text + "'");
    return v;
  };
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty n range '" + text + "'");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  }
  if (out.empty()) throw UsageError("empty n range");
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("bad real value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("expected at least one real value");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp generalized Zalcman bounds for convex functions of order alpha"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json|csv|pretty");
    sub->add_option("--out", o.out_path, "write the report to this file");
    sub->add_option("--seed", o.seed, "random seed");
  };
  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "order alpha in [-1/2, 1)");
    sub->add_option("--lambda", o.lambda, "lambda > 0");
    sub->add_option("--n", o.n, "n, or an inclusive range a..b");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--atoms", o.atoms, "atoms per measure (default 2n-2)");
    sub->add_option("--starts", o.starts, "number of starts");
    sub->add_option("--iters", o.iters, "iterations per start");
  };

  auto* bound = app.add_subcommand("bound", "sharp bound table over a range of n");
  auto* coeffs = app.add_subcommand("coeffs", "Taylor coefficients of f_alpha or a measure");
  auto* phi_cmd = app.add_subcommand("phi", "evaluate the functional at a measure");
  auto* search = app.add_subcommand("search", "maximize |phi| over discrete measures");
  auto* sweep = app.add_subcommand("sweep", "falsification sweep over a parameter grid");
  auto* selfcheck = app.add_subcommand("selfcheck", "run the invariant suites");
  for (auto* sub : {bound, coeffs, phi_cmd, search, sweep, selfcheck}) add_common(sub);
  for (auto* sub : {bound, coeffs, phi_cmd, search, sweep}) add_problem(sub);
  for (auto* sub : {search, sweep}) add_search(sub);
  for (auto* sub : {coeffs, phi_cmd}) {
    sub->add_option("--measure", o.measure_path, "JSON file: [{\"theta\": .., \"w\": ..}, ...]");
  }
  selfcheck->add_flag("--json", o.json, "machine-readable report");

  std::vector<const char*> argv{"zalcman"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    output_format(o);
    if (*bound) {
      emit(o, render(bound_table(o), output_format(o)), out);
      return kExitOk;
    }
    if (*coeffs) {
      emit(o, render(coeffs_table(o), output_format(o)), out);
      return kExitOk;
    }
    if (*phi_cmd) {
      emit(o, render(phi_table(o), output_format(o)), out);
      return kExitOk;
    }
    if (*search) return cmd_search(o, out, err);
    if (*sweep) return cmd_sweep(o, out, err);
    return cmd_selfcheck(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace zalcman
