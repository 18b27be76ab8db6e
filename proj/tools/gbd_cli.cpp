#include "gbd/analysis.hpp"
#include "gbd/errors.hpp"
#include "gbd/experiments.hpp"
#include "gbd/moments.hpp"
#include "gbd/suite.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct FamilyArgs {
  std::string family = "modified1";
  std::string sequences = "standard";
  std::string alpha0;
  std::string beta0 = "1";
  std::string beta2 = "1";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--family", family, "classical, modified1, general2, tilde2 or tilde3")->required();
    cmd.add_option("--sequences", sequences, "modified1 sequences: standard, classical, nonpositive");
    cmd.add_option("--alpha0", alpha0, "modified1 with constant alpha0 (rational, e.g. 9/20)");
    cmd.add_option("--beta0", beta0, "general2 beta0");
    cmd.add_option("--beta2", beta2, "general2 beta2");
  }

  gbd::Family make() const {
    gbd::FamilyOptions options;
    options.kind = gbd::parse_family_kind(family);
    options.sequences = sequences;
    if (!alpha0.empty()) options.alpha0 = gbd::parse_rational(alpha0);
    options.beta0 = gbd::parse_rational(beta0);
    options.beta2 = gbd::parse_rational(beta2);
    return gbd::make_family(options);
  }
};

std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", v);
  return buffer;
}

int run_table(int id, const std::string& format, const std::string& out_path) {
  const auto table = gbd::reproduce_table(id);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (format == "csv") gbd::write_table_csv(table, out);
  else if (format == "json") gbd::write_table_json(table, out);
  else gbd::write_table_text(table, out);
  return table.passed() ? exit_ok : exit_failed;
}

int run_moments(const FamilyArgs& args, int n, const std::string& x_text, int max_order) {
  const gbd::OperatorSpec spec(args.make(), n);
  const gbd::Rational x = gbd::parse_rational(x_text);
  if (x < 0 || x > 1) throw gbd::DomainError("x must lie in [0,1]");
  const auto m = gbd::moments_exact(spec, max_order, x);
  std::cout << "family " << gbd::family_name(spec.kind()) << ", n = " << n << ", x = " << gbd::to_string(x) << "\n";
  std::cout << "k  m_k  mu_k\n";
  for (int k = 0; k <= max_order; ++k) {
    const auto mu = gbd::central_moment_from_moments(m, k, x);
    std::cout << k << "  " << gbd::to_string(m[static_cast<std::size_t>(k)]) << " (" << fmt(gbd::to_double(m[static_cast<std::size_t>(k)]))
              << ")  " << gbd::to_string(mu) << " (" << fmt(gbd::to_double(mu)) << ")\n";
  }
  return exit_ok;
}

int run_order(const FamilyArgs& args, const std::string& function, double x, const std::vector<int>& ns,
              std::optional<double> expected, double tolerance) {
  const auto f = gbd::TestFunction::builtin(function);
  const auto fit = gbd::fit_convergence_order(args.make(), f, x, ns);
  std::cout << "n,error\n";
  for (std::size_t i = 0; i < fit.n_values.size(); ++i) std::cout << fit.n_values[i] << "," << fmt(fit.errors[i]) << "\n";
  std::cout << "slope " << fmt(fit.slope) << ", r^2 " << fmt(fit.r_squared) << "\n";
  if (!expected) return exit_ok;
  const bool ok = std::abs(fit.slope - *expected) <= tolerance;
  std::cout << (ok ? "PASS" : "FAIL") << ": expected " << fmt(*expected) << " +- " << fmt(tolerance) << "\n";
  return ok ? exit_ok : exit_failed;
}

int run_bound(int n, const std::string& function, const std::string& sequences, int grid) {
  const auto f = gbd::TestFunction::builtin(function);
  const auto check = gbd::check_theorem1_bound(gbd::alpha_sequences_by_name(sequences), f, n, grid);
  std::cout << "lhs " << fmt(check.lhs) << ", omega " << fmt(check.omega) << ", rhs " << fmt(check.rhs) << "\n"
            << (check.holds ? "PASS" : "FAIL") << "\n";
  return check.holds ? exit_ok : exit_failed;
}

int run_suite(const std::string& config_path, const std::string& summary_path) {
  const auto config = gbd::load_config(config_path);
  const auto base = std::filesystem::path(config_path).parent_path();
  const auto summary = gbd::run_suite(config, base);
  const std::string text = summary.to_json().dump(2) + "\n";
  if (summary_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(summary_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + summary_path + "' for writing");
    out << text;
    for (const auto& item : summary.items)
      std::cout << "[" << item.index << "] " << item.kind << ": " << item.status << " (" << item.message << ")\n";
  }
  return summary.all_passed() ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genuine Bernstein-Durrmeyer operators: tables, figures, moments and checks"};
  app.require_subcommand(1);

  int table_id = 0;
  std::string table_format = "text";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Reproduce an error table and compare with the published values");
  table->add_option("--id", table_id, "table id, 1-6")->required();
  table->add_option("--format", table_format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--out", table_out, "write to a file instead of stdout");

  int figure_id = 0;
  int figure_points = 201;
  std::string figure_out;
  std::string figure_format = "csv";
  auto* figure = app.add_subcommand("figure", "Write the data series of a figure");
  figure->add_option("--id", figure_id, "figure id, 1-12")->required();
  figure->add_option("--points", figure_points, "grid points, at least 51");
  figure->add_option("--out", figure_out, "output file")->required();
  figure->add_option("--format", figure_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  FamilyArgs moment_family;
  int moment_n = 0;
  std::string moment_x;
  int moment_order = 4;
  auto* moments = app.add_subcommand("moments", "Exact moments and central moments at a point");
  moment_family.add_to(*moments);
  moments->add_option("--n", moment_n, "degree")->required();
  moments->add_option("--x", moment_x, "point in [0,1], rational or decimal")->required();
  moments->add_option("--max-order", moment_order, "highest order")->check(CLI::Range(0, 12));

  FamilyArgs order_family;
  double order_x = 0.3;
  std::vector<int> order_ns;
  std::string order_function = "g3";
  std::optional<double> order_expected;
  double order_tolerance = 0.25;
  auto* order = app.add_subcommand("order", "Empirical order of convergence at a point");
  order_family.add_to(*order);
  order->add_option("--x", order_x, "point in [0,1]")->required();
  order->add_option("--n-list", order_ns, "increasing degrees")->required();
  order->add_option("--function", order_function, "g1, g2, g3 or e<k>");
  order->add_option("--expected", order_expected, "expected slope; enables pass/fail");
  order->add_option("--tolerance", order_tolerance, "slope tolerance");

  int bound_n = 0;
  std::string bound_function;
  std::string bound_sequences = "standard";
  int bound_grid = 401;
  auto* bound = app.add_subcommand("bound", "Check the uniform modulus-of-continuity bound");
  bound->add_option("--n", bound_n, "degree")->required();
  bound->add_option("--function", bound_function, "g1, g2 or g3")->required()->check(CLI::IsMember({"g1", "g2", "g3"}));
  bound->add_option("--sequences", bound_sequences, "standard, classical or nonpositive");
  bound->add_option("--grid", bound_grid, "evaluation grid points");

  std::string suite_config;
  std::string suite_summary;
  auto* suite = app.add_subcommand("suite", "Run a JSON task list and print a JSON summary");
  suite->add_option("--config", suite_config, "config file")->required();
  suite->add_option("--summary", suite_summary, "write the summary to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*table) return run_table(table_id, table_format, table_out);
    if (*figure) {
      gbd::emit_figure(figure_id, figure_points, figure_out, gbd::parse_figure_format(figure_format));
      return exit_ok;
    }
    if (*moments) return run_moments(moment_family, moment_n, moment_x, moment_order);
    if (*order) return run_order(order_family, order_function, order_x, order_ns, order_expected, order_tolerance);
    if (*bound) return run_bound(bound_n, bound_function, bound_sequences, bound_grid);
    if (*suite) return run_suite(suite_config, suite_summary);
  } catch (const gbd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}
