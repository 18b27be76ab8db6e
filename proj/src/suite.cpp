#include "gbd/suite.hpp"

#include "gbd/analysis.hpp"
#include "gbd/errors.hpp"
#include "gbd/experiments.hpp"
#include "gbd/moments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace gbd {

ConfigError::ConfigError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                        message
                                  : message),
      line_(line), column_(column) {}

namespace {

const std::set<std::string> task_kinds = {"table", "figure", "lemma", "order", "bound", "voronovskaja"};

[[noreturn]] void schema_error(std::size_t index, const std::string& message) {
  throw ConfigError("tasks[" + std::to_string(index) + "]: " + message);
}

void require(const Json& task, std::size_t index, const char* key, bool (Json::*is)() const noexcept,
             const char* what) {
  if (!task.contains(key)) schema_error(index, std::string("missing field '") + key + "'");
  if (!(task[key].*is)()) schema_error(index, std::string("field '") + key + "' must be " + what);
}

void optional_field(const Json& task, std::size_t index, const char* key, bool (Json::*is)() const noexcept,
                    const char* what) {
  if (task.contains(key) && !(task[key].*is)())
    schema_error(index, std::string("field '") + key + "' must be " + what);
}

bool is_rational_list(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_string() || v.is_number(); });
}

void validate_function(const Json& task, std::size_t index) {
  if (!task.contains("function")) schema_error(index, "missing field 'function'");
  const Json& f = task["function"];
  if (f.is_string()) return;
  if (f.is_object() && f.contains("polynomial") && is_rational_list(f["polynomial"]) && !f["polynomial"].empty())
    return;
  schema_error(index, "field 'function' must be a name or {\"polynomial\": [coefficients]}");
}

void validate_family(const Json& task, std::size_t index) {
  require(task, index, "family", &Json::is_string, "a string");
  try {
    parse_family_kind(task["family"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    schema_error(index, e.what());
  }
  optional_field(task, index, "sequences", &Json::is_string, "a string");
}

bool is_int_or_int_list(const Json& j) {
  if (j.is_number_integer()) return true;
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_number_integer(); });
}

bool is_number_or_list(const Json& j) {
  if (j.is_number()) return true;
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_number(); });
}

void validate_task(const Json& task, std::size_t index) {
  if (!task.is_object()) schema_error(index, "task must be an object");
  require(task, index, "kind", &Json::is_string, "a string");
  const auto kind = task["kind"].get<std::string>();
  if (!task_kinds.count(kind)) schema_error(index, "unknown kind '" + kind + "'");

  if (kind == "table") {
    require(task, index, "id", &Json::is_number_integer, "an integer");
    const int id = task["id"].get<int>();
    if (id < 1 || id > 6) schema_error(index, "unknown table id " + std::to_string(id));
  } else if (kind == "figure") {
    require(task, index, "id", &Json::is_number_integer, "an integer");
    const int id = task["id"].get<int>();
    if (id < 1 || id > 12) schema_error(index, "unknown figure id " + std::to_string(id));
    require(task, index, "out", &Json::is_string, "a string");
    optional_field(task, index, "points", &Json::is_number_integer, "an integer");
    optional_field(task, index, "format", &Json::is_string, "a string");
    if (task.contains("format")) {
      const auto format = task["format"].get<std::string>();
      if (format != "csv" && format != "json") schema_error(index, "format must be csv or json");
    }
  } else if (kind == "lemma") {
    require(task, index, "lemma", &Json::is_string, "a string");
    try {
      parse_lemma(task["lemma"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error(index, e.what());
    }
    if (task.contains("n") && !is_int_or_int_list(task["n"])) schema_error(index, "field 'n' must be integers");
    if (task.contains("x") && !is_rational_list(task["x"])) schema_error(index, "field 'x' must be a list");
    if (task.contains("alpha0") && !is_rational_list(task["alpha0"]))
      schema_error(index, "field 'alpha0' must be a list");
  } else if (kind == "order") {
    validate_family(task, index);
    validate_function(task, index);
    require(task, index, "x", &Json::is_number, "a number");
    require(task, index, "n_list", &Json::is_array, "a list");
    if (!is_int_or_int_list(task["n_list"])) schema_error(index, "field 'n_list' must be integers");
    optional_field(task, index, "expected_slope", &Json::is_number, "a number");
    optional_field(task, index, "tolerance", &Json::is_number, "a number");
  } else if (kind == "bound") {
    validate_function(task, index);
    if (!task.contains("n") || !is_int_or_int_list(task["n"])) schema_error(index, "field 'n' must be integers");
    optional_field(task, index, "grid", &Json::is_number_integer, "an integer");
    optional_field(task, index, "sequences", &Json::is_string, "a string");
  } else if (kind == "voronovskaja") {
    validate_function(task, index);
    if (!task.contains("x") || !is_number_or_list(task["x"])) schema_error(index, "field 'x' must be numbers");
    if (task.contains("n") && !is_int_or_int_list(task["n"])) schema_error(index, "field 'n' must be integers");
    optional_field(task, index, "sequences", &Json::is_string, "a string");
    optional_field(task, index, "l0", &Json::is_number, "a number");
    optional_field(task, index, "rel_tol", &Json::is_number, "a number");
  }
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  // nlohmann reports the byte after the offending token.
  return {line, std::max(1, column - 1)};
}

// ---------------------------------------------------------------------------

Rational rational_of(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  std::ostringstream s;
  s.precision(17);
  s << j.get<double>();
  return parse_rational(s.str());
}

std::vector<int> ints_of(const Json& j) {
  if (j.is_number_integer()) return {j.get<int>()};
  return j.get<std::vector<int>>();
}

std::vector<double> doubles_of(const Json& j) {
  if (j.is_number()) return {j.get<double>()};
  return j.get<std::vector<double>>();
}

TestFunction function_of(const Json& j) {
  if (j.is_string()) return TestFunction::builtin(j.get<std::string>());
  std::vector<Rational> coefficients;
  for (const auto& c : j["polynomial"]) coefficients.push_back(rational_of(c));
  return TestFunction::polynomial(Polynomial<Rational>(std::move(coefficients)));
}

FamilyOptions family_options_of(const Json& task) {
  FamilyOptions options;
  options.kind = parse_family_kind(task["family"].get<std::string>());
  if (task.contains("sequences")) options.sequences = task["sequences"].get<std::string>();
  if (task.contains("alpha0")) options.alpha0 = rational_of(task["alpha0"]);
  if (task.contains("beta0")) options.beta0 = rational_of(task["beta0"]);
  if (task.contains("beta2")) options.beta2 = rational_of(task["beta2"]);
  return options;
}

std::string status_of(bool ok) { return ok ? "pass" : "fail"; }

void run_table(const Json& task, SuiteItem& item) {
  const ErrorTable table = reproduce_table(task["id"].get<int>());
  auto flagged = Json::array();
  for (const auto& c : table.cells)
    if (c.status != CellStatus::Pass)
      flagged.push_back(Json{{"x", c.x},
                             {"column", c.column},
                             {"computed", c.computed},
                             {"published", c.published_text},
                             {"delta", c.delta},
                             {"status", to_string(c.status)}});
  item.detail = Json{{"table", table.id},
                     {"cells", table.cells.size()},
                     {"pass", table.count(CellStatus::Pass)},
                     {"fail", table.count(CellStatus::Fail)},
                     {"known_discrepancy", table.count(CellStatus::KnownDiscrepancy)},
                     {"max_delta", table.max_delta()},
                     {"deviations", std::move(flagged)}};
  item.status = status_of(table.passed());
  item.message = std::to_string(table.count(CellStatus::Fail)) + " of " + std::to_string(table.cells.size()) +
                 " cells outside tolerance";
}

void run_figure(const Json& task, SuiteItem& item, const std::filesystem::path& base_dir) {
  std::filesystem::path out = task["out"].get<std::string>();
  if (out.is_relative()) out = base_dir / out;
  std::string format = task.value("format", "");
  if (format.empty()) format = out.extension() == ".json" ? "json" : "csv";
  const int points = task.value("points", 201);
  emit_figure(task["id"].get<int>(), points, out, parse_figure_format(format));
  item.detail = Json{{"figure", task["id"]}, {"points", points}, {"format", format}, {"out", out.string()}};
  item.status = "pass";
  item.message = "wrote " + out.string();
}

void run_lemma(const Json& task, SuiteItem& item) {
  const Lemma lemma = parse_lemma(task["lemma"].get<std::string>());
  std::vector<int> ns;
  if (task.contains("n")) {
    ns = ints_of(task["n"]);
  } else {
    const int lo = lemma == Lemma::Tilde3CentralMoments ? 5 : 2;
    const int hi = lemma == Lemma::Tilde3CentralMoments ? 16 : 20;
    for (int n = lo; n <= hi; ++n) ns.push_back(n);
  }
  std::vector<Rational> xs;
  if (task.contains("x")) {
    for (const auto& v : task["x"]) xs.push_back(rational_of(v));
  } else {
    for (const char* s : {"0", "1/7", "1/3", "1/2", "2/3", "6/7", "1"}) xs.push_back(parse_rational(s));
  }
  std::vector<Rational> alphas;
  const bool uses_alpha = lemma == Lemma::U1Moments || lemma == Lemma::U1CentralMoments;
  if (uses_alpha) {
    if (task.contains("alpha0")) {
      for (const auto& v : task["alpha0"]) alphas.push_back(rational_of(v));
    } else {
      for (const char* s : {"0", "1/3", "9/20", "1"}) alphas.push_back(parse_rational(s));
    }
  } else {
    alphas.push_back(0);
  }

  std::size_t checks = 0, violations = 0;
  auto failures = Json::array();
  for (const auto& a0 : alphas) {
    const auto reports = verify_lemma(lemma, ns, xs, AlphaSequences::constant(a0));
    for (const auto& r : reports) {
      ++checks;
      if (r.consistent()) continue;
      ++violations;
      if (failures.size() < 20)
        failures.push_back(Json{{"n", r.n},
                                {"x", to_string(r.x)},
                                {"order", r.order},
                                {"alpha0", to_string(a0)},
                                {"closed_form", r.closed_form},
                                {"oracle", r.oracle}});
    }
  }
  item.detail = Json{{"lemma", lemma_name(lemma)}, {"checks", checks}, {"violations", violations},
                     {"failures", std::move(failures)}};
  item.status = status_of(violations == 0);
  item.message = std::to_string(violations) + " of " + std::to_string(checks) + " identities violated";
}

void run_order(const Json& task, SuiteItem& item) {
  const Family family = make_family(family_options_of(task));
  const TestFunction f = function_of(task["function"]);
  const auto ns = ints_of(task["n_list"]);
  const OrderFit fit = fit_convergence_order(family, f, task["x"].get<double>(), ns);
  item.detail = Json{{"family", family_name(fit.family)}, {"function", fit.function}, {"x", fit.x},
                     {"n", fit.n_values},           {"errors", fit.errors},     {"fitted_n", fit.fitted_n},
                     {"slope", fit.slope},          {"r_squared", fit.r_squared}};
  if (task.contains("expected_slope")) {
    const double expected = task["expected_slope"].get<double>();
    const double tolerance = task.value("tolerance", 0.25);
    item.status = status_of(std::abs(fit.slope - expected) <= tolerance);
    std::ostringstream s;
    s << "slope " << fit.slope << ", expected " << expected << " +- " << tolerance;
    item.message = s.str();
  } else {
    item.status = "pass";
    item.message = "slope " + std::to_string(fit.slope);
  }
}

void run_bound(const Json& task, SuiteItem& item) {
  const TestFunction f = function_of(task["function"]);
  const AlphaSequences alpha = alpha_sequences_by_name(task.value("sequences", "standard"));
  const int grid = task.value("grid", 401);
  bool all = true;
  auto checks = Json::array();
  for (int n : ints_of(task["n"])) {
    const BoundCheck b = check_theorem1_bound(alpha, f, n, grid);
    all = all && b.holds;
    checks.push_back(Json{{"n", n}, {"lhs", b.lhs}, {"omega", b.omega}, {"rhs", b.rhs}, {"holds", b.holds}});
  }
  item.detail = Json{{"function", f.name()}, {"grid", grid}, {"checks", std::move(checks)}};
  item.status = status_of(all);
  item.message = all ? "bound holds" : "bound violated";
}

void run_voronovskaja(const Json& task, SuiteItem& item) {
  const TestFunction f = function_of(task["function"]);
  const AlphaSequences alpha = alpha_sequences_by_name(task.value("sequences", "standard"));
  double l0 = 0.0;
  if (task.contains("l0")) l0 = task["l0"].get<double>();
  else if (alpha.alpha0_limit) l0 = *alpha.alpha0_limit;
  else throw std::invalid_argument("sequences carry no alpha0 limit; give l0");
  const double rel_tol = task.value("rel_tol", 0.05);
  std::vector<int> ns = task.contains("n") ? ints_of(task["n"]) : std::vector<int>{256, 1024, 4096};

  bool all = true;
  auto points = Json::array();
  for (double x : doubles_of(task["x"])) {
    const double target = voronovskaja_target(l0, f, x).value;
    std::vector<double> residuals;
    for (int n : ns) residuals.push_back(voronovskaja_residual(alpha, l0, f, x, n));
    bool decreasing = true;
    for (std::size_t i = 1; i < residuals.size(); ++i) decreasing = decreasing && residuals[i] < residuals[i - 1];
    const bool close = residuals.back() <= rel_tol * std::abs(target);
    all = all && decreasing && close;
    points.push_back(
        Json{{"x", x}, {"target", target}, {"residuals", residuals}, {"decreasing", decreasing}, {"within", close}});
  }
  item.detail = Json{{"function", f.name()}, {"l0", l0}, {"n", ns}, {"rel_tol", rel_tol}, {"points", std::move(points)}};
  item.status = status_of(all);
  item.message = all ? "residuals decrease and meet tolerance" : "residual check failed";
}

} // namespace

Json parse_config(std::string_view text) {
  Json config;
  try {
    config = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ConfigError(what, line, column);
  }
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  if (!config.contains("tasks")) throw ConfigError("config has no 'tasks' array");
  if (!config["tasks"].is_array()) throw ConfigError("'tasks' must be an array");
  for (std::size_t i = 0; i < config["tasks"].size(); ++i) validate_task(config["tasks"][i], i);
  return config;
}

Json load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::size_t SuiteSummary::count(const std::string& status) const {
  return static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [&](const SuiteItem& i) { return i.status == status; }));
}

Json SuiteSummary::to_json() const {
  auto list = Json::array();
  for (const auto& item : items)
    list.push_back(Json{{"index", item.index},
                        {"kind", item.kind},
                        {"status", item.status},
                        {"message", item.message},
                        {"detail", item.detail}});
  return Json{{"tasks", items.size()},
              {"pass", count("pass")},
              {"fail", count("fail")},
              {"error", count("error")},
              {"items", std::move(list)}};
}

SuiteSummary run_suite(const Json& config, const std::filesystem::path& base_dir) {
  SuiteSummary summary;
  const Json& tasks = config.at("tasks");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Json& task = tasks[i];
    SuiteItem item;
    item.index = i;
    item.kind = task.at("kind").get<std::string>();
    item.detail = Json::object();
    try {
      if (item.kind == "table") run_table(task, item);
      else if (item.kind == "figure") run_figure(task, item, base_dir);
      else if (item.kind == "lemma") run_lemma(task, item);
      else if (item.kind == "order") run_order(task, item);
      else if (item.kind == "bound") run_bound(task, item);
      else if (item.kind == "voronovskaja") run_voronovskaja(task, item);
      else throw std::invalid_argument("unknown kind '" + item.kind + "'");
    } catch (const std::exception& e) {
      item.status = "error";
      item.message = e.what();
    }
    summary.items.push_back(std::move(item));
  }
  return summary;
}

} // namespace gbd
