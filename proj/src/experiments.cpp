#include "gbd/experiments.hpp"

#include "gbd/errors.hpp"
#include "gbd/kernels.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace gbd {

FamilyKind parse_family_kind(const std::string& name) {
  static const std::map<std::string, FamilyKind> names = {
      {"classical", FamilyKind::ClassicalGenuine}, {"modified1", FamilyKind::Modified1},
      {"general2", FamilyKind::General2},          {"tilde2", FamilyKind::Tilde2},
      {"tilde3", FamilyKind::Tilde3},
  };
  auto it = names.find(name);
  if (it == names.end())
    throw std::invalid_argument("unknown family '" + name + "'");
  return it->second;
}

AlphaSequences alpha_sequences_by_name(const std::string& name) {
  if (name == "standard")
    return AlphaSequences::standard();
  if (name == "classical")
    return AlphaSequences::classical();
  if (name == "nonpositive")
    return AlphaSequences::nonpositive_example();
  throw std::invalid_argument("unknown sequences '" + name + "'");
}

Family make_family(const FamilyOptions& options) {
  switch (options.kind) {
  case FamilyKind::ClassicalGenuine:
    return ClassicalGenuine{};
  case FamilyKind::Modified1:
    if (options.alpha0)
      return Modified1{AlphaSequences::constant(*options.alpha0)};
    return Modified1{alpha_sequences_by_name(options.sequences)};
  case FamilyKind::General2:
    return General2{
        BetaGammaSequences::from_free(Sequence::constant(options.beta0), Sequence::constant(options.beta2))};
  case FamilyKind::Tilde2:
    return Tilde2{};
  case FamilyKind::Tilde3:
    return Tilde3{};
  }
  throw std::logic_error("unreachable family kind");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<TableColumn> operator_columns() {
  return {{"eps", FamilyKind::ClassicalGenuine, 10},
          {"eps1", FamilyKind::Modified1, 10},
          {"eps2", FamilyKind::Tilde2, 10},
          {"eps3", FamilyKind::Tilde3, 10}};
}

std::vector<TableColumn> degree_columns(FamilyKind kind) {
  return {{"n=5", kind, 5}, {"n=7", kind, 7}, {"n=10", kind, 10}};
}

std::vector<TableDefinition> build_tables() {
  std::vector<TableDefinition> tables(6);

  tables[0] = {1, "g1", operator_columns(),
               {
                   {"0.10", {"0.6945330253", "0.5295762286", "0.4330397338", "0.2812687901"}},
                   {"0.15", {"0.6942110247", "0.5933130652", "0.4833262822", "0.4529855958"}},
                   {"0.25", {"0.1580679909", "0.2097384650", "0.1632564535", "0.1344025490"}},
                   {"0.30", {"0.6879044013", "0.7312808277", "0.6136368403", "0.2177095258"}},
                   {"0.40", {"0.9681814067", "0.9948377556", "0.8683959826", "0.5352250570"}},
                   {"0.50", {"0.0213435310", "0.0213436470", "0.0022170860", "0.0000572989"}},
                   {"0.55", {"0.6243511367", "0.6381381849", "0.5355754034", "0.3459331618"}},
                   {"0.70", {"0.7234749900", "0.7601315856", "0.6172299990", "0.2177088936"}},
                   {"0.75", {"0.1896839607", "0.2308635388", "0.1663414950", "0.1338132004"}},
                   {"0.90", {"0.6796558035", "0.5415051330", "0.4322424640", "0.2822400676"}},
                   {"0.95", {"0.3964880751", "0.1546334112", "0.194510818", "0.0192152324"}},
               },
               {{"0.95", "eps2"}}};

  tables[1] = {2, "g2", operator_columns(),
               {
                   {"0.10", {"0.0864633606", "0.0482073753", "0.0367065261", "0.0067324201"}},
                   {"0.20", {"0.1103333385", "0.0961865298", "0.0594456124", "0.0191120699"}},
                   {"0.25", {"0.0518922812", "0.0436031934", "0.0158446516", "0.0031661470"}},
                   {"0.50", {"0.2575784301", "0.2575784294", "0.2685059808", "0.1312442040"}},
                   {"0.55", {"0.2614871004", "0.2604287058", "0.3049134784", "0.1915072058"}},
                   {"0.65", {"0.1006465455", "0.0976735308", "0.0362205580", "0.0365602345"}},
                   {"0.70", {"0.3587223234", "0.3466837357", "0.1760351064", "0.1049635359"}},
                   {"0.85", {"0.3901466578", "0.2963782143", "0.1888707949", "0.0267144753"}},
                   {"0.90", {"0.1458116388", "0.0029193836", "0.0022766453", "0.1211619468"}},
               },
               {{"0.90", "eps3"}}};

  tables[2] = {3, "g3", degree_columns(FamilyKind::ClassicalGenuine),
               {
                   {"0.10", {"0.0684403678", "0.0678031572", "0.0622151561"}},
                   {"0.15", {"0.0499431989", "0.0531270433", "0.0521857868"}},
                   {"0.25", {"0.0578940551", "0.0463235563", "0.0334294267"}},
                   {"0.30", {"0.1212531914", "0.1072975170", "0.0886731506"}},
                   {"0.40", {"0.1969741168", "0.1851488999", "0.1634615511"}},
                   {"0.65", {"0.1391012080", "0.1078116400", "0.0816688494"}},
                   {"0.70", {"0.2391101684", "0.1978330494", "0.1589711006"}},
                   {"0.85", {"0.3328374955", "0.2808786960", "0.2265106612"}},
                   {"0.90", {"0.2644985309", "0.2206728121", "0.1747401754"}},
               },
               {}};

  tables[3] = {4, "g3", degree_columns(FamilyKind::Modified1),
               {
                   {"0.25", {"0.0759640671", "0.0559388716", "0.0362644403"}},
                   {"0.30", {"0.1371072386", "0.1171805319", "0.0932932589"}},
                   {"0.35", {"0.1844145994", "0.1666950554", "0.1413524766"}},
                   {"0.40", {"0.2057325249", "0.1923019252", "0.1687116616"}},
                   {"0.50", {"0.1448255593", "0.1453442003", "0.1349064978"}},
                   {"0.60", {"0.0366918591", "0.0179868291", "0.0057986703"}},
                   {"0.70", {"0.2402023843", "0.2045318798", "0.1686629702"}},
                   {"0.80", {"0.3245837174", "0.2807124726", "0.2325391597"}},
                   {"0.90", {"0.1835617165", "0.1497215453", "0.1155690815"}},
               },
               {}};

  tables[4] = {5, "g3", degree_columns(FamilyKind::Tilde2),
               {
                   {"0.10", {"0.0764438176", "0.0624790953", "0.0432951373"}},
                   {"0.25", {"0.0345024248", "0.0130565516", "0.0000245123"}},
                   {"0.30", {"0.0990500279", "0.0650077665", "0.0375060681"}},
                   {"0.40", {"0.1914411452", "0.1449016157", "0.0994953904"}},
                   {"0.50", {"0.1740970203", "0.1380269700", "0.0987547084"}},
                   {"0.60", {"0.0439765069", "0.0388439363", "0.0284303826"}},
                   {"0.70", {"0.1215101036", "0.0874936435", "0.0605939578"}},
                   {"0.80", {"0.2110574499", "0.1488955530", "0.0977772009"}},
                   {"0.90", {"0.1561838905", "0.0989074740", "0.0557077924"}},
               },
               {}};

  tables[5] = {6, "g3", degree_columns(FamilyKind::Tilde3),
               {
                   {"0.10", {"0.130304351", "0.060532301", "0.020830446"}},
                   {"0.20", {"0.141691111", "0.080159674", "0.039173543"}},
                   {"0.30", {"0.061291162", "0.037462997", "0.020686153"}},
                   {"0.40", {"0.024416705", "0.017774084", "0.010936011"}},
                   {"0.45", {"0.043687998", "0.031315020", "0.019471529"}},
                   {"0.50", {"0.040509305", "0.029993035", "0.019169082"}},
                   {"0.60", {"0.024027791", "0.011127560", "0.004477202"}},
                   {"0.70", {"0.110487435", "0.062167445", "0.031839458"}},
                   {"0.80", {"0.136082209", "0.064976021", "0.026722598"}},
                   {"0.90", {"0.069748506", "0.012020135", "0.006394035"}},
               },
               {}};

  return tables;
}

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

} // namespace

const TableDefinition& table_definition(int id) {
  static const std::vector<TableDefinition> tables = build_tables();
  if (id < 1 || id > static_cast<int>(tables.size()))
    throw std::out_of_range("unknown table id " + std::to_string(id));
  return tables[id - 1];
}

Family table_family(FamilyKind kind) {
  FamilyOptions options;
  options.kind = kind;
  return make_family(options);
}

std::string to_string(CellStatus status) {
  switch (status) {
  case CellStatus::Pass:
    return "pass";
  case CellStatus::Fail:
    return "fail";
  case CellStatus::KnownDiscrepancy:
    return "known-discrepancy";
  }
  return "?";
}

std::size_t ErrorTable::count(CellStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [&](const TableCell& c) { return c.status == status; }));
}

double ErrorTable::max_delta() const {
  double m = 0.0;
  for (const auto& c : cells)
    m = std::max(m, c.delta);
  return m;
}

ErrorTable reproduce_table(int id) {
  const TableDefinition& def = table_definition(id);
  const TestFunction g = TestFunction::builtin(def.function);

  ErrorTable table;
  table.id = id;
  table.function = def.function;
  for (const auto& col : def.columns)
    table.columns.push_back(col.label);
  for (const auto& row : def.rows)
    table.xs.push_back(std::stod(row.x));

  const std::size_t ncols = def.columns.size();
  const std::size_t nrows = def.rows.size();
  table.cells.resize(nrows * ncols);

  const QuadraturePlan plan = make_plan(def.columns.back().n, g);
  std::vector<std::optional<Approximant>> ops(ncols);
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < ncols; ++c)
    ops[c].emplace(OperatorSpec(table_family(def.columns[c].family), def.columns[c].n), g, plan);

  const auto total = static_cast<std::ptrdiff_t>(nrows * ncols);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    const std::size_t r = static_cast<std::size_t>(i) / ncols;
    const std::size_t c = static_cast<std::size_t>(i) % ncols;
    TableCell& cell = table.cells[static_cast<std::size_t>(i)];
    cell.x = table.xs[r];
    cell.column = def.columns[c].label;
    cell.family = def.columns[c].family;
    cell.n = def.columns[c].n;
    cell.computed = std::abs(g(cell.x) - (*ops[c])(cell.x));
    cell.published_text = def.rows[r].values[c];
    cell.published = std::stod(cell.published_text);
    cell.delta = std::abs(cell.computed - cell.published);
    cell.flagged = std::any_of(def.known_discrepancies.begin(), def.known_discrepancies.end(), [&](const auto& k) {
      return k.first == def.rows[r].x && k.second == cell.column;
    });
    if (cell.delta <= table_tolerance)
      cell.status = CellStatus::Pass;
    else
      cell.status = cell.flagged ? CellStatus::KnownDiscrepancy : CellStatus::Fail;
  }
  return table;
}

void write_table_text(const ErrorTable& table, std::ostream& out) {
  char line[200];
  out << "table " << table.id << " (" << table.function << ")\n";
  std::snprintf(line, sizeof line, "%-6s %-6s %3s %14s %14s %10s  %s\n", "x", "column", "n", "computed", "published",
                "|delta|", "status");
  out << line;
  for (const auto& c : table.cells) {
    std::snprintf(line, sizeof line, "%-6.2f %-6s %3d %14.10f %14s %10.3e  %s\n", c.x, c.column.c_str(), c.n,
                  c.computed, c.published_text.c_str(), c.delta, to_string(c.status).c_str());
    out << line;
  }
  out << "cells " << table.cells.size() << ", pass " << table.count(CellStatus::Pass) << ", fail "
      << table.count(CellStatus::Fail) << ", known-discrepancy " << table.count(CellStatus::KnownDiscrepancy)
      << ", max |delta| " << format_number(table.max_delta()) << "\n";
}

void write_table_csv(const ErrorTable& table, std::ostream& out) {
  out << "table,x,column,family,n,computed,published,delta,status\n";
  for (const auto& c : table.cells)
    out << table.id << ',' << format_number(c.x) << ',' << c.column << ',' << family_name(c.family) << ',' << c.n
        << ',' << format_number(c.computed) << ',' << c.published_text << ',' << format_number(c.delta) << ','
        << to_string(c.status) << '\n';
}

void write_table_json(const ErrorTable& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["table"] = table.id;
  doc["function"] = table.function;
  doc["columns"] = table.columns;
  doc["tolerance"] = table_tolerance;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : table.cells) {
    nlohmann::ordered_json j;
    j["x"] = c.x;
    j["column"] = c.column;
    j["family"] = family_name(c.family);
    j["n"] = c.n;
    j["computed"] = c.computed;
    j["published"] = c.published_text;
    j["delta"] = c.delta;
    j["status"] = to_string(c.status);
    cells.push_back(std::move(j));
  }
  doc["cells"] = std::move(cells);
  doc["pass"] = table.count(CellStatus::Pass);
  doc["fail"] = table.count(CellStatus::Fail);
  doc["known_discrepancy"] = table.count(CellStatus::KnownDiscrepancy);
  out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

FigureFormat parse_figure_format(const std::string& name) {
  if (name == "csv")
    return FigureFormat::Csv;
  if (name == "json")
    return FigureFormat::Json;
  throw std::invalid_argument("unknown figure format '" + name + "'");
}

namespace {

struct FigureCurve {
  std::string label;
  FamilyKind family;
  int n;
};

struct FigureLayout {
  std::string function;
  bool errors;
  std::vector<FigureCurve> curves;
};

std::string prefix_of(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::ClassicalGenuine:
    return "";
  case FamilyKind::Modified1:
    return "1";
  case FamilyKind::Tilde2:
    return "2";
  case FamilyKind::Tilde3:
    return "3";
  default:
    return "g";
  }
}

FigureLayout figure_layout(int id) {
  if (id < 1 || id > 12)
    throw std::out_of_range("unknown figure id " + std::to_string(id));
  const bool errors = id % 2 == 0;
  FigureLayout layout;
  layout.errors = errors;
  auto label = [&](FamilyKind kind, int n) { return (errors ? "eps" : "U") + prefix_of(kind) + "_" + std::to_string(n); };
  if (id <= 4) {
    layout.function = id <= 2 ? "g1" : "g2";
    std::vector<FamilyKind> kinds = {FamilyKind::Modified1, FamilyKind::Tilde2, FamilyKind::Tilde3};
    if (errors)
      kinds.insert(kinds.begin(), FamilyKind::ClassicalGenuine);
    for (auto kind : kinds)
      layout.curves.push_back({label(kind, 10), kind, 10});
    return layout;
  }
  static const FamilyKind order[] = {FamilyKind::ClassicalGenuine, FamilyKind::Modified1, FamilyKind::Tilde2,
                                     FamilyKind::Tilde3};
  const FamilyKind kind = order[(id - 5) / 2];
  layout.function = "g3";
  for (int n : {5, 7, 10})
    layout.curves.push_back({label(kind, n), kind, n});
  return layout;
}

} // namespace

FigureSeries figure_series(int id, int grid_points) {
  const FigureLayout layout = figure_layout(id);
  if (grid_points < minimum_figure_points)
    throw DomainError("figure needs at least " + std::to_string(minimum_figure_points) + " grid points");

  const TestFunction g = TestFunction::builtin(layout.function);
  FigureSeries fig;
  fig.id = id;
  fig.function = layout.function;

  std::vector<double> xs(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i)
    xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / (grid_points - 1);
  xs.back() = 1.0;
  std::vector<double> gx(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    gx[i] = g(xs[i]);

  fig.columns.push_back("x");
  fig.data.push_back(xs);
  if (!layout.errors) {
    fig.columns.push_back(layout.function);
    fig.data.push_back(gx);
  }
  int max_n = 0;
  for (const auto& c : layout.curves)
    max_n = std::max(max_n, c.n);
  const QuadraturePlan plan = make_plan(max_n, g);
  for (const auto& curve : layout.curves) {
    const Approximant op(OperatorSpec(table_family(curve.family), curve.n), g, plan);
    std::vector<double> values = kernels::evaluate(op, xs);
    if (layout.errors)
      for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = std::abs(gx[i] - values[i]);
    fig.columns.push_back(curve.label);
    fig.data.push_back(std::move(values));
  }
  return fig;
}

void write_figure_csv(const FigureSeries& figure, std::ostream& out) {
  for (std::size_t c = 0; c < figure.columns.size(); ++c)
    out << (c ? "," : "") << figure.columns[c];
  out << '\n';
  for (std::size_t i = 0; i < figure.size(); ++i) {
    for (std::size_t c = 0; c < figure.data.size(); ++c)
      out << (c ? "," : "") << format_number(figure.data[c][i]);
    out << '\n';
  }
}

void write_figure_json(const FigureSeries& figure, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["figure"] = figure.id;
  doc["function"] = figure.function;
  doc["columns"] = figure.columns;
  nlohmann::ordered_json series = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < figure.columns.size(); ++c)
    series[figure.columns[c]] = figure.data[c];
  doc["series"] = std::move(series);
  out << doc.dump(2) << '\n';
}

void emit_figure(int id, int grid_points, const std::filesystem::path& path, FigureFormat format) {
  const FigureSeries figure = figure_series(id, grid_points);
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  if (format == FigureFormat::Csv)
    write_figure_csv(figure, out);
  else
    write_figure_json(figure, out);
  out.flush();
  if (!out)
    throw std::runtime_error("write to '" + path.string() + "' failed");
}

} // namespace gbd
