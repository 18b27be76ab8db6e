#include "gbd/errors.hpp"
#include "gbd/experiments.hpp"

#include "doctest.h"

#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gbd;

namespace {

const TableCell& find_cell(const ErrorTable& table, double x, const std::string& column) {
  for (const auto& c : table.cells)
    if (std::abs(c.x - x) < 1e-12 && c.column == column) return c;
  throw std::runtime_error("no such cell");
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "gbd_unit_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

} // namespace

TEST_SUITE("experiments") {

TEST_CASE("family names") {
  CHECK(parse_family_kind("tilde3") == FamilyKind::Tilde3);
  CHECK(parse_family_kind("classical") == FamilyKind::ClassicalGenuine);
  CHECK_THROWS_AS(parse_family_kind("tilde4"), std::invalid_argument);
  CHECK_THROWS_AS(alpha_sequences_by_name("other"), std::invalid_argument);
  FamilyOptions options;
  options.kind = FamilyKind::Modified1;
  options.alpha0 = Rational(1, 3);
  const OperatorSpec spec(make_family(options), 6);
  CHECK(is_positive(spec));
}

TEST_CASE("table layouts") {
  const std::size_t sizes[] = {44, 36, 27, 27, 27, 30};
  for (int id = 1; id <= 6; ++id) {
    const auto& def = table_definition(id);
    std::size_t cells = 0;
    for (const auto& row : def.rows) {
      CHECK(row.values.size() == def.columns.size());
      cells += row.values.size();
    }
    CHECK(cells == sizes[id - 1]);
  }
  CHECK(table_definition(1).columns.size() == 4);
  CHECK(table_definition(4).columns[0].n == 5);
  CHECK(table_definition(4).columns[2].n == 10);
  CHECK_THROWS_AS(table_definition(0), std::out_of_range);
  CHECK_THROWS_AS(reproduce_table(7), std::out_of_range);
}

// The printed digits of this cell are not reproduced by the operator; the
// check stays strict and is expected to fail.
TEST_CASE("published example, table 1" * doctest::should_fail()) {
  CHECK(std::abs(find_cell(reproduce_table(1), 0.5, "eps3").computed - 0.0000572989) <= 5e-7);
}

TEST_CASE("published examples") {
  CHECK(std::abs(find_cell(reproduce_table(2), 0.1, "eps").computed - 0.0864633606) <= 5e-7);
  CHECK(std::abs(find_cell(reproduce_table(3), 0.4, "n=5").computed - 0.1969741168) <= 5e-7);
}

TEST_CASE("cells are self-consistent with the public operator API") {
  for (int id = 1; id <= 6; ++id) {
    const auto table = reproduce_table(id);
    const auto g = TestFunction::builtin(table.function);
    for (const auto& c : table.cells) {
      const double direct = std::abs(g(c.x) - apply(OperatorSpec(table_family(c.family), c.n), g, c.x));
      CHECK(std::abs(c.computed - direct) <= 1e-12);
      CHECK(c.computed >= 0.0);
      CHECK(c.delta == doctest::Approx(std::abs(c.computed - c.published)));
      if (c.delta <= table_tolerance) CHECK(c.status == CellStatus::Pass);
      else CHECK(c.status != CellStatus::Pass);
    }
  }
}

TEST_CASE("flagged cells are reported without failing") {
  const auto t1 = reproduce_table(1);
  const auto& cell = find_cell(t1, 0.95, "eps2");
  CHECK(cell.flagged);
  CHECK(cell.status == CellStatus::KnownDiscrepancy);
  CHECK(cell.published_text == "0.194510818");
  // The dropped-leading-zero reading does not match either.
  CHECK(std::abs(cell.computed - 0.0194510818) > 0.1);

  const auto t2 = reproduce_table(2);
  const auto& other = find_cell(t2, 0.9, "eps3");
  CHECK(other.flagged);
  CHECK(other.status != CellStatus::Fail);
  CHECK(t2.count(CellStatus::KnownDiscrepancy) <= 1);
}

TEST_CASE("table writers") {
  const auto table = reproduce_table(3);
  std::ostringstream csv, json, text;
  write_table_csv(table, csv);
  write_table_json(table, json);
  write_table_text(table, text);
  CHECK(csv.str().rfind("table,x,column,family,n,computed,published,delta,status\n", 0) == 0);
  CHECK(csv.str().find('\r') == std::string::npos);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc["cells"].size() == 27);
  CHECK(doc["columns"][0] == "n=5");
  CHECK(text.str().find("table 3 (g3)") == 0);
}

TEST_CASE("figure layouts") {
  const auto f1 = figure_series(1, 201);
  CHECK(f1.columns == std::vector<std::string>{"x", "g1", "U1_10", "U2_10", "U3_10"});
  CHECK(figure_series(2, 51).columns == std::vector<std::string>{"x", "eps_10", "eps1_10", "eps2_10", "eps3_10"});
  CHECK(figure_series(3, 51).function == "g2");
  CHECK(figure_series(6, 201).columns == std::vector<std::string>{"x", "eps_5", "eps_7", "eps_10"});
  CHECK(figure_series(7, 51).columns == std::vector<std::string>{"x", "g3", "U1_5", "U1_7", "U1_10"});
  CHECK(figure_series(12, 51).columns == std::vector<std::string>{"x", "eps3_5", "eps3_7", "eps3_10"});
  CHECK_THROWS_AS(figure_series(13, 201), std::out_of_range);
  CHECK_THROWS_AS(figure_series(0, 201), std::out_of_range);
  CHECK_THROWS_AS(figure_series(1, 50), DomainError);

  CHECK(f1.size() == 201);
  for (const auto& column : f1.data) CHECK(column.size() == 201);
  CHECK(f1.data[0].front() == 0.0);
  CHECK(f1.data[0].back() == 1.0);
}

TEST_CASE("figure values match the operators") {
  const auto fig = figure_series(10, 101);
  const auto g3 = TestFunction::g3();
  for (std::size_t i = 0; i < fig.size(); i += 10) {
    const double x = fig.data[0][i];
    const double u = apply(OperatorSpec(Tilde2{}, 7), g3, x);
    CHECK(fig.data[2][i] == doctest::Approx(std::abs(g3(x) - u)).epsilon(1e-12));
  }
}

TEST_CASE("CSV and JSON output") {
  const auto path = scratch("fig1.csv");
  emit_figure(1, 201, path, FigureFormat::Csv);
  const std::string csv = slurp(path);
  CHECK(csv.rfind("x,g1,U1_10,U2_10,U3_10\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 202);
  std::ostringstream expected;
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.10g", TestFunction::g1()(0.005));
  CHECK(csv.find(std::string("\n0.005,") + buffer + ",") != std::string::npos);

  emit_figure(1, 201, path, FigureFormat::Csv);
  CHECK(slurp(path) == csv);

  const auto jpath = scratch("fig6.json");
  emit_figure(6, 101, jpath, FigureFormat::Json);
  const auto doc = nlohmann::json::parse(slurp(jpath));
  CHECK(doc["figure"] == 6);
  CHECK(doc["series"]["eps_7"].size() == 101);
  CHECK(doc["series"]["x"][100] == 1.0);
  emit_figure(6, 101, jpath, FigureFormat::Json);
  CHECK(nlohmann::json::parse(slurp(jpath)) == doc);

  CHECK_THROWS_AS(emit_figure(1, 201, scratch("missing") / "deeper" / "f.csv", FigureFormat::Csv), std::runtime_error);
  CHECK_THROWS_AS(parse_figure_format("png"), std::invalid_argument);
}
}
