#pragma once

#include "gbd/operators.hpp"
#include "gbd/rational.hpp"
#include "gbd/test_function.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gbd {

// ---------------------------------------------------------------------------
// Family selection by name, shared by the CLI and the suite runner.

struct FamilyOptions {
  FamilyKind kind = FamilyKind::ClassicalGenuine;
  /// modified1: constant alpha0 (alpha1 = 1 - 2 alpha0). Overrides `sequences`.
  std::optional<Rational> alpha0;
  /// modified1: "standard" (default), "classical" or "nonpositive".
  std::string sequences = "standard";
  /// general2: free sequences, held constant in n.
  Rational beta0 = 1;
  Rational beta2 = 1;
};

/// "classical", "modified1", "general2", "tilde2", "tilde3".
FamilyKind parse_family_kind(const std::string& name);
AlphaSequences alpha_sequences_by_name(const std::string& name);
Family make_family(const FamilyOptions& options);

// ---------------------------------------------------------------------------
// Error tables

inline constexpr double table_tolerance = 5e-7;

struct TableColumn {
  std::string label;
  FamilyKind family;
  int n;
};

struct PublishedRow {
  std::string x;
  std::vector<std::string> values; // printed digits, one per column
};

struct TableDefinition {
  int id = 0;
  std::string function;
  std::vector<TableColumn> columns;
  std::vector<PublishedRow> rows;
  /// (x, column label) of cells reported but never failed.
  std::vector<std::pair<std::string, std::string>> known_discrepancies;
};

/// Throws std::out_of_range for ids outside 1..6.
const TableDefinition& table_definition(int id);

/// The family a table column uses: modified1 runs with the standard
/// sequences alpha0(n) = (n-1)/(2n), alpha1(n) = 1/n.
Family table_family(FamilyKind kind);

enum class CellStatus { Pass, Fail, KnownDiscrepancy };
std::string to_string(CellStatus status);

struct TableCell {
  double x = 0.0;
  std::string column;
  FamilyKind family = FamilyKind::ClassicalGenuine;
  int n = 0;
  double computed = 0.0; // |g(x) - L_n(g;x)|
  std::string published_text;
  double published = 0.0;
  double delta = 0.0; // |computed - published|
  bool flagged = false;
  CellStatus status = CellStatus::Pass;
};

struct ErrorTable {
  int id = 0;
  std::string function;
  std::vector<std::string> columns;
  std::vector<double> xs;
  std::vector<TableCell> cells; // row-major

  const TableCell& cell(std::size_t row, std::size_t column) const { return cells[row * columns.size() + column]; }
  std::size_t count(CellStatus status) const;
  double max_delta() const;
  bool passed() const { return count(CellStatus::Fail) == 0; }
};

/// Computes every cell and compares it with the published value at
/// table_tolerance. Cells are evaluated concurrently.
ErrorTable reproduce_table(int id);

void write_table_text(const ErrorTable& table, std::ostream& out);
void write_table_csv(const ErrorTable& table, std::ostream& out);
void write_table_json(const ErrorTable& table, std::ostream& out);

// ---------------------------------------------------------------------------
// Figure data

enum class FigureFormat { Csv, Json };
FigureFormat parse_figure_format(const std::string& name);

struct FigureSeries {
  int id = 0;
  std::string function;
  std::vector<std::string> columns; // first column is "x"
  std::vector<std::vector<double>> data; // one vector per column

  std::size_t size() const { return data.empty() ? 0 : data.front().size(); }
};

inline constexpr int minimum_figure_points = 51;

/// Odd figures hold the function and the approximants, even figures the
/// pointwise errors. Figures 1-2 use g1, 3-4 g2 (all four operators at n = 10);
/// 5-12 use g3 with n = 5, 7, 10 for the classical, modified1, tilde2 and
/// tilde3 operators in turn. Throws std::out_of_range for ids outside 1..12 and
/// DomainError for fewer than 51 points.
FigureSeries figure_series(int id, int grid_points);

/// Header row, 10 significant digits, comma separated, LF line endings.
void write_figure_csv(const FigureSeries& figure, std::ostream& out);
/// {"figure": id, "function": name, "columns": [...], "series": {column: [...]}}
void write_figure_json(const FigureSeries& figure, std::ostream& out);
/// Throws std::runtime_error when the file cannot be written.
void emit_figure(int id, int grid_points, const std::filesystem::path& path, FigureFormat format);

} // namespace gbd
