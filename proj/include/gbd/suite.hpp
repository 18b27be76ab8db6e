#pragma once

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gbd {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating configuration. line/column are 1-based and
/// zero when the problem is not tied to a text position.
class ConfigError : public std::runtime_error {
public:
  ConfigError(const std::string& message, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Parses and validates a suite configuration:
///
///   {"tasks": [ {"kind": "table", "id": 1}, ... ]}
///
/// Task kinds and their fields are listed in README.md. Throws ConfigError.
Json parse_config(std::string_view text);
Json load_config(const std::filesystem::path& path);

struct SuiteItem {
  std::size_t index = 0;
  std::string kind;
  std::string status; // "pass", "fail" or "error"
  std::string message;
  Json detail;

  bool passed() const { return status == "pass"; }
};

struct SuiteSummary {
  std::vector<SuiteItem> items;

  std::size_t count(const std::string& status) const;
  bool all_passed() const { return count("pass") == items.size(); }
  Json to_json() const;
};

/// Runs every task of a validated config in order. Task failures and
/// exceptions are recorded per item; relative output paths resolve against
/// `base_dir`.
SuiteSummary run_suite(const Json& config, const std::filesystem::path& base_dir);

} // namespace gbd
