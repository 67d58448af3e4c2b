#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "zalcman/types.hpp"

namespace zalcman {

enum class OutputFormat { Json, Csv, Pretty };

/// A table cell; std::monostate marks an absent value (omitted from JSON, blank in CSV).
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  explicit Table(std::vector<std::string> cols) : columns(std::move(cols)) {}

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Appends a row; `values` must match `columns` in length.
  void add(std::vector<Cell> values);
};

/// Decimal with 17 significant digits (exact round trip for doubles).
std::string format_double(double x);

/// "p/q" when x equals p/q with q <= 64 to within 1e-12 relative.
std::optional<std::string> rational_form(double x);

nlohmann::json to_json(const Table& t);
std::string render_csv(const Table& t);
std::string render_pretty(const Table& t);
std::string render(const Table& t, OutputFormat format);

/// Parses a measure literal: JSON array of {"theta": <radians>, "w": <weight>}.
DiscreteMeasure parse_measure(const std::string& json_text);
nlohmann::json measure_to_json(const DiscreteMeasure& mu);

}  // namespace zalcman
