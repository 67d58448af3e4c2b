#include "zalcman/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "zalcman/types.hpp"

namespace zalcman {

namespace {

std::string plain(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {};
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return v;
        }
      },
      c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void Table::add(std::vector<Cell> values) {
  if (values.size() != columns.size()) throw UsageError("table row width does not match header");
  rows.push_back(std::move(values));
}

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::optional<std::string> rational_form(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long long q = 1; q <= 64; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(p / static_cast<double>(q) - x) <= 1e-12 * std::max(1.0, std::abs(x))) {
      if (q == 1) return fmt::format("{}", static_cast<long long>(p));
      return fmt::format("{}/{}", static_cast<long long>(p), q);
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(const Table& t) {
  auto out = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (!std::is_same_v<T, std::monostate>) obj[t.columns[i]] = v;
          },
          row[i]);
    }
    out.push_back(std::move(obj));
  }
  return out;
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(plain(row[i]));
    os << '\n';
  }
  return os.str();
}

std::string render_pretty(const Table& t) {
  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string s;
      if (const double* d = std::get_if<double>(&row[i])) {
        s = fmt::format("{:.12g}", *d);
        if (auto r = rational_form(*d); r && *r != s) s += " (" + *r + ")";
      } else {
        s = plain(row[i]);
      }
      width[i] = std::max(width[i], s.size());
      line.push_back(std::move(s));
    }
    text.push_back(std::move(line));
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "") << cells[i] << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  emit(t.columns);
  for (const auto& line : text) emit(line);
  return os.str();
}

std::string render(const Table& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(t).dump(2) + "\n";
    case OutputFormat::Csv: return render_csv(t);
    case OutputFormat::Pretty: return render_pretty(t);
  }
  return {};
}

DiscreteMeasure parse_measure(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("measure is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw UsageError("measure must be a JSON array of {\"theta\", \"w\"}");
  std::vector<Atom> atoms;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("theta") || !item.contains("w") ||
        !item["theta"].is_number() || !item["w"].is_number()) {
      throw UsageError("each measure atom needs numeric \"theta\" and \"w\"");
    }
    atoms.push_back(Atom{item["theta"].get<double>(), item["w"].get<double>()});
  }
  return DiscreteMeasure(std::move(atoms));
}

nlohmann::json measure_to_json(const DiscreteMeasure& mu) {
  auto out = nlohmann::json::array();
  for (const auto& a : mu.atoms()) out.push_back({{"theta", a.theta}, {"w", a.weight}});
  return out;
}

}  // namespace zalcman
