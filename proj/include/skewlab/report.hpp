#pragma once

// Result tables and their CSV (RFC 4180), JSON and Markdown renderings, plus
// the experiment tables behind the command-line tool.

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewlab/counting.hpp"
#include "skewlab/solver.hpp"
#include "skewlab/sperner.hpp"

namespace skewlab {

enum class ColumnKind { integer, rational, real, boolean, text };

struct Column {
  std::string name;
  ColumnKind kind;
};

/// Cells are canonical strings: decimal integers, "p/q" rationals, "true" or
/// "false", reals from format_real(); an empty cell means "not computed".
class Table {
 public:
  explicit Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

  const std::vector<Column>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  void add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) throw std::invalid_argument("row width mismatch");
    rows_.push_back(std::move(cells));
  }

  std::size_t column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i].name == name) return i;
    }
    throw std::out_of_range("no column named " + name);
  }

  const std::string& cell(std::size_t row, const std::string& column) const {
    return rows_.at(row).at(column_index(column));
  }

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string format_bool(bool b) { return b ? "true" : "false"; }

/// Seven significant digits, exponent form for large magnitudes.
inline std::string format_real(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7Lg", v);
  return buf;
}

enum class OutputFormat { csv, json, markdown };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "markdown" || s == "md") return OutputFormat::markdown;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv, json or markdown)");
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ',';
      os << csv_field(cells[i]);
    }
    os << "\r\n";
  };
  std::vector<std::string> header;
  for (const auto& c : t.columns()) header.push_back(c.name);
  line(header);
  for (const auto& r : t.rows()) line(r);
}

/// RFC 4180 records; accepts CRLF or LF line ends.
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"') {
      if (field_started) throw std::invalid_argument("stray quote inside unquoted CSV field");
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      end_record();
      ++i;
    } else if (c == '\n') {
      end_record();
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (field_started || !record.empty()) end_record();
  return records;
}

/// Rebuilds a table from write_csv output. Column kinds are not stored in
/// CSV and are taken from `columns`, whose names must match the header.
inline Table read_csv_table(const std::string& text, const std::vector<Column>& columns) {
  const auto records = parse_csv(text);
  if (records.empty()) throw std::invalid_argument("CSV has no header");
  if (records[0].size() != columns.size()) throw std::invalid_argument("CSV header width mismatch");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (records[0][i] != columns[i].name) {
      throw std::invalid_argument("CSV header mismatch at column " + columns[i].name);
    }
  }
  Table t(columns);
  for (std::size_t r = 1; r < records.size(); ++r) t.add_row(records[r]);
  return t;
}

// ---------------------------------------------------------------------------
// JSON and Markdown
// ---------------------------------------------------------------------------

inline nlohmann::json cell_json(const Column& col, const std::string& cell) {
  if (cell.empty()) return nullptr;
  switch (col.kind) {
    case ColumnKind::boolean: return cell == "true";
    case ColumnKind::real: return std::stod(cell);
    default: return cell;  // exact values stay decimal strings
  }
}

/// Array of row objects; keys come out sorted.
inline nlohmann::json to_json(const Table& t) {
  auto arr = nlohmann::json::array();
  for (const auto& r : t.rows()) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < r.size(); ++i) obj[t.columns()[i].name] = cell_json(t.columns()[i], r[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

inline void write_markdown(std::ostream& os, const Table& t) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (const char c : s) {
      if (c == '|') out += '\\';
      out += c;
    }
    return out;
  };
  os << '|';
  for (const auto& c : t.columns()) os << ' ' << escape(c.name) << " |";
  os << "\n|";
  for (const auto& c : t.columns()) {
    os << (c.kind == ColumnKind::text ? " --- |" : " ---: |");
  }
  os << '\n';
  for (const auto& r : t.rows()) {
    os << '|';
    for (const auto& cell : r) os << ' ' << escape(cell) << " |";
    os << '\n';
  }
}

inline void write_table(std::ostream& os, const Table& t, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: write_csv(os, t); break;
    case OutputFormat::json: os << to_json(t).dump(2) << '\n'; break;
    case OutputFormat::markdown: write_markdown(os, t); break;
  }
}

inline std::string render(const Table& t, OutputFormat format) {
  std::ostringstream os;
  write_table(os, t, format);
  return os.str();
}

// ---------------------------------------------------------------------------
// Experiment tables
// ---------------------------------------------------------------------------

struct ValueReportOptions {
  unsigned exact_limit = default_max_M_length;  // M(n) computed for n <= this
  unsigned antichain_limit = max_poset_length;  // m_n computed for n <= this
  CliqueOptions clique{};
};

/// Per n: f_n, m_n, |C_n|, M(n) and the upper bound 2^n - (f_n - m_n).
inline Table value_report(unsigned n_lo, unsigned n_hi, const ValueReportOptions& options = {}) {
  if (n_lo < 1 || n_hi < n_lo || n_hi > max_counting_length) {
    throw std::invalid_argument("value report needs 1 <= lo <= hi <= 512");
  }
  Table t({{"n", ColumnKind::integer},
           {"f_n", ColumnKind::integer},
           {"m_n", ColumnKind::integer},
           {"C_n", ColumnKind::integer},
           {"M_n", ColumnKind::integer},
           {"upper_bound", ColumnKind::integer}});
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const BigInt f = fibonacci_count(n);
    std::string m_cell, upper_cell, exact_cell;
    if (n <= options.antichain_limit && n <= max_poset_length) {
      const auto m = max_antichain(n).size;
      m_cell = std::to_string(m);
      upper_cell = (pow2(n) - (f - m)).str();
    }
    if (n <= options.exact_limit) {
      exact_cell = std::to_string(exact_M(n, n > default_max_M_length, options.clique).size);
    }
    t.add_row({std::to_string(n), f.str(), m_cell, count_C(n).str(), exact_cell, upper_cell});
  }
  return t;
}

inline std::vector<Column> theorem_columns() {
  return {{"n", ColumnKind::integer},        {"complement_C", ColumnKind::integer},
          {"lower_rhs", ColumnKind::real},   {"lower_holds", ColumnKind::boolean},
          {"f_minus_m", ColumnKind::integer}, {"upper_rhs", ColumnKind::real},
          {"upper_holds", ColumnKind::boolean}};
}

/// Per n in [1, max_n]: 2^n - |C_n| against 2^{0.96n}, and f_n - m_n against
/// 2^{0.69n} where m_n is computable (n <= 20). Inequalities are decided
/// exactly; the real columns are for display.
inline Table theorem_table(unsigned max_n) {
  if (max_n < 1 || max_n > max_counting_length) {
    throw std::invalid_argument("theorem table needs max_n in [1, 512]");
  }
  Table t(theorem_columns());
  for (unsigned n = 1; n <= max_n; ++n) {
    const BigInt missing = pow2(n) - count_C(n);
    std::string fm, upper_ok;
    if (n <= max_poset_length) {
      const BigInt gap = fibonacci_count(n) - max_antichain(n).size;
      fm = gap.str();
      upper_ok = format_bool(above_power(gap, upper_rate, n));
    }
    t.add_row({std::to_string(n), missing.str(), format_real(lower_rate.power_of_two(n)),
               format_bool(at_most_power(missing, lower_rate, n)), fm,
               format_real(upper_rate.power_of_two(n)), upper_ok});
  }
  return t;
}

inline Table gamma_table(unsigned n) {
  const auto dist = gamma_distribution(n);
  Table t({{"gamma", ColumnKind::integer}, {"count", ColumnKind::integer}});
  for (unsigned v = 0; v <= dist.max_value(); ++v) {
    t.add_row({std::to_string(v), dist.count(v).str()});
  }
  return t;
}

inline Table sperner_table(unsigned n_lo, unsigned n_hi) {
  if (n_lo < 1 || n_hi < n_lo || n_hi > max_poset_length) {
    throw std::invalid_argument("sperner table needs 1 <= lo <= hi <= 20");
  }
  Table t({{"n", ColumnKind::integer},
           {"f_n", ColumnKind::integer},
           {"m_n", ColumnKind::integer},
           {"chains", ColumnKind::integer},
           {"f_prev", ColumnKind::integer},
           {"bounds_hold", ColumnKind::boolean}});
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const auto a = max_antichain(n);
    std::string prev, ok;
    if (n >= 2) {
      const auto r = projection_bound_check(n);
      prev = r.fib_prev.str();
      ok = format_bool(r.holds());
    }
    t.add_row({std::to_string(n), fibonacci_count(n).str(), std::to_string(a.size),
               std::to_string(a.chains.size()), prev, ok});
  }
  return t;
}

inline Table monte_carlo_table(const TailEstimate& e) {
  const auto exact = tail_probability(e.n);
  const double exact_value = static_cast<double>(exact.to_long_double());
  Table t({{"n", ColumnKind::integer},
           {"samples", ColumnKind::integer},
           {"seed", ColumnKind::integer},
           {"estimate", ColumnKind::real},
           {"standard_error", ColumnKind::real},
           {"exact", ColumnKind::rational},
           {"exact_value", ColumnKind::real},
           {"within_3se", ColumnKind::boolean}});
  t.add_row({std::to_string(e.n), std::to_string(e.samples), std::to_string(e.seed),
             format_real(e.estimate), format_real(e.standard_error), exact.to_string(),
             format_real(exact_value), format_bool(e.within(exact_value))});
  return t;
}

inline Table family_table(const Family& f) {
  Table t({{"member", ColumnKind::text}});
  for (const auto& x : f) t.add_row({x.to_string()});
  return t;
}

inline Table extremal_table(const ExtremalResult& r) {
  std::string witness;
  for (const auto& w : r.witness) {
    if (!witness.empty()) witness += ' ';
    witness += w;
  }
  Table t({{"size", ColumnKind::integer}, {"method", ColumnKind::text}, {"witness", ColumnKind::text}});
  t.add_row({std::to_string(r.size), r.method(), witness});
  return t;
}

}  // namespace skewlab
