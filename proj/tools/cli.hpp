#pragma once

// Command-line front end. One command runs one experiment and writes one
// artifact. Exit codes: 0 success, 1 a verification failed, 2 bad arguments.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewlab/skewlab.hpp"

namespace skewlab::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct NRange {
  unsigned lo;
  unsigned hi;
};

/// "a..b" or a single "a".
inline NRange parse_n_range(const std::string& text) {
  auto number = [&](const std::string& s) -> unsigned {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
      throw std::invalid_argument("bad n-range '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned n = number(text);
    return {n, n};
  }
  const NRange r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.lo > r.hi) throw std::invalid_argument("n-range '" + text + "' is empty");
  return r;
}

struct RunConfig {
  std::string format;  // empty: command default
  std::string out_path;
  std::optional<unsigned> n;
  std::string n_range;
  unsigned max_n = 200;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  std::string construction = "C";
  std::string input_path;
  std::string graph_spec;
  std::string f_graph_spec;
  std::string g_graph_spec;
  std::string kind = "values";
  bool allow_large = false;
  bool timing = false;
  bool witness = false;
  unsigned threads = 0;
};

namespace detail {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline unsigned require_n(const RunConfig& c) {
  if (!c.n) throw UsageError("this command needs --n");
  return *c.n;
}

inline NRange range_or_n(const RunConfig& c) {
  if (!c.n_range.empty()) return parse_n_range(c.n_range);
  if (c.n) return {*c.n, *c.n};
  throw UsageError("this command needs --n or --n-range");
}

inline Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    return family_from_json(nlohmann::json::parse(text));
  }
  return parse_lines(text);
}

inline Family build_construction(const RunConfig& c) {
  const unsigned n = require_n(c);
  if (c.construction == "C") return enumerate_C(n);
  if (c.construction == "F") return enumerate_fibonacci(n);
  if (c.construction == "greedy-C") return greedy_maximal_extension(enumerate_C(n));
  throw UsageError("unknown construction '" + c.construction + "' (expected C, F or greedy-C)");
}

inline void emit_family(std::ostream& os, const Family& f, const std::string& format) {
  if (format.empty() || format == "lines") {
    write_lines(os, f);
  } else if (format == "json") {
    os << to_json(f).dump() << '\n';
  } else {
    write_table(os, family_table(f), parse_output_format(format));
  }
}

inline void emit_table(std::ostream& os, const Table& t, const std::string& format) {
  write_table(os, t, parse_output_format(format.empty() ? "markdown" : format));
}

inline void emit_extremal(std::ostream& os, const ExtremalResult& r, const RunConfig& c) {
  if (c.format == "json") {
    os << to_json(r, c.timing).dump() << '\n';
  } else {
    emit_table(os, extremal_table(r), c.format);
  }
}

inline int dispatch(const std::string& command, const RunConfig& c, std::ostream& os,
                    std::ostream& err) {
  const CliqueOptions clique{CliqueEngine::automatic, c.threads};

  if (command == "gamma-dist") {
    emit_table(os, gamma_table(require_n(c)), c.format);
    return exit_ok;
  }
  if (command == "construct") {
    emit_family(os, build_construction(c), c.format);
    return exit_ok;
  }
  if (command == "verify") {
    const Family f = c.input_path.empty() ? build_construction(c) : read_family_file(c.input_path);
    const auto verdict = verify_pairwise_skewincident(f, c.threads);
    Table t({{"members", ColumnKind::integer},
             {"pairwise_skewincident", ColumnKind::boolean},
             {"first", ColumnKind::text},
             {"second", ColumnKind::text}});
    t.add_row({std::to_string(f.size()), format_bool(verdict.ok()),
               verdict.ok() ? "" : verdict.counterexample->first.to_string(),
               verdict.ok() ? "" : verdict.counterexample->second.to_string()});
    emit_table(os, t, c.format);
    if (!verdict.ok()) {
      err << "counterexample: " << verdict.counterexample->first.to_string() << " and "
          << verdict.counterexample->second.to_string() << " are not skewincident\n";
      return exit_failed;
    }
    return exit_ok;
  }
  if (command == "exact-m") {
    emit_extremal(os, exact_M(require_n(c), c.allow_large, clique), c);
    return exit_ok;
  }
  if (command == "graph-m") {
    if (c.graph_spec.empty()) throw UsageError("graph-m needs --graph");
    const auto r = exact_MG(graph_from_spec(c.graph_spec), clique);
    emit_extremal(os, r, c);
    if (c.graph_spec.rfind("multipartite:", 0) == 0) {
      std::vector<unsigned> parts;
      std::stringstream ss(c.graph_spec.substr(13));
      for (std::string item; std::getline(ss, item, ',');) parts.push_back(std::stoul(item));
      const BigInt formula = multipartite_M(Partition(parts));
      if (formula != r.size) {
        err << "closed form gives " << formula << " but the exact search found " << r.size << '\n';
        return exit_failed;
      }
    }
    return exit_ok;
  }
  if (command == "attractive") {
    if (c.f_graph_spec.empty() || c.g_graph_spec.empty()) {
      throw UsageError("attractive needs --f-graph and --g-graph");
    }
    emit_extremal(os,
                  exact_attractive(graph_from_spec(c.f_graph_spec), graph_from_spec(c.g_graph_spec),
                                   require_n(c), clique),
                  c);
    return exit_ok;
  }
  if (command == "sperner") {
    const auto range = range_or_n(c);
    if (c.witness) {
      if (range.lo != range.hi) throw UsageError("--witness needs a single --n");
      emit_family(os, max_antichain(range.lo).witness, c.format);
      return exit_ok;
    }
    const Table t = sperner_table(range.lo, range.hi);
    emit_table(os, t, c.format);
    const auto col = t.column_index("bounds_hold");
    for (const auto& row : t.rows()) {
      if (row[col] == "false") return exit_failed;
    }
    return exit_ok;
  }
  if (command == "montecarlo") {
    const auto e = monte_carlo_tail(require_n(c), c.samples, c.seed, c.threads);
    const Table t = monte_carlo_table(e);
    emit_table(os, t, c.format);
    return t.cell(0, "within_3se") == "true" ? exit_ok : exit_failed;
  }
  if (command == "crossover") {
    const auto found = crossover_scan(c.max_n);
    Table t({{"max_n", ColumnKind::integer}, {"crossover", ColumnKind::integer}});
    t.add_row({std::to_string(c.max_n), found ? std::to_string(*found) : ""});
    emit_table(os, t, c.format);
    if (!found) {
      err << "no crossover: the lower-bound inequality fails at n = " << c.max_n << '\n';
      return exit_failed;
    }
    return exit_ok;
  }
  if (command == "report") {
    if (c.kind == "theorem") {
      const unsigned max_n = c.n_range.empty() ? (c.n ? *c.n : c.max_n) : parse_n_range(c.n_range).hi;
      emit_table(os, theorem_table(max_n), c.format);
      return exit_ok;
    }
    if (c.kind != "values") throw UsageError("unknown report kind '" + c.kind + "'");
    const auto range = range_or_n(c);
    ValueReportOptions options;
    options.exact_limit = c.allow_large ? override_max_M_length : default_max_M_length;
    options.clique = clique;
    emit_table(os, value_report(range.lo, range.hi, options), c.format);
    return exit_ok;
  }
  throw UsageError("unknown command '" + command + "'");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for skewincident families of binary strings", "skewlab"};
  app.require_subcommand(1, 1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "csv, json or markdown (families also: lines)");
    sub->add_option("--out", c.out_path, "write the artifact here instead of stdout");
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", c.n, "string length / size parameter"); };

  auto* gamma_dist = app.add_subcommand("gamma-dist", "exact distribution of gamma over {0,1}^n");
  add_common(gamma_dist);
  add_n(gamma_dist);

  auto* construct = app.add_subcommand("construct", "materialize C_n, F_n or the greedy extension of C_n");
  add_common(construct);
  add_n(construct);
  construct->add_option("--construction", c.construction, "C, F or greedy-C");

  auto* verify = app.add_subcommand("verify", "check a family for pairwise skewincidence");
  add_common(verify);
  add_n(verify);
  verify->add_option("--construction", c.construction, "C, F or greedy-C");
  verify->add_option("--input", c.input_path, "family file (bit literals per line, or JSON array)");

  auto* exact_m = app.add_subcommand("exact-m", "exact M(n)");
  add_common(exact_m);
  add_n(exact_m);
  exact_m->add_flag("--allow-large", c.allow_large, "permit n up to 12");
  exact_m->add_flag("--timing", c.timing, "include elapsed_ms in JSON output");

  auto* graph_m = app.add_subcommand("graph-m", "exact M(G) for neighbor families of subsets");
  add_common(graph_m);
  graph_m->add_option("--graph", c.graph_spec, "path:N, loops:N, complete:N, multipartite:a,b,..., skew, file:PATH");
  graph_m->add_flag("--timing", c.timing, "include elapsed_ms in JSON output");

  auto* attractive = app.add_subcommand("attractive", "exact maximum pairwise-attractive family");
  add_common(attractive);
  add_n(attractive);
  attractive->add_option("--f-graph", c.f_graph_spec, "position graph spec");
  attractive->add_option("--g-graph", c.g_graph_spec, "alphabet graph spec");
  attractive->add_flag("--timing", c.timing, "include elapsed_ms in JSON output");

  auto* sperner = app.add_subcommand("sperner", "maximum antichains in the Fibonacci strings");
  add_common(sperner);
  add_n(sperner);
  sperner->add_option("--n-range", c.n_range, "a..b");
  sperner->add_flag("--witness", c.witness, "print a maximum antichain instead of the table");

  auto* montecarlo = app.add_subcommand("montecarlo", "seeded estimate of Pr{gamma <= n}");
  add_common(montecarlo);
  add_n(montecarlo);
  montecarlo->add_option("--samples", c.samples, "number of samples");
  montecarlo->add_option("--seed", c.seed, "64-bit seed");

  auto* crossover = app.add_subcommand("crossover", "smallest N with 2^n - |C_n| <= 2^{0.96n} on [N, max-n]");
  add_common(crossover);
  crossover->add_option("--max-n", c.max_n, "scan limit (2..512)");

  auto* report = app.add_subcommand("report", "value table (n, f_n, m_n, |C_n|, M(n), bound) or theorem table");
  add_common(report);
  add_n(report);
  report->add_option("--n-range", c.n_range, "a..b");
  report->add_option("--kind", c.kind, "values or theorem");
  report->add_option("--max-n", c.max_n, "theorem table limit");
  report->add_flag("--allow-large", c.allow_large, "compute M(n) up to n = 12");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    c.threads = threads_from_env();
    std::ostringstream buffer;
    const int code = detail::dispatch(command, c, buffer, err);
    if (c.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(c.out_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot write '" + c.out_path + "'");
      file << buffer.str();
    }
    return code;
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommand(command)->help();
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace skewlab::cli
