#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "formulas.hpp"
#include "graph.hpp"
#include "oracle.hpp"

namespace csfcc {

inline constexpr int theta_scan_schema = 1;

struct ThetaScanRow {
  int a = 0, b = 0, c = 0;
  int n = 0;
  bool e_positive = false;
  /// Smallest stored coefficient; ties go to the first term in TermOrder.
  Partition min_partition;
  Coeff min_value = 0;
  /// "formula" when taken from the cycle-chord expansion (c = 1), else "oracle".
  std::string method;

  friend bool operator==(const ThetaScanRow&, const ThetaScanRow&) = default;
};

inline nlohmann::json to_json(const ThetaScanRow& r) {
  return {{"schema", theta_scan_schema},
          {"a", r.a},
          {"b", r.b},
          {"c", r.c},
          {"n", r.n},
          {"method", r.method},
          {"e_positive", r.e_positive},
          {"min_coefficient", {{"partition", r.min_partition.parts()}, {"value", r.min_value}}}};
}

inline ThetaScanRow theta_row_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<int>() != theta_scan_schema) throw std::invalid_argument("unsupported checkpoint schema");
  ThetaScanRow r;
  r.a = j.at("a").get<int>();
  r.b = j.at("b").get<int>();
  r.c = j.at("c").get<int>();
  r.n = j.at("n").get<int>();
  r.method = j.at("method").get<std::string>();
  r.e_positive = j.at("e_positive").get<bool>();
  r.min_partition = Partition(j.at("min_coefficient").at("partition").get<std::vector<int>>());
  r.min_value = j.at("min_coefficient").at("value").get<Coeff>();
  return r;
}

/// Theta parameters (a, b, c), a >= b >= c >= 1 and b >= 2, of order n,
/// i.e. a + b + c = n + 1; a descending, then b descending.
inline std::vector<std::tuple<int, int, int>> theta_cells(int n) {
  std::vector<std::tuple<int, int, int>> out;
  const int total = n + 1;
  for (int a = total - 2; a >= 2; --a)
    for (int b = std::min(a, total - a - 1); b >= 2; --b) {
      int c = total - a - b;
      if (c >= 1 && c <= b) out.emplace_back(a, b, c);
    }
  return out;
}

inline ThetaScanRow theta_row(int a, int b, int c, const OracleOptions& opt = {}) {
  ThetaScanRow r;
  r.a = a, r.b = b, r.c = c, r.n = a + b + c - 1;
  SymFunc x;
  if (c == 1) {
    x = csf_cycle_chord(a, b);
    r.method = "formula";
  } else {
    x = csf_oracle(theta_graph(a, b, c), opt);
    r.method = "oracle";
  }
  r.e_positive = is_e_positive(x).positive;
  bool first = true;
  for (const auto& [lam, v] : x.terms()) {
    if (first || v < r.min_value) {
      r.min_partition = lam;
      r.min_value = v;
      first = false;
    }
  }
  return r;
}

struct ThetaScanOptions {
  int n_max = 10;
  OracleOptions oracle;
  /// JSON-lines checkpoint: existing rows are reused, new rows appended.
  std::optional<std::filesystem::path> checkpoint;
  /// Called for each row in scan order; the flag marks rows read back from
  /// the checkpoint.
  std::function<void(const ThetaScanRow&, bool)> on_row;
};

struct ThetaScanResult {
  std::vector<ThetaScanRow> rows;
  /// Set when the scan stopped early; rows then hold the completed prefix.
  std::optional<std::string> error;
};

/// Every theta graph of order n <= n_max, rows in increasing n and then the
/// order of theta_cells. The checkpoint is rewritten without stale error
/// markers on resume and appended to after each new row.
inline ThetaScanResult scan_theta(const ThetaScanOptions& opt) {
  ThetaScanResult result;
  std::map<std::tuple<int, int, int>, ThetaScanRow> done;
  std::ofstream log;
  if (opt.checkpoint) {
    std::vector<ThetaScanRow> previous;
    if (std::ifstream in(*opt.checkpoint); in) {
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        if (j.contains("error")) continue;
        previous.push_back(theta_row_from_json(j));
      }
    }
    log.open(*opt.checkpoint, std::ios::trunc);
    if (!log) throw std::runtime_error("cannot write checkpoint " + opt.checkpoint->string());
    for (const auto& r : previous) {
      done.emplace(std::tuple{r.a, r.b, r.c}, r);
      log << to_json(r).dump() << '\n';
    }
    log.flush();
  }
  for (int n = 3; n <= opt.n_max; ++n) {
    for (auto [a, b, c] : theta_cells(n)) {
      bool resumed = false;
      ThetaScanRow row;
      if (auto it = done.find({a, b, c}); it != done.end()) {
        row = it->second;
        resumed = true;
      } else {
        try {
          row = theta_row(a, b, c, opt.oracle);
        } catch (const resource_error& e) {
          result.error = "theta(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                         "): " + e.what();
          if (log.is_open()) log << nlohmann::json{{"schema", theta_scan_schema}, {"error", *result.error}}.dump() << '\n';
          return result;
        }
        if (log.is_open()) log << to_json(row).dump() << '\n' << std::flush;
      }
      result.rows.push_back(row);
      if (opt.on_row) opt.on_row(row, resumed);
    }
  }
  return result;
}

}  // namespace csfcc
