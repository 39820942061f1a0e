#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "coloring.hpp"
#include "composition.hpp"
#include "graph_spec.hpp"
#include "render.hpp"
#include "theta_scan.hpp"
#include "verify.hpp"

namespace csfcc::cli {

enum class Verb { Csf, Delta, Verify, ScanTheta, Nice, Chrompoly };
enum class Format { Text, Json, Latex };

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct Command {
  Verb verb = Verb::Csf;
  /// Graph spec, or the composition "i1,i2,..." for delta.
  std::string target;
  Format format = Format::Text;
  std::optional<int> b;
  int max_n = 10;
  OracleOptions oracle;
  std::optional<std::string> resume;
};

namespace detail {

inline Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  std::size_t pos = 0;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
      throw parse_error("expected a positive integer part", pos);
    parts.push_back(std::stoi(tok));
    pos += tok.size() + 1;
  }
  if (parts.empty()) throw parse_error("empty composition", 0);
  return Composition(std::move(parts));
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const std::vector<Coeff>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

inline std::string interval_str(const Interval& iv) {
  return "(" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

/// Two aligned rows: segment boundaries over unit cells, then the window
/// cells marked '#'.
inline std::string segment_picture(const SegmentDissection& d) {
  std::string top = "|", bottom = " ";
  for (const Interval& seg : d.segments) {
    for (int k = seg.lo + 1; k <= seg.hi; ++k) {
      top += '-';
      bottom += (k > d.window.lo && k <= d.window.hi) ? '#' : '.';
    }
    top += '|';
    bottom += ' ';
  }
  return top + "\n" + bottom + "\n";
}

inline int run_csf(const Command& cmd, std::ostream& out) {
  const GraphSpec spec = parse_graph_spec(cmd.target);
  std::optional<SymFunc> x = closed_formula(spec);
  const char* method = x ? "formula" : "oracle";
  if (!x) x = csf_oracle(build_graph(spec), cmd.oracle);
  switch (cmd.format) {
    case Format::Latex: out << to_latex(*x) << '\n'; break;
    case Format::Text: out << to_text(*x) << '\n'; break;
    case Format::Json: {
      nlohmann::json j = to_json(*x);
      j["spec"] = render_spec(spec);
      j["method"] = method;
      out << j.dump() << '\n';
      break;
    }
  }
  return exit_ok;
}

inline int run_delta(const Command& cmd, std::ostream& out) {
  if (!cmd.b) throw std::domain_error("delta needs --b");
  const Composition c = parse_composition(cmd.target);
  const int b = *cmd.b;
  const Coeff value = delta(c, b);
  const Coeff by_segments = delta_by_segments(c, b);
  const SplitParams sp = split_params(c, b);
  const SegmentDissection d(c, b);
  const bool nested = c.part(1) <= c.part(sp.p) - sp.s;
  if (cmd.format == Format::Json) {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : d.segments) segs.push_back({s.lo, s.hi});
    out << nlohmann::json{{"composition", c.parts()},
                          {"n", c.modulus()},
                          {"b", b},
                          {"split", {{"p", sp.p}, {"s", sp.s}, {"q", sp.q}, {"t", sp.t}}},
                          {"case", nested ? "enclosed" : "spanning"},
                          {"segments", segs},
                          {"window", {d.window.lo, d.window.hi}},
                          {"intersections", d.intersection_lengths()},
                          {"delta", value},
                          {"delta_by_segments", by_segments}}
               .dump()
        << '\n';
  } else {
    out << "I = " << c.str() << "  n = " << c.modulus() << "  b = " << b << "  a = " << c.modulus() - b << '\n';
    out << "split: p = " << sp.p << ", s = " << sp.s << ", q = " << sp.q << ", t = " << sp.t << '\n';
    out << "segments:";
    for (const auto& s : d.segments) out << ' ' << interval_str(s);
    out << "\nwindow: " << interval_str(d.window) << '\n';
    out << "intersections: " << join(d.intersection_lengths(), ", ") << '\n';
    out << segment_picture(d);
    if (nested)
      out << "case i_1 <= i_p - s: Delta = s(i_p - s - i_1)\n";
    else
      out << "case i_1 > i_p - s: Delta = e_2 of the intersections\n";
    out << "Delta = " << value << '\n';
    if (value != by_segments) out << "MISMATCH: segment reading gives " << by_segments << '\n';
  }
  return value == by_segments ? exit_ok : exit_failed;
}

inline int run_verify(const Command& cmd, std::ostream& out, std::ostream& err) {
  const GraphSpec spec = parse_graph_spec(cmd.target);
  const VerificationReport rep = verify(spec, cmd.oracle);
  err << "timings: formula " << rep.timings.formula_ms << " ms, oracle " << rep.timings.oracle_ms
      << " ms, specialization " << rep.timings.specialization_ms << " ms\n";
  const auto render = [&](const SymFunc& f) { return cmd.format == Format::Latex ? to_latex(f) : to_text(f); };
  if (cmd.format == Format::Json) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& [lam, c] : rep.e_positive.witnesses) witnesses.push_back({lam.parts(), c});
    nlohmann::json j{{"spec", render_spec(spec)},
                     {"n_vertices", rep.n_vertices},
                     {"n_edges", rep.n_edges},
                     {"formula", rep.formula_result ? to_json(*rep.formula_result) : nlohmann::json(nullptr)},
                     {"oracle", to_json(rep.oracle_result)},
                     {"equal", rep.equal ? nlohmann::json(*rep.equal) : nlohmann::json(nullptr)},
                     {"e_positive", {{"positive", rep.e_positive.positive}, {"witnesses", witnesses}}},
                     {"positivity_expected", rep.positivity_expected},
                     {"coloring_counts", rep.coloring_counts},
                     {"specialization_ok", rep.specialization_ok},
                     {"passed", rep.passed()}};
    out << j.dump() << '\n';
  } else {
    out << "spec: " << render_spec(spec) << " (" << rep.n_vertices << " vertices, " << rep.n_edges << " edges)\n";
    out << "formula: " << (rep.formula_result ? render(*rep.formula_result) : "(none for this family)") << '\n';
    out << "oracle:  " << render(rep.oracle_result) << '\n';
    out << "equal: " << (rep.equal ? yes_no(*rep.equal) : "n/a") << '\n';
    out << "e-positive: " << yes_no(rep.e_positive.positive);
    for (const auto& [lam, c] : rep.e_positive.witnesses) out << "  [e_" << lam.str() << "] = " << c;
    out << '\n';
    out << "colorings k=0.." << rep.n_vertices << ": " << join(rep.coloring_counts, " ") << '\n';
    out << "specialization matches: " << yes_no(rep.specialization_ok) << '\n';
    out << "result: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
  }
  return rep.passed() ? exit_ok : exit_failed;
}

inline int run_scan(const Command& cmd, std::ostream& out, std::ostream& err) {
  ThetaScanOptions opt;
  opt.n_max = cmd.max_n;
  opt.oracle = cmd.oracle;
  if (cmd.resume) opt.checkpoint = *cmd.resume;
  bool unexpected = false;
  opt.on_row = [&](const ThetaScanRow& r, bool resumed) {
    if (!r.e_positive && r.c <= 2) unexpected = true;
    if (cmd.format == Format::Json) {
      out << to_json(r).dump() << '\n';
    } else {
      out << "theta(" << r.a << "," << r.b << "," << r.c << ") n=" << r.n << " e-positive=" << yes_no(r.e_positive)
          << " min [e_" << r.min_partition.str() << "] = " << r.min_value << " (" << r.method << ")\n";
    }
    out.flush();
    err << (resumed ? "resumed " : "done ") << r.a << "," << r.b << "," << r.c << '\n';
  };
  ThetaScanResult res = scan_theta(opt);
  if (res.error) {
    err << "scan stopped: " << *res.error << '\n';
    return exit_usage;
  }
  return unexpected ? exit_failed : exit_ok;
}

inline int run_nice(const Command& cmd, std::ostream& out) {
  const GraphSpec spec = parse_graph_spec(cmd.target);
  const Graph g = build_graph(spec);
  const auto types = stable_partition_types(g);
  const NicenessReport rep = is_nice(g);
  if (cmd.format == Format::Json) {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : types) ts.push_back(t.parts());
    nlohmann::json j{{"spec", render_spec(spec)}, {"nice", rep.nice}, {"types", ts}};
    if (rep.witness) j["witness"] = {{"attained", rep.witness->first.parts()}, {"missing", rep.witness->second.parts()}};
    out << j.dump() << '\n';
  } else {
    out << "stable partition types:";
    for (const auto& t : types) out << ' ' << t.str();
    out << '\n';
    if (rep.nice)
      out << "nice\n";
    else
      out << "not nice: attains " << rep.witness->first.str() << " but not " << rep.witness->second.str()
          << ", which it dominates\n";
  }
  return exit_ok;
}

inline int run_chrompoly(const Command& cmd, std::ostream& out) {
  const GraphSpec spec = parse_graph_spec(cmd.target);
  const Graph g = build_graph(spec);
  const Polynomial chi = chromatic_polynomial(g);
  std::vector<Coeff> counts;
  for (int k = 0; k <= g.n_vertices(); ++k) counts.push_back(evaluate(chi, k));
  if (cmd.format == Format::Json) {
    out << nlohmann::json{{"spec", render_spec(spec)}, {"polynomial", chi}, {"counts", counts}}.dump() << '\n';
  } else {
    for (std::size_t k = 0; k < counts.size(); ++k) out << "k=" << k << ": " << counts[k] << '\n';
  }
  return exit_ok;
}

}  // namespace detail

/// Dispatches one command. Results go to out, diagnostics to err. Returns
/// 0 on success, 1 when a verification fails, 2 on usage, domain or
/// resource errors.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Verb::Csf: return detail::run_csf(cmd, out);
      case Verb::Delta: return detail::run_delta(cmd, out);
      case Verb::Verify: return detail::run_verify(cmd, out, err);
      case Verb::ScanTheta: return detail::run_scan(cmd, out, err);
      case Verb::Nice: return detail::run_nice(cmd, out);
      case Verb::Chrompoly: return detail::run_chrompoly(cmd, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace csfcc::cli
