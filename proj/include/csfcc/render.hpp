#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "symfunc.hpp"

namespace csfcc {

namespace detail {
inline std::string render_terms(const SymFunc& f, bool latex) {
  if (f.is_zero()) return "0";
  const std::string letter = basis_letter(f.basis());
  std::string out;
  bool first = true;
  for (const auto& [lam, c] : f.terms()) {
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += latex ? (c < 0 ? "-" : "+") : (c < 0 ? " - " : " + ");
    }
    first = false;
    if (lam.empty()) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    std::string sub = lam.str();
    out += letter + "_";
    if (latex)
      out += sub.size() == 1 ? sub : "{" + sub + "}";
    else
      out += lam.length() > 1 && sub.find(',') != std::string::npos ? "(" + sub + ")" : sub;
  }
  return out;
}
}  // namespace detail

/// Plain text, e.g. "54e_6 + 16e_51 + 26e_42 + 2e_222".
inline std::string to_text(const SymFunc& f) { return detail::render_terms(f, false); }

/// LaTeX with brace-grouped subscripts, e.g. "54e_6+16e_{51}+26e_{42}+2e_{222}".
inline std::string to_latex(const SymFunc& f) { return detail::render_terms(f, true); }

/// {"basis": "e", "terms": [[[6], 54], [[5, 1], 16], ...]} in term order.
inline nlohmann::json to_json(const SymFunc& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lam, c] : f.terms()) terms.push_back({lam.parts(), c});
  return {{"basis", basis_letter(f.basis())}, {"terms", std::move(terms)}};
}

inline SymFunc symfunc_from_json(const nlohmann::json& j) {
  const std::string b = j.at("basis").get<std::string>();
  if (b != "e" && b != "p") throw std::invalid_argument("unknown basis tag '" + b + "'");
  SymFunc f(b == "e" ? Basis::Elementary : Basis::PowerSum);
  for (const auto& term : j.at("terms")) f.add_term(Partition(term.at(0).get<std::vector<int>>()), term.at(1).get<Coeff>());
  return f;
}

}  // namespace csfcc
