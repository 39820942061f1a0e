#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace csfcc {

enum class Basis { Elementary, PowerSum };

inline const char* basis_letter(Basis b) { return b == Basis::Elementary ? "e" : "p"; }

/// Sparse symmetric function in the e- or p-basis with exact integer
/// coefficients. Zero coefficients are never stored; terms iterate in
/// TermOrder.
class SymFunc {
public:
  using Terms = std::map<Partition, Coeff, TermOrder>;

  explicit SymFunc(Basis basis = Basis::Elementary) : basis_(basis) {}

  static SymFunc monomial(Basis basis, Partition lam, Coeff c) {
    SymFunc f(basis);
    f.add_term(lam, c);
    return f;
  }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds c to the coefficient of lam, dropping the term if it cancels.
  void add_term(const Partition& lam, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lam, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymFunc& operator+=(const SymFunc& g) {
    require_same_basis(g);
    for (const auto& [lam, c] : g.terms_) add_term(lam, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& g) {
    require_same_basis(g);
    for (const auto& [lam, c] : g.terms_) add_term(lam, checked::sub(0, c));
    return *this;
  }
  friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
  friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f -= g; }

  SymFunc scaled(Coeff c) const {
    SymFunc r(basis_);
    if (c == 0) return r;
    for (const auto& [lam, x] : terms_) r.terms_.emplace(lam, checked::mul(x, c));
    return r;
  }

  friend bool operator==(const SymFunc& f, const SymFunc& g) {
    return f.basis_ == g.basis_ && f.terms_ == g.terms_;
  }

  void require_same_basis(const SymFunc& g) const {
    if (basis_ != g.basis_) throw basis_mismatch("symmetric functions in different bases");
  }

private:
  Basis basis_;
  Terms terms_;
};

inline SymFunc add(const SymFunc& f, const SymFunc& g) { return f + g; }
inline SymFunc scale(const SymFunc& f, Coeff c) { return f.scaled(c); }

/// Product in the e-basis: e_lambda e_mu = e_{lambda u mu}.
inline SymFunc mul_e(const SymFunc& f, const SymFunc& g) {
  if (f.basis() != Basis::Elementary || g.basis() != Basis::Elementary)
    throw basis_mismatch("mul_e needs both factors in the elementary basis");
  SymFunc r(Basis::Elementary);
  for (const auto& [lam, x] : f.terms())
    for (const auto& [mu, y] : g.terms()) r.add_term(lam.merged(mu), checked::mul(x, y));
  return r;
}

namespace detail {

/// Process-wide memo of e-basis images of p_n, grown on demand.
class PowerSumImages {
public:
  static PowerSumImages& instance() {
    static PowerSumImages cache;
    return cache;
  }

  /// Image of p_n; the reference stays valid for the process lifetime.
  const SymFunc& get(int n) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(images_.size()) <= n) extend();
    return images_[n];
  }

private:
  PowerSumImages() { images_.emplace_back(SymFunc::monomial(Basis::Elementary, Partition{}, 1)); }

  // p_n = sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
  void extend() {
    const int n = static_cast<int>(images_.size());
    SymFunc pn(Basis::Elementary);
    for (int i = 1; i < n; ++i) {
      SymFunc term = mul_e(SymFunc::monomial(Basis::Elementary, Partition{i}, 1), images_[n - i]);
      pn += i % 2 == 1 ? term : term.scaled(-1);
    }
    pn.add_term(Partition{n}, n % 2 == 1 ? n : -n);
    images_.push_back(std::move(pn));
  }

  std::mutex mutex_;
  std::deque<SymFunc> images_;
};

}  // namespace detail

/// Converts a power-sum expansion to the e-basis via Newton's identities.
inline SymFunc p_to_e(const SymFunc& f) {
  if (f.basis() != Basis::PowerSum) throw basis_mismatch("p_to_e needs a power-sum input");
  auto& images = detail::PowerSumImages::instance();
  // p_lambda images built by peeling the smallest part; shared prefixes reuse work
  std::map<Partition, SymFunc> memo;
  auto image = [&](auto&& self, const Partition& lam) -> const SymFunc& {
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    SymFunc img(Basis::Elementary);
    if (lam.empty()) {
      img = SymFunc::monomial(Basis::Elementary, Partition{}, 1);
    } else {
      std::vector<int> rest(lam.parts().begin(), lam.parts().end() - 1);
      img = mul_e(self(self, Partition(rest)), images.get(lam.parts().back()));
    }
    return memo.emplace(lam, std::move(img)).first->second;
  };
  SymFunc r(Basis::Elementary);
  for (const auto& [lam, c] : f.terms()) {
    for (const auto& [mu, x] : image(image, lam).terms()) r.add_term(mu, checked::mul(c, x));
  }
  return r;
}

struct EPositivityReport {
  bool positive = true;
  std::vector<std::pair<Partition, Coeff>> witnesses;
};

inline EPositivityReport is_e_positive(const SymFunc& f) {
  if (f.basis() != Basis::Elementary) throw basis_mismatch("e-positivity is defined on e-expansions");
  EPositivityReport rep;
  for (const auto& [lam, c] : f.terms())
    if (c < 0) rep.witnesses.emplace_back(lam, c);
  rep.positive = rep.witnesses.empty();
  return rep;
}

/// Evaluates f at x_1 = ... = x_k = 1 and all other variables 0.
inline Coeff principal_specialization(const SymFunc& f, int k) {
  if (k < 0) throw std::domain_error("principal_specialization: k must be >= 0");
  Coeff total = 0;
  for (const auto& [lam, c] : f.terms()) {
    Coeff v = c;
    if (f.basis() == Basis::Elementary) {
      for (int part : lam.parts()) {
        Coeff b = checked::binomial(k, part);
        if (b == 0) {
          v = 0;
          break;
        }
        v = checked::mul(v, b);
      }
    } else {
      v = checked::mul(v, checked::pow(k, static_cast<int>(lam.length())));
    }
    total = checked::add(total, v);
  }
  return total;
}

}  // namespace csfcc
