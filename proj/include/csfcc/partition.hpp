#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace csfcc {

/// Integer partition: parts stored weakly decreasing. The empty partition
/// is the unique partition of 0.
class Partition {
public:
  Partition() = default;

  /// Accepts parts in any order; they are sorted on construction.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
      if (x < 1) throw std::domain_error("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Multiset union of the parts.
  Partition merged(const Partition& other) const {
    Partition r;
    r.parts_.resize(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), r.parts_.begin(),
               std::greater<>());
    return r;
  }

  /// Parts concatenated without separators when all are single digits
  /// ("42", "222"), otherwise comma separated ("10,1").
  std::string str() const {
    bool compact = std::all_of(parts_.begin(), parts_.end(), [](int x) { return x < 10; });
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!compact && i > 0) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts_ <=> y.parts_; }

private:
  std::vector<int> parts_;
};

/// Output order for expansions: degree descending, then reverse
/// lexicographic, so 6 < 51 < 42 < 222 in this order.
struct TermOrder {
  bool operator()(const Partition& x, const Partition& y) const {
    int dx = x.size(), dy = y.size();
    if (dx != dy) return dx > dy;
    return x > y;
  }
};

/// Dominance order: mu <= lambda iff every prefix sum of mu is at most the
/// corresponding prefix sum of lambda (shorter partitions padded by zeros).
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw std::domain_error("dominance order needs partitions of equal size");
  int smu = 0, slam = 0;
  std::size_t len = std::max(mu.length(), lambda.length());
  for (std::size_t i = 0; i < len; ++i) {
    smu += i < mu.length() ? mu[i] : 0;
    slam += i < lambda.length() ? lambda[i] : 0;
    if (smu > slam) return false;
  }
  return true;
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of n in reverse lexicographic order (n, n-1 1, ..., 1^n).
inline std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::domain_error("partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace csfcc
