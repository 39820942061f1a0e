#pragma once

#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace csfcc {

/// Integer composition: a nonempty ordered sequence of positive parts.
class Composition {
public:
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::domain_error("composition must have at least one part");
    for (int x : parts_)
      if (x < 1) throw std::domain_error("composition parts must be positive");
  }
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  /// Number of parts, z.
  std::size_t length() const { return parts_.size(); }
  /// 1-based access, matching the usual i_1 ... i_z indexing.
  int part(std::size_t j) const { return parts_.at(j - 1); }
  int modulus() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

/// Range over all 2^(n-1) compositions of n.
///
/// Ordered by the (n-1)-bit cut mask: bit j-1 set means a cut after unit j.
/// Mask 0 is the one-part composition (n); for n = 3 the order is
/// 3, 12, 21, 111.
class CompositionRange {
public:
  explicit CompositionRange(int n) : n_(n) {
    if (n < 1) throw std::domain_error("compositions: n must be >= 1");
    if (n > 62) throw resource_error("compositions: n too large for mask enumeration");
  }

  class iterator {
  public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}

    Composition operator*() const {
      std::vector<int> parts;
      int run = 1;
      for (int j = 1; j < n_; ++j) {
        if (mask_ >> (j - 1) & 1U) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      parts.push_back(run);
      return Composition(std::move(parts));
    }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++mask_;
      return t;
    }
    std::uint64_t mask() const { return mask_; }
    friend bool operator==(const iterator& x, const iterator& y) { return x.mask_ == y.mask_; }

  private:
    int n_ = 1;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, std::uint64_t{1} << (n_ - 1)}; }
  std::uint64_t count() const { return std::uint64_t{1} << (n_ - 1); }

private:
  int n_;
};

inline CompositionRange compositions(int n) { return CompositionRange(n); }

/// The partition obtained by sorting the parts of I.
inline Partition partition_of(const Composition& c) { return Partition(c.parts()); }

inline Composition reverse(const Composition& c) {
  return Composition(std::vector<int>(c.parts().rbegin(), c.parts().rend()));
}

/// i_1 i_2 ... i_z -> i_1 i_z ... i_2. An involution preserving w and the
/// underlying partition.
inline Composition phi(const Composition& c) {
  std::vector<int> parts;
  parts.reserve(c.length());
  parts.push_back(c.parts().front());
  parts.insert(parts.end(), c.parts().rbegin(), c.parts().rend() - 1);
  return Composition(std::move(parts));
}

/// w_I = i_1 (i_2 - 1) ... (i_z - 1).
inline Coeff weight_w(const Composition& c) {
  Coeff w = c.parts().front();
  for (std::size_t j = 1; j < c.length(); ++j) w = checked::mul(w, c.parts()[j] - 1);
  return w;
}

namespace detail {
inline void check_level(const Composition& c, int a, const char* what) {
  if (a < 0 || a > c.modulus()) throw std::domain_error(std::string(what) + ": level must lie in [0, |I|]");
}
}  // namespace detail

/// a-surplus: distance from a up to the nearest prefix sum of I.
inline int theta_plus(const Composition& c, int a) {
  detail::check_level(c, a, "theta_plus");
  int prefix = 0;
  if (a == 0) return 0;
  for (int x : c.parts()) {
    prefix += x;
    if (prefix >= a) return prefix - a;
  }
  return 0;  // unreachable: the full sum is >= a
}

/// a-deficiency: distance from a down to the nearest prefix sum of I.
inline int theta_minus(const Composition& c, int a) {
  detail::check_level(c, a, "theta_minus");
  int prefix = 0;
  for (int x : c.parts()) {
    if (prefix + x > a) break;
    prefix += x;
  }
  return a - prefix;
}

/// Split parameters of (I, b):
///   b = i_1 + ... + i_{p-1} + s,  1 <= p <= z, 1 <= s <= i_p
///   b = i_2 + ... + i_q + t,      1 <= q <= z, 1 <= t <= i_{q+1}
/// with the cyclic convention i_{z+1} = i_1. Indices are 1-based.
struct SplitParams {
  int p = 0;
  int s = 0;
  int q = 0;
  int t = 0;
  friend bool operator==(const SplitParams&, const SplitParams&) = default;
};

inline SplitParams split_params(const Composition& c, int b) {
  const int n = c.modulus();
  const int z = static_cast<int>(c.length());
  if (b < 1 || b > n - 1) throw std::domain_error("split_params: b must lie in [1, n-1]");
  SplitParams sp;
  int prefix = 0;
  for (int j = 1; j <= z; ++j) {
    if (b <= prefix + c.part(j)) {
      sp.p = j;
      sp.s = b - prefix;
      break;
    }
    prefix += c.part(j);
  }
  // prefix now runs over i_2 + ... + i_q
  prefix = 0;
  for (int q = 1; q <= z; ++q) {
    int next = q == z ? c.part(1) : c.part(q + 1);
    if (b <= prefix + next) {
      sp.q = q;
      sp.t = b - prefix;
      break;
    }
    prefix += next;
  }
  return sp;
}

/// Elementary symmetric polynomial of degree 2. Undefined below two
/// arguments.
inline Coeff e2_sym(const std::vector<Coeff>& xs) {
  if (xs.size() < 2) throw std::domain_error("e2_sym needs at least two arguments");
  Coeff total = 0, acc = 0;
  for (Coeff x : xs) {
    acc = checked::add(acc, checked::mul(total, x));
    total = checked::add(total, x);
  }
  return acc;
}

namespace detail {
inline void check_delta_domain(const Composition& c, int b) {
  int n = c.modulus();
  if (b < 2 || b > n - 2) throw std::domain_error("delta: b must lie in [2, n-2] (both a, b >= 2)");
}
}  // namespace detail

/// The cycle-chord coefficient weight Delta_I(b), from the split
/// parameters. Requires a = n - b >= 2 and b >= 2. Always nonnegative.
inline Coeff delta(const Composition& c, int b) {
  detail::check_delta_domain(c, b);
  const SplitParams sp = split_params(c, b);
  const int i1 = c.part(1);
  const int ip = c.part(sp.p);
  if (i1 <= ip - sp.s) return checked::mul(sp.s, ip - sp.s - i1);
  std::vector<Coeff> xs{ip - sp.s};
  for (int j = sp.p + 1; j <= sp.q; ++j) xs.push_back(c.part(j));
  xs.push_back(sp.t);
  return e2_sym(xs);
}

/// Half-open integer interval (lo, hi].
struct Interval {
  int lo = 0;
  int hi = 0;
  int length() const { return hi - lo; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Tiling of (0, n + i_1] by segments of lengths i_1, i_2, ..., i_z, i_1,
/// together with the window (b, b + i_1].
struct SegmentDissection {
  std::vector<Interval> segments;
  Interval window;

  SegmentDissection(const Composition& c, int b) {
    int x = 0;
    auto push = [&](int len) {
      segments.push_back({x, x + len});
      x += len;
    };
    for (int part : c.parts()) push(part);
    push(c.part(1));
    window = {b, b + c.part(1)};
  }

  /// Index of the segment containing the whole window, or -1.
  int enclosing_segment() const {
    for (std::size_t j = 0; j < segments.size(); ++j)
      if (segments[j].contains(window)) return static_cast<int>(j);
    return -1;
  }

  /// Lengths of the nonempty intersections of the window with each segment.
  std::vector<Coeff> intersection_lengths() const {
    std::vector<Coeff> out;
    for (const Interval& seg : segments) {
      int lo = std::max(seg.lo, window.lo), hi = std::min(seg.hi, window.hi);
      if (hi > lo) out.push_back(hi - lo);
    }
    return out;
  }
};

/// Delta_I(b) read off the segment dissection: the product of the two
/// leftover pieces when the window sits inside one segment, otherwise e_2
/// of the window's intersections with the segments.
inline Coeff delta_by_segments(const Composition& c, int b) {
  detail::check_delta_domain(c, b);
  SegmentDissection d(c, b);
  int j = d.enclosing_segment();
  if (j >= 0) {
    const Interval& seg = d.segments[j];
    return checked::mul(d.window.lo - seg.lo, seg.hi - d.window.hi);
  }
  return e2_sym(d.intersection_lengths());
}

}  // namespace csfcc
