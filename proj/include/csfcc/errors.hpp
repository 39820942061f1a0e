#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace csfcc {

/// Exact integer type used for every coefficient in the library.
///
/// All arithmetic on coefficients goes through the checked helpers below;
/// an overflow raises std::overflow_error instead of wrapping. The closed
/// formulas stay well inside 64 bits for n <= 20.
using Coeff = std::int64_t;

/// Raised when an enumeration would exceed a configured size bound.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when two symmetric functions in different bases are combined.
class basis_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace checked {

inline Coeff add(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Coeff sub(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Coeff mul(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
inline Coeff binomial(Coeff n, Coeff k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Coeff r = 1;
  for (Coeff i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = mul(r, n - k + i) / i;
  }
  return r;
}

inline Coeff pow(Coeff base, int exp) {
  Coeff r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked
}  // namespace csfcc
