#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

namespace equistream {

// Factorials as long double. Exact through 25!, adequate relative accuracy
// beyond; the angular-momentum sums here never need n > 60.
inline constexpr std::size_t kMaxFactorial = 64;

namespace detail {
inline const std::array<long double, kMaxFactorial + 1>& factorial_table() {
  static const auto table = [] {
    std::array<long double, kMaxFactorial + 1> t{};
    t[0] = 1.0L;
    for (std::size_t n = 1; n <= kMaxFactorial; ++n) {
      t[n] = t[n - 1] * static_cast<long double>(n);
    }
    return t;
  }();
  return table;
}
}  // namespace detail

inline long double factorial(int n) {
  if (n < 0 || static_cast<std::size_t>(n) > kMaxFactorial) {
    throw std::invalid_argument("factorial: argument out of range");
  }
  return detail::factorial_table()[static_cast<std::size_t>(n)];
}

// (2n-1)!! with the usual convention (-1)!! = 1.
inline double double_factorial_odd(int n) {
  double r = 1.0;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return static_cast<double>(factorial(n) / (factorial(k) * factorial(n - k)));
}

inline int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace equistream
