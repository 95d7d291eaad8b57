#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace symquot {

/// The pair (k, n) fixing the ideal generated by h_{n-k+i} - a_i, i = 1..k.
struct QuotContext {
  int k = 1;
  int n = 1;

  QuotContext() = default;
  QuotContext(int k_, int n_) : k(k_), n(n_) {
    if (k < 1 || n < k) throw std::invalid_argument("context requires 1 <= k <= n (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }

  /// Width n-k of the box holding P_{k,n}.
  [[nodiscard]] int width() const noexcept { return n - k; }

  auto operator<=>(const QuotContext&) const = default;
};

}  // namespace symquot
