#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions, the box set P_{k,n}, partial orders, strips,
 *        and signed straightening of integer vectors.
 *
 * A partition is stored as its list of nonzero parts. All comparisons treat
 * it as an infinite sequence padded with zeros, so (3,1) and (3,1,0) are the
 * same value.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symquot {

/// Element of Z^k. Entries may be negative.
using IntVector = std::vector<int>;

class Partition {
 public:
  Partition() = default;

  /// Accepts any weakly decreasing list of nonnegative integers; trailing
  /// zeros are dropped.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

  /// i-th part (0-based), zero past the end.
  [[nodiscard]] int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// Zero-padded (or truncated) copy of the parts as a vector of length k.
  [[nodiscard]] IntVector padded(int k) const {
    IntVector v(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < v.size() && i < parts_.size(); ++i) v[i] = parts_[i];
    return v;
  }

  /// True iff the Young diagram of `inner` fits inside this one.
  [[nodiscard]] bool contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.parts_.size(); ++i)
      if (inner.parts_[i] > parts_[i]) return false;
    return true;
  }

  bool operator==(const Partition&) const = default;

  /// Canonical order: by size, then lexicographically descending. This is
  /// the enumeration order of P_{k,n} and the iteration order of every map
  /// keyed by partitions.
  std::strong_ordering operator<=>(const Partition& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    const std::size_t len = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (auto c = (*this)[i] <=> other[i]; c != 0) return 0 <=> c;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<int> parts_;
};

/// Result of straightening an integer vector: s_alpha = sign * s_partition.
struct SignedPartition {
  int sign = 1;
  Partition partition;
  bool operator==(const SignedPartition&) const = default;
};

/// True iff lambda has at most k parts, each at most n-k.
inline bool in_box(const Partition& lambda, int k, int n) {
  return lambda.length() <= k && lambda[0] <= n - k;
}

/// The full box partition (n-k)^k.
inline Partition box_partition(int k, int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(k), n - k));
}

/// All partitions fitting in a k x (n-k) box, in canonical order.
inline std::vector<Partition> enumerate_pkn(int k, int n) {
  if (k < 0 || n < k) throw std::invalid_argument("enumerate_pkn requires 0 <= k <= n");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int max_part) -> void {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (int p = 1; p <= max_part; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, n - k);
  std::sort(out.begin(), out.end());
  return out;
}

/// All partitions of `size` with at most `max_len` parts, each at most
/// `max_part`, in canonical (lex descending) order.
inline std::vector<Partition> partitions_of(int size, int max_len, int max_part) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(bound, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, size, max_part);
  return out;
}

inline std::vector<Partition> partitions_of(int size, int max_len) {
  return partitions_of(size, max_len, size);
}

inline Partition complement(const Partition& nu, int k, int n) {
  if (!in_box(nu, k, n)) throw std::domain_error("complement: partition is not in P_{k,n}");
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = n - k - nu[static_cast<std::size_t>(k - 1 - i)];
  return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> parts(static_cast<std::size_t>(lambda[0]), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++parts[static_cast<std::size_t>(j)];
  return Partition(std::move(parts));
}

/// Dominance order. Partitions of different sizes never dominate each other.
inline bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int sl = 0, sm = 0;
  const std::size_t len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl < sm) return false;
  }
  return true;
}

/// Size-then-antidominance order: larger size wins; on equal sizes, the
/// dominated partition is the greater one.
inline std::partial_ordering cmp_size_antidominance(const Partition& lambda, const Partition& mu) {
  if (lambda == mu) return std::partial_ordering::equivalent;
  if (lambda.size() != mu.size()) return lambda.size() <=> mu.size();
  if (dominates(mu, lambda)) return std::partial_ordering::greater;
  if (dominates(lambda, mu)) return std::partial_ordering::less;
  return std::partial_ordering::unordered;
}

/// Graded dominance order: comparable only on equal sizes.
inline std::partial_ordering cmp_graded_dominance(const Partition& lambda, const Partition& mu) {
  if (lambda == mu) return std::partial_ordering::equivalent;
  if (lambda.size() != mu.size()) return std::partial_ordering::unordered;
  if (dominates(lambda, mu)) return std::partial_ordering::greater;
  if (dominates(mu, lambda)) return std::partial_ordering::less;
  return std::partial_ordering::unordered;
}

/// lambda / mu is a horizontal j-strip.
inline bool is_horizontal_strip(const Partition& lambda, const Partition& mu, int j) {
  if (!lambda.contains(mu) || lambda.size() - mu.size() != j) return false;
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(lambda.length()); ++i)
    if (lambda[i + 1] > mu[i]) return false;
  return true;
}

/// lambda / mu is a vertical i-strip.
inline bool is_vertical_strip(const Partition& lambda, const Partition& mu, int i) {
  if (!lambda.contains(mu) || lambda.size() - mu.size() != i) return false;
  for (std::size_t r = 0; r < static_cast<std::size_t>(lambda.length()); ++r)
    if (lambda[r] - mu[r] > 1) return false;
  return true;
}

/// Entrywise sum mu + nu.
inline Partition entrywise_sum(const Partition& mu, const Partition& nu) {
  const int len = std::max(mu.length(), nu.length());
  std::vector<int> parts(static_cast<std::size_t>(len));
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = mu[i] + nu[i];
  return Partition(std::move(parts));
}

/// Sorted concatenation of the parts of mu and nu.
inline Partition sorted_union(const Partition& mu, const Partition& nu) {
  std::vector<int> parts(mu.parts().begin(), mu.parts().end());
  parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

/// Rewrites s_alpha (alpha in Z^k, defined by the Jacobi-Trudi determinant)
/// as +-s_lambda for a partition lambda, or returns nullopt when it vanishes.
/// Works on beta = alpha + rho with rho = (k-1, ..., 1, 0).
inline std::optional<SignedPartition> straighten_vector(const IntVector& alpha) {
  const int k = static_cast<int>(alpha.size());
  std::vector<int> beta(alpha.size());
  for (int i = 0; i < k; ++i) {
    beta[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)] + k - 1 - i;
    if (beta[static_cast<std::size_t>(i)] < 0) return std::nullopt;
  }
  // Insertion sort into strictly decreasing order, counting transpositions.
  int swaps = 0;
  for (std::size_t i = 1; i < beta.size(); ++i) {
    for (std::size_t j = i; j > 0 && beta[j - 1] <= beta[j]; --j) {
      if (beta[j - 1] == beta[j]) return std::nullopt;
      std::swap(beta[j - 1], beta[j]);
      ++swaps;
    }
  }
  std::vector<int> parts(beta.size());
  for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (k - 1 - i);
  return SignedPartition{swaps % 2 == 0 ? 1 : -1, Partition(std::move(parts))};
}

/// The rim-hook direction set: all (-n, t_2, ..., t_k) with t_i in {0,1},
/// ordered by the binary number t_2 t_3 ... t_k.
inline std::vector<IntVector> enumerate_v_set(int k, int n) {
  if (k < 1) throw std::invalid_argument("enumerate_v_set requires k >= 1");
  std::vector<IntVector> out;
  const unsigned count = 1u << static_cast<unsigned>(k - 1);
  out.reserve(count);
  for (unsigned mask = 0; mask < count; ++mask) {
    IntVector tau(static_cast<std::size_t>(k), 0);
    tau[0] = -n;
    for (int i = 1; i < k; ++i)
      tau[static_cast<std::size_t>(i)] = static_cast<int>((mask >> static_cast<unsigned>(k - 1 - i)) & 1u);
    out.push_back(std::move(tau));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text forms: "[]", "[3,1]" for partitions and "(-6,1,0)" for vectors.

inline std::string to_string(const Partition& lambda) {
  std::string s = "[";
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda[static_cast<std::size_t>(i)]);
  }
  return s + "]";
}

inline std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline Partition parse_partition(std::string_view text) {
  auto fail = [&]() -> Partition {
    throw std::invalid_argument("malformed partition '" + std::string(text) + "', expected e.g. [3,1]");
  };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return fail();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  if (body.empty()) return Partition{};
  std::size_t pos = 0;
  while (true) {
    std::size_t end = body.find(',', pos);
    std::string_view tok = body.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (tok.empty() || tok.size() > 9 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return fail();
    parts.push_back(std::stoi(std::string(tok)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace symquot
