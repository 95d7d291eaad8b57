#pragma once

/**
 * @file tableaux.hpp
 * @brief Kostka numbers, Littlewood-Richardson coefficients, Schur product
 *        and skew expansions in k variables, and the uncancelled Pieri rule.
 *
 * Every function here is pure. Kostka and LR values are memoized in
 * process-wide tables that are safe to share between threads.
 */

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "apoly.hpp"
#include "memo.hpp"
#include "partition.hpp"

namespace symquot {

/// Partition -> nonnegative coefficient; zeros are never stored.
using NatCoeffMap = std::map<Partition, BigInt>;
/// Partition -> signed coefficient; zeros are never stored.
using SignedPartitionSum = std::map<Partition, BigInt>;

namespace detail {

inline MemoTable<std::pair<Partition, Partition>, BigInt>& kostka_memo() {
  static MemoTable<std::pair<Partition, Partition>, BigInt> table;
  return table;
}

inline MemoTable<std::tuple<Partition, Partition, Partition>, BigInt>& lr_memo() {
  static MemoTable<std::tuple<Partition, Partition, Partition>, BigInt> table;
  return table;
}

/// Calls f(inner) for every partition `inner` such that outer/inner is a
/// horizontal strip of size m.
template <class F>
void for_each_horizontal_strip_removal(const Partition& outer, int m, F&& f) {
  const int len = outer.length();
  std::vector<int> inner(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == len) {
      if (remaining == 0) f(Partition(inner));
      return;
    }
    const int hi = outer[static_cast<std::size_t>(row)];
    const int lo = outer[static_cast<std::size_t>(row) + 1];
    // Boxes removable below this row bound how many must go here.
    int below = 0;
    for (int r = row + 1; r < len; ++r) below += outer[static_cast<std::size_t>(r)] - outer[static_cast<std::size_t>(r) + 1];
    for (int take = 0; take <= hi - lo && take <= remaining; ++take) {
      if (remaining - take > below) continue;
      inner[static_cast<std::size_t>(row)] = hi - take;
      self(self, row + 1, remaining - take);
    }
  };
  rec(rec, 0, m);
}

}  // namespace detail

inline BigInt kostka(const Partition& lambda, const Partition& mu);

namespace detail {

/// Branching on the largest letter: its boxes form a horizontal strip at
/// the outer rim of the tableau.
inline BigInt kostka_by_branching(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return lambda.empty() ? BigInt(1) : BigInt(0);
  const auto parts = mu.parts();
  const Partition prefix(std::vector<int>(parts.begin(), parts.end() - 1));
  BigInt total = 0;
  for_each_horizontal_strip_removal(lambda, parts.back(), [&](const Partition& inner) { total += kostka(inner, prefix); });
  return total;
}

/// Counts LR fillings of lambda/mu with content nu: semistandard, and the
/// reading word (rows top to bottom, each right to left) is a lattice word.
inline BigInt count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int rows = lambda.length();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
  std::vector<int> count(static_cast<std::size_t>(nu.length()) + 1, 0);
  BigInt total = 0;
  auto rec = [&](auto&& self, int r, int c) -> void {
    // Advance to the next cell in reading order.
    while (r < rows && c < mu[static_cast<std::size_t>(r)]) {
      ++r;
      if (r < rows) c = lambda[static_cast<std::size_t>(r)] - 1;
    }
    if (r == rows) {
      ++total;
      return;
    }
    const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
    int hi = nu.length();
    if (c + 1 < lambda[ur]) hi = std::min(hi, t[ur][uc + 1]);
    int lo = 1;
    if (r > 0 && c >= mu[ur - 1]) lo = t[ur - 1][uc] + 1;
    // An entry v in row r (0-based) of an LR tableau satisfies v <= r + 1.
    hi = std::min(hi, r + 1);
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (count[uv] + 1 > nu[uv - 1]) continue;
      if (v > 1 && count[uv] + 1 > count[uv - 1]) continue;
      ++count[uv];
      t[ur][uc] = v;
      self(self, r, c - 1);
      --count[uv];
    }
    t[ur][uc] = 0;
  };
  rec(rec, 0, rows > 0 ? lambda[0] - 1 : 0);
  return total;
}

}  // namespace detail

/// Number of semistandard tableaux of shape lambda and content mu.
inline BigInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() || !dominates(lambda, mu)) return 0;
  if (lambda == mu) return 1;
  return detail::kostka_memo().get_or_compute({lambda, mu}, [&] { return detail::kostka_by_branching(lambda, mu); });
}

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
inline BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  if (!dominates(entrywise_sum(mu, nu), lambda) || !dominates(lambda, sorted_union(mu, nu))) return 0;
  return detail::lr_memo().get_or_compute({lambda, mu, nu}, [&] { return detail::count_lr_tableaux(lambda, mu, nu); });
}

/// s_mu * s_nu in k variables: rho -> c^rho_{mu,nu} over rho with <= k parts.
inline NatCoeffMap schur_product_expand(const Partition& mu, const Partition& nu, int k) {
  if (mu.length() > k || nu.length() > k) throw std::domain_error("schur_product_expand: factor has more than k parts");
  NatCoeffMap out;
  const int total = mu.size() + nu.size();
  const int first_max = mu[0] + nu[0];
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int remaining, int bound) -> void {
    if (remaining == 0) {
      Partition rho(cur);
      BigInt c = lr_coefficient(rho, mu, nu);
      if (c != 0) out.emplace(std::move(rho), std::move(c));
      return;
    }
    if (row == k) return;
    const auto ur = static_cast<std::size_t>(row);
    const int lo = std::max({mu[ur], nu[ur], 1});
    for (int p = std::min(bound, remaining); p >= lo; --p) {
      cur.push_back(p);
      self(self, row + 1, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, total, first_max);
  return out;
}

/// s_{lambda/mu} = sum_nu c^lambda_{mu,nu} s_nu.
inline NatCoeffMap skew_schur_expand(const Partition& lambda, const Partition& mu) {
  NatCoeffMap out;
  if (!lambda.contains(mu)) return out;
  for (const Partition& nu : partitions_of(lambda.size() - mu.size(), lambda.length(), lambda[0])) {
    BigInt c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace(nu, std::move(c));
  }
  return out;
}

/// s_alpha * h_m = sum over nu in N^k with |nu| = m of s_{alpha+nu}, each
/// term straightened; alpha must satisfy alpha + rho in N^k.
inline SignedPartitionSum uncancelled_pieri(const IntVector& alpha, int m) {
  const int k = static_cast<int>(alpha.size());
  for (int i = 0; i < k; ++i)
    if (alpha[static_cast<std::size_t>(i)] + (k - 1 - i) < 0)
      throw std::domain_error("uncancelled_pieri: alpha + rho has a negative entry");
  if (m < 0) throw std::domain_error("uncancelled_pieri: m must be nonnegative");
  SignedPartitionSum out;
  if (k == 0) {
    if (m == 0) out.emplace(Partition{}, 1);
    return out;
  }
  IntVector v = alpha;
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    const auto ui = static_cast<std::size_t>(i);
    if (i == k - 1) {
      v[ui] += remaining;
      if (auto sp = straighten_vector(v)) {
        auto& slot = out[sp->partition];
        slot += sp->sign;
        if (slot == 0) out.erase(sp->partition);
      }
      v[ui] -= remaining;
      return;
    }
    for (int t = 0; t <= remaining; ++t) {
      v[ui] += t;
      self(self, i + 1, remaining - t);
      v[ui] -= t;
    }
  };
  rec(rec, 0, m);
  return out;
}

/// Classical Pieri: s_lambda h_m over partitions with at most k parts.
inline NatCoeffMap pieri_horizontal(const Partition& lambda, int m, int k) {
  NatCoeffMap out;
  for (const Partition& mu : partitions_of(lambda.size() + m, k, lambda[0] + m))
    if (is_horizontal_strip(mu, lambda, m)) out.emplace(mu, 1);
  return out;
}

/// Dual Pieri: s_lambda e_m over partitions with at most k parts.
inline NatCoeffMap pieri_vertical(const Partition& lambda, int m, int k) {
  NatCoeffMap out;
  for (const Partition& mu : partitions_of(lambda.size() + m, k, lambda[0] + 1))
    if (is_vertical_strip(mu, lambda, m)) out.emplace(mu, 1);
  return out;
}

}  // namespace symquot
