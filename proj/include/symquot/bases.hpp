#pragma once

/**
 * @file bases.hpp
 * @brief h-, m-, e-, p- and h^t-families of S/I expanded in the Schur basis,
 *        change-of-basis matrices, unitriangularity checks, and basis
 *        classification by determinant.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "apoly.hpp"
#include "memo.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "quotient.hpp"
#include "tableaux.hpp"

namespace symquot {

enum class BasisFamily { H, M, ETranspose, P, HTranspose };

inline std::string to_string(BasisFamily f) {
  switch (f) {
    case BasisFamily::H: return "h";
    case BasisFamily::M: return "m";
    case BasisFamily::ETranspose: return "e";
    case BasisFamily::P: return "p";
    case BasisFamily::HTranspose: return "ht";
  }
  return "?";
}

inline BasisFamily parse_family(std::string_view s) {
  if (s == "h") return BasisFamily::H;
  if (s == "m") return BasisFamily::M;
  if (s == "e") return BasisFamily::ETranspose;
  if (s == "p") return BasisFamily::P;
  if (s == "ht") return BasisFamily::HTranspose;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected h, m, e, p or ht)");
}

namespace detail {

inline void require_box(const QuotContext& ctx, const Partition& lambda) {
  if (!in_box(lambda, ctx.k, ctx.n)) throw std::domain_error(to_string(lambda) + " is not in P_{k,n}");
}

/// h_lambda in the Schur basis of k variables: sum_mu K_{mu,lambda} s_mu.
inline std::map<Partition, BigInt> h_in_schur(const Partition& lambda, int k) {
  std::map<Partition, BigInt> out;
  for (const Partition& mu : partitions_of(lambda.size(), k)) {
    BigInt c = kostka(mu, lambda);
    if (c != 0) out.emplace(mu, std::move(c));
  }
  return out;
}

inline MemoTable<std::pair<Partition, int>, std::map<Partition, BigInt>>& m_memo() {
  static MemoTable<std::pair<Partition, int>, std::map<Partition, BigInt>> table;
  return table;
}

/// m_lambda in the Schur basis of k variables, by inverting the unitriangular
/// Kostka matrix on partitions of |lambda| with at most k parts:
/// m_lambda = s_lambda - sum_{nu strictly dominated} K_{lambda,nu} m_nu.
inline std::map<Partition, BigInt> m_in_schur(const Partition& lambda, int k) {
  if (lambda.length() > k) return {};
  return m_memo().get_or_compute({lambda, k}, [&] {
    std::map<Partition, BigInt> out{{lambda, 1}};
    for (const Partition& nu : partitions_of(lambda.size(), k)) {
      if (nu == lambda || !dominates(lambda, nu)) continue;
      const BigInt c = kostka(lambda, nu);
      if (c == 0) continue;
      for (const auto& [mu, v] : m_in_schur(nu, k)) {
        auto& slot = out[mu];
        slot -= c * v;
        if (slot == 0) out.erase(mu);
      }
    }
    return out;
  });
}

/// p_r = sum_{j=0}^{min(r,k)-1} (-1)^j s_{(r-j, 1^j)} in k variables.
inline std::map<Partition, BigInt> p_in_schur(int r, int k) {
  std::map<Partition, BigInt> out;
  if (r == 0) {
    out.emplace(Partition{}, 1);
    return out;
  }
  for (int j = 0; j < std::min(r, k); ++j) {
    std::vector<int> hook(static_cast<std::size_t>(j + 1), 1);
    hook[0] = r - j;
    out.emplace(Partition(std::move(hook)), j % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace detail

/// Image of h_lambda in S/I.
inline QuotElem expand_h(const QuotContext& ctx, const Partition& lambda) {
  detail::require_box(ctx, lambda);
  return straighten_sum(ctx, detail::h_in_schur(lambda, ctx.k));
}

/// Image of m_lambda in S/I.
inline QuotElem expand_m(const QuotContext& ctx, const Partition& lambda) {
  detail::require_box(ctx, lambda);
  return straighten_sum(ctx, detail::m_in_schur(lambda, ctx.k));
}

/// Image of e_{lambda^t} = prod_j e_{(lambda^t)_j}, built by repeated dual
/// Pieri products.
inline QuotElem expand_e_conj(const QuotContext& ctx, const Partition& lambda) {
  detail::require_box(ctx, lambda);
  QuotElem out = QuotElem::one(ctx);
  const Partition lt = conjugate(lambda);
  for (int part : lt.parts()) out = multiply_e(out, part);
  return out;
}

/// Image of p_lambda = prod_i p_{lambda_i}.
inline QuotElem expand_p(const QuotContext& ctx, const Partition& lambda) {
  detail::require_box(ctx, lambda);
  QuotElem out = QuotElem::one(ctx);
  for (int part : lambda.parts()) out = multiply(out, straighten_sum(ctx, detail::p_in_schur(part, ctx.k)));
  return out;
}

/// Image of h_{lambda^t}. lambda^t usually leaves the box.
inline QuotElem expand_h_conj(const QuotContext& ctx, const Partition& lambda) {
  detail::require_box(ctx, lambda);
  return straighten_sum(ctx, detail::h_in_schur(conjugate(lambda), ctx.k));
}

inline QuotElem expand(const QuotContext& ctx, BasisFamily family, const Partition& lambda) {
  switch (family) {
    case BasisFamily::H: return expand_h(ctx, lambda);
    case BasisFamily::M: return expand_m(ctx, lambda);
    case BasisFamily::ETranspose: return expand_e_conj(ctx, lambda);
    case BasisFamily::P: return expand_p(ctx, lambda);
    case BasisFamily::HTranspose: return expand_h_conj(ctx, lambda);
  }
  throw std::invalid_argument("unknown basis family");
}

/// s̄_lambda in the m̄-basis: the Kostka row of lambda, restricted to P_{k,n}.
inline std::map<Partition, BigInt> expand_s_in_m(const QuotContext& ctx, const Partition& lambda) {
  detail::require_box(ctx, lambda);
  std::map<Partition, BigInt> out;
  for (const Partition& mu : partitions_of(lambda.size(), ctx.k)) {
    if (!in_box(mu, ctx.k, ctx.n)) continue;
    BigInt c = kostka(lambda, mu);
    if (c != 0) out.emplace(mu, std::move(c));
  }
  return out;
}

/// Square matrix over APoly with rows and columns indexed by P_{k,n} in
/// canonical order. Row lambda holds the s̄-coefficients of the family
/// element indexed by lambda.
struct BasisMatrix {
  QuotContext ctx;
  std::vector<Partition> index;
  std::vector<std::vector<APoly>> entries;

  [[nodiscard]] std::size_t dimension() const noexcept { return index.size(); }
};

inline BasisMatrix change_of_basis_matrix(const QuotContext& ctx, BasisFamily family, int jobs = 1) {
  BasisMatrix m{ctx, enumerate_pkn(ctx.k, ctx.n), {}};
  const std::size_t d = m.index.size();
  m.entries.assign(d, std::vector<APoly>(d, APoly(ctx.k)));
  detail::parallel_for(d, jobs, [&](std::size_t r) {
    const QuotElem row = expand(ctx, family, m.index[r]);
    for (std::size_t c = 0; c < d; ++c) m.entries[r][c] = coeff(row, m.index[c]);
  });
  return m;
}

enum class Triangularity {
  HToS,  ///< h̄ in the s̄-basis, size-then-antidominance order
  SToM,  ///< s̄ in the m̄-basis, graded dominance order
};

/// Verifies unit diagonal and that every nonzero off-diagonal entry in row
/// lambda, column mu has mu strictly below lambda in the relevant order.
inline bool unitriangularity_check(const QuotContext& ctx, Triangularity which) {
  const std::vector<Partition> basis = enumerate_pkn(ctx.k, ctx.n);
  for (const Partition& lambda : basis) {
    std::map<Partition, APoly> row;
    if (which == Triangularity::HToS) {
      row = expand_h(ctx, lambda).terms();
    } else {
      for (const auto& [mu, c] : expand_s_in_m(ctx, lambda)) row.emplace(mu, APoly::constant(ctx.k, c));
    }
    auto diag = row.find(lambda);
    if (diag == row.end() || !(diag->second == APoly::one(ctx.k))) return false;
    for (const auto& [mu, c] : row) {
      if (mu == lambda) continue;
      const auto ord = which == Triangularity::HToS ? cmp_size_antidominance(mu, lambda) : cmp_graded_dominance(mu, lambda);
      if (ord != std::partial_ordering::less) return false;
    }
  }
  return true;
}

/// Fraction-free Gaussian elimination. `exact_div(x, y)` must return x / y
/// whenever y divides x; Bareiss guarantees every division is exact.
template <class T, class IsZero, class ExactDiv>
T bareiss_determinant(std::vector<std::vector<T>> a, T one, IsZero is_zero, ExactDiv exact_div) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (is_zero(a[p][p])) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && is_zero(a[swap_row][p])) ++swap_row;
      if (swap_row == n) return T(one - one);
      std::swap(a[p], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) a[i][j] = exact_div(a[i][j] * a[p][p] - a[i][p] * a[p][j], prev);
    }
    prev = a[p][p];
  }
  T det = a[n - 1][n - 1];
  return negate ? T(-det) : det;
}

/// Determinant of a change-of-basis matrix over Z[a].
///
/// When every entry (lambda, mu) is weighted-homogeneous of degree
/// |lambda| - |mu| with weight(a_i) = n-k+i, the substitution a_i -> t^{n-k+i} a_i
/// rescales the matrix by a diagonal similarity, so the determinant is a
/// constant and equals the determinant at a = 0. Otherwise Bareiss runs
/// over Z[a] directly.
inline APoly determinant(const BasisMatrix& m) {
  const QuotContext& ctx = m.ctx;
  const std::size_t d = m.dimension();
  std::vector<int> weights(static_cast<std::size_t>(ctx.k));
  for (int i = 0; i < ctx.k; ++i) weights[static_cast<std::size_t>(i)] = ctx.width() + i + 1;
  bool graded = true;
  for (std::size_t r = 0; r < d && graded; ++r)
    for (std::size_t c = 0; c < d && graded; ++c) {
      const long expected = m.index[r].size() - m.index[c].size();
      auto deg = m.entries[r][c].weighted_degree(weights, expected);
      graded = deg && *deg == expected && (expected >= 0 || m.entries[r][c].is_zero());
    }
  if (graded) {
    std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) a[r][c] = m.entries[r][c].constant_term();
    const BigInt det = bareiss_determinant<BigInt>(
        std::move(a), BigInt(1), [](const BigInt& x) { return x == 0; },
        [](const BigInt& x, const BigInt& y) { return BigInt(x / y); });
    return APoly::constant(ctx.k, det);
  }
  return bareiss_determinant<APoly>(
      m.entries, APoly::one(ctx.k), [](const APoly& x) { return x.is_zero(); },
      [](const APoly& x, const APoly& y) { return x.divide_exact(y); });
}

struct Classification {
  enum class Kind { Yes, No, CharDependent, ADependent };
  Kind kind = Kind::Yes;
  /// |det| for CharDependent; 1 for Yes; 0 for No.
  BigInt d = 1;
  APoly determinant;
};

inline Classification classify_determinant(const APoly& det) {
  Classification c{Classification::Kind::Yes, 1, det};
  if (det.is_zero()) {
    c.kind = Classification::Kind::No;
    c.d = 0;
  } else if (!det.is_constant()) {
    c.kind = Classification::Kind::ADependent;
    c.d = 0;
  } else {
    const BigInt v = det.constant_term();
    c.d = v < 0 ? BigInt(-v) : v;
    c.kind = c.d == 1 ? Classification::Kind::Yes : Classification::Kind::CharDependent;
  }
  return c;
}

inline Classification classify_family(const QuotContext& ctx, BasisFamily family, int jobs = 1) {
  return classify_determinant(determinant(change_of_basis_matrix(ctx, family, jobs)));
}

/// "yes", "no", "st(d)" or "a-dep".
inline std::string to_string(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::Yes: return "yes";
    case Classification::Kind::No: return "no";
    case Classification::Kind::CharDependent: return "st(" + c.d.str() + ")";
    case Classification::Kind::ADependent: return "a-dep";
  }
  return "?";
}

}  // namespace symquot
