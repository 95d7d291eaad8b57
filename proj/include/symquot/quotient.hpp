#pragma once

/**
 * @file quotient.hpp
 * @brief The ring S/I of symmetric polynomials in k variables modulo
 *        h_{n-k+i} - a_i (i = 1..k), in its Schur basis indexed by P_{k,n}.
 *
 * Straightening uses the rim-hook recursion
 *
 *   s_mu = sum_{j=1}^{k} (-1)^{k-j} a_j sum_{tau in V, -|tau| = n-k+j} s_{mu+tau}
 *
 * for mu_1 > n-k. Each step lowers |mu| by at least n-k+1, so it terminates.
 * Results are memoized per (k, n).
 */

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "apoly.hpp"
#include "context.hpp"
#include "memo.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "tableaux.hpp"

namespace symquot {

/// An element of S/I: a finite sum of coeff * s̄_lambda, lambda in P_{k,n}.
class QuotElem {
 public:
  using TermMap = std::map<Partition, APoly>;

  explicit QuotElem(QuotContext ctx) : ctx_(ctx) {}

  /// The basis element s̄_lambda; lambda must lie in P_{k,n}.
  static QuotElem basis(QuotContext ctx, const Partition& lambda) {
    QuotElem e(ctx);
    e.add_term(lambda, APoly::one(ctx.k));
    return e;
  }
  static QuotElem scalar(QuotContext ctx, const APoly& c) {
    QuotElem e(ctx);
    e.add_term(Partition{}, c);
    return e;
  }
  static QuotElem one(QuotContext ctx) { return basis(ctx, Partition{}); }

  [[nodiscard]] const QuotContext& context() const noexcept { return ctx_; }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Partition& lambda, const APoly& c) {
    if (!in_box(lambda, ctx_.k, ctx_.n))
      throw std::domain_error("partition " + to_string(lambda) + " is not in P_{k,n}");
    if (c.nvars() != ctx_.k) throw std::domain_error("coefficient has the wrong number of parameters");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * other.
  void add_scaled(const QuotElem& other, const APoly& c) {
    check_same(other);
    if (c.is_zero()) return;
    for (const auto& [lambda, v] : other.terms_) add_term(lambda, v * c);
  }
  void add_scaled(const QuotElem& other, const BigInt& c) {
    check_same(other);
    if (c == 0) return;
    for (const auto& [lambda, v] : other.terms_) add_term(lambda, v * c);
  }

  QuotElem& operator+=(const QuotElem& o) {
    add_scaled(o, BigInt(1));
    return *this;
  }
  QuotElem& operator-=(const QuotElem& o) {
    add_scaled(o, BigInt(-1));
    return *this;
  }
  friend QuotElem operator+(QuotElem a, const QuotElem& b) { return a += b; }
  friend QuotElem operator-(QuotElem a, const QuotElem& b) { return a -= b; }
  friend QuotElem operator*(const APoly& c, const QuotElem& f) {
    QuotElem r(f.ctx_);
    r.add_scaled(f, c);
    return r;
  }

  bool operator==(const QuotElem& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

  void check_same(const QuotElem& o) const {
    if (!(ctx_ == o.ctx_)) throw std::domain_error("elements belong to different quotient rings");
  }

 private:
  QuotContext ctx_;
  TermMap terms_;
};

namespace detail {

struct QuotientCache {
  MemoTable<Partition, QuotElem> straightened;
  MemoTable<std::pair<Partition, Partition>, QuotElem> products;
};

inline QuotientCache& quotient_cache(const QuotContext& ctx) {
  static std::mutex mutex;
  static std::map<QuotContext, std::unique_ptr<QuotientCache>> caches;
  std::lock_guard lock(mutex);
  auto& slot = caches[ctx];
  if (!slot) slot = std::make_unique<QuotientCache>();
  return *slot;
}

inline void check_context_k(const QuotContext& ctx) {
  if (ctx.k > kMaxVars) throw std::invalid_argument("k exceeds the supported number of parameters");
}

}  // namespace detail

/// One rim-hook step for mu with at most k parts and mu_1 > n-k. The result
/// is a raw combination of s_lambda (lambda may still lie outside the box).
inline std::map<Partition, APoly> rim_hook_step(const QuotContext& ctx, const Partition& mu) {
  const int k = ctx.k;
  if (mu.length() > k) throw std::domain_error("rim_hook_step: partition has more than k parts");
  if (mu[0] <= ctx.width()) throw std::domain_error("rim_hook_step: partition already fits the box width");
  std::map<Partition, APoly> out;
  const IntVector base = mu.padded(k);
  for (const IntVector& tau : enumerate_v_set(k, ctx.n)) {
    int weight = 0;
    for (int t : tau) weight -= t;
    const int j = weight - ctx.width();
    IntVector v(base.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = base[i] + tau[i];
    auto sp = straighten_vector(v);
    if (!sp) continue;
    const int sign = ((k - j) % 2 == 0 ? 1 : -1) * sp->sign;
    APoly term = APoly::variable(k, j) * BigInt(sign);
    auto [it, inserted] = out.try_emplace(sp->partition, term);
    if (!inserted) {
      it->second += term;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

/// Expands s̄_mu (mu with at most k parts) in the basis of S/I.
inline QuotElem straighten_schur(const QuotContext& ctx, const Partition& mu) {
  detail::check_context_k(ctx);
  if (mu.length() > ctx.k) throw std::domain_error("straighten_schur: " + to_string(mu) + " has more than k parts");
  if (in_box(mu, ctx.k, ctx.n)) return QuotElem::basis(ctx, mu);
  return detail::quotient_cache(ctx).straightened.get_or_compute(mu, [&] {
    QuotElem out(ctx);
    for (const auto& [lambda, c] : rim_hook_step(ctx, mu)) out.add_scaled(straighten_schur(ctx, lambda), c);
    return out;
  });
}

/// Straightens a combination of Schur functions in k variables; partitions
/// with more than k parts vanish.
inline QuotElem straighten_sum(const QuotContext& ctx, const std::map<Partition, BigInt>& combo) {
  QuotElem out(ctx);
  for (const auto& [mu, c] : combo)
    if (mu.length() <= ctx.k) out.add_scaled(straighten_schur(ctx, mu), c);
  return out;
}

/// s̄_lambda * s̄_mu for basis elements, memoized.
inline QuotElem multiply_basis(const QuotContext& ctx, const Partition& lambda, const Partition& mu) {
  if (!in_box(lambda, ctx.k, ctx.n) || !in_box(mu, ctx.k, ctx.n))
    throw std::domain_error("multiply_basis: factor is not in P_{k,n}");
  return detail::quotient_cache(ctx).products.get_or_compute(
      {lambda, mu}, [&] { return straighten_sum(ctx, schur_product_expand(lambda, mu, ctx.k)); });
}

inline QuotElem multiply(const QuotElem& f, const QuotElem& g) {
  f.check_same(g);
  const QuotContext& ctx = f.context();
  QuotElem out(ctx);
  for (const auto& [lambda, cf] : f.terms())
    for (const auto& [mu, cg] : g.terms()) out.add_scaled(multiply_basis(ctx, lambda, mu), cf * cg);
  return out;
}

/// Coefficient of s̄_mu in f.
inline APoly coeff(const QuotElem& f, const Partition& mu) {
  const QuotContext& ctx = f.context();
  if (!in_box(mu, ctx.k, ctx.n)) throw std::domain_error("coeff: " + to_string(mu) + " is not in P_{k,n}");
  auto it = f.terms().find(mu);
  return it == f.terms().end() ? APoly(ctx.k) : it->second;
}

/// g_{alpha,beta,gamma} = coeff_{gamma^vee}(s̄_alpha s̄_beta).
inline APoly structure_constant(const QuotContext& ctx, const Partition& alpha, const Partition& beta,
                                const Partition& gamma) {
  return coeff(multiply_basis(ctx, alpha, beta), complement(gamma, ctx.k, ctx.n));
}

/// s̄_lambda h_j via the closed Pieri formula, for lambda in P_{k,n} and
/// 0 <= j <= n-k:
///   sum over horizontal j-strips mu/lambda inside the box of s̄_mu
///   - sum_{i=1}^{k} (-1)^i a_i sum_{nu} c^lambda_{(n-k-j+1, 1^{i-1}), nu} s̄_nu.
inline QuotElem pieri_h(const QuotContext& ctx, const Partition& lambda, int j) {
  if (!in_box(lambda, ctx.k, ctx.n)) throw std::domain_error("pieri_h: lambda is not in P_{k,n}");
  if (j < 0 || j > ctx.width()) throw std::domain_error("pieri_h: j must lie in [0, n-k]");
  const int k = ctx.k;
  QuotElem out(ctx);
  for (const auto& [mu, c] : pieri_horizontal(lambda, j, k))
    if (in_box(mu, k, ctx.n)) out.add_term(mu, APoly::constant(k, c));
  for (int i = 1; i <= k; ++i) {
    std::vector<int> hook(static_cast<std::size_t>(i), 1);
    hook[0] = ctx.width() - j + 1;
    const Partition hook_shape(std::move(hook));
    const APoly a = APoly::variable(k, i) * BigInt(i % 2 == 0 ? -1 : 1);
    for (const auto& [nu, c] : skew_schur_expand(lambda, hook_shape)) out.add_term(nu, a * c);
  }
  return out;
}

/// f * e_r, applying the dual Pieri rule to each basis term and then
/// straightening.
inline QuotElem multiply_e(const QuotElem& f, int r) {
  const QuotContext& ctx = f.context();
  QuotElem out(ctx);
  for (const auto& [lambda, c] : f.terms()) {
    QuotElem piece(ctx);
    for (const auto& [mu, m] : pieri_vertical(lambda, r, ctx.k)) piece.add_scaled(straighten_schur(ctx, mu), m);
    out.add_scaled(piece, c);
  }
  return out;
}

/// h̄_{n+m} = sum_{j=0}^{k-1} (-1)^j a_{k-j} s̄_{(m, 1^j)}.
inline QuotElem reduce_h_overflow(const QuotContext& ctx, int m) {
  if (m < 1) throw std::domain_error("reduce_h_overflow: m must be positive");
  const int k = ctx.k;
  QuotElem out(ctx);
  for (int j = 0; j < k; ++j) {
    std::vector<int> hook(static_cast<std::size_t>(j + 1), 1);
    hook[0] = m;
    const APoly a = APoly::variable(k, k - j) * BigInt(j % 2 == 0 ? 1 : -1);
    out.add_scaled(straighten_schur(ctx, Partition(std::move(hook))), a);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table scans.

struct S3Violation {
  Partition alpha, beta, gamma;
  std::string detail;
};

struct S3Report {
  bool ok = true;
  std::size_t triples_checked = 0;
  std::vector<S3Violation> counterexamples;
};

/// Checks g_{alpha,beta,gamma} under all six permutations, and against
/// coeff_omega(s̄_alpha s̄_beta s̄_gamma), over all unordered triples.
inline S3Report s3_report(const QuotContext& ctx, int jobs = 1) {
  const std::vector<Partition> basis = enumerate_pkn(ctx.k, ctx.n);
  const std::size_t d = basis.size();
  const Partition omega = box_partition(ctx.k, ctx.n);
  // Every ordered product is computed on its own so that commutativity is
  // actually exercised.
  std::vector<std::vector<const QuotElem*>> prod(d, std::vector<const QuotElem*>(d));
  std::vector<std::vector<QuotElem>> storage(d);
  detail::parallel_for(d, jobs, [&](std::size_t a) {
    storage[a].reserve(d);
    for (std::size_t b = 0; b < d; ++b) storage[a].push_back(multiply_basis(ctx, basis[a], basis[b]));
  });
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) prod[a][b] = &storage[a][b];

  auto g = [&](std::size_t a, std::size_t b, std::size_t c) {
    return coeff(*prod[a][b], complement(basis[c], ctx.k, ctx.n));
  };
  std::vector<std::vector<S3Violation>> found(d);
  std::vector<std::size_t> checked(d, 0);
  detail::parallel_for(d, jobs, [&](std::size_t i) {
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t l = j; l < d; ++l) {
        const APoly ref = g(i, j, l);
        const APoly perms[] = {g(i, l, j), g(j, i, l), g(j, l, i), g(l, i, j), g(l, j, i)};
        const APoly triple = coeff(multiply(*prod[i][j], QuotElem::basis(ctx, basis[l])), omega);
        ++checked[i];
        bool bad = !(triple == ref);
        for (const APoly& p : perms) bad = bad || !(p == ref);
        if (bad)
          found[i].push_back({basis[i], basis[j], basis[l],
                              "g=" + to_string(ref) + " coeff_omega(triple)=" + to_string(triple)});
      }
  });
  S3Report report;
  for (std::size_t i = 0; i < d; ++i) {
    report.triples_checked += checked[i];
    for (auto& v : found[i]) report.counterexamples.push_back(std::move(v));
  }
  report.ok = report.counterexamples.empty();
  return report;
}

struct PositivityViolation {
  Partition lambda, mu, nu;
  /// (-1)^{|lambda|+|mu|-|nu|} coeff_nu(s̄_lambda s̄_mu), written in b_i.
  APoly offending;
};

struct PositivityReport {
  bool ok = true;
  std::size_t coefficients_checked = 0;
  std::vector<PositivityViolation> violations;
};

/// Rewrites a polynomial in a_i as one in b_i = (-1)^{n-k-1} a_i. The same
/// exponent vectors are used for the b-variables.
inline APoly to_b_variables(const QuotContext& ctx, const APoly& p) {
  const bool flip = (ctx.n - ctx.k - 1) % 2 != 0;
  APoly out(p.nvars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, (flip && m.degree() % 2 != 0) ? BigInt(-c) : c);
  return out;
}

/// Scans every (lambda, mu, nu) in P_{k,n}^3 for a negative coefficient of
/// (-1)^{|lambda|+|mu|-|nu|} coeff_nu(s̄_lambda s̄_mu) written in the b_i.
inline PositivityReport positivity_scan(const QuotContext& ctx, int jobs = 1) {
  const std::vector<Partition> basis = enumerate_pkn(ctx.k, ctx.n);
  const std::size_t d = basis.size();
  std::vector<std::vector<PositivityViolation>> found(d);
  std::vector<std::size_t> checked(d, 0);
  detail::parallel_for(d, jobs, [&](std::size_t a) {
    for (std::size_t b = 0; b < d; ++b) {
      const QuotElem product = multiply_basis(ctx, basis[a], basis[b]);
      for (const auto& [nu, c] : product.terms()) {
        const int shift = basis[a].size() + basis[b].size() - nu.size();
        APoly signed_b = to_b_variables(ctx, c) * BigInt(shift % 2 == 0 ? 1 : -1);
        ++checked[a];
        for (const auto& [m, v] : signed_b.terms()) {
          if (v < 0) {
            found[a].push_back({basis[a], basis[b], nu, signed_b});
            break;
          }
        }
      }
    }
  });
  PositivityReport report;
  for (std::size_t a = 0; a < d; ++a) {
    report.coefficients_checked += checked[a];
    for (auto& v : found[a]) report.violations.push_back(std::move(v));
  }
  report.ok = report.violations.empty();
  return report;
}

/// Applies a specialization to every coefficient; zero terms are dropped.
inline std::map<Partition, QPoly> specialize_elem(const QuotElem& f, const Specialization& s) {
  std::map<Partition, QPoly> out;
  for (const auto& [lambda, c] : f.terms()) {
    QPoly v = specialize(c, s);
    if (!v.is_zero()) out.emplace(lambda, std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form: terms in descending canonical order, e.g.
//   "-a2*s[3,1,1] + a1^2*s[1,1] - a1*a2*s[1] + a1*a3*s[]"

namespace detail {

template <class Map>
std::string render_schur_sum(const Map& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    auto [neg, prefix] = coefficient_prefix(it->second);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const std::string basis = "s" + to_string(it->first);
    out += prefix.empty() ? basis : prefix + "*" + basis;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const QuotElem& f) { return detail::render_schur_sum(f.terms()); }
inline std::string to_string(const std::map<Partition, QPoly>& f) { return detail::render_schur_sum(f); }

}  // namespace symquot
