#pragma once

/**
 * @file grobner.hpp
 * @brief The ambient ring P = Z[a][x_1..x_k] modulo J: degree-lexicographic
 *        order, the explicit Gröbner basis, normal forms, the monomial basis,
 *        and Schur polynomials as explicit x-polynomials.
 *
 * The leading term of the i-th Gröbner generator is x_i^{n-k+i}. These are
 * pairwise coprime, so a monomial is reducible exactly when some exponent
 * alpha_i reaches n-k+i, and division never needs S-pairs.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apoly.hpp"
#include "context.hpp"
#include "expr.hpp"
#include "partition.hpp"

namespace symquot {

using XMonomial = Exponents;

/// Degree-lexicographic comparison with x_1 > x_2 > ... > x_k.
inline std::strong_ordering deglex_compare(const XMonomial& u, const XMonomial& v) { return u <=> v; }

/// Sparse polynomial in x_1..x_k with APoly coefficients in a_1..a_k.
/// Terms are ordered by descending deglex.
class XPoly {
 public:
  using TermMap = std::map<XMonomial, APoly, std::greater<>>;

  explicit XPoly(int k = 0) : k_(k) { check_nvars(k); }

  static XPoly constant(int k, const APoly& c) {
    XPoly p(k);
    p.add_term(XMonomial{}, c);
    return p;
  }
  static XPoly constant(int k, const BigInt& c) { return constant(k, APoly::constant(k, c)); }
  /// The variable x_index (1-based).
  static XPoly variable(int k, int index) {
    if (index < 1 || index > k) throw std::domain_error("variable index out of range");
    XMonomial m;
    m[static_cast<std::size_t>(index - 1)] = 1;
    XPoly p(k);
    p.add_term(m, APoly::one(k));
    return p;
  }
  static XPoly monomial(int k, const XMonomial& m, const BigInt& c = 1) {
    XPoly p(k);
    p.add_term(m, APoly::constant(k, c));
    return p;
  }

  [[nodiscard]] int nvars() const noexcept { return k_; }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  [[nodiscard]] APoly coefficient(const XMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? APoly(k_) : it->second;
  }

  void add_term(const XMonomial& m, const APoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  XPoly& operator+=(const XPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator-(XPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    a.check_same(b);
    XPoly r(a.k_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }
  friend XPoly operator*(const APoly& c, XPoly p) {
    if (c.is_zero()) return XPoly(p.k_);
    for (auto& [m, v] : p.terms_) v *= c;
    std::erase_if(p.terms_, [](const auto& t) { return t.second.is_zero(); });
    return p;
  }
  XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

  bool operator==(const XPoly& o) const { return k_ == o.k_ && terms_ == o.terms_; }

 private:
  void check_same(const XPoly& o) const {
    if (k_ != o.k_) throw std::domain_error("XPoly operands have different numbers of variables");
  }

  int k_ = 0;
  TermMap terms_;
};

/// h_m(x_first, ..., x_last): sum of all monomials of degree m in the given
/// range of variables (1-based, inclusive). An empty range gives [m == 0].
inline XPoly complete_homogeneous(int k, int m, int first, int last) {
  XPoly p(k);
  if (m < 0) return p;
  if (first > last) {
    if (m == 0) p.add_term(XMonomial{}, APoly::one(k));
    return p;
  }
  XMonomial cur;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    const auto uv = static_cast<std::size_t>(var - 1);
    if (var == last) {
      cur[uv] = static_cast<std::uint16_t>(remaining);
      p.add_term(cur, APoly::one(k));
      cur[uv] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[uv] = static_cast<std::uint16_t>(e);
      self(self, var + 1, remaining - e);
    }
    cur[uv] = 0;
  };
  rec(rec, first, m);
  return p;
}

/// e_t(x_first, ..., x_last): sum of squarefree monomials of degree t.
inline XPoly elementary(int k, int t, int first, int last) {
  XPoly p(k);
  if (t < 0) return p;
  XMonomial cur;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (remaining == 0) {
      p.add_term(cur, APoly::one(k));
      return;
    }
    if (last - var + 1 < remaining) return;
    const auto uv = static_cast<std::size_t>(var - 1);
    cur[uv] = 1;
    self(self, var + 1, remaining - 1);
    cur[uv] = 0;
    self(self, var + 1, remaining);
  };
  rec(rec, first, t);
  return p;
}

/// Power sum x_1^r + ... + x_k^r.
inline XPoly power_sum(int k, int r) {
  XPoly p(k);
  if (r == 0) return XPoly::constant(k, BigInt(k));
  for (int i = 0; i < k; ++i) {
    XMonomial m;
    m[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(r);
    p.add_term(m, APoly::one(k));
  }
  return p;
}

/// The Gröbner basis of J: for i = 1..k,
///   h_{n-k+i}(x_i..x_k) - sum_{t=0}^{i-1} (-1)^t e_t(x_1..x_{i-1}) a_{i-t}.
inline std::vector<XPoly> groebner_generators(const QuotContext& ctx) {
  const int k = ctx.k;
  std::vector<XPoly> gens;
  gens.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    XPoly g = complete_homogeneous(k, ctx.n - k + i, i, k);
    for (int t = 0; t <= i - 1; ++t) {
      XPoly term = APoly::variable(k, i - t) * elementary(k, t, 1, i - 1);
      if (t % 2 == 0)
        g -= term;
      else
        g += term;
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

/// Unique remainder of p modulo J, supported on x^alpha with alpha_i < n-k+i.
inline XPoly normal_form(const QuotContext& ctx, const XPoly& p) {
  const int k = ctx.k;
  if (p.nvars() != k) throw std::domain_error("normal_form: polynomial has the wrong number of variables");
  const std::vector<XPoly> gens = groebner_generators(ctx);
  // Tails g_i - x_i^{n-k+i}; reduction replaces the leading power by -tail.
  std::vector<XPoly> neg_tails;
  std::vector<int> lead_exp(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    lead_exp[ui] = ctx.n - k + i + 1;
    XMonomial lead;
    lead[ui] = static_cast<std::uint16_t>(lead_exp[ui]);
    neg_tails.push_back(XPoly::monomial(k, lead) - gens[ui]);
  }
  XPoly::TermMap work = p.terms();
  XPoly result(k);
  while (!work.empty()) {
    auto top = work.begin();
    const XMonomial m = top->first;
    const APoly c = std::move(top->second);
    work.erase(top);
    int reducible = -1;
    for (int i = 0; i < k; ++i)
      if (m[static_cast<std::size_t>(i)] >= lead_exp[static_cast<std::size_t>(i)]) {
        reducible = i;
        break;
      }
    if (reducible < 0) {
      result.add_term(m, c);
      continue;
    }
    XMonomial rest = m;
    rest[static_cast<std::size_t>(reducible)] =
        static_cast<std::uint16_t>(rest[static_cast<std::size_t>(reducible)] - lead_exp[static_cast<std::size_t>(reducible)]);
    for (const auto& [tm, tc] : neg_tails[static_cast<std::size_t>(reducible)].terms()) {
      APoly add = c * tc;
      if (add.is_zero()) continue;
      auto [it, inserted] = work.try_emplace(tm + rest, add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return result;
}

/// Monomials x^alpha with alpha_i < n-k+i, in descending deglex order.
inline std::vector<XMonomial> monomial_basis(const QuotContext& ctx) {
  std::vector<XMonomial> out;
  XMonomial cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == ctx.k) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e < ctx.n - ctx.k + i + 1; ++e) {
      cur[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
      self(self, i + 1);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// The Schur polynomial s_lambda(x_1..x_k), summed over semistandard
/// tableaux of shape lambda with entries in 1..k.
inline XPoly schur_xpoly(const Partition& lambda, int k) {
  if (lambda.length() > k) throw std::domain_error("schur_xpoly: partition has more than k parts");
  const int rows = lambda.length();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
  std::map<XMonomial, BigInt, std::greater<>> counts;
  XMonomial content;
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r < rows && c == lambda[static_cast<std::size_t>(r)]) {
      ++r;
      c = 0;
    }
    if (r == rows) {
      counts[content] += 1;
      return;
    }
    const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
    int lo = 1;
    if (c > 0) lo = t[ur][uc - 1];
    if (r > 0) lo = std::max(lo, t[ur - 1][uc] + 1);
    // Rows below need strictly larger entries in this column.
    int below = 0;
    for (int rr = r + 1; rr < rows && lambda[static_cast<std::size_t>(rr)] > c; ++rr) ++below;
    for (int v = lo; v <= k - below; ++v) {
      t[ur][uc] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      self(self, r, c + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(rec, 0, 0);
  XPoly p(k);
  for (const auto& [m, c] : counts) p.add_term(m, APoly::constant(k, c));
  return p;
}

// ---------------------------------------------------------------------------
// Text form. Terms are listed by ascending x-degree and, within one degree,
// by descending deglex, e.g. "a1 - x1^3*x2 - x1^2*x2^2 - x1*x2^3 - x2^4".

inline std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<XMonomial, const APoly*>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, &c);
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
  std::string out;
  for (const auto& [m, c] : terms) {
    const std::string xm = detail::monomial_string(m, p.nvars(), 'x');
    if (xm.empty()) {
      // Pure parameter polynomial: splice its terms in one by one.
      for (const auto& [am, ac] : c->terms()) detail::append_term(out, ac, detail::monomial_string(am, p.nvars(), 'a'));
      continue;
    }
    auto [neg, prefix] = coefficient_prefix(*c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += prefix.empty() ? xm : prefix + "*" + xm;
  }
  return out;
}

/// Parses the text form above (any term order, parentheses allowed).
inline XPoly parse_xpoly(std::string_view text, int k) {
  return detail::parse_expression<XPoly>(
      text,
      [k](std::string_view id) {
        if (int i = detail::indexed_symbol(id, 'x'); i >= 1 && i <= k) return XPoly::variable(k, i);
        if (int i = detail::indexed_symbol(id, 'a'); i >= 1 && i <= k) return XPoly::constant(k, APoly::variable(k, i));
        throw std::invalid_argument("unknown symbol '" + std::string(id) + "'");
      },
      [k](const BigInt& c) { return XPoly::constant(k, c); });
}

}  // namespace symquot
