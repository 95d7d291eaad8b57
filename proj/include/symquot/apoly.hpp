#pragma once

/**
 * @file apoly.hpp
 * @brief Exact polynomials in the parameters a_1, ..., a_k over the integers,
 *        univariate polynomials in q, and specializations a_i -> Z[q].
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symquot {

using BigInt = boost::multiprecision::cpp_int;

/// Upper bound on the number of variables of an exponent vector.
inline constexpr int kMaxVars = 12;

/// Exponent vector over at most kMaxVars variables; unused slots are zero.
struct Exponents {
  std::array<std::uint16_t, kMaxVars> e{};

  [[nodiscard]] int degree() const noexcept {
    return std::accumulate(e.begin(), e.end(), 0);
  }
  std::uint16_t& operator[](std::size_t i) noexcept { return e[i]; }
  std::uint16_t operator[](std::size_t i) const noexcept { return e[i]; }

  bool operator==(const Exponents&) const = default;

  /// Graded lexicographic order with variable 1 > variable 2 > ...
  std::strong_ordering operator<=>(const Exponents& o) const noexcept {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (auto c = e[i] <=> o.e[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  Exponents& operator+=(const Exponents& o) noexcept {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return *this;
  }
  friend Exponents operator+(Exponents a, const Exponents& b) noexcept { return a += b; }

  /// True iff every exponent of this is at least that of d.
  [[nodiscard]] bool divisible_by(const Exponents& d) const noexcept {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < d.e[i]) return false;
    return true;
  }
  [[nodiscard]] Exponents minus(const Exponents& d) const noexcept {
    Exponents r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - d.e[i]);
    return r;
  }
};

inline void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("number of variables must be in [0, " + std::to_string(kMaxVars) + "]");
}

/// Polynomial in a_1..a_k with big-integer coefficients. Terms are kept in a
/// map ordered by descending grlex, which is also the rendering order.
class APoly {
 public:
  using TermMap = std::map<Exponents, BigInt, std::greater<>>;

  APoly() = default;
  explicit APoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

  static APoly constant(int nvars, const BigInt& c) {
    APoly p(nvars);
    if (c != 0) p.terms_.emplace(Exponents{}, c);
    return p;
  }
  static APoly one(int nvars) { return constant(nvars, 1); }

  /// The variable a_index (1-based).
  static APoly variable(int nvars, int index) {
    if (index < 1 || index > nvars) throw std::domain_error("parameter index out of range");
    APoly p(nvars);
    Exponents m;
    m[static_cast<std::size_t>(index - 1)] = 1;
    p.terms_.emplace(m, 1);
    return p;
  }
  static APoly monomial(int nvars, const Exponents& m, const BigInt& c) {
    APoly p(nvars);
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  [[nodiscard]] int nvars() const noexcept { return nvars_; }
  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
  }
  /// Constant term (or zero).
  [[nodiscard]] BigInt constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  /// Coefficient of the monomial m.
  [[nodiscard]] BigInt coefficient(const Exponents& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Adds c * a^m in place.
  void add_term(const Exponents& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += c * other * a^shift.
  void add_scaled(const APoly& other, const BigInt& c, const Exponents& shift = {}) {
    check_same(other);
    for (const auto& [m, v] : other.terms_) add_term(m + shift, v * c);
  }

  APoly& operator+=(const APoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  APoly& operator-=(const APoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  APoly& operator*=(const BigInt& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  friend APoly operator+(APoly a, const APoly& b) { return a += b; }
  friend APoly operator-(APoly a, const APoly& b) { return a -= b; }
  friend APoly operator-(APoly a) { return a *= BigInt(-1); }
  friend APoly operator*(APoly a, const BigInt& c) { return a *= c; }
  friend APoly operator*(const BigInt& c, APoly a) { return a *= c; }
  friend APoly operator*(const APoly& a, const APoly& b) {
    a.check_same(b);
    APoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }
  APoly& operator*=(const APoly& o) { return *this = *this * o; }

  bool operator==(const APoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Exact quotient this / d. Throws std::domain_error when d does not
  /// divide this over Z[a].
  [[nodiscard]] APoly divide_exact(const APoly& d) const {
    check_same(d);
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& [lm, lc] = *d.terms_.begin();
    APoly rem = *this;
    APoly quot(nvars_);
    while (!rem.is_zero()) {
      const auto [m, c] = *rem.terms_.begin();
      if (!m.divisible_by(lm) || c % lc != 0)
        throw std::domain_error("polynomial division is not exact");
      const Exponents qm = m.minus(lm);
      const BigInt qc = c / lc;
      quot.add_term(qm, qc);
      rem.add_scaled(d, -qc, qm);
    }
    return quot;
  }

  /// Weighted degree if homogeneous under the given variable weights,
  /// or nullopt. The zero polynomial is homogeneous of every degree and
  /// reports `fallback`.
  [[nodiscard]] std::optional<long> weighted_degree(const std::vector<int>& weights, long fallback) const {
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
      long d = 0;
      for (std::size_t i = 0; i < weights.size(); ++i) d += static_cast<long>(weights[i]) * m[i];
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    return deg ? deg : std::optional<long>(fallback);
  }

 private:
  void check_same(const APoly& o) const {
    if (nvars_ != o.nvars_) throw std::domain_error("APoly operands have different numbers of parameters");
  }

  int nvars_ = 0;
  TermMap terms_;
};

/// Polynomial in one symbol q with big-integer coefficients, dense,
/// coefficient i belongs to q^i. No trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(BigInt c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  QPoly(int c) : QPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  static QPoly q() {
    QPoly p;
    p.coeffs_ = {0, 1};
    return p;
  }

  [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] BigInt coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : BigInt(0);
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) { return *this += -o; }
  friend QPoly operator-(QPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly&) const = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

/// Assignment a_i -> value in Z[q] for every parameter.
struct Specialization {
  std::vector<QPoly> values;

  [[nodiscard]] int nvars() const noexcept { return static_cast<int>(values.size()); }

  /// a_i = 0 for all i: classical cohomology of the Grassmannian.
  static Specialization classical(int k) { return {std::vector<QPoly>(static_cast<std::size_t>(k))}; }

  /// a_1 = ... = a_{k-1} = 0 and a_k = -(-1)^k q: quantum cohomology.
  static Specialization quantum(int k) {
    Specialization s = classical(k);
    if (k > 0) s.values.back() = (k % 2 == 0) ? -QPoly::q() : QPoly::q();
    return s;
  }
};

inline QPoly qpow(const QPoly& base, int e) {
  QPoly r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline QPoly specialize(const APoly& p, const Specialization& s) {
  if (s.nvars() != p.nvars()) throw std::domain_error("specialization does not cover every parameter");
  QPoly r;
  for (const auto& [m, c] : p.terms()) {
    QPoly t(c);
    for (int i = 0; i < p.nvars(); ++i) t *= qpow(s.values[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)]);
    r += t;
  }
  return r;
}

/// Integer evaluation at a point.
inline BigInt evaluate(const APoly& p, const std::vector<BigInt>& point) {
  if (static_cast<int>(point.size()) != p.nvars()) throw std::domain_error("evaluation point has the wrong length");
  BigInt r = 0;
  for (const auto& [m, c] : p.terms()) {
    BigInt t = c;
    for (std::size_t i = 0; i < point.size(); ++i) t *= boost::multiprecision::pow(point[i], m[i]);
    r += t;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rendering.

namespace detail {

inline std::string monomial_string(const Exponents& m, int nvars, char symbol) {
  std::string s;
  for (int i = 0; i < nvars; ++i) {
    const int e = m[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += symbol;
    s += std::to_string(i + 1);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

/// Appends one signed term "c*mono" to `out`, joining with " + " / " - ".
inline void append_term(std::string& out, const BigInt& c, const std::string& mono) {
  const bool neg = c < 0;
  const BigInt mag = neg ? BigInt(-c) : c;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (mono.empty())
    out += mag.str();
  else if (mag == 1)
    out += mono;
  else
    out += mag.str() + "*" + mono;
}

}  // namespace detail

inline std::string to_string(const APoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) detail::append_term(out, c, detail::monomial_string(m, p.nvars(), 'a'));
  return out;
}

/// Rendered as descending powers of q, e.g. "2*q^2 - q + 1".
inline std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
    detail::append_term(out, c, mono);
  }
  return out;
}

/// Coefficient prefix for a term "coeff*basis" in a linear combination:
/// returns {sign, text} where text is empty for a unit coefficient and
/// parenthesized for multi-term coefficients.
inline std::pair<bool, std::string> coefficient_prefix(const APoly& c) {
  if (c.terms().size() == 1) {
    const auto& [m, v] = *c.terms().begin();
    const bool neg = v < 0;
    const BigInt mag = neg ? BigInt(-v) : v;
    std::string mono = detail::monomial_string(m, c.nvars(), 'a');
    if (mono.empty()) return {neg, mag == 1 ? "" : mag.str()};
    return {neg, mag == 1 ? mono : mag.str() + "*" + mono};
  }
  return {false, "(" + to_string(c) + ")"};
}

inline std::pair<bool, std::string> coefficient_prefix(const QPoly& c) {
  const auto nonzero = std::count_if(c.coeffs().begin(), c.coeffs().end(), [](const BigInt& v) { return v != 0; });
  if (nonzero == 1) {
    const int d = c.degree();
    const BigInt& v = c.coeffs()[static_cast<std::size_t>(d)];
    const bool neg = v < 0;
    const BigInt mag = neg ? BigInt(-v) : v;
    std::string mono = d == 0 ? "" : (d == 1 ? "q" : "q^" + std::to_string(d));
    if (mono.empty()) return {neg, mag == 1 ? "" : mag.str()};
    return {neg, mag == 1 ? mono : mag.str() + "*" + mono};
  }
  return {false, "(" + to_string(c) + ")"};
}

}  // namespace symquot
