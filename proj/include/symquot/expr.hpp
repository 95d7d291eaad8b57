#pragma once

// Recursive-descent reader for polynomial expressions:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer | identifier | '(' expr ')'
//
// The value type and the meaning of identifiers are supplied by the caller.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "apoly.hpp"

namespace symquot::detail {

template <class T, class MakeAtom, class MakeConstant>
class ExprReader {
 public:
  ExprReader(std::string_view text, MakeAtom atom, MakeConstant constant)
      : text_(text), atom_(std::move(atom)), constant_(std::move(constant)) {}

  T parse() {
    T v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                                what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    T acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  T term() {
    T acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  T factor() {
    T base = primary();
    if (!eat('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("expected a small exponent");
    const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    T r = constant_(BigInt(1));
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }

  T primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant_(BigInt(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return atom_(text_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  MakeAtom atom_;
  MakeConstant constant_;
};

template <class T, class MakeAtom, class MakeConstant>
T parse_expression(std::string_view text, MakeAtom atom, MakeConstant constant) {
  return ExprReader<T, MakeAtom, MakeConstant>(text, std::move(atom), std::move(constant)).parse();
}

/// Splits identifiers like "a12" into ('a', 12); returns index 0 on mismatch.
inline int indexed_symbol(std::string_view id, char symbol) {
  if (id.size() < 2 || id[0] != symbol) return 0;
  int v = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i])) || v > 1000) return 0;
    v = v * 10 + (id[i] - '0');
  }
  return v;
}

}  // namespace symquot::detail

namespace symquot {

/// Parses the rendered APoly form, e.g. "a1^2 - 2*a2".
inline APoly parse_apoly(std::string_view text, int k) {
  return detail::parse_expression<APoly>(
      text,
      [k](std::string_view id) {
        const int i = detail::indexed_symbol(id, 'a');
        if (i < 1 || i > k) throw std::invalid_argument("unknown parameter '" + std::string(id) + "'");
        return APoly::variable(k, i);
      },
      [k](const BigInt& c) { return APoly::constant(k, c); });
}

inline QPoly parse_qpoly(std::string_view text) {
  return detail::parse_expression<QPoly>(
      text,
      [](std::string_view id) {
        if (id != "q") throw std::invalid_argument("unknown symbol '" + std::string(id) + "', expected q");
        return QPoly::q();
      },
      [](const BigInt& c) { return QPoly(c); });
}

/// Reads "classical", "quantum", or a list "a1=0,a2=1,a3=q" that assigns
/// every a_i exactly once.
inline Specialization parse_specialization(std::string_view text, int k) {
  if (text == "classical") return Specialization::classical(k);
  if (text == "quantum") return Specialization::quantum(k);
  Specialization s = Specialization::classical(k);
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("specialization item needs '=': " + std::string(item));
    std::string_view name = item.substr(0, eq);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    const int i = detail::indexed_symbol(name, 'a');
    if (i < 1 || i > k) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
    if (seen[static_cast<std::size_t>(i - 1)]) throw std::invalid_argument("a" + std::to_string(i) + " assigned twice");
    s.values[static_cast<std::size_t>(i - 1)] = parse_qpoly(item.substr(eq + 1));
    seen[static_cast<std::size_t>(i - 1)] = true;
    pos = end + 1;
  }
  for (int i = 0; i < k; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument("specialization must assign a" + std::to_string(i + 1));
  return s;
}

}  // namespace symquot
