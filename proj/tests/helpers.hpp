#pragma once

// Small quotient-ring conveniences shared by tests and the acceptance runner.

#include "symquot/symquot.hpp"

namespace testkit {

/// h_m in S/I; zero for m < 0.
inline symquot::QuotElem h_bar(const symquot::QuotContext& c, int m) {
  return m < 0 ? symquot::QuotElem(c) : symquot::straighten_schur(c, symquot::Partition({m}));
}

/// e_t in S/I; zero for t < 0 or t > k.
inline symquot::QuotElem e_bar(const symquot::QuotContext& c, int t) {
  if (t < 0 || t > c.k) return symquot::QuotElem(c);
  return symquot::multiply_e(symquot::QuotElem::one(c), t);
}

/// Image in P/J of an element of S/I, through its Schur polynomials.
inline symquot::XPoly embed(const symquot::QuotElem& f) {
  const symquot::QuotContext& c = f.context();
  symquot::XPoly out(c.k);
  for (const auto& [l, v] : f.terms()) out += v * symquot::schur_xpoly(l, c.k);
  return symquot::normal_form(c, out);
}

}  // namespace testkit
