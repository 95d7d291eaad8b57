#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace symquot;

namespace {

QuotElem s(const QuotContext& c, const Partition& p) { return QuotElem::basis(c, p); }
APoly a(const QuotContext& c, int i) { return APoly::variable(c.k, i); }
APoly num(const QuotContext& c, long v) { return APoly::constant(c.k, v); }

using testkit::e_bar;
using testkit::embed;
using testkit::h_bar;

const std::vector<QuotContext>& small_contexts() {
  static const std::vector<QuotContext> all = [] {
    std::vector<QuotContext> v;
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k < n; ++k) v.emplace_back(k, n);
    return v;
  }();
  return all;
}

}  // namespace

TEST(QuotContext, Validates) {
  EXPECT_THROW(QuotContext(0, 3), std::invalid_argument);
  EXPECT_THROW(QuotContext(4, 3), std::invalid_argument);
  EXPECT_EQ(QuotContext(2, 5).width(), 3);
}

TEST(QuotElem, RejectsOutOfBoxTerms) {
  const QuotContext c(2, 4);
  EXPECT_THROW(s(c, Partition({3})), std::domain_error);
  EXPECT_THROW(s(c, Partition({1, 1, 1})), std::domain_error);
  QuotElem f(c);
  EXPECT_THROW(f.add_term(Partition({1}), APoly::one(3)), std::domain_error);
  EXPECT_THROW(s(c, Partition{}) + s(QuotContext(2, 5), Partition{}), std::domain_error);
}

TEST(RimHook, SingleStep) {
  const QuotContext c(3, 6);
  const auto step = rim_hook_step(c, Partition({5, 4, 1}));
  std::map<Partition, APoly> expected = {{Partition({4, 1, 1}), a(c, 1)}, {Partition({3, 1, 1}), -a(c, 2)}};
  EXPECT_EQ(step, expected);
}

TEST(Straighten, Examples) {
  const QuotContext c(3, 6);
  EXPECT_EQ(to_string(straighten_schur(c, Partition({5, 4, 1}))), "-a2*s[3,1,1] + a1^2*s[1,1] - a1*a2*s[1] + a1*a3*s[]");
  const QuotElem expected = (-a(c, 2)) * s(c, Partition({3, 3})) + a(c, 3) * s(c, Partition({3, 2})) +
                            a(c, 1) * a(c, 1) * s(c, Partition({3})) -
                            num(c, 2) * a(c, 1) * a(c, 2) * s(c, Partition({2})) +
                            a(c, 2) * a(c, 2) * s(c, Partition({1}));
  EXPECT_EQ(straighten_schur(c, Partition({4, 4, 3})), expected);
  EXPECT_EQ(straighten_schur(QuotContext(2, 4), Partition({2, 1})), s(QuotContext(2, 4), Partition({2, 1})));
  EXPECT_THROW(straighten_schur(QuotContext(2, 4), Partition({1, 1, 1})), std::domain_error);
}

TEST(Straighten, AgreesWithGroebnerNormalForms) {
  for (const QuotContext& c : {QuotContext(2, 4), QuotContext(2, 5), QuotContext(3, 5)}) {
    const int bound = c.k * c.width() + c.n;
    for (const Partition& mu : oracle::partitions_up_to(bound, c.k))
      ASSERT_EQ(embed(straighten_schur(c, mu)), normal_form(c, schur_xpoly(mu, c.k))) << to_string(mu);
  }
}

TEST(Straighten, OmegaCoefficientVanishesBelowTwiceTheWidth) {
  for (const QuotContext& c : small_contexts()) {
    const Partition omega = box_partition(c.k, c.n);
    for (const Partition& l : oracle::partitions_up_to(2 * c.width() * c.k, c.k)) {
      if (l[0] > 2 * c.width() || l == omega) continue;
      ASSERT_TRUE(coeff(straighten_schur(c, l), omega).is_zero()) << to_string(l) << " k=" << c.k << " n=" << c.n;
    }
  }
}

TEST(Multiply, Examples) {
  const QuotContext c24(2, 4);
  const QuotElem f = s(c24, Partition({2, 1})) + a(c24, 1) * s(c24, Partition({1}));
  EXPECT_EQ(multiply(f, QuotElem::one(c24)), f);
  EXPECT_EQ(multiply(s(c24, Partition({1})), s(c24, Partition({1}))), s(c24, Partition({2})) + s(c24, Partition({1, 1})));

  const QuotContext c(3, 7);
  const QuotElem expected =
      s(c, Partition({4, 4, 3})) +
      a(c, 1) * (s(c, Partition({4, 2})) + s(c, Partition({3, 2, 1})) + s(c, Partition({3, 3}))) -
      a(c, 2) * (s(c, Partition({4, 1})) + s(c, Partition({2, 2, 1})) + s(c, Partition({3, 1, 1})) +
                 num(c, 2) * s(c, Partition({3, 2}))) +
      a(c, 3) * (s(c, Partition({2, 2})) + s(c, Partition({2, 1, 1})) + s(c, Partition({3, 1})));
  EXPECT_EQ(multiply(s(c, Partition({4, 3, 2})), s(c, Partition({2}))), expected);
  EXPECT_THROW(multiply(s(c24, Partition{}), s(c, Partition{})), std::domain_error);
}

TEST(Multiply, CommutativeAndAssociative) {
  std::mt19937 rng(29);
  for (const QuotContext& c : {QuotContext(2, 4), QuotContext(2, 5), QuotContext(3, 6)}) {
    const auto basis = enumerate_pkn(c.k, c.n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      const QuotElem x = s(c, basis[pick(rng)]), y = s(c, basis[pick(rng)]), z = s(c, basis[pick(rng)]);
      ASSERT_EQ(multiply(x, y), multiply(y, x));
      ASSERT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
    }
  }
}

TEST(Multiply, AgreesWithPolynomialRing) {
  for (const QuotContext& c : {QuotContext(2, 4), QuotContext(3, 5)}) {
    const auto basis = enumerate_pkn(c.k, c.n);
    for (const auto& l : basis)
      for (const auto& m : basis)
        ASSERT_EQ(embed(multiply(s(c, l), s(c, m))), normal_form(c, schur_xpoly(l, c.k) * schur_xpoly(m, c.k)));
  }
}

TEST(Coeff, ExamplesAndErrors) {
  const QuotContext c(2, 4);
  const Partition omega = box_partition(2, 4);
  EXPECT_EQ(coeff(s(c, omega), omega), APoly::one(2));
  EXPECT_TRUE(coeff(s(c, Partition({1})), Partition({2})).is_zero());
  EXPECT_THROW(coeff(s(c, Partition({1})), Partition({3})), std::domain_error);
}

TEST(Coeff, DualityAndOmegaFunctional) {
  for (const QuotContext& c : small_contexts()) {
    const Partition omega = box_partition(c.k, c.n);
    const auto basis = enumerate_pkn(c.k, c.n);
    for (const auto& l : basis)
      for (const auto& m : basis) {
        const QuotElem prod = multiply(s(c, l), s(c, m));
        ASSERT_EQ(coeff(prod, omega), l == complement(m, c.k, c.n) ? APoly::one(c.k) : APoly(c.k));
        // coeff_omega(s_nu f) = coeff_{nu^vee}(f) with f = s_m.
        ASSERT_EQ(coeff(prod, omega), coeff(s(c, m), complement(l, c.k, c.n)));
      }
    // The same with a non-basis f.
    const QuotElem f = straighten_schur(c, Partition({c.n + 1}));
    for (const auto& nu : basis)
      ASSERT_EQ(coeff(multiply(s(c, nu), f), omega), coeff(f, complement(nu, c.k, c.n)));
  }
}

TEST(StructureConstant, Examples) {
  const QuotContext c(2, 4);
  EXPECT_EQ(structure_constant(c, Partition({1}), Partition({1}), Partition({2})), APoly::one(2));
  for (const auto& b : enumerate_pkn(2, 4))
    for (const auto& g : enumerate_pkn(2, 4))
      EXPECT_EQ(structure_constant(c, Partition{}, b, g), g == complement(b, 2, 4) ? APoly::one(2) : APoly(2));
}

TEST(S3, SmallContexts) {
  for (const QuotContext& c : {QuotContext(2, 4), QuotContext(1, 3), QuotContext(3, 6)}) {
    const S3Report r = s3_report(c, 2);
    EXPECT_TRUE(r.ok) << "k=" << c.k << " n=" << c.n;
    EXPECT_TRUE(r.counterexamples.empty());
    const std::size_t d = enumerate_pkn(c.k, c.n).size();
    EXPECT_EQ(r.triples_checked, d * (d + 1) * (d + 2) / 6);
  }
}

TEST(Pieri, Examples) {
  const QuotContext c(3, 7);
  const Partition l({4, 3, 2});
  EXPECT_EQ(pieri_h(c, l, 0), s(c, l));
  EXPECT_EQ(pieri_h(c, l, 2), multiply(s(c, l), s(c, Partition({2}))));
  const QuotContext c24(2, 4);
  EXPECT_EQ(pieri_h(c24, Partition({1, 1}), 2), a(c24, 1) * s(c24, Partition({1})) - a(c24, 2) * s(c24, Partition{}));
  EXPECT_THROW(pieri_h(c, l, 5), std::domain_error);
  EXPECT_THROW(pieri_h(c, l, -1), std::domain_error);
}

TEST(Pieri, AgreesWithMultiply) {
  for (const QuotContext& c : small_contexts())
    for (const auto& l : enumerate_pkn(c.k, c.n))
      for (int j = 0; j <= c.width(); ++j)
        ASSERT_EQ(pieri_h(c, l, j), multiply(s(c, l), straighten_schur(c, Partition({j}))))
            << to_string(l) << " j=" << j << " k=" << c.k << " n=" << c.n;
}

TEST(HOverflow, Examples) {
  const QuotContext c16(1, 6);
  EXPECT_EQ(reduce_h_overflow(c16, 2), a(c16, 1) * s(c16, Partition({2})));
  for (const QuotContext& c : {QuotContext(2, 5), QuotContext(2, 4)})
    EXPECT_EQ(reduce_h_overflow(c, 1), a(c, 2) * s(c, Partition({1})) - a(c, 1) * s(c, Partition({1, 1})));
  EXPECT_THROW(reduce_h_overflow(c16, 0), std::domain_error);
}

TEST(HOverflow, AgreesWithNormalFormOfH) {
  for (const QuotContext& c : small_contexts())
    for (int m = 1; m <= 3; ++m) {
      const QuotElem f = reduce_h_overflow(c, m);
      ASSERT_EQ(embed(f), normal_form(c, complete_homogeneous(c.k, c.n + m, 1, c.k)));
      ASSERT_EQ(f, h_bar(c, c.n + m));
    }
}

TEST(Identities, CompleteHomogeneousRecursion) {
  // h_p = -sum_{t=1}^{k} (-1)^t e_t h_{p-t} for p > 0, checked in S/I.
  for (const QuotContext& c : small_contexts())
    for (int p = 1; p <= c.n; ++p) {
      QuotElem rhs(c);
      for (int t = 1; t <= c.k; ++t) rhs.add_scaled(multiply(e_bar(c, t), h_bar(c, p - t)), BigInt(t % 2 == 0 ? -1 : 1));
      ASSERT_EQ(h_bar(c, p), rhs) << "p=" << p;
    }
}

TEST(Identities, HookSchurFunctions) {
  // s_{(m,1^j)} = sum_{i=1}^{m} (-1)^{i-1} h_{m-i} e_{j+i}.
  for (const QuotContext& c : small_contexts())
    for (int m = 1; m <= c.n; ++m)
      for (int j = 0; m + j <= c.n; ++j) {
        std::vector<int> hook(static_cast<std::size_t>(j + 1), 1);
        hook[0] = m;
        const QuotElem lhs = j + 1 <= c.k ? straighten_schur(c, Partition(hook)) : QuotElem(c);
        QuotElem rhs(c);
        for (int i = 1; i <= m; ++i) rhs.add_scaled(multiply(h_bar(c, m - i), e_bar(c, j + i)), BigInt(i % 2 == 1 ? 1 : -1));
        ASSERT_EQ(lhs, rhs) << "m=" << m << " j=" << j << " k=" << c.k << " n=" << c.n;
      }
}

TEST(Identities, HProductsHaveNoOmegaCoefficient) {
  // coeff_omega(h_gamma) = 0 for gamma != omega with gamma_i <= 2n-k-i.
  for (const QuotContext& c : small_contexts()) {
    if (c.k > 3) continue;
    std::vector<int> gamma(static_cast<std::size_t>(c.k), 0);
    const std::vector<int> omega(static_cast<std::size_t>(c.k), c.width());
    const Partition om = box_partition(c.k, c.n);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == c.k) {
        if (gamma == omega) return;
        QuotElem prod = QuotElem::one(c);
        for (int g : gamma) prod = multiply(prod, h_bar(c, g));
        ASSERT_TRUE(coeff(prod, om).is_zero()) << to_string(IntVector(gamma)) << " k=" << c.k << " n=" << c.n;
        return;
      }
      for (int g = 0; g <= 2 * c.n - c.k - (i + 1); ++g) {
        gamma[static_cast<std::size_t>(i)] = g;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
}

TEST(ClassicalLimit, StructureConstantsAreLittlewoodRichardson) {
  for (const QuotContext& c : small_contexts()) {
    const auto basis = enumerate_pkn(c.k, c.n);
    const Specialization zero = Specialization::classical(c.k);
    for (const auto& al : basis)
      for (const auto& be : basis) {
        const QuotElem prod = multiply(s(c, al), s(c, be));
        for (const auto& ga : basis)
          ASSERT_EQ(specialize(coeff(prod, ga), zero), QPoly(lr_coefficient(ga, al, be)));
      }
  }
}

TEST(Positivity, SmallScans) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      const PositivityReport r = positivity_scan(QuotContext(k, n), 2);
      EXPECT_TRUE(r.ok) << "k=" << k << " n=" << n;
      EXPECT_GT(r.coefficients_checked, 0u);
    }
  EXPECT_TRUE(positivity_scan(QuotContext(1, 7)).ok);
}

TEST(Positivity, BVariableRewrite) {
  // n-k-1 odd flips odd-degree monomials; even leaves everything alone.
  const APoly p = parse_apoly("a1^2 - a1*a2 + 3*a2 - 2", 2);
  EXPECT_EQ(to_b_variables(QuotContext(2, 4), p), parse_apoly("a1^2 - a1*a2 - 3*a2 - 2", 2));
  EXPECT_EQ(to_b_variables(QuotContext(2, 5), p), p);
}

TEST(Specialization, Examples) {
  const QuotContext c(3, 6);
  EXPECT_TRUE(specialize_elem(straighten_schur(c, Partition({5, 4, 1})), Specialization::classical(3)).empty());
  const auto q = specialize_elem(a(c, 3) * QuotElem::one(c), Specialization::quantum(3));
  EXPECT_EQ(q, (std::map<Partition, QPoly>{{Partition{}, QPoly::q()}}));
  const QuotElem plain = s(c, Partition({2, 1})) - num(c, 3) * s(c, Partition({1}));
  const auto same = specialize_elem(plain, Specialization::quantum(3));
  EXPECT_EQ(same, (std::map<Partition, QPoly>{{Partition({1}), QPoly(-3)}, {Partition({2, 1}), QPoly(1)}}));
  EXPECT_EQ(to_string(same), "s[2,1] - 3*s[1]");
}

TEST(Specialization, QuantumStructureConstantsArePositiveMonomials) {
  for (const QuotContext& c : {QuotContext(2, 4), QuotContext(2, 5), QuotContext(3, 6)}) {
    const auto basis = enumerate_pkn(c.k, c.n);
    for (const auto& l : basis)
      for (const auto& m : basis)
        for (const auto& [nu, v] : specialize_elem(multiply(s(c, l), s(c, m)), Specialization::quantum(c.k))) {
          int nonzero = 0;
          for (const BigInt& coef : v.coeffs()) {
            ASSERT_GE(coef, 0);
            nonzero += coef != 0;
          }
          ASSERT_EQ(nonzero, 1);
        }
  }
}
