#include <gtest/gtest.h>

#include <vector>

#include "trilie/dsl.hpp"
#include "trilie/errors.hpp"
#include "trilie/lie.hpp"
#include "trilie/random.hpp"

using namespace trilie;

namespace {

LieElem L(const char* s, std::size_t n) { return parse_lie(s, n); }

// [u, v] read off from the commutator of the two operators on x_1..x_n.
LieElem operator_bracket(const LieElem& u, const LieElem& v) {
  const std::size_t n = u.rank();
  std::vector<Poly> c;
  for (std::size_t j = 1; j <= n; ++j) {
    const Poly xj = Poly::variable(n, j);
    c.push_back(apply_derivation(u, apply_derivation(v, xj)) -
                apply_derivation(v, apply_derivation(u, xj)));
  }
  return LieElem::from_coefficients(c);
}

}  // namespace

TEST(Lie, BasisCompare) {
  EXPECT_EQ(basis_compare({{}, 1}, {{0}, 2}), std::strong_ordering::greater);
  EXPECT_EQ(basis_compare({{2}, 2}, {{1}, 2}), std::strong_ordering::greater);
  EXPECT_EQ(basis_compare({{0, 1}, 3}, {{5, 0}, 3}), std::strong_ordering::greater);
  EXPECT_EQ(basis_compare({{3, 1}, 3}, {{3, 1}, 3}), std::strong_ordering::equal);
}

TEST(Lie, BracketExamples) {
  EXPECT_EQ(bracket(L("d1", 2), L("x1*d2", 2)), L("d2", 2));
  EXPECT_TRUE(bracket(L("x1*d2", 2), L("x1*d2", 2)).is_zero());
  EXPECT_EQ(bracket(L("x1^2*d2", 3), L("x1*x2*d3", 3)), L("x1^3*d3", 3));
}

TEST(Lie, BracketMatchesOperatorCommutator) {
  Rng rng(101);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 3;
    const LieElem u = random_lie(rng, n, 3, 4);
    const LieElem v = random_lie(rng, n, 3, 4);
    EXPECT_EQ(bracket(u, v), operator_bracket(u, v));
  }
}

TEST(Lie, AntisymmetryAndJacobi) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 3;
    const LieElem a = random_lie(rng, n, 2, 3);
    const LieElem b = random_lie(rng, n, 2, 3);
    const LieElem c = random_lie(rng, n, 2, 3);
    EXPECT_EQ(bracket(a, b), -bracket(b, a));
    EXPECT_TRUE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b)))
                    .is_zero());
  }
}

TEST(Lie, ApplyDerivation) {
  EXPECT_EQ(apply_derivation(L("x1*d2", 2), Poly::variable(2, 2)), Poly::variable(2, 1));
  EXPECT_TRUE(apply_derivation(L("d1", 2), Poly::constant(2, 7)).is_zero());
}

TEST(Lie, LocallyNilpotent) {
  const LieElem u = L("x1*d2 + d1", 2);
  Poly p = Poly::variable(2, 2);
  const unsigned long bound = nilpotency_bound(u, p);
  unsigned long steps = 0;
  while (!p.is_zero()) {
    p = apply_derivation(u, p);
    ++steps;
  }
  EXPECT_LE(steps, 3u);
  EXPECT_LE(steps, bound);
}

TEST(Lie, ExpAd) {
  EXPECT_EQ(exp_ad_apply(L("x1*d2", 2), L("d1", 2)), L("d1 - d2", 2));
  const LieElem u = L("x1^2*d2 + d1 + x2*d3", 3);
  EXPECT_EQ(exp_ad_apply(u, u), u);
  const LieElem v = L("x1*x2*d3", 3);
  EXPECT_EQ(exp_ad_apply(LieElem(3), v), v);
}

TEST(Lie, ExpAdIsAutomorphism) {
  Rng rng(17);
  for (int k = 0; k < 40; ++k) {
    const LieElem u = random_lie(rng, 3, 2, 3);
    const LieElem a = random_lie(rng, 3, 2, 3);
    const LieElem b = random_lie(rng, 3, 2, 3);
    EXPECT_EQ(exp_ad_apply(u, bracket(a, b)), bracket(exp_ad_apply(u, a), exp_ad_apply(u, b)));
    EXPECT_EQ(exp_ad_apply(-u, exp_ad_apply(u, a)), a);
  }
}

TEST(Lie, LeadingTerm) {
  auto [c1, k1] = leading_term(L("3*x1*d2 + 5*d2", 2));
  EXPECT_EQ(c1, 3);
  EXPECT_EQ(k1, (BasisKey{{1}, 2}));
  auto [c2, k2] = leading_term(L("2*d1 + x1^9*d2", 2));
  EXPECT_EQ(c2, 2);
  EXPECT_EQ(k2, (BasisKey{{}, 1}));
  auto [c3, k3] = leading_term(L("d2", 2));
  EXPECT_EQ(c3, 1);
  EXPECT_EQ(k3, (BasisKey{{0}, 2}));
  EXPECT_THROW(leading_term(LieElem(2)), DomainError);
}

TEST(Lie, OrdinalOfElement) {
  EXPECT_EQ(ord_of_element(L("d3", 3)), OrdinalCNF::finite(1));
  EXPECT_EQ(ord_of_element(L("x1*d2", 2)), OrdinalCNF::finite(2));
}

TEST(Lie, IdealMembership) {
  EXPECT_TRUE(ideal_membership(L("d2", 2), OrdinalCNF::finite(1)));
  EXPECT_FALSE(ideal_membership(L("d1", 2), OrdinalCNF::monomial(1)));
  EXPECT_TRUE(ideal_membership(LieElem(2), OrdinalCNF::finite(1)));
}

TEST(Lie, IdealsAreIdeals) {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const LieElem u = random_lie(rng, 3, 3, 3);
    const LieElem v = random_lie(rng, 3, 3, 3);
    if (u.is_zero()) continue;
    const OrdinalCNF lambda = ord_of_element(u);
    EXPECT_TRUE(ideal_membership(u, lambda));
    EXPECT_TRUE(ideal_membership(bracket(u, v), lambda));
  }
}

TEST(Lie, Project) {
  EXPECT_EQ(project(L("x1*d2 + x1*x2*d3", 3), 2), L("x1*d2", 2));
  EXPECT_TRUE(project(L("x1*x2*d3", 3), 2).is_zero());
}

TEST(Lie, Centre) {
  for (auto [n, D] : {std::pair{2u, 3u}, {3u, 2u}, {4u, 2u}}) {
    const auto c = center_solve(n, D);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], LieElem::partial(n, n));
  }
}

TEST(Lie, PhiAdSeriesAgreesWithRestriction) {
  Rng rng(29);
  for (int k = 0; k < 60; ++k) {
    const LieElem w = random_lie_below(rng, 4, 4, 5);
    // w has no d_4 part; keep only d_j with j > m.
    for (std::size_t m = 1; m <= 2; ++m) {
      std::vector<Poly> c = w.coefficients();
      for (std::size_t j = 0; j < m; ++j) c[j] = Poly(4);
      const LieElem wm = LieElem::from_coefficients(c);
      EXPECT_EQ(phi_ad_series(wm, m), restrict_zero(wm, m));
    }
  }
}

TEST(Lie, CoefficientOutsideAllowedRingRejected) {
  std::vector<Poly> c{Poly(2), Poly::variable(2, 2)};
  EXPECT_THROW(LieElem::from_coefficients(c), DomainError);
}

TEST(Lie, Generators) {
  const auto g = generators(3, 2);
  EXPECT_EQ(g.front(), LieElem::partial(3, 1));
  for (const auto& u : g) EXPECT_EQ(u.term_count(), 1u);
}
