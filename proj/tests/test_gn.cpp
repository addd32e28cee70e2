#include <gtest/gtest.h>

#include <vector>

#include "trilie/dsl.hpp"
#include "trilie/errors.hpp"
#include "trilie/gn.hpp"
#include "trilie/random.hpp"

using namespace trilie;

namespace {

LieElem L(const char* s, std::size_t n) { return parse_lie(s, n); }

OpSeries one_f(std::size_t n, GnForm form) {
  return OpSeries::one(n - 1, form == GnForm::A ? SeriesKind::F : SeriesKind::FPrime, kDefaultSeriesOrder);
}

std::vector<OpSeries> trivial_e(std::size_t n) {
  std::vector<OpSeries> e;
  for (std::size_t k = 0; k + 2 < n; ++k) e.push_back(OpSeries::zero(k + 1, kDefaultSeriesOrder));
  return e;
}

GnElem unipotent_b(const TriAut& tau) {
  const std::size_t n = tau.rank();
  return GnElem(GnForm::B, std::vector<Rat>(n, 1), tau, {}, one_f(n, GnForm::B), trivial_e(n));
}

void expect_same_action(const GnElem& g, const AutoAction& a, unsigned max_exp = 4) {
  for (const auto& u : generators(g.rank(), max_exp)) EXPECT_EQ(act(g, u), a(u)) << print(u);
}

}  // namespace

TEST(Gn, IdentityActsTrivially) {
  Rng rng(1);
  for (GnForm form : {GnForm::A, GnForm::B}) {
    const GnElem g = GnElem::identity(3, form);
    EXPECT_TRUE(g.is_identity());
    for (int k = 0; k < 20; ++k) {
      const LieElem u = random_lie(rng, 3, 3, 4);
      EXPECT_EQ(act(g, u), u);
    }
  }
}

TEST(Gn, ActE) {
  std::vector<OpSeries> e{OpSeries(1, SeriesKind::E, 16, {{1, 1}})};
  EXPECT_EQ(act_e(e, L("x1^2*d2", 3)), L("x1^2*d2 + 2*x1*d3", 3));
}

TEST(Gn, ActF) {
  const OpSeries f(1, SeriesKind::FPrime, 16, {{0, 1}, {2, 1}});
  EXPECT_EQ(act_f(f, L("x1^3*d2", 2)), L("x1^3*d2 + 6*x1*d2", 2));
}

TEST(Gn, ActionIsAutomorphism) {
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const GnElem g = random_gnelem(rng, 3, k % 2 ? GnForm::A : GnForm::B, 2, 3, 12);
    const LieElem u = random_lie(rng, 3, 3, 3);
    const LieElem v = random_lie(rng, 3, 3, 3);
    EXPECT_EQ(act(g, bracket(u, v)), bracket(act(g, u), act(g, v)));
  }
}

TEST(Gn, DecomposeIdentityAndShifts) {
  const AutoAction id{3, [](const LieElem& u) { return u; }};
  EXPECT_TRUE(decompose(id, 8).is_identity());
  EXPECT_TRUE(decompose(conjugation_action(TriAut::shift({0, 1})), 8).is_identity());
  EXPECT_TRUE(decompose(conjugation_action(TriAut::shift({0, 0, Rat(-7, 2)})), 8).is_identity());
}

TEST(Gn, DecomposeRoundTrip) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + k % 3;
    const GnElem g = random_gnelem(rng, n, GnForm::A, 2, 4, 8);
    EXPECT_EQ(decompose(action_of(g), 8), g);
  }
}

TEST(Gn, DecomposeOfConjugation) {
  Rng rng(4);
  for (int k = 0; k < 10; ++k) {
    const TriAut s = random_triangular(rng, 3, 2, 3);
    const GnElem g = decompose(conjugation_action(s), 8);
    expect_same_action(g, conjugation_action(s));
  }
}

TEST(Gn, DecomposeRejectsNonAutomorphism) {
  const AutoAction zero{2, [](const LieElem& u) { return LieElem(u.rank()); }};
  EXPECT_THROW(decompose(zero, 8), DomainError);
}

TEST(Gn, ConvertFormPreservesAction) {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const GnElem g = random_gnelem(rng, 3, GnForm::A, 2, 3, 16);
    const GnElem b = convert_form(g, GnForm::B);
    EXPECT_EQ(b.form(), GnForm::B);
    expect_same_action(b, action_of(g));
    expect_same_action(convert_form(b, GnForm::A), action_of(g));
  }
}

TEST(Gn, ConvertExponentialF) {
  const unsigned D = 12;
  GnElem g(GnForm::A, {1, 1}, TriAut::identity(2), {}, exp_shift_series(1, 1, D), {});
  const GnElem b = convert_form(g, GnForm::B);
  EXPECT_TRUE(b.f().is_trivial());
}

TEST(Gn, MultiplyMatchesComposition) {
  Rng rng(6);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 3 + k % 2;
    const GnElem g = random_gnelem(rng, n, GnForm::B, 2, 3, 16);
    const GnElem h = random_gnelem(rng, n, GnForm::B, 2, 3, 16);
    expect_same_action(multiply_formula(g, h), compose(action_of(g), action_of(h)), 3);
  }
}

TEST(Gn, MultiplyUnitAndTorus) {
  Rng rng(7);
  const GnElem g = random_gnelem(rng, 3, GnForm::B, 2, 3, 16);
  EXPECT_EQ(multiply_formula(g, GnElem::identity(3, GnForm::B)), g);
  auto torus = [](std::vector<Rat> t) {
    const std::size_t n = t.size();
    return GnElem(GnForm::B, std::move(t), TriAut::identity(n), {}, one_f(n, GnForm::B), trivial_e(n));
  };
  EXPECT_EQ(multiply_formula(torus({2, 3, 5}), torus({Rat(1, 2), 7, -1})).t(),
            (std::vector<Rat>{1, 21, -5}));
}

TEST(Gn, Inverse) {
  EXPECT_TRUE(gn_inverse(GnElem::identity(3, GnForm::B)).is_identity());
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const GnElem g = random_gnelem(rng, 3, k % 2 ? GnForm::A : GnForm::B, 2, 3, 16);
    const GnElem gi = gn_inverse(g);
    EXPECT_EQ(gi.form(), g.form());
    const AutoAction both = compose(action_of(g), action_of(gi));
    for (const auto& u : generators(3, 3)) EXPECT_EQ(both(u), u);
  }
}

TEST(Gn, InverseOfTorus) {
  GnElem g(GnForm::B, {2, 3}, TriAut::identity(2), {}, one_f(2, GnForm::B), {});
  EXPECT_EQ(gn_inverse(g).t(), (std::vector<Rat>{Rat(1, 2), Rat(1, 3)}));
}

TEST(Gn, CommutatorOfEAndUnipotent) {
  GnElem g(GnForm::B, {1, 1, 1}, TriAut::identity(3), {}, one_f(3, GnForm::B),
           {OpSeries(1, SeriesKind::E, 16, {{1, 1}})});
  const GnElem h = unipotent_b(parse_triaut("[0, x1^2, 0]"));
  expect_same_action(commutator(g, h), conjugation_action(parse_triaut("[0, 0, 2*x1]")));
}

TEST(Gn, CommutatorOfUnipotentAndF) {
  const GnElem g = unipotent_b(parse_triaut("[0, x1^2]"));
  GnElem h(GnForm::B, {1, 1}, TriAut::identity(2), {}, OpSeries(1, SeriesKind::FPrime, 16, {{0, 1}, {2, 1}}), {});
  // e^{-2 d_2} is a shift and so acts trivially.
  EXPECT_TRUE(commutator(g, h).is_identity());
}

TEST(Gn, SelfCommutatorIsIdentity) {
  Rng rng(9);
  for (int k = 0; k < 10; ++k) {
    const GnElem g = random_gnelem(rng, 3, GnForm::B, 2, 3, 16);
    EXPECT_TRUE(commutator(g, g).is_identity());
  }
}

TEST(Gn, ExpAdAuto) {
  EXPECT_EQ(exp_ad_auto(L("x1*d2", 2))(L("d1", 2)), L("d1 - d2", 2));
  Rng rng(10);
  for (int k = 0; k < 20; ++k) {
    const LieElem v = random_lie(rng, 3, 3, 3);
    EXPECT_EQ(exp_ad_auto(LieElem(3))(v), v);
    EXPECT_EQ(exp_ad_auto(LieElem::partial(3, 3))(v), v);
  }
}

TEST(Gn, ExpAdIsConjugationByExp) {
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const LieElem u = random_lie(rng, 3, 2, 3);
    const AutoAction a = exp_ad_auto(u);
    const AutoAction c = conjugation_action(exp_map(u));
    for (const auto& v : generators(3, 3)) EXPECT_EQ(a(v), c(v));
  }
}
