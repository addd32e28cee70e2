#include <gtest/gtest.h>

#include <vector>

#include "trilie/dsl.hpp"
#include "trilie/errors.hpp"
#include "trilie/random.hpp"
#include "trilie/triaut.hpp"

using namespace trilie;

namespace {

TriAut T(const char* s, std::size_t n = 0) { return parse_triaut(s, n); }
LieElem L(const char* s, std::size_t n) { return parse_lie(s, n); }
Poly P(const char* s, std::size_t n) { return parse_poly(s, n); }

// sigma u sigma^{-1} on each x_j, by the chain rule.
LieElem chain_rule(const TriAut& s, const LieElem& u) {
  const TriAut si = tri_invert(s);
  std::vector<Poly> c;
  for (std::size_t j = 1; j <= s.rank(); ++j)
    c.push_back(tri_apply(s, apply_derivation(u, tri_apply(si, Poly::variable(s.rank(), j)))));
  return LieElem::from_coefficients(c);
}

}  // namespace

TEST(TriAut, Apply) {
  EXPECT_EQ(tri_apply(T("[0, x1^2]"), P("x2", 2)), P("x2 + x1^2", 2));
  EXPECT_EQ(tri_apply(TriAut::identity(3), P("x1*x3 + 2", 3)), P("x1*x3 + 2", 3));
  EXPECT_EQ(tri_apply(TriAut::torus({2, 3}), P("x1*x2", 2)), P("6*x1*x2", 2));
}

TEST(TriAut, Compose) {
  Rng rng(1);
  const TriAut s = random_triangular(rng, 3, 2, 3);
  EXPECT_EQ(tri_compose(s, TriAut::identity(3)), s);
  EXPECT_EQ(tri_compose(TriAut::torus({2, 5}), TriAut::torus({Rat(1, 3), 7})),
            TriAut::torus({Rat(2, 3), 35}));
  EXPECT_EQ(tri_compose(T("[0, x1]"), T("[0, x1]")), T("[0, 2*x1]"));
}

TEST(TriAut, ComposeMatchesSubstitution) {
  Rng rng(2);
  for (int k = 0; k < 50; ++k) {
    const TriAut s = random_triangular(rng, 3, 2, 3);
    const TriAut t = random_triangular(rng, 3, 2, 3);
    const Poly p = random_poly(rng, 3, 3, 3, 4);
    EXPECT_EQ(tri_apply(tri_compose(s, t), p), tri_apply(s, tri_apply(t, p)));
  }
}

TEST(TriAut, Invert) {
  EXPECT_EQ(tri_invert(T("[0, x1^2]")), T("[0, -x1^2]"));
  EXPECT_EQ(tri_invert(TriAut::identity(2)), TriAut::identity(2));
  const TriAut s = T("[0, x1, x2^2]");
  EXPECT_TRUE(tri_compose(s, tri_invert(s)).is_identity());
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const TriAut r = random_triangular(rng, 4, 2, 3);
    EXPECT_TRUE(tri_compose(r, tri_invert(r)).is_identity());
    EXPECT_TRUE(tri_compose(tri_invert(r), r).is_identity());
  }
}

TEST(TriAut, InvalidInputRejected) {
  EXPECT_THROW(TriAut({Poly(2), Poly::variable(2, 2)}, {1, 1}), DomainError);
  EXPECT_THROW(TriAut({Poly(2), Poly(2)}, {1, 0}), DomainError);
}

TEST(TriAut, Conjugate) {
  EXPECT_EQ(conjugate_derivation(T("[0, x1^2]"), L("d1", 2)), L("d1 - 2*x1*d2", 2));
  EXPECT_EQ(conjugate_derivation(TriAut::shift({3, 0}), L("d1", 2)), L("d1", 2));
  // t_lambda: X_{alpha,i} -> lambda^alpha lambda_i^{-1} X_{alpha,i}
  const TriAut t = TriAut::torus({2, 3, 5});
  EXPECT_EQ(conjugate_derivation(t, L("x1^2*x2*d3", 3)), L("12/5*x1^2*x2*d3", 3));
}

TEST(TriAut, ConjugateMatchesChainRule) {
  Rng rng(4);
  for (int k = 0; k < 60; ++k) {
    const TriAut s = random_triangular(rng, 3, 2, 3);
    const LieElem u = random_lie(rng, 3, 2, 3);
    EXPECT_EQ(conjugate_derivation(s, u), chain_rule(s, u));
  }
}

TEST(TriAut, ExpLog) {
  EXPECT_EQ(exp_map(L("x1*d2", 2)), T("[0, x1]"));
  EXPECT_EQ(exp_map(L("x1*d2 + d1", 2)), T("[1, x1 + 1/2]"));
  EXPECT_EQ(log_map(T("[0, x1^2]")), L("x1^2*d2", 2));
  EXPECT_TRUE(log_map(TriAut::identity(3)).is_zero());
  EXPECT_THROW(log_map(TriAut::torus({2, 1})), DomainError);
}

TEST(TriAut, ExpLogRoundTrip) {
  Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    const LieElem d = random_lie(rng, 3, 2, 3);
    EXPECT_EQ(log_map(exp_map(d)), d);
    const TriAut s = random_unipotent(rng, 3, 2, 3);
    EXPECT_EQ(exp_map(log_map(s)), s);
  }
}

TEST(TriAut, Reconstruct) {
  EXPECT_EQ(reconstruct_from_frames({L("d1 - 2*x1*d2", 2), L("d2", 2)}), T("[0, x1^2]"));
  EXPECT_TRUE(reconstruct_from_frames({L("d1", 3), L("d2", 3), L("d3", 3)}).is_identity());
  Rng rng(6);
  for (int k = 0; k < 40; ++k) {
    const TriAut s = random_origin_fixing(rng, 3, 2, 3);
    std::vector<LieElem> frames;
    for (std::size_t i = 1; i <= 3; ++i) frames.push_back(conjugate_derivation(s, LieElem::partial(3, i)));
    EXPECT_EQ(reconstruct_from_frames(frames), s);
  }
}

TEST(TriAut, ReconstructRejectsNonCommutingFrames) {
  EXPECT_THROW(reconstruct_from_frames({L("d1", 2), L("x1*d2", 2)}), DomainError);
}

TEST(TriAut, NormalizeModShifts) {
  EXPECT_TRUE(normalize_mod_shn(T("[0, 5]")).is_identity());
  const TriAut s = T("[0, x1^2 + x1]");
  EXPECT_EQ(normalize_mod_shn(s), s);
}

TEST(TriAut, SplitCtShift) {
  Rng rng(8);
  for (int k = 0; k < 40; ++k) {
    const TriAut s = random_unipotent(rng, 3, 2, 3);
    auto [ct, mu] = split_ct_shift(s);
    EXPECT_TRUE(ct.fixes_origin());
    EXPECT_EQ(tri_compose(ct, TriAut::shift(mu)), s);
  }
  EXPECT_THROW(split_ct_shift(TriAut::torus({2, 1})), DomainError);
}
