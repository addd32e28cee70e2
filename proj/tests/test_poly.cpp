#include <gtest/gtest.h>

#include <vector>

#include "trilie/dsl.hpp"
#include "trilie/errors.hpp"
#include "trilie/poly.hpp"
#include "trilie/random.hpp"

using namespace trilie;

namespace {

Poly x(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
Poly c(std::size_t n, const Rat& v) { return Poly::constant(n, v); }

}  // namespace

TEST(Poly, AdditiveInverse) {
  EXPECT_TRUE((x(2, 1) + (-x(2, 1))).is_zero());
  EXPECT_EQ(print(x(2, 1) - x(2, 1)), "0");
}

TEST(Poly, DifferenceOfSquares) {
  const Poly p = (x(1, 1) + c(1, 1)) * (x(1, 1) - c(1, 1));
  EXPECT_EQ(p, x(1, 1) * x(1, 1) - c(1, 1));
}

TEST(Poly, ScalarCancellation) {
  EXPECT_EQ(Rat(1, 3) * (Rat(3) * x(2, 2)), x(2, 2));
}

TEST(Poly, PowMatchesRepeatedProduct) {
  const Poly p = x(2, 1) + Rat(2) * x(2, 2) - c(2, Rat(1, 2));
  Poly q = c(2, 1);
  for (int k = 0; k < 5; ++k) q = q * p;
  EXPECT_EQ(p.pow(5), q);
  EXPECT_EQ(p.pow(0), c(2, 1));
}

TEST(Poly, PartialDerivative) {
  const Poly p = x(2, 1) * x(2, 1) * x(2, 2);
  EXPECT_EQ(partial_derivative(p, 1), Rat(2) * x(2, 1) * x(2, 2));
  EXPECT_TRUE(partial_derivative(x(2, 2), 1).is_zero());
}

TEST(Poly, ThirdDerivativeOfCubeIsFactorial) {
  Poly p = x(1, 1).pow(3);
  for (int k = 0; k < 3; ++k) p = partial_derivative(p, 1);
  Rat fact = 1;
  for (int k = 2; k <= 3; ++k) fact *= k;
  EXPECT_EQ(p, c(1, fact));
  EXPECT_TRUE(partial_derivative(p, 1).is_zero());
}

TEST(Poly, SubstituteDirect) {
  const std::vector<Poly> images{x(2, 1), x(2, 2) + x(2, 1) * x(2, 1)};
  EXPECT_EQ(substitute(x(2, 2), images), x(2, 2) + x(2, 1) * x(2, 1));
}

TEST(Poly, SubstituteIdentity) {
  Rng rng(7);
  const std::vector<Poly> id{x(3, 1), x(3, 2), x(3, 3)};
  for (int k = 0; k < 50; ++k) {
    const Poly p = random_poly(rng, 3, 3, 4, 6);
    EXPECT_EQ(substitute(p, id), p);
  }
}

TEST(Poly, SubstituteRoundTrip) {
  const Poly sq = x(2, 1) * x(2, 1);
  const std::vector<Poly> inv{x(2, 1), x(2, 2) - sq};
  EXPECT_EQ(substitute(x(2, 2) + sq, inv), x(2, 2));
}

TEST(Poly, SubstituteIsRingHomomorphism) {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::vector<Poly> img{random_poly(rng, 3, 3, 2, 3), random_poly(rng, 3, 3, 2, 3),
                                random_poly(rng, 3, 3, 2, 3)};
    const Poly p = random_poly(rng, 3, 3, 3, 4);
    const Poly q = random_poly(rng, 3, 3, 3, 4);
    EXPECT_EQ(substitute(p * q, img), substitute(p, img) * substitute(q, img));
    EXPECT_EQ(substitute(p + q, img), substitute(p, img) + substitute(q, img));
  }
}

TEST(Poly, PhiProjection) {
  const Poly p = c(3, 3) + Rat(2) * x(3, 1) + x(3, 1) * x(3, 2);
  EXPECT_EQ(phi_projection(p), 3);
  EXPECT_EQ(phi_projection(Poly(3)), 0);
  EXPECT_EQ(phi_projection(x(3, 1) * x(3, 1) * x(3, 3)), 0);
}

TEST(Poly, PhiSeriesAgreesWithRestriction) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Poly p = random_poly(rng, 4, 4, 5, 8);
    for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(phi_series(p, i), restrict_zero(p, i));
    EXPECT_EQ(phi_projection_series(p), phi_projection(p));
  }
}

TEST(Poly, DegreeQueries) {
  const Poly p = x(3, 1).pow(3) * x(3, 2) + x(3, 3);
  EXPECT_EQ(p.total_degree(), 4);
  EXPECT_EQ(p.degree_in(1), 3u);
  EXPECT_EQ(p.degree_in(3), 1u);
  EXPECT_FALSE(p.uses_only_first(2));
  EXPECT_TRUE((x(3, 1) * x(3, 2)).uses_only_first(2));
}

TEST(Poly, MismatchedVariableCountThrows) {
  EXPECT_THROW(x(2, 1) + x(3, 1), DomainError);
}
