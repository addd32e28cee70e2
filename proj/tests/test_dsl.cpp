#include <gtest/gtest.h>

#include <string>

#include "trilie/dsl.hpp"
#include "trilie/errors.hpp"
#include "trilie/random.hpp"

using namespace trilie;

namespace {

ParseError parse_error(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError({0, 0}, "", "");
}

}  // namespace

TEST(Dsl, ParseLie) {
  const LieElem u = parse_lie("d1 + 2*x1^3*d2");
  EXPECT_EQ(u.rank(), 2u);
  LieElem v(2);
  v.add_term({{}, 1}, 1);
  v.add_term({{3}, 2}, 2);
  EXPECT_EQ(u, v);
}

TEST(Dsl, CoefficientRingViolation) {
  const ParseError e = parse_error([] { parse_lie("x2*d2"); });
  EXPECT_TRUE(e.semantic());
  EXPECT_EQ(e.span().start, 0u);
  EXPECT_NE(std::string(e.what()).find("semantic error at [0,"), std::string::npos);
}

TEST(Dsl, ParseTriaut) {
  const TriAut s = parse_triaut("[0, x1^2]");
  EXPECT_TRUE(s.is_unipotent());
  EXPECT_EQ(s.a()[1], parse_poly("x1^2", 2));
  const TriAut t = parse_triaut("[1, x1; 2, -1/3]");
  EXPECT_EQ(t.lambda()[1], Rat(-1, 3));
}

TEST(Dsl, PrintOrdering) {
  EXPECT_EQ(print(parse_lie("d2 + 3*x1*d2")), "3*x1*d2 + d2");
  EXPECT_EQ(print(Poly(3)), "0");
  EXPECT_EQ(print(parse_lie("x1*d2 + d1 - 1/2*d2")), "d1 + x1*d2 - 1/2*d2");
}

TEST(Dsl, SyntaxErrorsCarrySpans) {
  for (const char* bad : {"x1 +", "2*/x1", "x1^", "(x1", "x0", "x1 x2", "1/0"}) {
    const ParseError e = parse_error([&] { parse_poly(bad); });
    EXPECT_LE(e.span().start, e.span().end) << bad;
    EXPECT_LE(e.span().end, std::string(bad).size() + 1) << bad;
    EXPECT_NE(std::string(e.what()).find(" at ["), std::string::npos) << bad;
  }
}

TEST(Dsl, OrdinalSyntax) {
  EXPECT_EQ(parse_ordinal("w^2 + w*3 + 1"), [] {
    OrdinalCNF o = OrdinalCNF::monomial(2);
    o.add_term(1, 3);
    o.add_term(0, 1);
    return o;
  }());
  EXPECT_THROW(parse_ordinal("w + w^2"), ParseError);
  EXPECT_THROW(parse_ordinal("w*0"), ParseError);
}

TEST(Dsl, RoundTrips) {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 3;
    const Poly p = random_poly(rng, n, n, 4, 5);
    EXPECT_EQ(parse_poly(print(p), n), p);
    const LieElem u = random_lie(rng, n, 3, 4);
    EXPECT_EQ(parse_lie(print(u), n), u);
    const TriAut s = random_triangular(rng, n, 2, 3);
    EXPECT_EQ(parse_triaut(print(s), n), s);
    const OpSeries f = random_series(rng, 1, SeriesKind::F, 4, 10);
    EXPECT_EQ(parse_series(print(f), 1, SeriesKind::F, 10), f);
  }
}

TEST(Dsl, GnElemJsonRoundTrip) {
  Rng rng(37);
  for (int k = 0; k < 20; ++k) {
    const GnElem g = random_gnelem(rng, 2 + k % 3, k % 2 ? GnForm::A : GnForm::B, 2, 3, 8);
    EXPECT_EQ(parse_gnelem_json(print_gnelem_json(g)), g);
    EXPECT_EQ(parse_gnelem_json(print_gnelem_json(g, 2)), g);
  }
}

TEST(Dsl, GnElemJsonSchemaErrors) {
  EXPECT_THROW(parse_gnelem_json("{"), ParseError);
  EXPECT_THROW(parse_gnelem_json("{\"form\": \"C\"}"), ParseError);
  EXPECT_THROW(parse_gnelem_json("[]"), ParseError);
}

TEST(Dsl, InferRank) {
  EXPECT_EQ(infer_rank("x1*d3"), 3u);
  EXPECT_EQ(infer_rank("x4"), 4u);
}
