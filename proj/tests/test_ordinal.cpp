#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "trilie/dsl.hpp"
#include "trilie/lie.hpp"
#include "trilie/ordinal.hpp"

using namespace trilie;

TEST(Ordinal, Compare) {
  OrdinalCNF w_plus_1 = OrdinalCNF::monomial(1);
  w_plus_1.add_term(0, 1);
  EXPECT_EQ(ord_compare(OrdinalCNF::monomial(1), OrdinalCNF::finite(1)), std::strong_ordering::greater);
  EXPECT_EQ(ord_compare(w_plus_1, w_plus_1), std::strong_ordering::equal);
  OrdinalCNF w5_7 = OrdinalCNF::monomial(1, 5);
  w5_7.add_term(0, 7);
  EXPECT_EQ(ord_compare(OrdinalCNF::monomial(2), w5_7), std::strong_ordering::greater);
  EXPECT_LT(OrdinalCNF::finite(3), OrdinalCNF::finite(4));
  EXPECT_LT(OrdinalCNF(), OrdinalCNF::finite(1));
}

TEST(Ordinal, ToString) {
  OrdinalCNF o = OrdinalCNF::monomial(2);
  o.add_term(1, 5);
  o.add_term(0, 7);
  EXPECT_EQ(to_string(o), "w^2*1 + w*5 + 7");
  EXPECT_EQ(to_string(OrdinalCNF()), "0");
  EXPECT_EQ(parse_ordinal(to_string(o)), o);
}

TEST(Ordinal, LeastAndGreatestBasisElements) {
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(ord_of_basis({std::vector<unsigned>(n - 1, 0)}, n, n), OrdinalCNF::finite(1));
    OrdinalCNF top;
    for (unsigned k = n; k-- > 0;) top.add_term(k, 1);
    EXPECT_EQ(ord_of_basis({}, 1, n), top);
    EXPECT_EQ(ord_of_algebra(n), top);
  }
}

TEST(Ordinal, SmallExample) {
  EXPECT_EQ(ord_of_basis({1}, 2, 2), OrdinalCNF::finite(2));
}

// Enumerate a finite initial segment of the basis, sort it with the
// comparator, and check that positions agree with the closed form.
TEST(Ordinal, MatchesEnumerationOracle) {
  for (std::size_t n : {2u, 3u}) {
    std::vector<BasisKey> keys;
    const unsigned cap = 4;
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<unsigned> alpha(i - 1, 0);
      while (true) {
        keys.push_back({alpha, i});
        std::size_t k = 0;
        while (k < alpha.size() && ++alpha[k] > cap) alpha[k++] = 0;
        if (k == alpha.size()) break;
      }
    }
    std::sort(keys.begin(), keys.end(),
              [](const BasisKey& a, const BasisKey& b) { return basis_compare(a, b) < 0; });
    for (std::size_t p = 0; p < keys.size(); ++p) {
      const auto o = ord_of_basis(keys[p].alpha, keys[p].index, n);
      if (n == 2 && keys[p].index == n) {
        EXPECT_EQ(o, OrdinalCNF::finite(p + 1));
      }
      if (p > 0) {
        EXPECT_LT(ord_of_basis(keys[p - 1].alpha, keys[p - 1].index, n), o);
      }
    }
  }
}
