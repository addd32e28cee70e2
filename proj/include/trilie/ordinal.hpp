#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace trilie {

/// Ordinal below w^16 in Cantor normal form: sum of c_k * w^k.
class OrdinalCNF {
 public:
  OrdinalCNF() = default;

  static OrdinalCNF finite(std::uint64_t c);
  /// c * w^k
  static OrdinalCNF monomial(unsigned k, std::uint64_t c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  std::uint64_t coefficient(unsigned k) const;
  const std::map<unsigned, std::uint64_t, std::greater<>>& coefficients() const {
    return coeffs_;
  }

  /// Adds c * w^k, assuming the current value has no exponent below k
  /// (the only addition needed here is concatenation).
  void add_term(unsigned k, std::uint64_t c);

  friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;
  friend std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b);

 private:
  std::map<unsigned, std::uint64_t, std::greater<>> coeffs_;
};

std::strong_ordering ord_compare(const OrdinalCNF& a, const OrdinalCNF& b);

/// Position of x^alpha d_i in the well-ordered basis of u_n, counted from 1.
OrdinalCNF ord_of_basis(const std::vector<unsigned>& alpha, std::size_t i, std::size_t n);

/// w^(n-1) + ... + w + 1, the ordinal type of the whole basis.
OrdinalCNF ord_of_algebra(std::size_t n);

/// "w^2*3 + w*1 + 4"; "0" for zero.
std::string to_string(const OrdinalCNF& o);

}  // namespace trilie
