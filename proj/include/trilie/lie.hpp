#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "trilie/ordinal.hpp"
#include "trilie/poly.hpp"

namespace trilie {

/// Index (alpha, i) of the basis element x^alpha d_i, alpha of length i-1.
struct BasisKey {
  std::vector<unsigned> alpha;
  std::size_t index = 1;

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
};

/// The well-ordering of the basis: smaller derivation index is larger, then
/// exponents compared from alpha_{i-1} down to alpha_1.
std::strong_ordering basis_compare(const BasisKey& a, const BasisKey& b);

/// Element sum p_i d_i of u_n with p_i in P_{i-1}. Coefficients are kept as
/// polynomials in n variables.
class LieElem {
 public:
  explicit LieElem(std::size_t n);

  static LieElem partial(std::size_t n, std::size_t i);
  static LieElem basis(std::size_t n, const BasisKey& key, const Rat& c = 1);
  /// Checks p_i in P_{i-1}; throws DomainError otherwise.
  static LieElem from_coefficients(std::vector<Poly> coeffs);

  std::size_t rank() const { return coeffs_.size(); }
  /// The d_i coefficient, 1-based.
  const Poly& coefficient(std::size_t i) const { return coeffs_.at(i - 1); }
  const std::vector<Poly>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  std::size_t term_count() const;

  /// Terms in descending basis order.
  std::vector<std::pair<BasisKey, Rat>> terms() const;

  void add_term(const BasisKey& key, const Rat& c);

  LieElem operator-() const;
  LieElem& operator+=(const LieElem& other);
  LieElem& operator-=(const LieElem& other);
  LieElem& operator*=(const Rat& c);
  friend LieElem operator+(LieElem a, const LieElem& b) { return a += b; }
  friend LieElem operator-(LieElem a, const LieElem& b) { return a -= b; }
  friend LieElem operator*(LieElem a, const Rat& c) { return a *= c; }
  friend LieElem operator*(const Rat& c, LieElem a) { return a *= c; }
  friend bool operator==(const LieElem&, const LieElem&) = default;

 private:
  void require_same_rank(const LieElem& other) const;

  std::vector<Poly> coeffs_;
};

BasisKey key_of(const Monomial& m, std::size_t i);
Monomial monomial_of(const BasisKey& key);

LieElem bracket(const LieElem& u, const LieElem& v);

/// u(p) = sum p_i dp/dx_i.
Poly apply_derivation(const LieElem& u, const Poly& p);

/// Upper bound on the number of times u can be applied to p before reaching 0.
unsigned long nilpotency_bound(const LieElem& u, const Poly& p);
/// Upper bound on the number of times ad(u) can be applied to v before reaching 0.
unsigned long nilpotency_bound(const LieElem& u, const LieElem& v);

/// sum_k ad(u)^k(v)/k!
LieElem exp_ad_apply(const LieElem& u, const LieElem& v);

/// Leading coefficient and key; throws DomainError on zero.
std::pair<Rat, BasisKey> leading_term(const LieElem& u);
OrdinalCNF ord_of_element(const LieElem& u);
bool ideal_membership(const LieElem& u, const OrdinalCNF& lambda);

/// Image in u_i, dropping d_j for j > i.
LieElem project(const LieElem& u, std::size_t i);

/// Basis of the elements of degree <= D commuting with every generator
/// x_{i-1}^j d_i, j <= D+1.
std::vector<LieElem> center_solve(std::size_t n, unsigned D);

/// sum_k (-1)^k x_m^k/k! ad(d_m)^k (w). Requires w to have no d_j with j <= m.
LieElem phi_ad_series(const LieElem& w, std::size_t m);
/// Sets x_m := 0 in every coefficient.
LieElem restrict_zero(const LieElem& w, std::size_t m);

/// X_{alpha,i} -> lambda^alpha lambda_i^{-1} X_{alpha,i}.
LieElem torus_act(const std::vector<Rat>& lambda, const LieElem& u);

/// d_1 and x_{i-1}^j d_i for 2 <= i <= n, 0 <= j <= max_exp.
std::vector<LieElem> generators(std::size_t n, unsigned max_exp);
/// All x^alpha d_i with |alpha| <= max_degree, descending.
std::vector<BasisKey> basis_keys(std::size_t n, unsigned max_degree);

}  // namespace trilie
