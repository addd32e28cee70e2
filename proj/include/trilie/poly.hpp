#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "trilie/rational.hpp"

namespace trilie {

/// Largest number of variables a polynomial may carry.
inline constexpr std::size_t kMaxVars = 16;

/// Default bound on the total degree of any computed polynomial. Exponents are
/// stored in one byte, so a cap above 255 is clamped.
inline constexpr unsigned kDefaultDegreeCap = 64;

/// Exponent vector x1^e1 ... xn^en. Indices are 0-based here; the public
/// polynomial API uses 1-based variable indices.
class Monomial {
 public:
  Monomial() = default;

  unsigned operator[](std::size_t k) const { return exps_[k]; }
  unsigned degree() const { return degree_; }
  void set(std::size_t k, unsigned e);

  /// Product of monomials; throws DomainError when an exponent overflows.
  Monomial operator*(const Monomial& other) const;

  /// Highest variable index (1-based) with a nonzero exponent, 0 for 1.
  std::size_t highest_variable() const;

  const std::array<std::uint8_t, kMaxVars>& exponents() const { return exps_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

/// Graded lexicographic order on (x1, ..., xn), larger first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents() > b.exponents();
  }
};

/// Sparse polynomial over Q in a fixed number of variables. Zero coefficients
/// are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexGreater>;

  explicit Poly(std::size_t nvars);

  static Poly constant(std::size_t nvars, const Rat& c);
  /// The variable x_i, 1 <= i <= nvars.
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly term(std::size_t nvars, const Monomial& m, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in x_i (1-based); 0 for the zero polynomial.
  unsigned degree_in(std::size_t i) const;
  Rat constant_term() const;
  Rat coefficient(const Monomial& m) const;

  /// True iff p lies in P_k = K[x1..xk].
  bool uses_only_first(std::size_t k) const;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b) { return a.mul(b); }

  Poly mul(const Poly& other, unsigned degree_cap = kDefaultDegreeCap) const;
  /// Non-negative integer power; throws DomainError on a negative exponent.
  Poly pow(long e, unsigned degree_cap = kDefaultDegreeCap) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_vars(const Poly& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// d p / d x_i, 1-based.
Poly partial_derivative(const Poly& p, std::size_t i);

/// Image of p under the algebra endomorphism x_i -> images[i-1].
Poly substitute(const Poly& p, std::span<const Poly> images,
                unsigned degree_cap = kDefaultDegreeCap);

/// Sets x_i := 0.
Poly restrict_zero(const Poly& p, std::size_t i);

/// Constant term of p: the projection of P_n onto K.
Rat phi_projection(const Poly& p);

/// phi_i(p) = sum_k (-1)^k x_i^k/k! d_i^k p, a finite sum.
Poly phi_series(const Poly& p, std::size_t i);

/// Applies phi_1 ... phi_n through their series; the result is a constant.
Rat phi_projection_series(const Poly& p);

}  // namespace trilie
