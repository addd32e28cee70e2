#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "trilie/poly.hpp"

namespace trilie {

/// Constant-term discipline of a truncated series in one derivation.
enum class SeriesKind {
  F,       ///< 1 + O(D)
  FPrime,  ///< 1 + O(D^2)
  E,       ///< O(D)
};

/// sum_k c_k d_var^k, known exactly up to degree `order`.
class OpSeries {
 public:
  OpSeries(std::size_t var, SeriesKind kind, unsigned order, std::map<unsigned, Rat> coeffs);

  static OpSeries one(std::size_t var, SeriesKind kind, unsigned order);
  static OpSeries zero(std::size_t var, unsigned order);

  std::size_t var() const { return var_; }
  SeriesKind kind() const { return kind_; }
  unsigned order() const { return order_; }
  /// Nonzero coefficients of degree <= order.
  const std::map<unsigned, Rat>& coeffs() const { return coeffs_; }
  /// Throws SeriesOrderError beyond the known order.
  Rat coeff(unsigned k) const;
  /// True when every coefficient beyond the constant one vanishes.
  bool is_trivial() const;

  /// sum_k c_k d^k p over x_var; needs order >= deg_{x_var} p.
  Poly apply(const Poly& p) const;

  OpSeries with_kind(SeriesKind kind) const;
  OpSeries truncated(unsigned order) const;

  friend bool operator==(const OpSeries&, const OpSeries&) = default;

 private:
  std::size_t var_;
  SeriesKind kind_;
  unsigned order_;
  std::map<unsigned, Rat> coeffs_;
};

/// Composition of two series in the same derivation; valid to the lesser order.
OpSeries series_product(const OpSeries& a, const OpSeries& b);
OpSeries series_sum(const OpSeries& a, const OpSeries& b);
OpSeries series_inverse(const OpSeries& f);
/// d -> r d: c_k -> r^k c_k.
OpSeries series_rescale(const OpSeries& s, const Rat& r);
/// c_k -> c c_k, for constant-free series.
OpSeries series_scale(const OpSeries& s, const Rat& c);

/// e^{c d_var} truncated at `order`.
OpSeries exp_shift_series(std::size_t var, const Rat& c, unsigned order);

/// F = e^{lambda d} F' with F' free of a linear term.
std::pair<Rat, OpSeries> series_factor_shift(const OpSeries& f);

}  // namespace trilie
