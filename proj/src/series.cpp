#include "trilie/series.hpp"

#include <algorithm>
#include <string>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

bool unit_kind(SeriesKind k) { return k != SeriesKind::E; }

void check_kind(SeriesKind kind, const std::map<unsigned, Rat>& c) {
  auto at = [&](unsigned k) {
    auto it = c.find(k);
    return it == c.end() ? Rat(0) : it->second;
  };
  if (unit_kind(kind) && at(0) != 1)
    throw DomainError("series must have constant coefficient 1");
  if (kind == SeriesKind::FPrime && at(1) != 0)
    throw DomainError("series must have no linear coefficient");
  if (kind == SeriesKind::E && at(0) != 0)
    throw DomainError("series must have no constant coefficient");
}

}  // namespace

OpSeries::OpSeries(std::size_t var, SeriesKind kind, unsigned order, std::map<unsigned, Rat> coeffs)
    : var_(var), kind_(kind), order_(order) {
  if (var < 1 || var > kMaxVars) throw DomainError("series variable out of range");
  for (auto& [k, c] : coeffs) {
    if (k > order) throw DomainError("series coefficient beyond its order");
    if (c != 0) coeffs_.emplace(k, std::move(c));
  }
  check_kind(kind, coeffs_);
}

OpSeries OpSeries::one(std::size_t var, SeriesKind kind, unsigned order) {
  if (kind == SeriesKind::E) return zero(var, order);
  return OpSeries(var, kind, order, {{0, Rat(1)}});
}

OpSeries OpSeries::zero(std::size_t var, unsigned order) {
  return OpSeries(var, SeriesKind::E, order, {});
}

Rat OpSeries::coeff(unsigned k) const {
  if (k > order_) throw SeriesOrderError(k, order_);
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

bool OpSeries::is_trivial() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kc) { return kc.first == 0; });
}

Poly OpSeries::apply(const Poly& p) const {
  if (var_ > p.nvars()) throw DomainError("series variable exceeds polynomial rank");
  const unsigned deg = p.is_zero() ? 0 : p.degree_in(var_);
  if (deg > order_) throw SeriesOrderError(deg, order_);
  Poly result(p.nvars());
  Poly cur = p;
  for (unsigned k = 0; k <= deg; ++k) {
    auto it = coeffs_.find(k);
    if (it != coeffs_.end()) result += cur * it->second;
    cur = partial_derivative(cur, var_);
  }
  return result;
}

OpSeries OpSeries::with_kind(SeriesKind kind) const { return OpSeries(var_, kind, order_, coeffs_); }

OpSeries OpSeries::truncated(unsigned order) const {
  if (order > order_) throw SeriesOrderError(order, order_);
  std::map<unsigned, Rat> c;
  for (const auto& [k, v] : coeffs_)
    if (k <= order) c.emplace(k, v);
  return OpSeries(var_, kind_, order, std::move(c));
}

OpSeries series_product(const OpSeries& a, const OpSeries& b) {
  if (a.var() != b.var()) throw DomainError("series in different derivations");
  if (!unit_kind(a.kind()) || !unit_kind(b.kind()))
    throw DomainError("products are taken of unit series only");
  const unsigned order = std::min(a.order(), b.order());
  std::map<unsigned, Rat> c;
  for (const auto& [i, x] : a.coeffs())
    for (const auto& [j, y] : b.coeffs())
      if (i + j <= order) c[i + j] += x * y;
  const SeriesKind kind = (a.kind() == SeriesKind::FPrime && b.kind() == SeriesKind::FPrime)
                              ? SeriesKind::FPrime
                              : SeriesKind::F;
  return OpSeries(a.var(), kind, order, std::move(c));
}

OpSeries series_sum(const OpSeries& a, const OpSeries& b) {
  if (a.var() != b.var()) throw DomainError("series in different derivations");
  if (a.kind() != SeriesKind::E || b.kind() != SeriesKind::E)
    throw DomainError("sums are taken of constant-free series only");
  std::map<unsigned, Rat> c = a.coeffs();
  const unsigned order = std::min(a.order(), b.order());
  for (const auto& [k, v] : b.coeffs()) c[k] += v;
  std::erase_if(c, [order](const auto& kv) { return kv.first > order; });
  return OpSeries(a.var(), SeriesKind::E, order, std::move(c));
}

OpSeries series_inverse(const OpSeries& f) {
  if (!unit_kind(f.kind())) throw DomainError("only unit series are invertible");
  std::vector<Rat> g(f.order() + 1, Rat(0));
  g[0] = 1;
  for (unsigned k = 1; k <= f.order(); ++k) {
    Rat s = 0;
    for (const auto& [j, c] : f.coeffs())
      if (j >= 1 && j <= k) s += c * g[k - j];
    g[k] = -s;
  }
  std::map<unsigned, Rat> c;
  for (unsigned k = 0; k <= f.order(); ++k) c.emplace(k, g[k]);
  return OpSeries(f.var(), f.kind(), f.order(), std::move(c));
}

OpSeries series_rescale(const OpSeries& s, const Rat& r) {
  std::map<unsigned, Rat> c;
  for (const auto& [k, v] : s.coeffs()) c.emplace(k, v * rat_pow(r, k));
  return OpSeries(s.var(), s.kind(), s.order(), std::move(c));
}

OpSeries series_scale(const OpSeries& s, const Rat& c) {
  if (s.kind() != SeriesKind::E) throw DomainError("only constant-free series may be scaled");
  std::map<unsigned, Rat> out;
  for (const auto& [k, v] : s.coeffs()) out.emplace(k, v * c);
  return OpSeries(s.var(), s.kind(), s.order(), std::move(out));
}

OpSeries exp_shift_series(std::size_t var, const Rat& c, unsigned order) {
  std::map<unsigned, Rat> out;
  for (unsigned k = 0; k <= order; ++k) out.emplace(k, rat_pow(c, k) * inverse_factorial(k));
  return OpSeries(var, SeriesKind::F, order, std::move(out));
}

std::pair<Rat, OpSeries> series_factor_shift(const OpSeries& f) {
  if (!unit_kind(f.kind())) throw DomainError("shift factorization needs a unit series");
  const Rat lambda = f.coeff(1);
  OpSeries rest = series_product(exp_shift_series(f.var(), -lambda, f.order()), f);
  return {lambda, rest.with_kind(SeriesKind::FPrime)};
}

}  // namespace trilie
