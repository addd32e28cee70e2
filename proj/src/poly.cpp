#include "trilie/poly.hpp"

#include <algorithm>
#include <string>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

unsigned effective_cap(unsigned cap) { return std::min(cap, 255u); }

void check_index(std::size_t i, std::size_t nvars) {
  if (i < 1 || i > nvars)
    throw DomainError("variable index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(nvars));
}

}  // namespace

void Monomial::set(std::size_t k, unsigned e) {
  if (e > 255) throw DomainError("exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[k] + e);
  exps_[k] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    unsigned e = unsigned{exps_[k]} + other.exps_[k];
    if (e > 255) throw DomainError("exponent exceeds 255");
    r.exps_[k] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

std::size_t Monomial::highest_variable() const {
  for (std::size_t k = kMaxVars; k > 0; --k)
    if (exps_[k - 1] != 0) return k;
  return 0;
}

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw DomainError("polynomials need 1.." + std::to_string(kMaxVars) + " variables");
}

Poly Poly::constant(std::size_t nvars, const Rat& c) { return term(nvars, Monomial{}, c); }

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  check_index(i, nvars);
  Monomial m;
  m.set(i - 1, 1);
  return term(nvars, m, 1);
}

Poly Poly::term(std::size_t nvars, const Monomial& m, const Rat& c) {
  Poly p(nvars);
  if (m.highest_variable() > nvars) throw DomainError("monomial uses a variable beyond nvars");
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

unsigned Poly::degree_in(std::size_t i) const {
  check_index(i, nvars_);
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i - 1]);
  return d;
}

Rat Poly::constant_term() const { return coefficient(Monomial{}); }

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool Poly::uses_only_first(std::size_t k) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [k](const auto& t) { return t.first.highest_variable() <= k; });
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_same_vars(const Poly& other) const {
  if (nvars_ != other.nvars_)
    throw DomainError("polynomial variable count mismatch: " + std::to_string(nvars_) + " vs " +
                      std::to_string(other.nvars_));
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_vars(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Poly Poly::mul(const Poly& other, unsigned degree_cap) const {
  require_same_vars(other);
  Poly r(nvars_);
  if (is_zero() || other.is_zero()) return r;
  const int deg = total_degree() + other.total_degree();
  if (deg > static_cast<int>(effective_cap(degree_cap)))
    throw DomainError("degree cap exceeded: product has degree " + std::to_string(deg));
  Rat prod;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  }
  return r;
}

Poly Poly::pow(long e, unsigned degree_cap) const {
  if (e < 0) throw DomainError("negative exponent in polynomial power");
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  auto k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) result = result.mul(base, degree_cap);
    k >>= 1;
    if (k > 0) base = base.mul(base, degree_cap);
  }
  return result;
}

Poly partial_derivative(const Poly& p, std::size_t i) {
  check_index(i, p.nvars());
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[i - 1];
    if (e == 0) continue;
    Monomial d = m;
    d.set(i - 1, e - 1);
    r.add_term(d, c * e);
  }
  return r;
}

Poly substitute(const Poly& p, std::span<const Poly> images, unsigned degree_cap) {
  if (images.size() != p.nvars())
    throw DomainError("substitution needs " + std::to_string(p.nvars()) + " images, got " +
                      std::to_string(images.size()));
  if (images.empty()) return p;
  const std::size_t out_vars = images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != out_vars) throw DomainError("substitution images disagree on nvars");

  // powers[k][e] = images[k]^e, filled lazily.
  std::vector<std::vector<Poly>> powers(p.nvars());
  auto power = [&](std::size_t k, unsigned e) -> const Poly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Poly::constant(out_vars, 1));
    while (cache.size() <= e) cache.push_back(cache.back().mul(images[k], degree_cap));
    return cache[e];
  };

  Poly result(out_vars);
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(out_vars, c);
    for (std::size_t k = 0; k < p.nvars(); ++k)
      if (m[k] != 0) term = term.mul(power(k, m[k]), degree_cap);
    result += term;
  }
  return result;
}

Poly restrict_zero(const Poly& p, std::size_t i) {
  check_index(i, p.nvars());
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (m[i - 1] == 0) r.add_term(m, c);
  return r;
}

Rat phi_projection(const Poly& p) { return p.constant_term(); }

Poly phi_series(const Poly& p, std::size_t i) {
  check_index(i, p.nvars());
  Poly result(p.nvars());
  Poly deriv = p;
  const Poly xi = Poly::variable(p.nvars(), i);
  Poly xpow = Poly::constant(p.nvars(), 1);
  for (unsigned k = 0; !deriv.is_zero(); ++k) {
    Rat coeff = inverse_factorial(k);
    if (k % 2 == 1) coeff = -coeff;
    result += xpow.mul(deriv, 255) * coeff;
    deriv = partial_derivative(deriv, i);
    xpow = xpow.mul(xi, 255);
  }
  return result;
}

Rat phi_projection_series(const Poly& p) {
  Poly q = p;
  for (std::size_t i = 1; i <= p.nvars(); ++i) q = phi_series(q, i);
  if (!q.is_constant()) throw InternalError("phi series did not reduce to a constant");
  return q.constant_term();
}

}  // namespace trilie
