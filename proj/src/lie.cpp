#include "trilie/lie.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

using Weight = unsigned long long;
constexpr Weight kWeightLimit = Weight{1} << 62;

Weight sat_add(Weight a, Weight b) { return std::min(kWeightLimit, a + b); }
Weight sat_mul(Weight a, Weight b) {
  if (a == 0 || b == 0) return 0;
  if (a > kWeightLimit / b) return kWeightLimit;
  return std::min(kWeightLimit, a * b);
}

// W_1 = 1, W_i = deg(p_i) * max_{m<i} W_m + 1. Every term of u then has
// weight sum(alpha_m W_m) - W_i <= -1, so ad(u) strictly lowers weight.
std::vector<Weight> weights(const LieElem& u) {
  std::vector<Weight> w(u.rank());
  Weight running_max = 0;
  for (std::size_t i = 0; i < u.rank(); ++i) {
    const int d = std::max(0, u.coefficient(i + 1).total_degree());
    w[i] = sat_add(sat_mul(static_cast<Weight>(d), running_max), 1);
    running_max = std::max(running_max, w[i]);
  }
  return w;
}

Weight max_weight(const Poly& p, const std::vector<Weight>& w) {
  Weight best = 0;
  for (const auto& [m, c] : p.terms()) {
    Weight s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) s = sat_add(s, sat_mul(m[k], w[k]));
    best = std::max(best, s);
  }
  return best;
}

void check_rank(std::size_t n) {
  if (n < 1 || n > kMaxVars)
    throw DomainError("rank must lie in 1.." + std::to_string(kMaxVars));
}

void check_same_rank(const LieElem& u, const LieElem& v) {
  if (u.rank() != v.rank())
    throw DomainError("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                      std::to_string(v.rank()));
}

}  // namespace

std::strong_ordering basis_compare(const BasisKey& a, const BasisKey& b) {
  if (a.alpha.size() + 1 != a.index || b.alpha.size() + 1 != b.index)
    throw DomainError("malformed basis key");
  if (a.index != b.index) return b.index <=> a.index;
  for (std::size_t m = a.alpha.size(); m > 0; --m)
    if (a.alpha[m - 1] != b.alpha[m - 1]) return a.alpha[m - 1] <=> b.alpha[m - 1];
  return std::strong_ordering::equal;
}

LieElem::LieElem(std::size_t n) {
  check_rank(n);
  coeffs_.assign(n, Poly(n));
}

LieElem LieElem::partial(std::size_t n, std::size_t i) {
  LieElem u(n);
  if (i < 1 || i > n) throw DomainError("derivation index out of range");
  u.coeffs_[i - 1] = Poly::constant(n, 1);
  return u;
}

LieElem LieElem::basis(std::size_t n, const BasisKey& key, const Rat& c) {
  LieElem u(n);
  u.add_term(key, c);
  return u;
}

LieElem LieElem::from_coefficients(std::vector<Poly> coeffs) {
  LieElem u(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].nvars() != coeffs.size())
      throw DomainError("coefficient polynomials must use " + std::to_string(coeffs.size()) +
                        " variables");
    if (!coeffs[i].uses_only_first(i))
      throw DomainError("coefficient of d" + std::to_string(i + 1) + " must lie in P" +
                        std::to_string(i));
  }
  u.coeffs_ = std::move(coeffs);
  return u;
}

bool LieElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::size_t LieElem::term_count() const {
  std::size_t k = 0;
  for (const auto& p : coeffs_) k += p.terms().size();
  return k;
}

BasisKey key_of(const Monomial& m, std::size_t i) {
  BasisKey key;
  key.index = i;
  key.alpha.resize(i - 1);
  for (std::size_t k = 0; k + 1 < i; ++k) key.alpha[k] = m[k];
  return key;
}

Monomial monomial_of(const BasisKey& key) {
  if (key.alpha.size() + 1 != key.index) throw DomainError("malformed basis key");
  Monomial m;
  for (std::size_t k = 0; k < key.alpha.size(); ++k) m.set(k, key.alpha[k]);
  return m;
}

std::vector<std::pair<BasisKey, Rat>> LieElem::terms() const {
  std::vector<std::pair<BasisKey, Rat>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (const auto& [m, c] : coeffs_[i].terms()) out.emplace_back(key_of(m, i + 1), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return basis_compare(a.first, b.first) > 0; });
  return out;
}

void LieElem::add_term(const BasisKey& key, const Rat& c) {
  if (key.index < 1 || key.index > rank()) throw DomainError("basis key index out of range");
  coeffs_[key.index - 1].add_term(monomial_of(key), c);
}

void LieElem::require_same_rank(const LieElem& other) const { check_same_rank(*this, other); }

LieElem LieElem::operator-() const {
  LieElem r(*this);
  for (auto& p : r.coeffs_) p = -p;
  return r;
}

LieElem& LieElem::operator+=(const LieElem& other) {
  require_same_rank(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

LieElem& LieElem::operator-=(const LieElem& other) {
  require_same_rank(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

LieElem& LieElem::operator*=(const Rat& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

LieElem bracket(const LieElem& u, const LieElem& v) {
  check_same_rank(u, v);
  const std::size_t n = u.rank();
  std::vector<Poly> out(n, Poly(n));
  // [x^a d_i, x^b d_j] = b_i x^{a+b-e_i} d_j for i < j, antisymmetric, 0 for i = j.
  auto accumulate = [&](const Poly& p, std::size_t i, const Poly& q, std::size_t j,
                        const Rat& sign) {
    for (const auto& [ma, ca] : p.terms()) {
      for (const auto& [mb, cb] : q.terms()) {
        const unsigned e = mb[i - 1];
        if (e == 0) continue;
        Monomial m = ma * mb;
        m.set(i - 1, m[i - 1] - 1);
        out[j - 1].add_term(m, sign * ca * cb * e);
      }
    }
  };
  for (std::size_t i = 1; i <= n; ++i) {
    if (u.coefficient(i).is_zero() && v.coefficient(i).is_zero()) continue;
    for (std::size_t j = i + 1; j <= n; ++j) {
      accumulate(u.coefficient(i), i, v.coefficient(j), j, 1);
      accumulate(v.coefficient(i), i, u.coefficient(j), j, -1);
    }
  }
  return LieElem::from_coefficients(std::move(out));
}

Poly apply_derivation(const LieElem& u, const Poly& p) {
  if (p.nvars() != u.rank()) throw DomainError("rank mismatch between derivation and polynomial");
  Poly r(p.nvars());
  for (std::size_t i = 1; i <= u.rank(); ++i) {
    if (u.coefficient(i).is_zero()) continue;
    r += u.coefficient(i) * partial_derivative(p, i);
  }
  return r;
}

unsigned long nilpotency_bound(const LieElem& u, const Poly& p) {
  const auto w = weights(u);
  return static_cast<unsigned long>(sat_add(max_weight(p, w), 1));
}

unsigned long nilpotency_bound(const LieElem& u, const LieElem& v) {
  check_same_rank(u, v);
  const auto w = weights(u);
  Weight top = 0;
  for (std::size_t i = 1; i <= v.rank(); ++i)
    top = std::max(top, max_weight(v.coefficient(i), w));
  const Weight floor = *std::max_element(w.begin(), w.end());
  return static_cast<unsigned long>(sat_add(sat_add(top, floor), 1));
}

LieElem exp_ad_apply(const LieElem& u, const LieElem& v) {
  check_same_rank(u, v);
  const unsigned long cap = nilpotency_bound(u, v);
  LieElem result = v;
  LieElem cur = v;
  for (unsigned long k = 1; !cur.is_zero(); ++k) {
    if (k > cap) throw InternalError("ad(u) failed to terminate within its nilpotency bound");
    cur = bracket(u, cur) * Rat(1, k);
    result += cur;
  }
  return result;
}

std::pair<Rat, BasisKey> leading_term(const LieElem& u) {
  // Smallest derivation index, then the largest monomial in reversed-lex on alpha.
  for (std::size_t i = 1; i <= u.rank(); ++i) {
    const Poly& p = u.coefficient(i);
    if (p.is_zero()) continue;
    std::optional<std::pair<Rat, BasisKey>> best;
    for (const auto& [m, c] : p.terms()) {
      BasisKey k = key_of(m, i);
      if (!best || basis_compare(k, best->second) > 0) best.emplace(c, std::move(k));
    }
    return *best;
  }
  throw DomainError("leading term of the zero element");
}

OrdinalCNF ord_of_element(const LieElem& u) {
  const auto [c, key] = leading_term(u);
  return ord_of_basis(key.alpha, key.index, u.rank());
}

bool ideal_membership(const LieElem& u, const OrdinalCNF& lambda) {
  if (u.is_zero()) return true;
  return ord_of_element(u) <= lambda;
}

LieElem project(const LieElem& u, std::size_t i) {
  if (i < 2 || i > u.rank())
    throw DomainError("projection rank must lie in 2.." + std::to_string(u.rank()));
  std::vector<Poly> out;
  for (std::size_t j = 1; j <= i; ++j) {
    Poly p(i);
    for (const auto& [m, c] : u.coefficient(j).terms()) p.add_term(m, c);
    out.push_back(std::move(p));
  }
  return LieElem::from_coefficients(std::move(out));
}

std::vector<BasisKey> basis_keys(std::size_t n, unsigned max_degree) {
  check_rank(n);
  std::vector<BasisKey> out;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<unsigned> alpha(i - 1, 0);
    // Enumerate all alpha with |alpha| <= max_degree as an odometer.
    while (true) {
      out.push_back({alpha, i});
      std::size_t k = 0;
      unsigned total = 0;
      for (unsigned a : alpha) total += a;
      while (k < alpha.size()) {
        if (total < max_degree) {
          ++alpha[k];
          break;
        }
        total -= alpha[k];
        alpha[k] = 0;
        ++k;
      }
      if (k == alpha.size()) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BasisKey& a, const BasisKey& b) { return basis_compare(a, b) > 0; });
  return out;
}

std::vector<LieElem> generators(std::size_t n, unsigned max_exp) {
  std::vector<LieElem> out{LieElem::partial(n, 1)};
  for (std::size_t i = 2; i <= n; ++i) {
    for (unsigned j = 0; j <= max_exp; ++j) {
      BasisKey key{std::vector<unsigned>(i - 1, 0), i};
      key.alpha[i - 2] = j;
      out.push_back(LieElem::basis(n, key));
    }
  }
  return out;
}

std::vector<LieElem> center_solve(std::size_t n, unsigned D) {
  if (D < 1) throw DomainError("degree bound must be at least 1");
  const auto unknowns = basis_keys(n, D);
  const auto gens = generators(n, D + 1);

  using RowKey = std::tuple<std::size_t, std::size_t, std::array<std::uint8_t, kMaxVars>>;
  std::map<RowKey, std::size_t> row_index;
  std::vector<std::vector<Rat>> rows;
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const LieElem b = LieElem::basis(n, unknowns[c]);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const LieElem br = bracket(b, gens[g]);
      for (std::size_t i = 1; i <= n; ++i) {
        for (const auto& [m, v] : br.coefficient(i).terms()) {
          auto [it, fresh] = row_index.try_emplace(RowKey{g, i, m.exponents()}, rows.size());
          if (fresh) rows.emplace_back(unknowns.size(), Rat(0));
          rows[it->second][c] += v;
        }
      }
    }
  }

  // Reduced row echelon form over Q.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns.size() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      const Rat factor = rows[q][c];
      for (std::size_t k = c; k < unknowns.size(); ++k) rows[q][k] -= factor * rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<LieElem> out;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    LieElem u = LieElem::basis(n, unknowns[c]);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      if (rows[k][c] != 0) u.add_term(unknowns[pivot_cols[k]], -rows[k][c]);
    out.push_back(std::move(u));
  }
  return out;
}

LieElem phi_ad_series(const LieElem& w, std::size_t m) {
  if (m < 1 || m >= w.rank()) throw DomainError("phi index out of range");
  for (std::size_t j = 1; j <= m; ++j)
    if (!w.coefficient(j).is_zero())
      throw DomainError("phi_" + std::to_string(m) + " needs an element of sum_{j>" +
                        std::to_string(m) + "} P_{j-1} d_j");
  const std::size_t n = w.rank();
  const LieElem dm = LieElem::partial(n, m);
  const Poly xm = Poly::variable(n, m);
  LieElem result(n);
  LieElem cur = w;
  Poly xpow = Poly::constant(n, 1);
  for (unsigned k = 0; !cur.is_zero(); ++k) {
    Rat c = inverse_factorial(k);
    if (k % 2 == 1) c = -c;
    std::vector<Poly> scaled;
    for (std::size_t j = 1; j <= n; ++j) scaled.push_back(xpow * cur.coefficient(j) * c);
    result += LieElem::from_coefficients(std::move(scaled));
    cur = bracket(dm, cur);
    xpow = xpow * xm;
  }
  return result;
}

LieElem restrict_zero(const LieElem& w, std::size_t m) {
  std::vector<Poly> out;
  for (std::size_t j = 1; j <= w.rank(); ++j) out.push_back(restrict_zero(w.coefficient(j), m));
  return LieElem::from_coefficients(std::move(out));
}

LieElem torus_act(const std::vector<Rat>& lambda, const LieElem& u) {
  if (lambda.size() != u.rank()) throw DomainError("torus size does not match rank");
  for (const auto& l : lambda)
    if (l == 0) throw DomainError("torus entries must be nonzero");
  const std::size_t n = u.rank();
  std::vector<Poly> out;
  for (std::size_t i = 1; i <= n; ++i) {
    Poly p(n);
    for (const auto& [m, c] : u.coefficient(i).terms()) {
      Rat s = c / lambda[i - 1];
      for (std::size_t k = 0; k + 1 < i; ++k) s *= rat_pow(lambda[k], m[k]);
      p.add_term(m, s);
    }
    out.push_back(std::move(p));
  }
  return LieElem::from_coefficients(std::move(out));
}

}  // namespace trilie
