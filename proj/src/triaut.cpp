#include "trilie/triaut.hpp"

#include <algorithm>
#include <string>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

void check_same_rank(const TriAut& s, std::size_t n) {
  if (s.rank() != n)
    throw DomainError("rank mismatch: " + std::to_string(s.rank()) + " vs " + std::to_string(n));
}

// The derivation sum a_i d_i; sigma - 1 lowers the same weights it does.
LieElem displacement(const TriAut& s) { return LieElem::from_coefficients(s.a()); }

}  // namespace

TriAut::TriAut(std::vector<Poly> a, std::vector<Rat> lambda)
    : a_(std::move(a)), lambda_(std::move(lambda)) {
  if (a_.empty() || a_.size() > kMaxVars)
    throw DomainError("automorphism rank must lie in 1.." + std::to_string(kMaxVars));
  if (lambda_.size() != a_.size())
    throw DomainError("automorphism needs " + std::to_string(a_.size()) + " scalars, got " +
                      std::to_string(lambda_.size()));
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].nvars() != a_.size())
      throw DomainError("automorphism polynomials must use " + std::to_string(a_.size()) +
                        " variables");
    if (!a_[i].uses_only_first(i))
      throw DomainError("a" + std::to_string(i + 1) + " must lie in P" + std::to_string(i));
    if (lambda_[i] == 0) throw DomainError("lambda" + std::to_string(i + 1) + " must be nonzero");
  }
}

TriAut TriAut::identity(std::size_t n) {
  if (n < 1 || n > kMaxVars) throw DomainError("rank out of range");
  return TriAut(std::vector<Poly>(n, Poly(n)), std::vector<Rat>(n, Rat(1)));
}

TriAut TriAut::torus(std::vector<Rat> lambda) {
  const std::size_t n = lambda.size();
  if (n < 1 || n > kMaxVars) throw DomainError("rank out of range");
  return TriAut(std::vector<Poly>(n, Poly(n)), std::move(lambda));
}

TriAut TriAut::unipotent(std::vector<Poly> a) {
  std::vector<Rat> ones(a.size(), Rat(1));
  return TriAut(std::move(a), std::move(ones));
}

TriAut TriAut::shift(const std::vector<Rat>& mu) {
  const std::size_t n = mu.size();
  std::vector<Poly> a;
  for (const auto& m : mu) a.push_back(Poly::constant(n, m));
  return unipotent(std::move(a));
}

std::vector<Poly> TriAut::images() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < rank(); ++i)
    out.push_back(Poly::variable(rank(), i + 1) * lambda_[i] + a_[i]);
  return out;
}

bool TriAut::is_identity() const { return is_torus() && is_unipotent(); }

bool TriAut::is_unipotent() const {
  return std::all_of(lambda_.begin(), lambda_.end(), [](const Rat& l) { return l == 1; });
}

bool TriAut::is_torus() const {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool TriAut::is_shift() const {
  return is_unipotent() &&
         std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_constant(); });
}

bool TriAut::fixes_origin() const {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.constant_term() == 0; });
}

bool TriAut::in_ct() const { return is_unipotent() && fixes_origin(); }

bool TriAut::in_uaut_n() const { return is_unipotent() && a_.back().constant_term() == 0; }

Poly tri_apply(const TriAut& s, const Poly& p) {
  if (p.nvars() != s.rank()) throw DomainError("rank mismatch between automorphism and polynomial");
  const auto im = s.images();
  return substitute(p, im);
}

TriAut tri_compose(const TriAut& s, const TriAut& t) {
  check_same_rank(t, s.rank());
  const auto im = s.images();
  std::vector<Poly> a;
  std::vector<Rat> lambda;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    a.push_back(s.a()[i] * t.lambda()[i] + substitute(t.a()[i], im));
    lambda.push_back(s.lambda()[i] * t.lambda()[i]);
  }
  return TriAut(std::move(a), std::move(lambda));
}

TriAut tri_invert(const TriAut& s) {
  const std::size_t n = s.rank();
  std::vector<Poly> im;
  for (std::size_t i = 1; i <= n; ++i) im.push_back(Poly::variable(n, i));
  std::vector<Poly> a;
  std::vector<Rat> lambda;
  for (std::size_t i = 0; i < n; ++i) {
    const Rat inv = 1 / s.lambda()[i];
    // a_i only reads im[0..i-1], which are already final.
    Poly b = -substitute(s.a()[i], im) * inv;
    im[i] = Poly::variable(n, i + 1) * inv + b;
    a.push_back(std::move(b));
    lambda.push_back(inv);
  }
  return TriAut(std::move(a), std::move(lambda));
}

LieElem conjugate_derivation(const TriAut& s, const LieElem& u) {
  check_same_rank(s, u.rank());
  const std::size_t n = s.rank();
  const auto inv_images = tri_invert(s).images();
  const auto im = s.images();
  std::vector<Poly> out;
  for (std::size_t j = 0; j < n; ++j) {
    Poly c = substitute(apply_derivation(u, inv_images[j]), im);
    if (!c.uses_only_first(j))
      throw InternalError("conjugated derivation left u_n at d" + std::to_string(j + 1));
    out.push_back(std::move(c));
  }
  return LieElem::from_coefficients(std::move(out));
}

TriAut exp_map(const LieElem& delta) {
  const std::size_t n = delta.rank();
  std::vector<Poly> a;
  for (std::size_t i = 1; i <= n; ++i) {
    const Poly xi = Poly::variable(n, i);
    const unsigned long cap = nilpotency_bound(delta, xi);
    Poly sum(n);
    Poly cur = xi;
    for (unsigned long k = 1; !cur.is_zero(); ++k) {
      if (k > cap + 1) throw InternalError("exp series failed to terminate");
      cur = apply_derivation(delta, cur) * Rat(1, k);
      sum += cur;
    }
    a.push_back(std::move(sum));
  }
  return TriAut::unipotent(std::move(a));
}

LieElem log_map(const TriAut& s) {
  if (!s.is_unipotent()) throw DomainError("log is only defined on unipotent automorphisms");
  const std::size_t n = s.rank();
  const LieElem d = displacement(s);
  const auto im = s.images();
  std::vector<Poly> b;
  for (std::size_t j = 1; j <= n; ++j) {
    const Poly xj = Poly::variable(n, j);
    const unsigned long cap = nilpotency_bound(d, xj);
    Poly sum(n);
    Poly cur = xj;
    for (unsigned long i = 1;; ++i) {
      cur = cur - substitute(cur, im);
      if (cur.is_zero()) break;
      if (i > cap) throw InternalError("log series failed to terminate");
      sum -= cur * Rat(1, i);
    }
    b.push_back(std::move(sum));
  }
  return LieElem::from_coefficients(std::move(b));
}

TriAut reconstruct_from_frames(const std::vector<LieElem>& frames) {
  const std::size_t n = frames.size();
  if (n < 1) throw DomainError("no frames given");
  std::vector<Rat> mu;
  for (std::size_t i = 1; i <= n; ++i) {
    const LieElem& f = frames[i - 1];
    if (f.rank() != n)
      throw DomainError("frame " + std::to_string(i) + " has rank " + std::to_string(f.rank()));
    for (std::size_t j = 1; j < i; ++j)
      if (!f.coefficient(j).is_zero())
        throw DomainError("frame " + std::to_string(i) + " has a d" + std::to_string(j) +
                          " component");
    const Poly& lead = f.coefficient(i);
    if (!lead.is_constant() || lead.is_zero())
      throw DomainError("frame " + std::to_string(i) + " must start with a nonzero multiple of d" +
                        std::to_string(i));
    mu.push_back(lead.constant_term());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!bracket(frames[i], frames[j]).is_zero())
        throw DomainError("frames " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                          " do not commute");

  std::vector<Poly> xp;
  for (std::size_t i = 1; i <= n; ++i) {
    Poly p = Poly::variable(n, i) * (1 / mu[i - 1]);
    for (std::size_t k = 1; k < i; ++k) {
      // phi_k = sum_m (-1)^m x_k'^m / m! d_k'^m
      const LieElem& dk = frames[k - 1];
      Poly result(n);
      Poly cur = p;
      Poly xpow = Poly::constant(n, 1);
      const unsigned long cap = nilpotency_bound(dk, p);
      for (unsigned long m = 0; !cur.is_zero(); ++m) {
        if (m > cap) throw InternalError("phi series failed to terminate");
        Rat c = inverse_factorial(static_cast<unsigned>(m));
        if (m % 2 == 1) c = -c;
        result += xpow * cur * c;
        cur = apply_derivation(dk, cur);
        xpow = xpow * xp[k - 1];
      }
      p = std::move(result);
    }
    xp.push_back(std::move(p));
  }

  std::vector<Poly> a;
  std::vector<Rat> lambda;
  for (std::size_t i = 1; i <= n; ++i) {
    Monomial m;
    m.set(i - 1, 1);
    const Rat l = xp[i - 1].coefficient(m);
    Poly rest = xp[i - 1] - Poly::term(n, m, l);
    if (l == 0 || !rest.uses_only_first(i - 1))
      throw InternalError("reconstructed map is not triangular");
    a.push_back(std::move(rest));
    lambda.push_back(l);
  }
  return TriAut(std::move(a), std::move(lambda));
}

TriAut normalize_mod_shn(const TriAut& s) {
  std::vector<Poly> a = s.a();
  a.back() -= Poly::constant(s.rank(), a.back().constant_term());
  return TriAut(std::move(a), s.lambda());
}

std::pair<TriAut, std::vector<Rat>> split_ct_shift(const TriAut& s) {
  if (!s.is_unipotent()) throw DomainError("only unipotent automorphisms split as CT_n x Sh_n");
  std::vector<Poly> a;
  std::vector<Rat> mu;
  for (const auto& p : s.a()) {
    mu.push_back(p.constant_term());
    a.push_back(p - Poly::constant(s.rank(), mu.back()));
  }
  return {TriAut::unipotent(std::move(a)), std::move(mu)};
}

TriAut torus_conjugate(const std::vector<Rat>& lambda, const TriAut& s) {
  const TriAut t = TriAut::torus(lambda);
  return tri_compose(tri_compose(t, s), tri_invert(t));
}

}  // namespace trilie
