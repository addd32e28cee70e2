#include "trilie/random.hpp"

#include "trilie/errors.hpp"

namespace trilie {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty random range");
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % width);
}

Rat Rng::rational(long span, long den) {
  Rat r(uniform(-span, span), uniform(1, den));
  r.canonicalize();
  return r;
}

Rat Rng::nonzero_rational(long span, long den) {
  Rat r(0);
  while (r == 0) r = rational(span, den);
  return r;
}

Poly random_poly(Rng& rng, std::size_t n, std::size_t k, unsigned max_deg, unsigned max_terms,
                 bool allow_constant) {
  Poly p(n);
  if (max_terms == 0) return p;
  const long terms = rng.uniform(1, max_terms);
  for (long t = 0; t < terms; ++t) {
    const long deg = k == 0 ? 0 : rng.uniform(allow_constant ? 0 : 1, max_deg);
    if (deg == 0 && !allow_constant) continue;
    Monomial m;
    for (long d = 0; d < deg; ++d) {
      const auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1));
      m.set(v, m[v] + 1);
    }
    p.add_term(m, rng.nonzero_rational());
  }
  return p;
}

LieElem random_lie(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms) {
  std::vector<Poly> c;
  for (std::size_t i = 1; i <= n; ++i)
    c.push_back(rng.chance(70) ? random_poly(rng, n, i - 1, max_deg, max_terms) : Poly(n));
  return LieElem::from_coefficients(std::move(c));
}

LieElem random_lie_below(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms) {
  std::vector<Poly> c = random_lie(rng, n, max_deg, max_terms).coefficients();
  c.back() = Poly(n);
  return LieElem::from_coefficients(std::move(c));
}

std::vector<Rat> random_torus(Rng& rng, std::size_t n) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.nonzero_rational(3, 2));
  return out;
}

TriAut random_unipotent(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms) {
  std::vector<Poly> a;
  for (std::size_t i = 1; i <= n; ++i)
    a.push_back(rng.chance(75) ? random_poly(rng, n, i - 1, max_deg, max_terms) : Poly(n));
  return TriAut::unipotent(std::move(a));
}

TriAut random_triangular(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms) {
  const TriAut u = random_unipotent(rng, n, max_deg, max_terms);
  return TriAut(u.a(), random_torus(rng, n));
}

TriAut random_origin_fixing(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms) {
  std::vector<Poly> a;
  for (std::size_t i = 1; i <= n; ++i)
    a.push_back(rng.chance(75) ? random_poly(rng, n, i - 1, max_deg, max_terms, false) : Poly(n));
  return TriAut(std::move(a), random_torus(rng, n));
}

OpSeries random_series(Rng& rng, std::size_t var, SeriesKind kind, unsigned support,
                       unsigned order) {
  std::map<unsigned, Rat> c;
  if (kind != SeriesKind::E) c[0] = 1;
  const unsigned low = kind == SeriesKind::FPrime ? 2 : 1;
  for (unsigned k = low; k <= support && k <= order; ++k)
    if (rng.chance(60)) c[k] = rng.nonzero_rational(4, 3);
  return OpSeries(var, kind, order, std::move(c));
}

GnElem random_gnelem(Rng& rng, std::size_t n, GnForm form, unsigned tau_deg, unsigned support,
                     unsigned order) {
  std::vector<Poly> a;
  for (std::size_t i = 1; i <= n; ++i) {
    const bool constant_ok = form == GnForm::B && i < n;
    a.push_back(rng.chance(70) ? random_poly(rng, n, i - 1, tau_deg, 2, constant_ok) : Poly(n));
  }
  std::vector<Rat> s;
  if (form == GnForm::A)
    for (std::size_t i = 0; i + 2 < n; ++i) s.push_back(rng.chance(60) ? rng.rational() : Rat(0));
  const SeriesKind fk = form == GnForm::A ? SeriesKind::F : SeriesKind::FPrime;
  OpSeries f = random_series(rng, n - 1, fk, support, order);
  std::vector<OpSeries> e;
  for (std::size_t i = 2; i < n; ++i)
    e.push_back(random_series(rng, i - 1, SeriesKind::E, support, order));
  return GnElem(form, random_torus(rng, n), TriAut::unipotent(std::move(a)), std::move(s),
                std::move(f), std::move(e));
}

}  // namespace trilie
