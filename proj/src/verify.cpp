#include "trilie/verify.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "trilie/cli.hpp"
#include "trilie/dsl.hpp"
#include "trilie/errors.hpp"
#include "trilie/gn.hpp"
#include "trilie/random.hpp"

namespace trilie {

namespace {

// ---------------------------------------------------------------------------
// Weyl algebra oracle: differential operators sum c x^a d^b in normal order,
// multiplied with the Leibniz rule. Independent of the bracket table.

using Exps = std::array<unsigned, kMaxVars>;
using WeylOp = std::map<std::pair<Exps, Exps>, Rat>;

WeylOp to_weyl(const LieElem& u) {
  WeylOp op;
  for (std::size_t i = 1; i <= u.rank(); ++i) {
    for (const auto& [m, c] : u.coefficient(i).terms()) {
      Exps a{};
      Exps b{};
      for (std::size_t k = 0; k < kMaxVars; ++k) a[k] = m[k];
      b[i - 1] = 1;
      op[{a, b}] += c;
    }
  }
  return op;
}

Rat falling(unsigned c, unsigned k) {
  Rat r = 1;
  for (unsigned j = 0; j < k; ++j) r *= c - j;
  return r;
}

Rat binomial(unsigned n, unsigned k) { return falling(n, k) * inverse_factorial(k); }

// d^b x^c = sum_k prod binom(b_i, k_i) c_i^(k_i) x^{c-k} d^{b-k}
void weyl_mul_terms(const Exps& a, const Exps& b, const Exps& c, const Exps& d, const Rat& coeff,
                    std::size_t idx, Exps& k, WeylOp& out) {
  if (idx == kMaxVars) {
    Rat w = coeff;
    Exps x{};
    Exps y{};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      w *= binomial(b[i], k[i]) * falling(c[i], k[i]);
      x[i] = a[i] + c[i] - k[i];
      y[i] = b[i] - k[i] + d[i];
    }
    if (w != 0) out[{x, y}] += w;
    return;
  }
  for (unsigned j = 0; j <= std::min(b[idx], c[idx]); ++j) {
    k[idx] = j;
    weyl_mul_terms(a, b, c, d, coeff, idx + 1, k, out);
  }
  k[idx] = 0;
}

WeylOp weyl_mul(const WeylOp& p, const WeylOp& q) {
  WeylOp out;
  for (const auto& [ab, c1] : p)
    for (const auto& [cd, c2] : q) {
      Exps k{};
      weyl_mul_terms(ab.first, ab.second, cd.first, cd.second, c1 * c2, 0, k, out);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Reads a first-order operator back as an element of u_n; nullopt otherwise.
std::optional<LieElem> from_weyl(const WeylOp& op, std::size_t n) {
  std::vector<Poly> c(n, Poly(n));
  for (const auto& [ab, v] : op) {
    std::size_t order = 0;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      order += ab.second[i];
      if (ab.second[i]) idx = i;
    }
    if (order != 1 || idx >= n) return std::nullopt;
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.set(i, ab.first[i]);
    c[idx].add_term(m, v);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!c[i].uses_only_first(i)) return std::nullopt;
  return LieElem::from_coefficients(std::move(c));
}

std::optional<LieElem> weyl_bracket(const LieElem& u, const LieElem& v) {
  const WeylOp a = to_weyl(u);
  const WeylOp b = to_weyl(v);
  WeylOp ab = weyl_mul(a, b);
  for (const auto& [k, c] : weyl_mul(b, a)) ab[k] -= c;
  std::erase_if(ab, [](const auto& kv) { return kv.second == 0; });
  return from_weyl(ab, u.rank());
}

// ---------------------------------------------------------------------------

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
  // Runs a case, counting any exception as a failure.
  void run(const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string why = what;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why += std::string(" threw: ") + e.what();
    }
    check(ok, why);
  }
  bool ok() const { return failures == 0 && cases > 0; }
  std::string summary(const std::string& what) const {
    if (ok()) return what;
    return std::to_string(failures) + "/" + std::to_string(cases) + " failed; first: " + first_failure;
  }
};

std::size_t pick_rank(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(hi)));
}

bool same_action(const AutoAction& a, const AutoAction& b, const std::vector<LieElem>& probes) {
  for (const auto& u : probes)
    if (a(u) != b(u)) return false;
  return true;
}

AutoAction identity_action(std::size_t n) { return {n, [](const LieElem& u) { return u; }}; }

AutoAction e_action(const std::vector<OpSeries>& e, std::size_t n) {
  return {n, [e](const LieElem& u) { return act_e(e, u); }};
}

AutoAction f_action(const OpSeries& f, std::size_t n) {
  return {n, [f](const LieElem& u) { return act_f(f, u); }};
}

AutoAction torus_action(const std::vector<Rat>& lambda) {
  return {lambda.size(), [lambda](const LieElem& u) { return torus_act(lambda, u); }};
}

// e_i'(s) as a full list of n-2 series, zero except at i.
std::vector<OpSeries> single_e(std::size_t n, std::size_t i, const OpSeries& s) {
  std::vector<OpSeries> e;
  for (std::size_t k = 2; k < n; ++k) e.push_back(k == i ? s : OpSeries::zero(k - 1, s.order()));
  return e;
}

// e^{a d_s} as a triangular automorphism.
TriAut elementary(std::size_t n, std::size_t s, const Poly& a) {
  std::vector<Poly> v(n, Poly(n));
  v[s - 1] = a;
  return TriAut::unipotent(std::move(v));
}

// ---------------------------------------------------------------------------

CriterionResult c01_bracket(std::uint64_t seed) {
  Tally t;
  std::size_t pairs = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto keys = basis_keys(n, 3);
    for (const auto& a : keys)
      for (const auto& b : keys) {
        const LieElem u = LieElem::basis(n, a);
        const LieElem v = LieElem::basis(n, b);
        const auto oracle = weyl_bracket(u, v);
        t.check(oracle && *oracle == bracket(u, v), "basis pair in rank " + std::to_string(n));
        ++pairs;
      }
  }
  Rng rng(seed);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = pick_rank(rng, 2, 4);
    const LieElem u = random_lie(rng, n, 3, 2);
    const LieElem v = random_lie(rng, n, 3, 2);
    const LieElem w = random_lie(rng, n, 3, 2);
    t.check(bracket(u, v) == -bracket(v, u), "antisymmetry");
    const LieElem jac =
        bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v));
    t.check(jac.is_zero(), "Jacobi");
  }
  return {1, "bracket correctness", t.ok(),
          t.summary(std::to_string(pairs) + " basis pairs against operator composition; "
                    "1000 antisymmetry/Jacobi triples")};
}

CriterionResult c02_derived_series(std::uint64_t) {
  Tally t;
  const unsigned D = 4;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto keys = basis_keys(n, D);
    const LieElem d1 = LieElem::partial(n, 1);
    for (const auto& key : keys) {
      if (key.index < 2) continue;
      BasisKey up = key;
      ++up.alpha[0];
      const LieElem w = bracket(d1, LieElem::basis(n, up)) * Rat(1, key.alpha[0] + 1);
      t.check(w == LieElem::basis(n, key), "witness for a u_{n,2} basis element");
    }
    for (const auto& a : keys)
      for (const auto& b : keys)
        t.check(bracket(LieElem::basis(n, a), LieElem::basis(n, b)).coefficient(1).is_zero(),
                "bracket outside u_{n,2}");
  }
  return {2, "derived series [u_n, u_n] = u_{n,2}", t.ok(),
          t.summary("both inclusions at degree <= 4, n = 2, 3, 4")};
}

CriterionResult c03_center(std::uint64_t) {
  Tally t;
  for (std::size_t n = 2; n <= 4; ++n) {
    t.run("centre n=" + std::to_string(n), [&] {
      const auto basis = center_solve(n, 3);
      return basis.size() == 1 && basis[0] == LieElem::partial(n, n);
    });
  }
  return {3, "centre is K d_n", t.ok(), t.summary("center_solve(n, 3) = {d_n} for n = 2, 3, 4")};
}

CriterionResult c04_ordering(std::uint64_t seed) {
  Tally t;
  std::size_t pairs = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto keys = basis_keys(n, 4);
    std::vector<OrdinalCNF> ords;
    for (const auto& k : keys) ords.push_back(ord_of_basis(k.alpha, k.index, n));
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = 0; j < keys.size(); ++j) {
        t.check(basis_compare(keys[i], keys[j]) == ord_compare(ords[i], ords[j]),
                "order isomorphism");
        ++pairs;
      }
  }
  Rng rng(seed ^ 0x04);
  std::size_t nonzero = 0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = pick_rank(rng, 2, 4);
    LieElem u = random_lie(rng, n, 3, 2);
    LieElem v = random_lie(rng, n, 3, 2);
    if (u.is_zero() || v.is_zero()) continue;
    const LieElem w = bracket(u, v);
    if (w.is_zero()) continue;
    ++nonzero;
    t.check(ord_of_element(w) < std::min(ord_of_element(u), ord_of_element(v)),
            "ord([u,v]) < min(ord u, ord v)");
  }
  return {4, "ordering and ordinal degree", t.ok(),
          t.summary(std::to_string(pairs) + " key pairs; " + std::to_string(nonzero) +
                    " nonzero brackets of 500 random pairs")};
}

CriterionResult c05_exp_log(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x05);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = pick_rank(rng, 2, 4);
    const LieElem d = random_lie(rng, n, 4 - (n == 4), 2);
    t.run("log(exp(d)) = d", [&] { return log_map(exp_map(d)) == d; });
    const TriAut s = random_unipotent(rng, n, 4 - (n == 4), 2);
    t.run("exp(log(s)) = s", [&] { return exp_map(log_map(s)) == s; });
  }
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = pick_rank(rng, 2, 4);
    const TriAut s = random_unipotent(rng, n, 4, 2);
    t.run("[a1..an] = e^{an dn}...e^{a1 d1}", [&] {
      TriAut prod = TriAut::identity(n);
      for (std::size_t i = n; i >= 1; --i) {
        std::vector<Poly> c(n, Poly(n));
        c[i - 1] = s.a()[i - 1];
        prod = tri_compose(prod, exp_map(LieElem::from_coefficients(std::move(c))));
      }
      return prod == s;
    });
  }
  return {5, "exp/log bijection", t.ok(),
          t.summary("200 round trips each way; 50 elementary factorizations")};
}

CriterionResult c06_conjugation(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x06);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = pick_rank(rng, 2, 4);
    const TriAut s = random_triangular(rng, n, 3, 2);
    t.run("shape of conjugated d_i", [&] {
      for (std::size_t i = 1; i <= n; ++i) {
        const LieElem w = conjugate_derivation(s, LieElem::partial(n, i));
        for (std::size_t j = 1; j < i; ++j)
          if (!w.coefficient(j).is_zero()) return false;
        const Poly& lead = w.coefficient(i);
        if (!lead.is_constant() || lead.is_zero()) return false;
      }
      return true;
    });
    const LieElem u = random_lie(rng, n, 2, 2);
    const LieElem v = random_lie(rng, n, 2, 2);
    t.run("conjugation preserves brackets", [&] {
      return conjugate_derivation(s, bracket(u, v)) ==
             bracket(conjugate_derivation(s, u), conjugate_derivation(s, v));
    });
  }
  return {6, "conjugation by triangular automorphisms", t.ok(),
          t.summary("200 automorphisms: leading shape and homomorphism")};
}

CriterionResult c07_reconstruction(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x07);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = pick_rank(rng, 2, 4);
    const TriAut s = random_origin_fixing(rng, n, 3, 2);
    t.run("reconstruct", [&] {
      std::vector<LieElem> frames;
      for (std::size_t i = 1; i <= n; ++i)
        frames.push_back(conjugate_derivation(s, LieElem::partial(n, i)));
      return reconstruct_from_frames(frames) == s;
    });
  }
  t.run("worked example", [] {
    const std::vector<LieElem> frames{parse_lie("d1 - 2*x1*d2", 2), parse_lie("d2", 2)};
    return reconstruct_from_frames(frames) == parse_triaut("[0, x1^2]");
  });
  return {7, "reconstruction from frames", t.ok(),
          t.summary("100 random automorphisms fixing the origin; worked n = 2 example")};
}

CriterionResult c08_decomposition(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x08);
  const unsigned D = 8;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const GnElem g = random_gnelem(rng, n, GnForm::A, 2, 6, D);
    t.run("decompose round trip", [&] { return decompose(action_of(g), D) == g; });
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Rat> mu(n, Rat(0));
    mu[n - 1] = rng.nonzero_rational();
    t.run("shift of x_n", [&] {
      return decompose(conjugation_action(TriAut::shift(mu)), D) ==
             GnElem::identity(n, GnForm::A, D);
    });
  }
  return {8, "canonical decomposition", t.ok(),
          t.summary("100 Form A round trips at D = 8; sh_n decomposes to the identity")};
}

CriterionResult c09_multiplication(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x09);
  const unsigned D = 8;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 3 + static_cast<std::size_t>(k % 2);
    const GnElem g = random_gnelem(rng, n, GnForm::B, 2, 4, D);
    const GnElem h = random_gnelem(rng, n, GnForm::B, 2, 4, D);
    t.run("multiply vs compose-then-decompose", [&] {
      const GnElem oracle =
          convert_form(decompose(compose(action_of(g), action_of(h)), D), GnForm::B);
      return multiply_formula(g, h) == oracle;
    });
    t.run("inverse law", [&] {
      const GnElem gi = gn_inverse(g);
      for (const auto& u : generators(n, 4))
        if (act(gi, act(g, u)) != u) return false;
      return true;
    });
  }
  return {9, "multiplication formula", t.ok(),
          t.summary("100 pairs against compose-then-decompose, n = 3, 4; inverse law")};
}

CriterionResult c10_commutation(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x0a);
  const unsigned D = 8;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 3 + static_cast<std::size_t>(k % 2);
    const auto probes = generators(n, 6);
    const auto lambda = random_torus(rng, n);
    const auto lambda_inv = [&] {
      std::vector<Rat> v;
      for (const auto& x : lambda) v.push_back(1 / x);
      return v;
    }();
    const std::size_t i = pick_rank(rng, 2, n - 1);
    const OpSeries s = random_series(rng, i - 1, SeriesKind::E, 4, D);
    const OpSeries f = random_series(rng, n - 1, SeriesKind::F, 4, D);
    const OpSeries fp = random_series(rng, n - 1, SeriesKind::FPrime, 4, D);

    t.run("torus conjugate of e_i'", [&] {
      const AutoAction lhs =
          compose(torus_action(lambda),
                  compose(e_action(single_e(n, i, s), n), torus_action(lambda_inv)));
      return same_action(lhs, e_action(single_e(n, i, torus_conjugate_e(lambda, s)), n), probes);
    });
    t.run("torus conjugate of f", [&] {
      const AutoAction lhs =
          compose(torus_action(lambda), compose(f_action(f, n), torus_action(lambda_inv)));
      return same_action(lhs, f_action(torus_conjugate_f(lambda, f), n), probes);
    });
    t.run("torus conjugate of f'", [&] {
      const OpSeries c = torus_conjugate_f(lambda, fp);
      const AutoAction lhs =
          compose(torus_action(lambda), compose(f_action(fp, n), torus_action(lambda_inv)));
      return c.coeff(1) == 0 && same_action(lhs, f_action(c, n), probes);
    });

    const std::size_t sidx = pick_rank(rng, 1, n);
    const Poly a = random_poly(rng, n, sidx - 1, 3, 2);
    const TriAut tau = elementary(n, sidx, a);
    const AutoAction tau_act = conjugation_action(tau);
    const AutoAction tau_inv = conjugation_action(tri_invert(tau));
    const AutoAction e_act = e_action(single_e(n, i, s), n);
    const AutoAction e_inv = e_action(single_e(n, i, series_scale(s, -1)), n);
    const AutoAction f_act = f_action(f, n);
    const AutoAction f_inv = f_action(series_inverse(f), n);
    const OpSeries f_minus_one = OpSeries(n - 1, SeriesKind::E, D, [&] {
      auto c = f.coeffs();
      c.erase(0);
      return c;
    }());

    t.run("[e_i', e^{a d_s}]", [&] {
      const AutoAction lhs = compose(compose(e_act, tau_act), compose(e_inv, tau_inv));
      const AutoAction rhs = sidx == i ? conjugation_action(elementary(n, n, s.apply(a)))
                                       : identity_action(n);
      return same_action(lhs, rhs, probes);
    });
    t.run("[e^{a d_s}, f]", [&] {
      const AutoAction lhs = compose(compose(tau_act, f_act), compose(tau_inv, f_inv));
      const AutoAction rhs = sidx == n
                                 ? conjugation_action(elementary(n, n, -f_minus_one.apply(a)))
                                 : identity_action(n);
      return same_action(lhs, rhs, probes);
    });
    t.run("e_i' e^{a d_s} e_i'^{-1}", [&] {
      const AutoAction lhs = compose(e_act, compose(tau_act, e_inv));
      const AutoAction rhs =
          sidx == i ? compose(conjugation_action(elementary(n, n, s.apply(a))), tau_act) : tau_act;
      return same_action(lhs, rhs, probes);
    });
    t.run("f e^{a d_s} f^{-1}", [&] {
      const AutoAction lhs = compose(f_act, compose(tau_act, f_inv));
      const AutoAction rhs =
          sidx == n ? conjugation_action(elementary(n, n, f.apply(a))) : tau_act;
      return same_action(lhs, rhs, probes);
    });
  }

  t.run("[e_2'(d1), e^{x1^2 d2}] = e^{2 x1 d3}", [] {
    const std::size_t n = 3;
    const GnElem e(GnForm::B, {1, 1, 1}, TriAut::identity(n), {},
                   OpSeries::one(2, SeriesKind::FPrime, 8),
                   {OpSeries(1, SeriesKind::E, 8, {{1, Rat(1)}})});
    const GnElem tau(GnForm::B, {1, 1, 1}, parse_triaut("[0, x1^2, 0]"), {},
                     OpSeries::one(2, SeriesKind::FPrime, 8), {OpSeries::zero(1, 8)});
    const GnElem expected(GnForm::B, {1, 1, 1}, parse_triaut("[0, 0, 2*x1]"), {},
                          OpSeries::one(2, SeriesKind::FPrime, 8), {OpSeries::zero(1, 8)});
    return commutator(e, tau) == expected;
  });
  t.run("[e^{x1^2 d2}, 1 + d1^2] = e^{-2 d2}", [] {
    const std::size_t n = 2;
    const GnElem tau(GnForm::B, {1, 1}, parse_triaut("[0, x1^2]"), {},
                     OpSeries::one(1, SeriesKind::FPrime, 8), {});
    const GnElem f(GnForm::B, {1, 1}, TriAut::identity(n), {},
                   OpSeries(1, SeriesKind::FPrime, 8, {{0, Rat(1)}, {2, Rat(1)}}), {});
    const TriAut shift = parse_triaut("[0, -2]");
    const GnElem c = commutator(tau, f);
    return c == GnElem(GnForm::B, {1, 1}, normalize_mod_shn(shift), {},
                       OpSeries::one(1, SeriesKind::FPrime, 8), {}) &&
           same_action(action_of(c), conjugation_action(shift), generators(n, 6));
  });
  return {10, "commutation lemmas", t.ok(),
          t.summary("50 draws each of 7 identities on generators of exponent <= 6; "
                    "two concrete commutators")};
}

CriterionResult c11_adjoint(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x0b);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = pick_rank(rng, 2, 4);
    const LieElem u = random_lie(rng, n, 2, 2);
    const LieElem v = random_lie(rng, n, 3, 2);
    t.run("e^{ad u} v = e^u v e^{-u}",
          [&] { return exp_ad_apply(u, v) == conjugate_derivation(exp_map(u), v); });
    t.run("adjoint element lies in UAut_n", [&] {
      const GnElem g = convert_form(decompose(exp_ad_auto(u), 6), GnForm::B);
      const GnElem h = convert_form(decompose(conjugation_action(exp_map(u)), 6), GnForm::B);
      bool trivial = g.f().is_trivial();
      for (const auto& x : g.t()) trivial = trivial && x == 1;
      for (const auto& e : g.e()) trivial = trivial && e.is_trivial();
      return trivial && g == h;
    });
  }
  return {11, "adjoint group", t.ok(),
          t.summary("200 pairs: ad-exponential equals conjugation; decompositions have trivial "
                    "torus, f' and e' parts")};
}

CriterionResult c12_invariants(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x0c);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = pick_rank(rng, 2, 4);
    const GnElem g = random_gnelem(rng, n, GnForm::A, 2, 4, 8);
    const LieElem u = random_lie(rng, n, 3, 2);
    if (!u.is_zero())
      t.run("ord preserved", [&] { return ord_of_element(act(g, u)) == ord_of_element(u); });
    const auto keys = basis_keys(n, 3);
    const BasisKey& top = keys[static_cast<std::size_t>(rng.uniform(0, keys.size() - 1))];
    const OrdinalCNF lambda = ord_of_basis(top.alpha, top.index, n);
    LieElem w(n);
    for (const auto& key : keys)
      if (ord_of_basis(key.alpha, key.index, n) <= lambda && rng.chance(30))
        w.add_term(key, rng.nonzero_rational());
    t.run("I_lambda stable", [&] {
      return ideal_membership(w, lambda) && ideal_membership(act(g, w), lambda);
    });
  }
  return {12, "automorphism invariants", t.ok(),
          t.summary("200 triples: ordinal degree preserved, I_lambda characteristic")};
}

CriterionResult c13_cocycle(std::uint64_t seed) {
  Tally t;
  Rng rng(seed ^ 0x0d);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 3 + static_cast<std::size_t>(k % 2);
    std::vector<OpSeries> e;
    for (std::size_t i = 2; i < n; ++i) e.push_back(random_series(rng, i - 1, SeriesKind::E, 4, 8));
    auto c = [&](const LieElem& w) { return act_e(e, w) - w; };
    const LieElem u = random_lie_below(rng, n, 3, 2);
    const LieElem v = random_lie_below(rng, n, 3, 2);
    t.run("c([u,v]) = [c(u),v] + [u,c(v)]",
          [&] { return c(bracket(u, v)) == bracket(c(u), v) + bracket(u, c(v)); });
    t.run("c kills d_1..d_{n-1}", [&] {
      for (std::size_t i = 1; i < n; ++i)
        if (!c(LieElem::partial(n, i)).is_zero()) return false;
      return true;
    });
  }
  return {13, "cocycle law for e' - 1", t.ok(), t.summary("200 pairs in u_{n-1}, n = 3, 4")};
}

struct CorpusEntry {
  const char* kind;
  const char* text;
};

bool round_trips(const CorpusEntry& c) {
  const std::string kind = c.kind;
  auto check = [](const auto& parse, std::string_view text) {
    const auto v = parse(text);
    const std::string p = print(v);
    const auto w = parse(p);
    return w == v && print(w) == p;
  };
  if (kind == "poly") return check([](std::string_view s) { return parse_poly(s, 4); }, c.text);
  if (kind == "lie") return check([](std::string_view s) { return parse_lie(s, 4); }, c.text);
  if (kind == "triaut") return check([](std::string_view s) { return parse_triaut(s); }, c.text);
  if (kind == "ordinal") return check([](std::string_view s) { return parse_ordinal(s); }, c.text);
  if (kind == "series")
    return check([](std::string_view s) { return parse_series(s, 2, SeriesKind::E, 16); }, c.text);
  if (kind == "fseries")
    return check([](std::string_view s) { return parse_series(s, 1, SeriesKind::F, 16); }, c.text);
  if (kind == "rational") return check([](std::string_view s) { return parse_rational(s); }, c.text);
  throw InternalError("unknown corpus kind");
}

CriterionResult c14_dsl(std::uint64_t) {
  static const CorpusEntry corpus[] = {
      {"poly", "0"},
      {"poly", "x1"},
      {"poly", "-x1 + 1"},
      {"poly", "x1^2*x2 + 3*x1 - 7/2"},
      {"poly", "(x1 + 1)^3"},
      {"poly", "x2*x1*x1"},
      {"poly", "1/3*x3 - 2/6*x3"},
      {"poly", "  x1 *  x2 ^ 2  "},
      {"poly", "(x1 - x2)*(x1 + x2)"},
      {"poly", "-5"},
      {"poly", "x4^3 + x3^3 + x2^3 + x1^3"},
      {"poly", "2*(x1 + x2)^2 - 4*x1*x2"},
      {"poly", "100000000000000000000*x1"},
      {"poly", "-1/100*x1^4*x2^3*x3^2*x4"},
      {"lie", "d1"},
      {"lie", "0"},
      {"lie", "d1 + 2*x1^3*d2"},
      {"lie", "d2 + 3*x1*d2"},
      {"lie", "-1/2*x1*x2*d3 + d1"},
      {"lie", "x1*x2*x3*d4 - x3^2*d4"},
      {"lie", "(x1 + 1)^2*d2"},
      {"lie", "x1*d2 - x1*d2"},
      {"lie", "5*d4 + 4*d3 + 3*d2 + 2*d1"},
      {"lie", "x1^7*d2 + x2^7*d3"},
      {"lie", "- d3 - x1*d3"},
      {"lie", "2/4*x1*d3"},
      {"triaut", "[0, x1^2]"},
      {"triaut", "[0, 0]"},
      {"triaut", "[1, x1; 2, 3]"},
      {"triaut", "[0, x1^2, x1*x2 - 1]"},
      {"triaut", "[5, 0, 0, x3^2; 1, 1, -1, 1/2]"},
      {"triaut", "[0, x1, x2, x3]"},
      {"triaut", "[1/2; 3]"},
      {"triaut", "[0, 0, 0; 1, 1, 1]"},
      {"ordinal", "0"},
      {"ordinal", "1"},
      {"ordinal", "w"},
      {"ordinal", "w + 1"},
      {"ordinal", "w^2*3 + w*1 + 4"},
      {"ordinal", "w^3 + w^2 + w + 1"},
      {"ordinal", "w^2*5"},
      {"ordinal", "w*7 + 2"},
      {"series", "D"},
      {"series", "D + 1/2*D^2"},
      {"series", "0"},
      {"series", "-3*D^5 + D^2"},
      {"fseries", "1 + D^2"},
      {"fseries", "1 + D + 1/2*D^2 + 1/6*D^3"},
      {"rational", "-7/21"},
      {"rational", "42"},
  };
  // Each argument list makes the CLI parse exactly one malformed value.
  static const std::vector<std::vector<std::string>> negatives = {
      {"bracket", "d1 +", "d2"},
      {"bracket", "x2*d2", "d1"},
      {"bracket", "d1", "x1 d2"},
      {"bracket", "d1", "2*x1"},
      {"ord", "x1*d2 *"},
      {"ord", "d1 + (x1"},
      {"ord", "1/0*d2"},
      {"ord", "x1^999*d2"},
      {"ord", "d1 & d2"},
      {"ord", "x*d2"},
      {"exp", "d2*x1"},
      {"log", "[0, x2]"},
      {"log", "[0, x1; 1, 0]"},
      {"log", "[0, x1"},
      {"log", "0, x1]"},
      {"conjugate", "[0, x1; 1]", "d1"},
      {"ideal", "d1", "w + w^2"},
      {"ideal", "d1", "w^"},
      {"act", "{\"n\": 2, \"form\": ", "d1"},
      {"act", "{\"n\": 2, \"form\": \"C\", \"t\": [], \"tau\": {}, \"f\": {}}", "d1"},
  };
  Tally t;
  for (const auto& c : corpus)
    t.run(std::string(c.kind) + " \"" + c.text + "\"", [&] { return round_trips(c); });
  for (const auto& args : negatives) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    const std::string e = err.str();
    t.check(code == kExitParse && e.find(" at [") != std::string::npos && out.str().empty(),
            "malformed input accepted: " + args[1]);
  }
  return {14, "DSL round trips and rejections", t.ok(),
          t.summary(std::to_string(std::size(corpus)) + " round trips; " +
                    std::to_string(negatives.size()) + " rejections with exit 1 and a span")};
}

using Criterion = CriterionResult (*)(std::uint64_t);

}  // namespace

std::vector<CriterionResult> run_verify(const std::string& suite, std::uint64_t seed) {
  static const std::map<int, Criterion> all = {
      {1, c01_bracket},      {2, c02_derived_series}, {3, c03_center},
      {4, c04_ordering},     {5, c05_exp_log},        {6, c06_conjugation},
      {7, c07_reconstruction}, {8, c08_decomposition}, {9, c09_multiplication},
      {10, c10_commutation}, {11, c11_adjoint},       {12, c12_invariants},
      {13, c13_cocycle},     {14, c14_dsl},
  };
  static const std::map<std::string, std::vector<int>> suites = {
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}},
      {"bracket", {1, 2, 3, 4}},
      {"group", {5, 6, 7, 9, 10, 11, 12, 13}},
      {"decompose", {8}},
      {"dsl", {14}},
  };
  auto it = suites.find(suite);
  if (it == suites.end()) throw DomainError("unknown verification suite '" + suite + "'");
  std::vector<CriterionResult> out;
  for (int id : it->second) {
    try {
      out.push_back(all.at(id)(seed));
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, e.what()});
    }
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::string id = std::to_string(r.id);
  if (id.size() < 2) id = " " + id;
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + id + "  " + r.name + ": " + r.detail;
}

}  // namespace trilie
