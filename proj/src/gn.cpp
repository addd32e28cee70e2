#include "trilie/gn.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

std::vector<Rat> inverted(const std::vector<Rat>& v) {
  std::vector<Rat> out;
  for (const auto& x : v) out.push_back(1 / x);
  return out;
}

std::vector<Rat> ones(std::size_t n) { return std::vector<Rat>(n, Rat(1)); }

SeriesKind f_kind(GnForm form) { return form == GnForm::A ? SeriesKind::F : SeriesKind::FPrime; }

// x_i -> x_i + mu_i on the listed leading coordinates, zero elsewhere.
TriAut leading_shift(std::size_t n, std::vector<Rat> mu) {
  mu.resize(n, Rat(0));
  return TriAut::shift(mu);
}

LieElem replace_last(const LieElem& u, Poly pn) {
  std::vector<Poly> c = u.coefficients();
  c.back() = std::move(pn);
  return LieElem::from_coefficients(std::move(c));
}

Poly divided_power(std::size_t n, std::size_t var, unsigned j) {
  return Poly::variable(n, var).pow(j) * inverse_factorial(j);
}

// Returns c when w = c d_n, and throws DomainError otherwise.
Rat constant_dn(const LieElem& w, const char* what) {
  for (std::size_t j = 1; j < w.rank(); ++j)
    if (!w.coefficient(j).is_zero())
      throw DomainError(std::string(what) + " has components outside P_{n-1} d_n");
  const Poly& p = w.coefficient(w.rank());
  if (!p.is_constant())
    throw DomainError(std::string(what) + " is not a constant multiple of d_n");
  return p.constant_term();
}

void validate_action(const AutoAction& A) {
  const std::size_t n = A.rank;
  const auto gens = generators(n, 2);
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 20; ++trial) {
    const LieElem& a = gens[rng() % gens.size()];
    const LieElem& b = gens[rng() % gens.size()];
    Rat c(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    c.canonicalize();
    const LieElem Aa = A(a);
    const LieElem Ab = A(b);
    if (Aa.rank() != n || Ab.rank() != n) throw DomainError("action changes the rank");
    if (A(a * c + b) != Aa * c + Ab) throw DomainError("action is not linear");
    if (A(bracket(a, b)) != bracket(Aa, Ab)) throw DomainError("action does not preserve brackets");
  }
}

}  // namespace

GnElem::GnElem(GnForm form, std::vector<Rat> t, TriAut tau, std::vector<Rat> s, OpSeries f,
               std::vector<OpSeries> e)
    : form_(form),
      t_(std::move(t)),
      tau_(std::move(tau)),
      s_(std::move(s)),
      f_(std::move(f)),
      e_(std::move(e)) {
  const std::size_t n = t_.size();
  if (n < 2 || n > kMaxVars) throw DomainError("G_n needs 2 <= n <= " + std::to_string(kMaxVars));
  for (const auto& x : t_)
    if (x == 0) throw DomainError("torus entries must be nonzero");
  if (tau_.rank() != n) throw DomainError("tau has the wrong rank");
  if (form_ == GnForm::A) {
    if (!tau_.in_ct()) throw DomainError("Form A needs tau in CT_n");
    if (s_.size() != n - 2) throw DomainError("Form A needs n-2 shifts");
  } else {
    if (!tau_.in_uaut_n()) throw DomainError("Form B needs tau unipotent with a_n(0) = 0");
    if (!s_.empty()) throw DomainError("Form B carries no shifts");
  }
  if (f_.var() != n - 1) throw DomainError("f must be a series in d_{n-1}");
  if (f_.kind() != f_kind(form_)) throw DomainError("f has the wrong constant-term type");
  if (e_.size() != n - 2) throw DomainError("e' needs n-2 series");
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (e_[k].var() != k + 1) throw DomainError("s_i must be a series in d_{i-1}");
    if (e_[k].kind() != SeriesKind::E) throw DomainError("s_i must have no constant term");
  }
}

GnElem GnElem::identity(std::size_t n, GnForm form, unsigned order) {
  if (n < 2) throw DomainError("G_n needs n >= 2");
  std::vector<OpSeries> e;
  for (std::size_t i = 2; i < n; ++i) e.push_back(OpSeries::zero(i - 1, order));
  return GnElem(form, ones(n), TriAut::identity(n),
                std::vector<Rat>(form == GnForm::A ? n - 2 : 0, Rat(0)),
                OpSeries::one(n - 1, f_kind(form), order), std::move(e));
}

bool GnElem::is_identity() const {
  return std::all_of(t_.begin(), t_.end(), [](const Rat& x) { return x == 1; }) &&
         tau_.is_identity() &&
         std::all_of(s_.begin(), s_.end(), [](const Rat& x) { return x == 0; }) &&
         f_.is_trivial() &&
         std::all_of(e_.begin(), e_.end(), [](const OpSeries& x) { return x.is_trivial(); });
}

AutoAction compose(const AutoAction& a, const AutoAction& b) {
  if (a.rank != b.rank) throw DomainError("cannot compose actions of different rank");
  return {a.rank, [a, b](const LieElem& u) { return a(b(u)); }};
}

AutoAction action_of(const GnElem& g) {
  return {g.rank(), [g](const LieElem& u) { return act(g, u); }};
}

AutoAction conjugation_action(const TriAut& s) {
  return {s.rank(), [s](const LieElem& u) { return conjugate_derivation(s, u); }};
}

AutoAction exp_ad_auto(const LieElem& u) {
  return {u.rank(), [u](const LieElem& v) { return exp_ad_apply(u, v); }};
}

LieElem act_e(const std::vector<OpSeries>& e, const LieElem& u) {
  if (e.empty()) return u;
  Poly pn = u.coefficient(u.rank());
  for (std::size_t k = 0; k < e.size(); ++k) pn += e[k].apply(u.coefficient(k + 2));
  return replace_last(u, std::move(pn));
}

LieElem act_f(const OpSeries& f, const LieElem& u) {
  return replace_last(u, f.apply(u.coefficient(u.rank())));
}

LieElem act(const GnElem& g, const LieElem& u) {
  if (u.rank() != g.rank()) throw DomainError("rank mismatch between group element and algebra");
  const std::size_t n = g.rank();
  if (g.form() == GnForm::A) {
    LieElem v = act_f(g.f(), act_e(g.e(), u));
    v = conjugate_derivation(leading_shift(n, g.s()), v);
    v = conjugate_derivation(g.tau(), v);
    return torus_act(g.t(), v);
  }
  LieElem v = act_e(g.e(), act_f(g.f(), u));
  v = torus_act(g.t(), v);
  return conjugate_derivation(g.tau(), v);
}

GnElem decompose(const AutoAction& A, unsigned D) {
  const std::size_t n = A.rank;
  if (n < 2) throw DomainError("decomposition needs n >= 2");
  if (D < 1) throw DomainError("series order must be at least 1");
  validate_action(A);

  std::vector<Rat> lambda;
  std::vector<LieElem> images;
  for (std::size_t i = 1; i <= n; ++i) {
    LieElem w = A(LieElem::partial(n, i));
    for (std::size_t j = 1; j < i; ++j)
      if (!w.coefficient(j).is_zero())
        throw DomainError("image of d" + std::to_string(i) + " has a d" + std::to_string(j) +
                          " component");
    const Poly& lead = w.coefficient(i);
    if (lead.is_zero() || !lead.is_constant())
      throw DomainError("image of d" + std::to_string(i) + " does not lead with a multiple of d" +
                        std::to_string(i));
    lambda.push_back(1 / lead.constant_term());
    images.push_back(std::move(w));
  }
  const std::vector<Rat> lambda_inv = inverted(lambda);

  std::vector<LieElem> frames;
  for (const auto& w : images) frames.push_back(torus_act(lambda_inv, w));
  const TriAut tau = reconstruct_from_frames(frames);
  if (!tau.in_ct()) throw DomainError("reconstructed tau is not in CT_n");
  const TriAut tau_inv = tri_invert(tau);

  // (t tau)^{-1} A
  auto peel = [&](const LieElem& u) {
    return conjugate_derivation(tau_inv, torus_act(lambda_inv, A(u)));
  };

  std::map<unsigned, Rat> fc{{0, Rat(1)}};
  for (unsigned i = 1; i <= D; ++i) {
    const LieElem u = LieElem::from_coefficients([&] {
      std::vector<Poly> c(n, Poly(n));
      c.back() = divided_power(n, n - 1, i);
      return c;
    }());
    fc.emplace(i, constant_dn(phi_ad_series(peel(u), n - 1), "f coefficient"));
  }
  const OpSeries f(n - 1, SeriesKind::F, D, std::move(fc));
  const OpSeries f_inv = series_inverse(f);

  std::vector<Rat> mu;
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    BasisKey key{std::vector<unsigned>(i, 0), i + 1};
    key.alpha[i - 1] = 1;
    const LieElem w = act_f(f_inv, peel(LieElem::basis(n, key)));
    const Poly& c = w.coefficient(i + 1);
    const Rat m = c.constant_term();
    if (c != Poly::variable(n, i) + Poly::constant(n, m))
      throw DomainError("image of x" + std::to_string(i) + "*d" + std::to_string(i + 1) +
                        " has an unexpected d" + std::to_string(i + 1) + " coefficient");
    mu.push_back(m);
  }
  const TriAut s_inv = leading_shift(n, [&] {
    std::vector<Rat> neg;
    for (const auto& m : mu) neg.push_back(-m);
    return neg;
  }());

  std::vector<OpSeries> e;
  for (std::size_t i = 2; i < n; ++i) {
    std::map<unsigned, Rat> nu;
    for (unsigned j = 1; j <= D; ++j) {
      std::vector<Poly> c(n, Poly(n));
      c[i - 1] = divided_power(n, i - 1, j);
      const LieElem v = LieElem::from_coefficients(std::move(c));
      const LieElem w = act_f(f_inv, conjugate_derivation(s_inv, peel(v))) - v;
      nu.emplace(j, constant_dn(phi_ad_series(w, i - 1), "e' coefficient"));
    }
    e.emplace_back(i - 1, SeriesKind::E, D, std::move(nu));
  }

  return GnElem(GnForm::A, std::move(lambda), tau, std::move(mu), f, std::move(e));
}

GnElem convert_form(const GnElem& g, GnForm target) {
  if (g.form() == target) return g;
  const std::size_t n = g.rank();
  if (target == GnForm::B) {
    const auto [shift, fprime] = series_factor_shift(g.f());
    std::vector<Rat> mu = g.s();
    mu.push_back(shift);
    const TriAut u = tri_compose(g.tau(), leading_shift(n, mu));
    const TriAut tau_b = normalize_mod_shn(torus_conjugate(g.t(), u));
    return GnElem(GnForm::B, g.t(), tau_b, {}, fprime, g.e());
  }
  const TriAut u = torus_conjugate(inverted(g.t()), g.tau());
  auto [tau_ct, mu] = split_ct_shift(u);
  const Rat shift = mu[n - 2];
  mu.resize(n - 2);
  OpSeries f = series_product(exp_shift_series(n - 1, shift, g.f().order()), g.f());
  return GnElem(GnForm::A, g.t(), tau_ct, std::move(mu), f.with_kind(SeriesKind::F), g.e());
}

OpSeries torus_conjugate_e(const std::vector<Rat>& lambda, const OpSeries& s) {
  const std::size_t n = lambda.size();
  const std::size_t i = s.var() + 1;
  if (i < 2 || i >= n) throw DomainError("e' series index out of range");
  return series_scale(series_rescale(s, 1 / lambda[i - 2]), lambda[i - 1] / lambda[n - 1]);
}

OpSeries torus_conjugate_f(const std::vector<Rat>& lambda, const OpSeries& f) {
  const std::size_t n = lambda.size();
  if (f.var() != n - 1) throw DomainError("f must be a series in d_{n-1}");
  return series_rescale(f, 1 / lambda[n - 2]);
}

GnElem multiply_formula(const GnElem& g, const GnElem& h) {
  if (g.form() != GnForm::B || h.form() != GnForm::B)
    throw DomainError("the multiplication formula takes Form B operands");
  if (g.rank() != h.rank()) throw DomainError("rank mismatch");
  const std::size_t n = g.rank();
  const auto& b = h.tau().a();

  Poly c = g.f().apply(b[n - 1]) - b[n - 1];
  for (std::size_t k = 0; k < g.e().size(); ++k) c += g.e()[k].apply(b[k + 1]);
  std::vector<Poly> ec(n, Poly(n));
  ec[n - 1] = std::move(c);

  TriAut tau = tri_compose(g.tau(), torus_conjugate(g.t(), TriAut::unipotent(std::move(ec))));
  tau = normalize_mod_shn(tri_compose(tau, torus_conjugate(g.t(), h.tau())));

  std::vector<Rat> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(g.t()[i] * h.t()[i]);

  const std::vector<Rat> back = inverted(h.t());
  std::vector<OpSeries> e;
  for (std::size_t k = 0; k < g.e().size(); ++k)
    e.push_back(series_sum(torus_conjugate_e(back, g.e()[k]), h.e()[k]));
  const OpSeries f = series_product(torus_conjugate_f(back, g.f()), h.f());

  return GnElem(GnForm::B, std::move(t), std::move(tau), {}, f, std::move(e));
}

GnElem gn_inverse(const GnElem& g) {
  if (g.form() == GnForm::A) return convert_form(gn_inverse(convert_form(g, GnForm::B)), GnForm::A);
  const std::size_t n = g.rank();
  std::vector<OpSeries> e;
  for (const auto& s : g.e()) e.push_back(torus_conjugate_e(g.t(), series_scale(s, -1)));
  const OpSeries f = torus_conjugate_f(g.t(), series_inverse(g.f()));
  const GnElem front(GnForm::B, inverted(g.t()), TriAut::identity(n), {}, f, std::move(e));

  const unsigned order = g.f().order();
  std::vector<OpSeries> e0;
  for (std::size_t i = 2; i < n; ++i) e0.push_back(OpSeries::zero(i - 1, g.e()[i - 2].order()));
  const GnElem back(GnForm::B, ones(n), normalize_mod_shn(tri_invert(g.tau())), {},
                    OpSeries::one(n - 1, SeriesKind::FPrime, order), std::move(e0));
  return multiply_formula(front, back);
}

GnElem commutator(const GnElem& g, const GnElem& h) {
  const GnElem gb = convert_form(g, GnForm::B);
  const GnElem hb = convert_form(h, GnForm::B);
  return multiply_formula(multiply_formula(gb, hb),
                          multiply_formula(gn_inverse(gb), gn_inverse(hb)));
}

}  // namespace trilie
