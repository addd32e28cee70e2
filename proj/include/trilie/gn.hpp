#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "trilie/lie.hpp"
#include "trilie/series.hpp"
#include "trilie/triaut.hpp"

namespace trilie {

inline constexpr unsigned kDefaultSeriesOrder = 16;

enum class GnForm { A, B };

/// Element of G_n = Aut(u_n) in canonical coordinates.
///   Form A: t * tau * s * f * e'   (tau in CT_n, s in Sh_{n-2}, f in F_n)
///   Form B: tau * t * e' * f'      (tau unipotent with a_n(0) = 0, f' in F_n')
/// Factors act right to left. e()[k] is the series s_{k+2} in d_{k+1}.
class GnElem {
 public:
  GnElem(GnForm form, std::vector<Rat> t, TriAut tau, std::vector<Rat> s, OpSeries f,
         std::vector<OpSeries> e);

  static GnElem identity(std::size_t n, GnForm form, unsigned order = kDefaultSeriesOrder);

  std::size_t rank() const { return t_.size(); }
  GnForm form() const { return form_; }
  const std::vector<Rat>& t() const { return t_; }
  const TriAut& tau() const { return tau_; }
  const std::vector<Rat>& s() const { return s_; }
  const OpSeries& f() const { return f_; }
  const std::vector<OpSeries>& e() const { return e_; }

  bool is_identity() const;

  friend bool operator==(const GnElem&, const GnElem&) = default;

 private:
  GnForm form_;
  std::vector<Rat> t_;
  TriAut tau_;
  std::vector<Rat> s_;
  OpSeries f_;
  std::vector<OpSeries> e_;
};

/// An automorphism of u_n known only through its values.
struct AutoAction {
  std::size_t rank = 0;
  std::function<LieElem(const LieElem&)> apply;

  LieElem operator()(const LieElem& u) const { return apply(u); }
};

/// a o b
AutoAction compose(const AutoAction& a, const AutoAction& b);
AutoAction action_of(const GnElem& g);
AutoAction conjugation_action(const TriAut& s);
/// v -> e^{ad u}(v)
AutoAction exp_ad_auto(const LieElem& u);

LieElem act(const GnElem& g, const LieElem& u);

/// Factor actions on their own.
LieElem act_e(const std::vector<OpSeries>& e, const LieElem& u);
LieElem act_f(const OpSeries& f, const LieElem& u);

/// Recovers the Form A coordinates of A with series known to order D. Throws
/// DomainError when A is visibly not an automorphism of u_n.
GnElem decompose(const AutoAction& A, unsigned D);

GnElem convert_form(const GnElem& g, GnForm target);

/// g * h for two Form B elements.
GnElem multiply_formula(const GnElem& g, const GnElem& h);
/// Inverse in the form of g.
GnElem gn_inverse(const GnElem& g);
/// g h g^{-1} h^{-1}, returned in Form B.
GnElem commutator(const GnElem& g, const GnElem& h);

/// t_lambda e_i'(s) t_lambda^{-1} = e_i'(s~); returns s~ for s a series in d_{i-1}.
OpSeries torus_conjugate_e(const std::vector<Rat>& lambda, const OpSeries& s);
/// t_lambda f t_lambda^{-1} for f a series in d_{n-1}.
OpSeries torus_conjugate_f(const std::vector<Rat>& lambda, const OpSeries& f);

}  // namespace trilie
