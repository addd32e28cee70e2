#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "trilie/lie.hpp"
#include "trilie/poly.hpp"

namespace trilie {

/// Triangular automorphism x_i -> lambda_i x_i + a_i of P_n with a_i in P_{i-1}.
class TriAut {
 public:
  /// Throws DomainError unless a_i in P_{i-1} and every lambda_i is nonzero.
  TriAut(std::vector<Poly> a, std::vector<Rat> lambda);

  static TriAut identity(std::size_t n);
  static TriAut torus(std::vector<Rat> lambda);
  static TriAut unipotent(std::vector<Poly> a);
  /// x_i -> x_i + mu_i.
  static TriAut shift(const std::vector<Rat>& mu);

  std::size_t rank() const { return a_.size(); }
  const std::vector<Poly>& a() const { return a_; }
  const std::vector<Rat>& lambda() const { return lambda_; }
  /// lambda_i x_i + a_i for each i.
  std::vector<Poly> images() const;

  bool is_identity() const;
  bool is_unipotent() const;
  bool is_torus() const;
  /// Unipotent, every a_i a constant.
  bool is_shift() const;
  /// Unipotent with a_i(0) = 0 for all i.
  bool in_ct() const;
  /// Every a_i(0) = 0: the group T^n |x CT_n.
  bool fixes_origin() const;
  /// Unipotent with a_n(0) = 0: the canonical representatives modulo sh_n.
  bool in_uaut_n() const;

  friend bool operator==(const TriAut&, const TriAut&) = default;

 private:
  std::vector<Poly> a_;
  std::vector<Rat> lambda_;
};

Poly tri_apply(const TriAut& s, const Poly& p);
/// s o t: tri_apply(result, p) = tri_apply(s, tri_apply(t, p)).
TriAut tri_compose(const TriAut& s, const TriAut& t);
TriAut tri_invert(const TriAut& s);

/// s u s^{-1}.
LieElem conjugate_derivation(const TriAut& s, const LieElem& u);

TriAut exp_map(const LieElem& delta);
/// Throws DomainError on a non-unipotent argument.
LieElem log_map(const TriAut& s);

/// The unique s fixing the origin with s d_i s^{-1} = frames[i]. Throws
/// DomainError on a wrong leading shape or non-commuting frames.
TriAut reconstruct_from_frames(const std::vector<LieElem>& frames);

/// Drops the constant term of a_n.
TriAut normalize_mod_shn(const TriAut& s);

/// Writes a unipotent s as tau o shift(mu) with tau in CT_n.
std::pair<TriAut, std::vector<Rat>> split_ct_shift(const TriAut& s);

/// t_lambda o s o t_lambda^{-1}.
TriAut torus_conjugate(const std::vector<Rat>& lambda, const TriAut& s);

}  // namespace trilie
