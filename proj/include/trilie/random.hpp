#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "trilie/gn.hpp"

namespace trilie {

/// Seeded source for property checks. Draws come from std::mt19937_64 (whose
/// output sequence is fixed by the standard) reduced modulo the range, so a
/// seed reproduces the same values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform-ish integer in [lo, hi].
  long uniform(long lo, long hi);
  bool chance(unsigned percent) { return uniform(0, 99) < static_cast<long>(percent); }
  /// p/q with |p| <= span, 1 <= q <= den.
  Rat rational(long span = 5, long den = 3);
  Rat nonzero_rational(long span = 5, long den = 3);

 private:
  std::mt19937_64 gen_;
};

/// Sparse polynomial in x_1..x_k (embedded in n variables), at most
/// max_terms terms of total degree <= max_deg.
Poly random_poly(Rng& rng, std::size_t n, std::size_t k, unsigned max_deg, unsigned max_terms,
                 bool allow_constant = true);
LieElem random_lie(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms);
/// Element of u_{n-1} embedded in u_n: no d_n component.
LieElem random_lie_below(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms);
std::vector<Rat> random_torus(Rng& rng, std::size_t n);
TriAut random_unipotent(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms);
TriAut random_triangular(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms);
/// Element of T^n |x CT_n: every a_i vanishes at the origin.
TriAut random_origin_fixing(Rng& rng, std::size_t n, unsigned max_deg, unsigned max_terms);
/// Series with nonzero coefficients only in degrees 1..support (2..support for F').
OpSeries random_series(Rng& rng, std::size_t var, SeriesKind kind, unsigned support,
                       unsigned order);
GnElem random_gnelem(Rng& rng, std::size_t n, GnForm form, unsigned tau_deg, unsigned support,
                     unsigned order);

}  // namespace trilie
