#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "trilie/gn.hpp"
#include "trilie/lie.hpp"
#include "trilie/ordinal.hpp"
#include "trilie/poly.hpp"
#include "trilie/series.hpp"
#include "trilie/triaut.hpp"

namespace trilie {

// Parsers throw ParseError. A rank argument of 0 means "infer from the text".

/// Largest x/d index occurring in the text, or 0.
std::size_t infer_rank(std::string_view text);

Rat parse_rational(std::string_view text);
Poly parse_poly(std::string_view text, std::size_t n = 0);
LieElem parse_lie(std::string_view text, std::size_t n = 0);
/// "[a1, ..., an ; l1, ..., ln]", or "[a1, ..., an]" for a unipotent map.
TriAut parse_triaut(std::string_view text, std::size_t n = 0);
/// "w^2*3 + w*1 + 4"
OrdinalCNF parse_ordinal(std::string_view text);
/// Polynomial in the symbol D, read as a series in d_var.
OpSeries parse_series(std::string_view text, std::size_t var, SeriesKind kind, unsigned order);
GnElem parse_gnelem_json(std::string_view text);

std::string print(const Rat& r);
std::string print(const Poly& p);
std::string print(const LieElem& u);
std::string print(const TriAut& s);
std::string print(const OrdinalCNF& o);
std::string print(const OpSeries& s);
std::string print_gnelem_json(const GnElem& g, int indent = -1);

}  // namespace trilie
