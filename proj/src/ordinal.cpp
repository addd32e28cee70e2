#include "trilie/ordinal.hpp"

#include <limits>

#include "trilie/errors.hpp"

namespace trilie {

OrdinalCNF OrdinalCNF::finite(std::uint64_t c) { return monomial(0, c); }

OrdinalCNF OrdinalCNF::monomial(unsigned k, std::uint64_t c) {
  OrdinalCNF o;
  if (c != 0) o.coeffs_[k] = c;
  return o;
}

std::uint64_t OrdinalCNF::coefficient(unsigned k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? 0 : it->second;
}

void OrdinalCNF::add_term(unsigned k, std::uint64_t c) {
  if (c == 0) return;
  if (!coeffs_.empty() && coeffs_.rbegin()->first < k)
    throw InternalError("ordinal concatenation out of order");
  auto& slot = coeffs_[k];
  if (slot > std::numeric_limits<std::uint64_t>::max() - c)
    throw DomainError("ordinal coefficient overflow");
  slot += c;
}

std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b) {
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  for (; ia != a.coeffs_.end() && ib != b.coeffs_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first <=> ib->first;
    if (ia->second != ib->second) return ia->second <=> ib->second;
  }
  if (ia != a.coeffs_.end()) return std::strong_ordering::greater;
  if (ib != b.coeffs_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::strong_ordering ord_compare(const OrdinalCNF& a, const OrdinalCNF& b) { return a <=> b; }

OrdinalCNF ord_of_basis(const std::vector<unsigned>& alpha, std::size_t i, std::size_t n) {
  if (n < 1 || i < 1 || i > n)
    throw DomainError("basis index " + std::to_string(i) + " out of range for rank " +
                      std::to_string(n));
  if (alpha.size() != i - 1)
    throw DomainError("exponent vector of d" + std::to_string(i) + " must have length " +
                      std::to_string(i - 1));
  OrdinalCNF o;
  // Every basis element with a smaller derivation index i' > i sits below.
  for (std::size_t k = n - 1; k >= i; --k) o.add_term(static_cast<unsigned>(k), 1);
  for (std::size_t m = i - 1; m >= 1; --m) o.add_term(static_cast<unsigned>(m - 1), alpha[m - 1]);
  o.add_term(0, 1);
  return o;
}

OrdinalCNF ord_of_algebra(std::size_t n) { return ord_of_basis({}, 1, n); }

std::string to_string(const OrdinalCNF& o) {
  if (o.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : o.coefficients()) {
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
    } else if (k == 1) {
      out += "w*" + std::to_string(c);
    } else {
      out += "w^" + std::to_string(k) + "*" + std::to_string(c);
    }
  }
  return out;
}

}  // namespace trilie
