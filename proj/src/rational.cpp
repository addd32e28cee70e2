#include "trilie/rational.hpp"

#include "trilie/errors.hpp"

namespace trilie {

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat inverse_factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rat(mpz_class(1), f);
}

Rat rat_pow(const Rat& r, long k) {
  if (k < 0) {
    if (r == 0) throw DomainError("zero raised to a negative power");
    return rat_pow(Rat(1) / r, -k);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(k));
  return Rat(num, den);
}

}  // namespace trilie
