#include "spinor/field.hpp"

#include "spinor/error.hpp"

namespace spinor::iso {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Rationals::Element Rationals::inv(const Element& a) const {
  if (sgn(a) == 0) throw ArgumentError("inverse of zero");
  return Element(1) / a;
}

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw ArgumentError("field size " + std::to_string(p) + " is not a supported prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw ArgumentError("inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Element>(result);
}

}  // namespace spinor::iso
