#pragma once

// Exact scalar fields: the rationals (GMP) and prime fields F_p.
// Algorithms are templated on a field object that owns any runtime
// parameters (the modulus) and supplies the arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace spinor::iso {

bool is_prime(std::uint64_t p);

class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  std::string format(const Element& a) const { return a.get_str(); }

  bool operator==(const Rationals&) const = default;
};

class PrimeField {
 public:
  using Element = std::uint32_t;

  // Throws ArgumentError unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<Element>(((v % m) + m) % m);
  }

  Element add(Element a, Element b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return std::to_string(p_); }
  std::string format(Element a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace spinor::iso
