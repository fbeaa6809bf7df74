#pragma once

// Exact coefficient arithmetic over Z, Z/p^mZ and composite Z/NZ.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mrees {

using Int = mpz_class;

struct PrimePowerFactor {
  Int prime;
  unsigned exponent = 1;
  Int modulus;  // prime^exponent
};

class RingSpec {
 public:
  enum class Kind { Integers, PrimePower, Composite };

  RingSpec() = default;  // Integers

  static RingSpec integers();
  static RingSpec prime_power(const Int& p, unsigned m);
  static RingSpec composite(std::vector<std::pair<Int, unsigned>> factors);
  // 0 selects Z; otherwise N is factored into Z/p^m or a composite ring.
  static RingSpec from_modulus(const Int& n);

  Kind kind() const noexcept { return kind_; }
  bool is_integers() const noexcept { return kind_ == Kind::Integers; }
  bool is_prime_power() const noexcept { return kind_ == Kind::PrimePower; }
  bool is_composite() const noexcept { return kind_ == Kind::Composite; }
  bool is_field() const noexcept { return is_prime_power() && factors_[0].exponent == 1; }

  // N, or 0 for Z.
  const Int& modulus() const noexcept { return modulus_; }
  // PrimePower only.
  const Int& prime() const;
  unsigned exponent() const;

  // Prime-power factors: one for PrimePower, all of them for Composite, none for Z.
  const std::vector<PrimePowerFactor>& factors() const noexcept { return factors_; }
  RingSpec component(std::size_t i) const;

  Int reduce(const Int& c) const;
  Int add(const Int& a, const Int& b) const { return reduce(a + b); }
  Int sub(const Int& a, const Int& b) const { return reduce(a - b); }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
  Int neg(const Int& a) const { return reduce(-a); }
  bool is_unit(const Int& c) const;
  // Representative in (-N/2, N/2]; identity over Z.
  Int symmetric(const Int& c) const;

  std::string describe() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Integers;
  Int modulus_ = 0;
  std::vector<PrimePowerFactor> factors_;
};

struct CanonicalForm {
  Int unit;
  unsigned val = 0;
};

struct Bezout {
  Int g;
  Int s;
  Int t;
};

bool is_probable_prime(const Int& p);
// Distinct positive primes dividing n (n != 0), ascending.
std::vector<Int> prime_factors(const Int& n);

// c = unit * p^val with p not dividing unit; zero maps to (1, m).
CanonicalForm canonical_form(const Int& c, const RingSpec& ring);
// p-adic valuation in Z/p^m, m for zero.
unsigned valuation(const Int& c, const RingSpec& ring);

bool divides(const Int& c, const Int& d, const RingSpec& ring);
// e with e*c = d; for PrimePower the canonical v*u^-1*p^(n2-n1).
Int quotient(const Int& d, const Int& c, const RingSpec& ring);

Bezout gcd_ext(const Int& a, const Int& b);
Int inverse_mod(const Int& a, const Int& n);

// Orthogonal idempotents e_i with e_i = 1 mod p_i^m_i and 0 mod the other factors.
std::vector<Int> crt_idempotents(const RingSpec& ring);

// Generator of the ideal (a) + (b): p^min(val) over Z/p^m, positive gcd over Z.
Int coeff_gcd(const Int& a, const Int& b, const RingSpec& ring);
// Generator of (a) cap (b): p^max(val) over Z/p^m, positive lcm over Z.
Int coeff_lcm(const Int& a, const Int& b, const RingSpec& ring);

}  // namespace mrees
