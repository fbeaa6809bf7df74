#include "mrees/coeff.hpp"

#include <algorithm>
#include <map>

#include "mrees/error.hpp"

namespace mrees {

namespace {

Int ipow(const Int& base, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Splits n = q^e with e maximal; returns (q, e).
std::pair<Int, unsigned> perfect_power_root(const Int& n) {
  for (unsigned e = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)); e >= 2; --e) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) return {root, e};
  }
  return {n, 1};
}

constexpr unsigned long kTrialLimit = 1ul << 20;

}  // namespace

bool is_probable_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

namespace {

// Trial division up to kTrialLimit; the cofactor must be a prime power.
std::map<Int, unsigned> factor(const Int& n) {
  std::map<Int, unsigned> found;
  Int rest = abs(n);
  for (unsigned long d = 2; d < kTrialLimit && Int(d) * d <= rest; ++d) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      rest /= d;
      ++found[Int(d)];
    }
  }
  if (rest > 1) {
    auto [q, e] = perfect_power_root(rest);
    if (!is_probable_prime(q)) throw InputError("cannot factor " + n.get_str());
    found[q] += e;
  }
  return found;
}

}  // namespace

std::vector<Int> prime_factors(const Int& n) {
  if (n == 0) throw InputError("prime factors of zero");
  std::vector<Int> out;
  for (const auto& [p, e] : factor(n)) out.push_back(p);
  return out;
}

RingSpec RingSpec::integers() { return RingSpec{}; }

RingSpec RingSpec::prime_power(const Int& p, unsigned m) {
  if (m < 1) throw InputError("prime-power exponent must be >= 1");
  if (!is_probable_prime(p)) throw InputError("not a prime: " + p.get_str());
  RingSpec r;
  r.kind_ = Kind::PrimePower;
  r.modulus_ = ipow(p, m);
  r.factors_.push_back({p, m, r.modulus_});
  return r;
}

RingSpec RingSpec::composite(std::vector<std::pair<Int, unsigned>> factors) {
  if (factors.size() < 2) throw InputError("composite ring needs at least two prime-power factors");
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RingSpec r;
  r.kind_ = Kind::Composite;
  r.modulus_ = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, m] = factors[i];
    if (m < 1) throw InputError("prime-power exponent must be >= 1");
    if (!is_probable_prime(p)) throw InputError("not a prime: " + p.get_str());
    if (i > 0 && factors[i - 1].first == p) throw InputError("repeated prime " + p.get_str());
    Int q = ipow(p, m);
    r.factors_.push_back({p, m, q});
    r.modulus_ *= q;
  }
  return r;
}

RingSpec RingSpec::from_modulus(const Int& n) {
  if (n == 0) return integers();
  if (n < 0) throw InputError("modulus must be non-negative");
  if (n == 1) throw InputError("modulus 1 gives the zero ring");

  std::map<Int, unsigned> found = factor(n);
  if (found.size() == 1) return prime_power(found.begin()->first, found.begin()->second);
  std::vector<std::pair<Int, unsigned>> fs(found.begin(), found.end());
  return composite(std::move(fs));
}

const Int& RingSpec::prime() const {
  if (!is_prime_power()) throw InputError("ring " + describe() + " is not a prime power");
  return factors_[0].prime;
}

unsigned RingSpec::exponent() const {
  if (!is_prime_power()) throw InputError("ring " + describe() + " is not a prime power");
  return factors_[0].exponent;
}

RingSpec RingSpec::component(std::size_t i) const {
  if (i >= factors_.size()) throw InputError("component index out of range");
  return prime_power(factors_[i].prime, factors_[i].exponent);
}

Int RingSpec::reduce(const Int& c) const {
  if (kind_ == Kind::Integers) return c;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

bool RingSpec::is_unit(const Int& c) const {
  if (kind_ == Kind::Integers) return c == 1 || c == -1;
  Int g;
  Int r = reduce(c);
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
  return g == 1;
}

Int RingSpec::symmetric(const Int& c) const {
  if (kind_ == Kind::Integers) return c;
  Int r = reduce(c);
  if (2 * r > modulus_) r -= modulus_;
  return r;
}

std::string RingSpec::describe() const {
  if (kind_ == Kind::Integers) return "ZZ";
  return "ZZ/" + modulus_.get_str();
}

CanonicalForm canonical_form(const Int& c, const RingSpec& ring) {
  if (!ring.is_prime_power()) throw InputError("canonical_form needs a prime-power ring");
  const Int& p = ring.prime();
  const unsigned m = ring.exponent();
  Int r = ring.reduce(c);
  if (r == 0) return {Int(1), m};
  unsigned v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
    r /= p;
    ++v;
  }
  return {ring.reduce(r), v};
}

unsigned valuation(const Int& c, const RingSpec& ring) { return canonical_form(c, ring).val; }

bool divides(const Int& c, const Int& d, const RingSpec& ring) {
  Int cr = ring.reduce(c);
  if (cr == 0) throw InputError("divisibility by zero");
  switch (ring.kind()) {
    case RingSpec::Kind::Integers:
      return mpz_divisible_p(d.get_mpz_t(), cr.get_mpz_t()) != 0;
    case RingSpec::Kind::PrimePower:
      return valuation(cr, ring) <= valuation(d, ring);
    case RingSpec::Kind::Composite: {
      Int g;
      mpz_gcd(g.get_mpz_t(), cr.get_mpz_t(), ring.modulus().get_mpz_t());
      return mpz_divisible_p(ring.reduce(d).get_mpz_t(), g.get_mpz_t()) != 0;
    }
  }
  return false;
}

Int quotient(const Int& d, const Int& c, const RingSpec& ring) {
  if (!divides(c, d, ring)) throw InputError(c.get_str() + " does not divide " + d.get_str());
  switch (ring.kind()) {
    case RingSpec::Kind::Integers:
      return Int(d / c);
    case RingSpec::Kind::PrimePower: {
      auto dc = canonical_form(d, ring);
      if (ring.reduce(d) == 0) return 0;
      auto cc = canonical_form(c, ring);
      Int pw = ipow(ring.prime(), dc.val - cc.val);
      return ring.reduce(dc.unit * inverse_mod(cc.unit, ring.modulus()) * pw);
    }
    case RingSpec::Kind::Composite: {
      Int cr = ring.reduce(c);
      Int g;
      mpz_gcd(g.get_mpz_t(), cr.get_mpz_t(), ring.modulus().get_mpz_t());
      Int n = ring.modulus() / g;
      Int dd = ring.reduce(d) / g;
      Int cc = cr / g;
      Int r = dd * inverse_mod(cc, n);
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    }
  }
  return 0;
}

Bezout gcd_ext(const Int& a, const Int& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int inverse_mod(const Int& a, const Int& n) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
    throw InputError(a.get_str() + " is not invertible modulo " + n.get_str());
  return r;
}

std::vector<Int> crt_idempotents(const RingSpec& ring) {
  if (!ring.is_composite()) throw InputError("crt_idempotents needs a composite ring");
  std::vector<Int> es;
  for (const auto& f : ring.factors()) {
    Int rest = ring.modulus() / f.modulus;
    // rest * inv(rest mod q) is 1 mod q and 0 mod every other factor.
    es.push_back(ring.reduce(rest * inverse_mod(rest, f.modulus)));
  }
  return es;
}

Int coeff_gcd(const Int& a, const Int& b, const RingSpec& ring) {
  if (ring.is_prime_power()) {
    unsigned v = std::min(valuation(a, ring), valuation(b, ring));
    return ring.reduce(ipow(ring.prime(), v));
  }
  if (!ring.is_integers()) throw InputError("coeff_gcd needs Z or a prime-power ring");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int coeff_lcm(const Int& a, const Int& b, const RingSpec& ring) {
  if (ring.is_prime_power()) {
    unsigned v = std::max(valuation(a, ring), valuation(b, ring));
    return ring.reduce(ipow(ring.prime(), v));
  }
  if (!ring.is_integers()) throw InputError("coeff_lcm needs Z or a prime-power ring");
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace mrees
