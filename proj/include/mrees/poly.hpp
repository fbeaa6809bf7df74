#pragma once

// Sparse multivariate polynomials over a RingSpec.
//
// Variables are stored in a fixed sequence; position 0 is the largest
// variable and terms are kept in descending lexicographic order on that
// sequence. Rees problems lay variables out as y | T-block | x-block.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mrees/coeff.hpp"

namespace mrees {

enum class VarKind { Y, T, X };

struct Variable {
  std::string name;
  VarKind kind = VarKind::X;
  // Only meaningful for T-variables: T_{k,j} with generator index k, Rees index j.
  unsigned k = 0;
  unsigned j = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
};

std::string t_variable_name(unsigned k, unsigned j);
// Recognizes y and T_<k>_<j>; everything else is an x-variable.
Variable classify_variable(std::string_view name);

class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<Variable> vars);
  static VariableSet from_names(const std::vector<std::string>& names);

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const noexcept { return vars_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;
  bool has_y() const;
  std::vector<std::string> names() const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<Variable> vars_;
};

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  bool is_one() const;
  std::uint64_t degree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(*this, other) in reverse: other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  // Lexicographic on the variable sequence.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

struct PolyRing {
  RingSpec coeffs;
  VariableSet vars;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.coeffs == b.coeffs && a.vars == b.vars;
  }
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(RingSpec coeffs, VariableSet vars);

struct Term {
  Monomial mono;
  Int coeff;
};

class Polynomial {
 public:
  explicit Polynomial(PolyRingPtr ring);
  // Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  static Polynomial constant(PolyRingPtr ring, const Int& c);
  static Polynomial variable(PolyRingPtr ring, std::string_view name);
  static Polynomial monomial(PolyRingPtr ring, const Int& c, Monomial m);

  const PolyRingPtr& ring_ptr() const noexcept { return ring_; }
  const PolyRing& ring() const noexcept { return *ring_; }
  const RingSpec& coeffs() const noexcept { return ring_->coeffs; }
  const VariableSet& vars() const noexcept { return ring_->vars; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  // Greatest term under full lex on the variable sequence.
  const Term& leading_term() const;
  bool is_term() const noexcept { return terms_.size() == 1; }
  bool is_constant() const;
  bool uses_variable(std::size_t index) const;
  std::uint64_t total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);

  Polynomial scaled(const Int& c) const;
  Polynomial mul_term(const Int& c, const Monomial& m) const;
  // *this -= c * m * g
  void sub_mul_term(const Int& c, const Monomial& m, const Polynomial& g);
  // Removes and returns the leading term.
  Term pop_leading();

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& g) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;  // strictly descending, canonical nonzero coefficients
};

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, unsigned e);

// Gcd of the coefficients: p^(min val) over Z/p^m; over Z the sign makes
// the leading coefficient of red(f) positive.
Int content(const Polynomial& f);
// f divided by its content, so that f == content(f) * red(f).
Polynomial red(const Polynomial& f);

// Maps variables by name and reduces coefficients into the target ring.
Polynomial change_ring(const Polynomial& f, const PolyRingPtr& target);

// Composite ring: coefficients reduced mod the i-th prime-power factor.
Polynomial project(const Polynomial& f, std::size_t component);

// Ring homomorphism sending variable i to images[i].
Polynomial substitute(const Polynomial& f, const PolyRingPtr& target,
                      std::span<const Polynomial> images);

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring);
std::string render(const Polynomial& f);
std::string render_monomial(const Monomial& m, const VariableSet& vars);

}  // namespace mrees
