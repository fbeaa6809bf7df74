#pragma once

// Pseudo-division under the T-only order, and strong reduction under full lex.

#include <span>
#include <vector>

#include "mrees/order.hpp"
#include "mrees/poly.hpp"

namespace mrees {

struct DivisionStep {
  std::size_t divisor = 0;
  Polynomial scale;  // lc(f_j) for the PID regime, xLC(f_j) for Z/p^m
  Monomial lm;       // leading T-monomial of g before the step
};

// a*f == sum(cofactors[i] * F[i]) + remainder, a == product of trace scales.
struct DivisionResult {
  Polynomial multiplier;
  std::vector<Polynomial> cofactors;
  Polynomial remainder;
  std::vector<DivisionStep> trace;
};

// Fraction-free division over Z (or a field). A divisor applies when its
// leading T-monomial divides the leading T-monomial of g; the smallest index wins.
DivisionResult pseudo_divide_pid(const Polynomial& f, std::span<const Polynomial> divisors);

// Division over Z/p^m. A divisor applies when LC(f_j)LM(f_j) divides LC(g)LM(g);
// the multiplier is a product of xLC(f_j), each of which is a nonzero divisor.
DivisionResult pseudo_divide_ppq(const Polynomial& f, std::span<const Polynomial> divisors);

struct Reduction {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // f == sum(cofactors[i] * G[i]) + remainder
  std::size_t steps = 0;
};

// Strong reduction under full lex. A term c*m is reducible by g when
// LM(g) | m and lc(g) | c in the coefficient ring; the first such g is used.
class StrongReducer {
 public:
  StrongReducer() = default;
  explicit StrongReducer(std::span<const Polynomial> basis);

  void add(Polynomial g);
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }

  Polynomial reduce(const Polynomial& f) const;
  Reduction reduce_with_cofactors(const Polynomial& f) const;
  bool top_reducible(const Term& t) const { return find_reducer(t) >= 0; }

 private:
  std::ptrdiff_t find_reducer(const Term& t) const;
  Reduction run(const Polynomial& f, bool track) const;

  std::vector<Polynomial> basis_;
};

Polynomial strong_reduce(const Polynomial& f, std::span<const Polynomial> basis);

}  // namespace mrees
