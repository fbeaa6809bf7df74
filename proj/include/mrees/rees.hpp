#pragma once

// Defining equations of multi-Rees algebras R[x][I_1 t_1, ..., I_r t_r].
//
// For R = Z or Z/p^m the kernel of T_{k,j} -> f_k t_j is the saturation of
// the Koszul relations (plus, over Z/p^m, the monomials of the H set) by the
// product of the pivot generators. The saturation is computed by adding
// y*h - 1 and eliminating y from a lex Groebner basis. Composite Z/NZ is
// split by CRT and the component kernels are recombined with idempotents.

#include <map>
#include <string>
#include <vector>

#include "mrees/groebner.hpp"
#include "mrees/order.hpp"
#include "mrees/poly.hpp"

namespace mrees {

class ReesProblem {
 public:
  // Generators are parsed in R[x]; they are numbered f_1, f_2, ... in order
  // of first appearance, syntactically equal generators sharing an index.
  ReesProblem(RingSpec ring, std::vector<std::string> x_vars,
              const std::vector<std::vector<std::string>>& ideals);
  ReesProblem(RingSpec ring, std::vector<std::string> x_vars,
              std::span<const std::vector<Polynomial>> ideals);

  const RingSpec& ring() const noexcept { return ring_; }
  const std::vector<std::string>& x_vars() const noexcept { return x_vars_; }
  const PolyRingPtr& x_ring() const noexcept { return x_ring_; }
  std::size_t num_ideals() const noexcept { return groups_.size(); }
  // f_k is generators()[k - 1].
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const Polynomial& generator(unsigned k) const { return gens_.at(k - 1); }
  // Generator indices of I_j, 1-based j.
  const std::vector<unsigned>& group(unsigned j) const { return groups_.at(j - 1); }
  const TOrder& t_order() const noexcept { return t_order_; }

  // val(LC(f_k)): the p-adic valuation of the content over Z/p^m, 0 over Z.
  unsigned lc_valuation(unsigned k) const;
  // Smallest T-variable of group j (pivot_selection); 0 when every
  // generator of the group vanishes, which only happens in CRT components.
  unsigned pivot(unsigned j) const { return pivots_.at(j - 1); }
  const std::vector<unsigned>& pivots() const noexcept { return pivots_; }

  // y | T-block (descending) | x-block
  const PolyRingPtr& ring_with_y() const noexcept { return ring_y_; }
  // T-block | x-block
  const PolyRingPtr& ring_without_y() const noexcept { return ring_s_; }
  std::vector<Variable> t_variables() const;

  // Same problem with another pivot for group j; k must have minimal
  // valuation in the group.
  ReesProblem with_pivot(unsigned j, unsigned k) const;

  // Problem over the i-th prime-power factor of a composite ring; generator
  // numbering is kept even where projections vanish or coincide.
  ReesProblem component(std::size_t i) const;

 private:
  ReesProblem(RingSpec ring, std::vector<std::string> x_vars, PolyRingPtr x_ring,
              std::vector<Polynomial> gens, std::vector<std::vector<unsigned>> groups,
              bool allow_zero);
  void derive(bool allow_zero);

  RingSpec ring_;
  std::vector<std::string> x_vars_;
  PolyRingPtr x_ring_;
  std::vector<Polynomial> gens_;
  std::vector<std::vector<unsigned>> groups_;
  TOrder t_order_;
  std::vector<unsigned> pivots_;
  PolyRingPtr ring_y_;
  PolyRingPtr ring_s_;
};

// Generalized: minimal p^n * prod T_t^{n_t} with n + sum v_t*n_t >= m.
// EqualityOnly: n + sum n_t = m with n < m; selected on the CLI as "paper".
enum class HMode { Generalized, EqualityOnly };

struct ReesOptions {
  HMode h_mode = HMode::Generalized;
  // Saturate by primes * x-variables when every generator is a single term.
  bool term_shortcut = true;
  GroebnerOptions groebner;
};

// Image of g under T_{k,j} -> f_k t_j in R[x, t_1..t_r].
Polynomial substitute_phi(const Polynomial& g, const ReesProblem& problem);
PolyRingPtr phi_target_ring(const ReesProblem& problem);

unsigned pivot_selection(const ReesProblem& problem, unsigned j);

// f_{k_j} T_{k,j} - f_k T_{k_j,j} for every non-pivot k of every group;
// divided by its content p^val(LC(f_{k_j})) over Z/p^m.
std::vector<Polynomial> koszul_relations(const ReesProblem& problem);

// Monomials p^n * prod T^n_t over the pivots with non-unit LC.
std::vector<Polynomial> h_set(const ReesProblem& problem, HMode mode);

// Element of R[x] whose powers are inverted by the saturation.
Polynomial saturation_multiplier(const ReesProblem& problem, bool term_shortcut = true);

// T_{k,j} for generators that vanish (CRT components only).
std::vector<Polynomial> vanishing_t_variables(const ReesProblem& problem);

// y*h - 1, Koszul relations, H set and vanishing T's, in R[y, T, x].
std::vector<Polynomial> build_F(const ReesProblem& problem, const ReesOptions& options = {});

struct ComponentResult {
  Int idempotent;
  RingSpec ring;
  std::vector<Polynomial> basis;  // over the component ring
};

struct ReesResult {
  std::vector<Polynomial> basis;  // generators of ker(phi) in R[T, x]
  bool certified = false;         // basis passed the critical-polynomial re-check
  bool kernel_ok = false;         // every basis element maps to zero under phi
  std::vector<unsigned> pivots;
  std::vector<Polynomial> koszul;
  std::vector<Polynomial> h_set;
  std::vector<Polynomial> F;
  std::optional<Polynomial> multiplier;
  std::vector<ComponentResult> components;
  GroebnerStats stats;
  std::map<std::string, double> timings_ms;
};

ReesResult rees_equations(const ReesProblem& problem, const ReesOptions& options = {});

// Union of e_i * lift(g) over all component bases, in the composite ring.
std::vector<Polynomial> recombine(const ReesProblem& problem,
                                  const std::vector<ComponentResult>& components);

}  // namespace mrees
