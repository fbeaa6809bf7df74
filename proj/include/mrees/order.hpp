#pragma once

// Monomial orders and leading data.
//
// FullLex is lex on the variable sequence (y > T-block > x-block once a
// Rees ring has been laid out). TLex compares only the non-x exponents; the
// x-part of a term is treated as coefficient data, so the leading
// coefficient is a polynomial in x.

#include <compare>
#include <span>
#include <vector>

#include "mrees/poly.hpp"

namespace mrees {

struct MonomialOrder {
  enum class Regime { FullLex, TLex };
  Regime regime = Regime::FullLex;

  static MonomialOrder full_lex() { return {Regime::FullLex}; }
  static MonomialOrder t_lex() { return {Regime::TLex}; }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const VariableSet& vars,
                             MonomialOrder order);

// Key of T_{k,j}: Rees index first, then valuation of LC(f_k), then k.
struct TOrderKey {
  unsigned j = 0;
  unsigned val = 0;
  unsigned k = 0;
  friend auto operator<=>(const TOrderKey&, const TOrderKey&) = default;
};

class TOrder {
 public:
  TOrder() = default;
  explicit TOrder(std::vector<TOrderKey> keys);

  // Ascending: front() is the smallest T-variable.
  const std::vector<TOrderKey>& ascending() const noexcept { return keys_; }
  std::vector<Variable> descending_variables() const;
  bool less(unsigned k1, unsigned j1, unsigned k2, unsigned j2) const;

 private:
  const TOrderKey& key(unsigned k, unsigned j) const;
  std::vector<TOrderKey> keys_;
};

// lc = LC * xLC. Under FullLex lc and xLC are constants and lm is the full
// leading monomial; under TLex lm carries only the non-x exponents.
struct LeadingData {
  Monomial lm;
  Polynomial lc;
  Int LC;
  Polynomial xlc;

  // lc * lm
  Polynomial leading_term() const;
};

LeadingData leading_data(const Polynomial& f, MonomialOrder order);

// Positive normalization of a leading coefficient: p^v over Z/p^m, |c| over Z.
Int normalized_lc(const Int& c, const RingSpec& ring);

struct PivotCandidate {
  unsigned k = 0;
  unsigned val = 0;
};

// Generator index minimizing (val, k).
unsigned select_pivot(std::span<const PivotCandidate> group);

}  // namespace mrees
