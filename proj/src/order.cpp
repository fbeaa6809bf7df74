#include "mrees/order.hpp"

#include <algorithm>

#include "mrees/error.hpp"

namespace mrees {

std::strong_ordering compare(const Monomial& a, const Monomial& b, const VariableSet& vars,
                             MonomialOrder order) {
  if (a.size() != vars.size() || b.size() != vars.size())
    throw InputError("monomial does not match the variable set");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (order.regime == MonomialOrder::Regime::TLex && vars[i].kind == VarKind::X) continue;
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

TOrder::TOrder(std::vector<TOrderKey> keys) : keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  for (std::size_t i = 1; i < keys_.size(); ++i)
    if (keys_[i].j == keys_[i - 1].j && keys_[i].k == keys_[i - 1].k)
      throw InputError("duplicate T-variable " + t_variable_name(keys_[i].k, keys_[i].j));
}

std::vector<Variable> TOrder::descending_variables() const {
  std::vector<Variable> out;
  for (auto it = keys_.rbegin(); it != keys_.rend(); ++it)
    out.push_back({t_variable_name(it->k, it->j), VarKind::T, it->k, it->j});
  return out;
}

const TOrderKey& TOrder::key(unsigned k, unsigned j) const {
  for (const auto& key : keys_)
    if (key.k == k && key.j == j) return key;
  throw InputError("unknown T-variable " + t_variable_name(k, j));
}

bool TOrder::less(unsigned k1, unsigned j1, unsigned k2, unsigned j2) const {
  return key(k1, j1) < key(k2, j2);
}

Polynomial LeadingData::leading_term() const { return lc.mul_term(1, lm); }

Int normalized_lc(const Int& c, const RingSpec& ring) {
  if (ring.is_integers()) return abs(c);
  if (ring.is_prime_power()) {
    Int pv;
    mpz_pow_ui(pv.get_mpz_t(), ring.prime().get_mpz_t(), valuation(c, ring));
    return ring.reduce(pv);
  }
  throw InputError("leading coefficients need Z or a prime-power ring");
}

LeadingData leading_data(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw InputError("leading data of the zero polynomial");
  const auto& ring = f.ring_ptr();
  const RingSpec& R = f.coeffs();
  if (order.regime == MonomialOrder::Regime::FullLex) {
    const Term& lt = f.leading_term();
    Int LC = normalized_lc(lt.coeff, R);
    return {lt.mono, Polynomial::constant(ring, lt.coeff), LC,
            Polynomial::constant(ring, Int(lt.coeff / LC))};
  }

  const auto& vars = f.vars();
  auto t_part = [&](const Monomial& m) {
    Monomial r(m);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i].kind == VarKind::X) r[i] = 0;
    return r;
  };
  auto x_part = [&](const Monomial& m) {
    Monomial r(m);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i].kind != VarKind::X) r[i] = 0;
    return r;
  };

  Monomial lm = t_part(f.terms().front().mono);
  for (const auto& t : f.terms()) {
    Monomial tp = t_part(t.mono);
    if (tp > lm) lm = std::move(tp);
  }
  std::vector<Term> lc_terms;
  for (const auto& t : f.terms())
    if (t_part(t.mono) == lm) lc_terms.push_back({x_part(t.mono), t.coeff});
  Polynomial lc(ring, std::move(lc_terms));

  Int LC = 0;
  if (R.is_prime_power()) {
    LC = content(lc);
  } else if (R.is_integers()) {
    for (const auto& t : lc.terms()) mpz_gcd(LC.get_mpz_t(), LC.get_mpz_t(), t.coeff.get_mpz_t());
  } else {
    throw InputError("leading data needs Z or a prime-power ring");
  }
  std::vector<Term> x_terms;
  for (const auto& t : lc.terms()) x_terms.push_back({t.mono, Int(t.coeff / LC)});
  return {std::move(lm), lc, LC, Polynomial(ring, std::move(x_terms))};
}

unsigned select_pivot(std::span<const PivotCandidate> group) {
  if (group.empty()) throw InputError("pivot selection on an empty ideal");
  auto best = std::min_element(group.begin(), group.end(), [](const auto& a, const auto& b) {
    return std::tie(a.val, a.k) < std::tie(b.val, b.k);
  });
  return best->k;
}

}  // namespace mrees
