#include "mrees/division.hpp"

#include "mrees/error.hpp"

namespace mrees {

namespace {

void check_divisors(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors) {
    if (d.is_zero()) throw InputError("zero polynomial in divisor list");
    if (!(d.ring() == f.ring())) throw InputError("divisor lives in a different ring");
  }
}

DivisionResult init_result(const Polynomial& f, std::size_t t) {
  const auto& ring = f.ring_ptr();
  return {Polynomial::constant(ring, 1), std::vector<Polynomial>(t, Polynomial(ring)),
          Polynomial(ring), {}};
}

void scale_all(DivisionResult& res, const Polynomial& scale) {
  res.multiplier = res.multiplier * scale;
  for (auto& c : res.cofactors) c = c * scale;
  res.remainder = res.remainder * scale;
}

}  // namespace

DivisionResult pseudo_divide_pid(const Polynomial& f, std::span<const Polynomial> divisors) {
  const RingSpec& R = f.coeffs();
  if (!R.is_integers() && !R.is_field())
    throw InputError("PID division needs Z or a field, got " + R.describe());
  check_divisors(f, divisors);
  const auto order = MonomialOrder::t_lex();

  std::vector<LeadingData> leads;
  for (const auto& d : divisors) leads.push_back(leading_data(d, order));

  DivisionResult res = init_result(f, divisors.size());
  Polynomial g = f;
  while (!g.is_zero()) {
    LeadingData lg = leading_data(g, order);
    std::size_t j = 0;
    while (j < leads.size() && !leads[j].lm.divides(lg.lm)) ++j;
    if (j == leads.size()) {
      Polynomial lt = lg.leading_term();
      res.remainder += lt;
      g -= lt;
      continue;
    }
    const Polynomial& lcj = leads[j].lc;
    Monomial shift = lg.lm / leads[j].lm;
    Polynomial step = lg.lc.mul_term(1, shift);
    scale_all(res, lcj);
    res.cofactors[j] += step;
    g = g * lcj - step * divisors[j];
    res.trace.push_back({j, lcj, lg.lm});
  }
  return res;
}

DivisionResult pseudo_divide_ppq(const Polynomial& f, std::span<const Polynomial> divisors) {
  const RingSpec& R = f.coeffs();
  if (!R.is_prime_power()) throw InputError("Z/p^m division needs a prime-power ring, got " + R.describe());
  check_divisors(f, divisors);
  const auto order = MonomialOrder::t_lex();

  std::vector<LeadingData> leads;
  for (const auto& d : divisors) leads.push_back(leading_data(d, order));

  DivisionResult res = init_result(f, divisors.size());
  Polynomial g = f;
  while (!g.is_zero()) {
    LeadingData lg = leading_data(g, order);
    std::size_t j = 0;
    while (j < leads.size() && !(leads[j].lm.divides(lg.lm) && divides(leads[j].LC, lg.LC, R))) ++j;
    if (j == leads.size()) {
      Polynomial lt = lg.leading_term();
      res.remainder += lt;
      g -= lt;
      continue;
    }
    const Polynomial& xlcj = leads[j].xlc;
    Monomial shift = lg.lm / leads[j].lm;
    Int q = quotient(lg.LC, leads[j].LC, R);
    Polynomial step = lg.xlc.mul_term(q, shift);
    scale_all(res, xlcj);
    res.cofactors[j] += step;
    g = g * xlcj - step * divisors[j];
    res.trace.push_back({j, xlcj, lg.lm});
  }
  return res;
}

// ---------------------------------------------------------------------------

StrongReducer::StrongReducer(std::span<const Polynomial> basis) {
  for (const auto& g : basis) add(g);
}

void StrongReducer::add(Polynomial g) {
  if (g.is_zero()) throw InputError("zero polynomial in reduction basis");
  if (!basis_.empty() && !(g.ring() == basis_.front().ring()))
    throw InputError("reduction basis mixes rings");
  basis_.push_back(std::move(g));
}

std::ptrdiff_t StrongReducer::find_reducer(const Term& t) const {
  const RingSpec& R = basis_.empty() ? RingSpec{} : basis_.front().coeffs();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Term& lt = basis_[i].leading_term();
    if (lt.mono.divides(t.mono) && divides(lt.coeff, t.coeff, R)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

Reduction StrongReducer::run(const Polynomial& f, bool track) const {
  const auto& ring = f.ring_ptr();
  Reduction out{Polynomial(ring), {}, 0};
  if (track) out.cofactors.assign(basis_.size(), Polynomial(ring));
  std::vector<Term> rest;
  Polynomial g = f;
  while (!g.is_zero()) {
    const Term& t = g.leading_term();
    std::ptrdiff_t i = find_reducer(t);
    if (i < 0) {
      rest.push_back(g.pop_leading());
      continue;
    }
    const Polynomial& b = basis_[static_cast<std::size_t>(i)];
    const Term& lb = b.leading_term();
    Int q = quotient(t.coeff, lb.coeff, f.coeffs());
    Monomial shift = t.mono / lb.mono;
    if (track) out.cofactors[static_cast<std::size_t>(i)] += Polynomial::monomial(ring, q, shift);
    g.sub_mul_term(q, shift, b);
    ++out.steps;
  }
  out.remainder = Polynomial(ring, std::move(rest));
  return out;
}

Polynomial StrongReducer::reduce(const Polynomial& f) const { return run(f, false).remainder; }

Reduction StrongReducer::reduce_with_cofactors(const Polynomial& f) const { return run(f, true); }

Polynomial strong_reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  return StrongReducer(basis).reduce(f);
}

}  // namespace mrees
