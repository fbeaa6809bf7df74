#include "mrees/groebner.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "mrees/error.hpp"

namespace mrees {

namespace {

void require_gb_ring(const RingSpec& R) {
  if (!R.is_integers() && !R.is_prime_power())
    throw InputError("Groebner bases need Z or a prime-power ring, got " + R.describe() +
                     "; decompose composite rings first");
}

Int ipow(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// c_f * m_f * f + c_g * m_g * g
struct Combination {
  Int cf;
  Monomial mf;
  Int cg;
  Monomial mg;
};

Combination s_combination(const Polynomial& f, const Polynomial& g) {
  const RingSpec& R = f.coeffs();
  const Term& a = f.leading_term();
  const Term& b = g.leading_term();
  Int L = coeff_lcm(a.coeff, b.coeff, R);
  Monomial M = a.mono.lcm(b.mono);
  return {quotient(L, a.coeff, R), M / a.mono, R.neg(quotient(L, b.coeff, R)), M / b.mono};
}

std::optional<Combination> g_combination(const Polynomial& f, const Polynomial& g) {
  const RingSpec& R = f.coeffs();
  const Term& a = f.leading_term();
  const Term& b = g.leading_term();
  if (divides(a.coeff, b.coeff, R) || divides(b.coeff, a.coeff, R)) return std::nullopt;
  Bezout bz = gcd_ext(a.coeff, b.coeff);
  Monomial M = a.mono.lcm(b.mono);
  return Combination{bz.s, M / a.mono, bz.t, M / b.mono};
}

Polynomial apply(const Combination& c, const Polynomial& f, const Polynomial& g) {
  Polynomial r = f.mul_term(c.cf, c.mf);
  r.sub_mul_term(-c.cg, c.mg, g);
  return r;
}

std::optional<Int> annihilator_scale(const Polynomial& f) {
  const RingSpec& R = f.coeffs();
  if (!R.is_prime_power()) return std::nullopt;
  unsigned v = valuation(f.leading_term().coeff, R);
  if (v == 0) return std::nullopt;
  return ipow(R.prime(), R.exponent() - v);
}

Int normalizing_unit(const Polynomial& f) {
  const RingSpec& R = f.coeffs();
  const Int& lc = f.leading_term().coeff;
  if (R.is_integers()) return lc < 0 ? Int(-1) : Int(1);
  return quotient(normalized_lc(lc, R), lc, R);
}

using Rep = std::vector<Polynomial>;

Rep rep_combine(const Rep& a, const Int& ca, const Monomial& ma, const Rep& b, const Int& cb,
                const Monomial& mb) {
  Rep out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    Polynomial r = a[k].mul_term(ca, ma);
    r.sub_mul_term(-cb, mb, b[k]);
    out.push_back(std::move(r));
  }
  return out;
}

void rep_scale(Rep& r, const Int& c) {
  for (auto& p : r) p = p.scaled(c);
}

// rep -= sum(cof[i] * reps[i])
void rep_subtract_cofactors(Rep& rep, const std::vector<Polynomial>& cof, const std::vector<Rep>& reps) {
  for (std::size_t i = 0; i < cof.size(); ++i) {
    if (cof[i].is_zero()) continue;
    for (std::size_t k = 0; k < rep.size(); ++k) rep[k] -= cof[i] * reps[i][k];
  }
}

struct Item {
  std::uint64_t degree;
  std::size_t seq;
  std::size_t i;
  std::size_t j;  // == i for an annihilator item
};

struct ItemLater {
  bool operator()(const Item& a, const Item& b) const {
    return std::tie(a.degree, a.seq) > std::tie(b.degree, b.seq);
  }
};

class Engine {
 public:
  Engine(const PolyRingPtr& ring, std::size_t ngens, const GroebnerOptions& opts)
      : ring_(ring), ngens_(ngens), opts_(opts) {}

  void add_generator(const Polynomial& g, std::size_t index) {
    if (g.is_zero()) return;
    Rep rep;
    if (opts_.track_cofactors) {
      rep.assign(ngens_, Polynomial(ring_));
      rep[index] = Polynomial::constant(ring_, 1);
    }
    insert(g, std::move(rep));
  }

  void run() {
    while (!queue_.empty()) {
      if (opts_.pair_budget != 0 && stats_.pairs >= opts_.pair_budget)
        throw BudgetExceeded("critical-pair budget of " + std::to_string(opts_.pair_budget) +
                                 " exhausted with basis size " + std::to_string(basis_.size()),
                             basis_.size(), queue_.size());
      Item item = queue_.top();
      queue_.pop();
      ++stats_.pairs;
      process(item);
    }
  }

  GroebnerBasis finish() {
    minimize();
    GroebnerBasis out;
    out.basis = basis_;
    out.order = MonomialOrder::full_lex();
    out.stats = stats_;
    out.representation = reps_;
    out.certified = certify(out.basis);
    return out;
  }

 private:
  bool track() const { return opts_.track_cofactors; }

  void insert(Polynomial p, Rep rep) {
    Int u = normalizing_unit(p);
    if (u != 1) {
      p = p.scaled(u);
      if (track()) rep_scale(rep, u);
    }
    const std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t d = basis_[i].leading_term().mono.lcm(p.leading_term().mono).degree();
      queue_.push({d, seq_++, i, n});
    }
    if (annihilator_scale(p)) queue_.push({p.leading_term().mono.degree(), seq_++, n, n});
    reducer_.add(p);
    basis_.push_back(std::move(p));
    reps_.push_back(std::move(rep));
    stats_.max_basis = std::max(stats_.max_basis, basis_.size());
  }

  void reduce_and_insert(const Polynomial& p, Rep rep) {
    if (p.is_zero()) {
      ++stats_.zero_reductions;
      return;
    }
    if (!track()) {
      Polynomial r = reducer_.reduce(p);
      if (r.is_zero()) {
        ++stats_.zero_reductions;
        return;
      }
      insert(std::move(r), {});
      return;
    }
    Reduction red = reducer_.reduce_with_cofactors(p);
    if (red.remainder.is_zero()) {
      ++stats_.zero_reductions;
      return;
    }
    rep_subtract_cofactors(rep, red.cofactors, reps_);
    insert(std::move(red.remainder), std::move(rep));
  }

  void process(const Item& item) {
    if (item.i == item.j) {
      ++stats_.apolys;
      Int c = *annihilator_scale(basis_[item.i]);
      Polynomial a = basis_[item.i].scaled(c);
      Rep rep;
      if (track()) {
        rep = reps_[item.i];
        rep_scale(rep, c);
      }
      reduce_and_insert(a, std::move(rep));
      return;
    }
    // Copies: insert() may reallocate basis_.
    const Polynomial f = basis_[item.i];
    const Polynomial g = basis_[item.j];
    const Rep rf = track() ? reps_[item.i] : Rep{};
    const Rep rg = track() ? reps_[item.j] : Rep{};

    ++stats_.spolys;
    Combination s = s_combination(f, g);
    reduce_and_insert(apply(s, f, g), track() ? rep_combine(rf, s.cf, s.mf, rg, s.cg, s.mg) : Rep{});
    if (auto gc = g_combination(f, g)) {
      ++stats_.gpolys;
      reduce_and_insert(apply(*gc, f, g),
                        track() ? rep_combine(rf, gc->cf, gc->mf, rg, gc->cg, gc->mg) : Rep{});
    }
  }

  void minimize() {
    const RingSpec& R = ring_->coeffs;
    const std::size_t n = basis_.size();
    std::vector<bool> keep(n, true);
    for (std::size_t i = 0; i < n; ++i) {
      const Term& ti = basis_[i].leading_term();
      for (std::size_t j = 0; j < n && keep[i]; ++j) {
        if (i == j || !keep[j]) continue;
        const Term& tj = basis_[j].leading_term();
        if (!tj.mono.divides(ti.mono) || !divides(tj.coeff, ti.coeff, R)) continue;
        bool mutual = ti.mono.divides(tj.mono) && divides(ti.coeff, tj.coeff, R);
        if (!mutual || j < i) keep[i] = false;
      }
    }
    std::vector<Polynomial> kept;
    std::vector<Rep> kept_reps;
    for (std::size_t i = 0; i < n; ++i) {
      if (!keep[i]) continue;
      kept.push_back(basis_[i]);
      kept_reps.push_back(reps_[i]);
    }
    // Tail reduction against the minimal set; leading terms are untouched.
    StrongReducer reducer(kept);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      Polynomial tail = kept[i];
      Term lt = tail.pop_leading();
      Polynomial lead = Polynomial::monomial(ring_, lt.coeff, lt.mono);
      if (track()) {
        Reduction red = reducer.reduce_with_cofactors(tail);
        rep_subtract_cofactors(kept_reps[i], red.cofactors, kept_reps);
        kept[i] = lead + red.remainder;
      } else {
        kept[i] = lead + reducer.reduce(tail);
      }
      reducer = StrongReducer(kept);
    }
    std::vector<std::size_t> idx(kept.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return kept[a].leading_term().mono < kept[b].leading_term().mono;
    });
    basis_.clear();
    reps_.clear();
    for (auto i : idx) {
      basis_.push_back(kept[i]);
      reps_.push_back(kept_reps[i]);
    }
  }

  PolyRingPtr ring_;
  std::size_t ngens_;
  GroebnerOptions opts_;
  std::vector<Polynomial> basis_;
  std::vector<Rep> reps_;
  StrongReducer reducer_;
  std::priority_queue<Item, std::vector<Item>, ItemLater> queue_;
  std::size_t seq_ = 0;
  GroebnerStats stats_;
};

}  // namespace

CriticalPolys critical_polys(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw InputError("critical polynomials of zero");
  require_gb_ring(f.coeffs());
  CriticalPolys out{apply(s_combination(f, g), f, g), std::nullopt, annihilator_poly(f),
                    annihilator_poly(g)};
  if (auto gc = g_combination(f, g)) out.gpoly = apply(*gc, f, g);
  return out;
}

std::optional<Polynomial> annihilator_poly(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  auto c = annihilator_scale(f);
  if (!c) return std::nullopt;
  return f.scaled(*c);
}

Polynomial normalize_leading(const Polynomial& f) {
  if (f.is_zero()) return f;
  Int u = normalizing_unit(f);
  return u == 1 ? f : f.scaled(u);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const GroebnerOptions& options) {
  if (gens.empty()) {
    GroebnerBasis empty;
    empty.certified = true;
    return empty;
  }
  const auto& ring = gens.front().ring_ptr();
  require_gb_ring(ring->coeffs);
  for (const auto& g : gens)
    if (!(g.ring() == *ring)) throw InputError("generators live in different rings");
  Engine engine(ring, gens.size(), options);
  for (std::size_t k = 0; k < gens.size(); ++k) engine.add_generator(gens[k], k);
  engine.run();
  return engine.finish();
}

bool certify(std::span<const Polynomial> basis) {
  if (basis.empty()) return true;
  StrongReducer reducer(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (auto a = annihilator_poly(basis[i]); a && !reducer.reduce(*a).is_zero()) return false;
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      CriticalPolys c = critical_polys(basis[i], basis[j]);
      if (!reducer.reduce(c.spoly).is_zero()) return false;
      if (c.gpoly && !reducer.reduce(*c.gpoly).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis eliminate(const GroebnerBasis& g, const std::vector<std::string>& drop) {
  if (g.order.regime != MonomialOrder::Regime::FullLex)
    throw InputError("elimination needs a full lex basis");
  GroebnerBasis out;
  out.order = g.order;
  out.certified = g.certified;
  out.stats = g.stats;
  if (g.basis.empty()) return out;
  const auto& vars = g.basis.front().vars();
  std::vector<std::size_t> dropped;
  for (const auto& name : drop) dropped.push_back(vars.index(name));
  std::sort(dropped.begin(), dropped.end());
  for (std::size_t i = 0; i < dropped.size(); ++i)
    if (dropped[i] != i)
      throw InputError("lex order is not an elimination order for the dropped variables");
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    const auto& p = g.basis[i];
    bool free = std::none_of(dropped.begin(), dropped.end(),
                             [&](std::size_t v) { return p.uses_variable(v); });
    if (!free) continue;
    out.basis.push_back(p);
    if (!g.representation.empty()) out.representation.push_back(g.representation[i]);
  }
  return out;
}

Membership member(const Polynomial& f, const GroebnerBasis& g) {
  if (!g.certified) throw InputError("membership test needs a certified basis");
  if (g.basis.empty()) return {f.is_zero(), f, {}};
  Reduction red = StrongReducer(g.basis).reduce_with_cofactors(f);
  bool zero = red.remainder.is_zero();
  return {zero, std::move(red.remainder), std::move(red.cofactors)};
}

bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                 const GroebnerOptions& options) {
  auto contained = [&](std::span<const Polynomial> xs, std::span<const Polynomial> ys) {
    std::vector<Polynomial> nonzero;
    for (const auto& y : ys)
      if (!y.is_zero()) nonzero.push_back(y);
    GroebnerBasis gb = buchberger(nonzero, options);
    return std::all_of(xs.begin(), xs.end(), [&](const Polynomial& x) { return member(x, gb).member; });
  };
  return contained(a, b) && contained(b, a);
}

}  // namespace mrees
