#include "mrees/rees.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "mrees/error.hpp"

namespace mrees {

namespace {

Int ipow(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

PolyRingPtr make_x_ring(const RingSpec& ring, const std::vector<std::string>& x_vars) {
  std::vector<Variable> vs;
  for (const auto& name : x_vars) {
    if (!valid_identifier(name)) throw InputError("invalid variable name '" + name + "'");
    if (classify_variable(name).kind != VarKind::X)
      throw InputError("x-variable name '" + name + "' is reserved");
    vs.push_back({name, VarKind::X, 0, 0});
  }
  return make_poly_ring(ring, VariableSet(std::move(vs)));
}

// Appends f to gens unless an equal polynomial is already there; returns its 1-based index.
unsigned intern(std::vector<Polynomial>& gens, Polynomial f) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == f) return static_cast<unsigned>(i + 1);
  gens.push_back(std::move(f));
  return static_cast<unsigned>(gens.size());
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

Polynomial substitute_phi(const Polynomial& g, const ReesProblem& problem);

namespace {

void check_kernel(const ReesProblem& problem, ReesResult& result) {
  auto t0 = Clock::now();
  result.kernel_ok = std::all_of(result.basis.begin(), result.basis.end(),
                                 [&](const Polynomial& g) { return substitute_phi(g, problem).is_zero(); });
  result.timings_ms["kernel_check"] = elapsed_ms(t0);
}

}  // namespace

// ---------------------------------------------------------------------------
// ReesProblem

ReesProblem::ReesProblem(RingSpec ring, std::vector<std::string> x_vars,
                         const std::vector<std::vector<std::string>>& ideals)
    : ring_(std::move(ring)), x_vars_(std::move(x_vars)) {
  x_ring_ = make_x_ring(ring_, x_vars_);
  for (const auto& ideal : ideals) {
    std::vector<unsigned> group;
    for (const auto& text : ideal) {
      unsigned k = intern(gens_, parse_polynomial(text, x_ring_));
      if (std::find(group.begin(), group.end(), k) == group.end()) group.push_back(k);
    }
    groups_.push_back(std::move(group));
  }
  derive(false);
}

ReesProblem::ReesProblem(RingSpec ring, std::vector<std::string> x_vars,
                         std::span<const std::vector<Polynomial>> ideals)
    : ring_(std::move(ring)), x_vars_(std::move(x_vars)) {
  x_ring_ = make_x_ring(ring_, x_vars_);
  for (const auto& ideal : ideals) {
    std::vector<unsigned> group;
    for (const auto& f : ideal) {
      if (f.coeffs() != ring_) throw InputError("generator over a different coefficient ring");
      unsigned k = intern(gens_, change_ring(f, x_ring_));
      if (std::find(group.begin(), group.end(), k) == group.end()) group.push_back(k);
    }
    groups_.push_back(std::move(group));
  }
  derive(false);
}

ReesProblem::ReesProblem(RingSpec ring, std::vector<std::string> x_vars, PolyRingPtr x_ring,
                         std::vector<Polynomial> gens, std::vector<std::vector<unsigned>> groups,
                         bool allow_zero)
    : ring_(std::move(ring)),
      x_vars_(std::move(x_vars)),
      x_ring_(std::move(x_ring)),
      gens_(std::move(gens)),
      groups_(std::move(groups)) {
  derive(allow_zero);
}

void ReesProblem::derive(bool allow_zero) {
  if (groups_.empty()) throw InputError("a Rees problem needs at least one ideal");
  for (std::size_t j = 0; j < groups_.size(); ++j)
    if (groups_[j].empty()) throw InputError("ideal " + std::to_string(j + 1) + " has no generators");
  if (!allow_zero)
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (gens_[k].is_zero()) throw InputError("generator f_" + std::to_string(k + 1) + " is zero");

  std::vector<TOrderKey> keys;
  pivots_.clear();
  for (unsigned j = 1; j <= groups_.size(); ++j) {
    std::vector<PivotCandidate> candidates;
    for (unsigned k : groups_[j - 1]) {
      keys.push_back({j, lc_valuation(k), k});
      if (!generator(k).is_zero()) candidates.push_back({k, lc_valuation(k)});
    }
    pivots_.push_back(candidates.empty() ? 0 : select_pivot(candidates));
  }
  t_order_ = TOrder(std::move(keys));

  std::vector<Variable> with_y{{"y", VarKind::Y, 0, 0}};
  std::vector<Variable> without_y = t_order_.descending_variables();
  for (const auto& v : x_ring_->vars.vars()) without_y.push_back(v);
  with_y.insert(with_y.end(), without_y.begin(), without_y.end());
  ring_y_ = make_poly_ring(ring_, VariableSet(std::move(with_y)));
  ring_s_ = make_poly_ring(ring_, VariableSet(std::move(without_y)));
}

unsigned ReesProblem::lc_valuation(unsigned k) const {
  const Polynomial& f = generator(k);
  if (!ring_.is_prime_power()) return 0;
  if (f.is_zero()) return ring_.exponent();
  return valuation(content(f), ring_);
}

std::vector<Variable> ReesProblem::t_variables() const { return t_order_.descending_variables(); }

ReesProblem ReesProblem::with_pivot(unsigned j, unsigned k) const {
  if (j < 1 || j > groups_.size()) throw InputError("no ideal " + std::to_string(j));
  const auto& grp = groups_[j - 1];
  if (std::find(grp.begin(), grp.end(), k) == grp.end() || generator(k).is_zero())
    throw InputError("f_" + std::to_string(k) + " is not a nonzero generator of I_" + std::to_string(j));
  for (unsigned other : grp)
    if (!generator(other).is_zero() && lc_valuation(other) < lc_valuation(k))
      throw InputError("f_" + std::to_string(k) + " does not have minimal valuation in I_" + std::to_string(j));
  ReesProblem out = *this;
  out.pivots_[j - 1] = k;
  return out;
}

ReesProblem ReesProblem::component(std::size_t i) const {
  if (!ring_.is_composite()) throw InputError("component() needs a composite ring");
  RingSpec sub = ring_.component(i);
  auto sub_x = make_x_ring(sub, x_vars_);
  std::vector<Polynomial> gens;
  for (const auto& f : gens_) gens.push_back(change_ring(f, sub_x));
  return ReesProblem(sub, x_vars_, sub_x, std::move(gens), groups_, true);
}

// ---------------------------------------------------------------------------

PolyRingPtr phi_target_ring(const ReesProblem& problem) {
  std::vector<Variable> vs;
  for (const auto& x : problem.x_vars()) vs.push_back({x, VarKind::X, 0, 0});
  for (std::size_t j = 1; j <= problem.num_ideals(); ++j) {
    std::string name = "t_" + std::to_string(j);
    if (std::find(problem.x_vars().begin(), problem.x_vars().end(), name) != problem.x_vars().end())
      throw InputError("x-variable " + name + " collides with a Rees variable");
    vs.push_back({name, VarKind::X, 0, 0});
  }
  return make_poly_ring(problem.ring(), VariableSet(std::move(vs)));
}

Polynomial substitute_phi(const Polynomial& g, const ReesProblem& problem) {
  if (g.coeffs() != problem.ring()) throw InputError("polynomial over a different coefficient ring");
  auto target = phi_target_ring(problem);
  const auto& vars = g.vars();
  std::vector<Polynomial> images;
  images.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Variable& v = vars[i];
    switch (v.kind) {
      case VarKind::Y:
        if (g.uses_variable(i)) throw InputError("substitute_phi: polynomial involves y");
        images.push_back(Polynomial(target));
        break;
      case VarKind::X:
        images.push_back(Polynomial::variable(target, v.name));
        break;
      case VarKind::T: {
        if (v.j < 1 || v.j > problem.num_ideals()) throw InputError("no ideal for " + v.name);
        const auto& grp = problem.group(v.j);
        if (std::find(grp.begin(), grp.end(), v.k) == grp.end())
          throw InputError(v.name + ": f_" + std::to_string(v.k) + " is not a generator of I_" +
                           std::to_string(v.j));
        Polynomial t = Polynomial::variable(target, "t_" + std::to_string(v.j));
        images.push_back(change_ring(problem.generator(v.k), target) * t);
        break;
      }
    }
  }
  return substitute(g, target, images);
}

unsigned pivot_selection(const ReesProblem& problem, unsigned j) {
  std::vector<PivotCandidate> candidates;
  for (unsigned k : problem.group(j))
    if (!problem.generator(k).is_zero()) candidates.push_back({k, problem.lc_valuation(k)});
  return select_pivot(candidates);
}

std::vector<Polynomial> koszul_relations(const ReesProblem& problem) {
  const auto& S = problem.ring_without_y();
  const RingSpec& R = problem.ring();
  std::vector<Polynomial> out;
  for (unsigned j = 1; j <= problem.num_ideals(); ++j) {
    const unsigned kj = problem.pivot(j);
    if (kj == 0) continue;
    Polynomial t_pivot = Polynomial::variable(S, t_variable_name(kj, j));
    for (unsigned k : problem.group(j)) {
      if (k == kj || problem.generator(k).is_zero()) continue;
      Polynomial t_k = Polynomial::variable(S, t_variable_name(k, j));
      Polynomial rel(S);
      if (R.is_prime_power()) {
        // f = p^v * red(f); dividing by p^v(pivot) keeps the relation in ker(phi).
        unsigned a = problem.lc_valuation(kj);
        unsigned b = problem.lc_valuation(k);
        Polynomial pivot_red = change_ring(red(problem.generator(kj)), S);
        Polynomial k_red = change_ring(red(problem.generator(k)), S);
        rel = pivot_red * t_k - k_red.scaled(ipow(R.prime(), b - a)) * t_pivot;
      } else {
        rel = change_ring(problem.generator(kj), S) * t_k - change_ring(problem.generator(k), S) * t_pivot;
      }
      if (!rel.is_zero()) out.push_back(std::move(rel));
    }
  }
  return out;
}

std::vector<Polynomial> h_set(const ReesProblem& problem, HMode mode) {
  const RingSpec& R = problem.ring();
  if (!R.is_prime_power()) throw InputError("the H set is defined over Z/p^m only");
  const unsigned m = R.exponent();
  const auto& S = problem.ring_without_y();

  struct Eligible {
    std::size_t var;
    unsigned val;
  };
  std::vector<Eligible> eligible;
  for (unsigned j = 1; j <= problem.num_ideals(); ++j) {
    unsigned kj = problem.pivot(j);
    if (kj == 0) continue;
    unsigned v = problem.lc_valuation(kj);
    if (v > 0) eligible.push_back({S->vars.index(t_variable_name(kj, j)), v});
  }
  const std::size_t s = eligible.size();
  if (s == 0) return {};

  // Exponent vectors (n, n_1, ..., n_s).
  std::vector<std::vector<unsigned>> chosen;
  std::vector<unsigned> e(s + 1, 0);
  std::vector<unsigned> bound(s + 1, m);
  if (mode == HMode::Generalized)
    for (std::size_t t = 0; t < s; ++t) bound[t + 1] = (m + eligible[t].val - 1) / eligible[t].val;

  std::function<void(std::size_t)> enumerate = [&](std::size_t pos) {
    if (pos == e.size()) {
      unsigned t_degree = 0;
      unsigned weight = e[0];
      for (std::size_t t = 0; t < s; ++t) {
        t_degree += e[t + 1];
        weight += eligible[t].val * e[t + 1];
      }
      if (mode == HMode::EqualityOnly) {
        if (e[0] + t_degree == m && e[0] < m) chosen.push_back(e);
      } else if (weight >= m) {
        chosen.push_back(e);
      }
      return;
    }
    for (unsigned v = 0; v <= bound[pos]; ++v) {
      e[pos] = v;
      enumerate(pos + 1);
    }
    e[pos] = 0;
  };
  enumerate(0);

  if (mode == HMode::Generalized) {
    auto below = [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
      return true;
    };
    std::vector<std::vector<unsigned>> minimal;
    for (const auto& c : chosen) {
      bool dominated = std::any_of(chosen.begin(), chosen.end(),
                                   [&](const auto& d) { return d != c && below(d, c); });
      if (!dominated) minimal.push_back(c);
    }
    chosen = std::move(minimal);
  }

  std::vector<Polynomial> out;
  for (const auto& c : chosen) {
    if (c[0] >= m) continue;  // p^m = 0
    Monomial mono(S->vars.size());
    for (std::size_t t = 0; t < s; ++t) mono[eligible[t].var] = c[t + 1];
    out.push_back(Polynomial::monomial(S, ipow(R.prime(), c[0]), std::move(mono)));
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.leading_term();
    const auto& tb = b.leading_term();
    if (ta.mono != tb.mono) return ta.mono < tb.mono;
    return ta.coeff < tb.coeff;
  });
  return out;
}

Polynomial saturation_multiplier(const ReesProblem& problem, bool term_shortcut) {
  const auto& X = problem.x_ring();
  const RingSpec& R = problem.ring();
  const auto& gens = problem.generators();
  bool all_terms = std::all_of(gens.begin(), gens.end(),
                               [](const Polynomial& f) { return f.is_zero() || f.is_term(); });

  if (term_shortcut && all_terms) {
    Polynomial h = Polynomial::constant(X, 1);
    if (R.is_integers()) {
      std::set<Int> primes;
      for (unsigned j = 1; j <= problem.num_ideals(); ++j) {
        unsigned kj = problem.pivot(j);
        if (kj == 0) continue;
        for (const auto& p : prime_factors(problem.generator(kj).leading_term().coeff)) primes.insert(p);
      }
      for (const auto& p : primes) h = h.scaled(p);
    }
    for (std::size_t i = 0; i < X->vars.size(); ++i) {
      bool occurs = std::any_of(gens.begin(), gens.end(),
                                [&](const Polynomial& f) { return f.uses_variable(i); });
      if (occurs) h = h * Polynomial::variable(X, X->vars[i].name);
    }
    return h;
  }

  Polynomial h = Polynomial::constant(X, 1);
  for (unsigned j = 1; j <= problem.num_ideals(); ++j) {
    unsigned kj = problem.pivot(j);
    if (kj == 0) continue;
    const Polynomial& f = problem.generator(kj);
    h = h * (R.is_prime_power() ? red(f) : f);
  }
  return h;
}

std::vector<Polynomial> vanishing_t_variables(const ReesProblem& problem) {
  std::vector<Polynomial> out;
  for (unsigned j = 1; j <= problem.num_ideals(); ++j)
    for (unsigned k : problem.group(j))
      if (problem.generator(k).is_zero())
        out.push_back(Polynomial::variable(problem.ring_without_y(), t_variable_name(k, j)));
  return out;
}

std::vector<Polynomial> build_F(const ReesProblem& problem, const ReesOptions& options) {
  const RingSpec& R = problem.ring();
  if (!R.is_integers() && !R.is_prime_power())
    throw InputError("build_F needs Z or Z/p^m; composite rings are decomposed first");
  const auto& Sy = problem.ring_with_y();
  std::vector<Polynomial> out;
  Polynomial h = change_ring(saturation_multiplier(problem, options.term_shortcut), Sy);
  out.push_back(Polynomial::variable(Sy, "y") * h - Polynomial::constant(Sy, 1));
  for (const auto& k : koszul_relations(problem)) out.push_back(change_ring(k, Sy));
  if (R.is_prime_power())
    for (const auto& hm : h_set(problem, options.h_mode)) out.push_back(change_ring(hm, Sy));
  for (const auto& t : vanishing_t_variables(problem)) out.push_back(change_ring(t, Sy));
  return out;
}

ReesResult rees_equations(const ReesProblem& problem, const ReesOptions& options) {
  const auto start = Clock::now();
  ReesResult result;
  result.pivots = problem.pivots();
  const RingSpec& R = problem.ring();

  if (R.is_composite()) {
    std::vector<Int> es = crt_idempotents(R);
    result.certified = true;
    for (std::size_t i = 0; i < R.factors().size(); ++i) {
      ReesProblem sub = problem.component(i);
      ReesResult part = rees_equations(sub, options);
      result.certified = result.certified && part.certified;
      result.stats.pairs += part.stats.pairs;
      result.stats.spolys += part.stats.spolys;
      result.stats.gpolys += part.stats.gpolys;
      result.stats.apolys += part.stats.apolys;
      result.stats.zero_reductions += part.stats.zero_reductions;
      result.stats.max_basis = std::max(result.stats.max_basis, part.stats.max_basis);
      result.components.push_back({es[i], sub.ring(), std::move(part.basis)});
    }
    auto t0 = Clock::now();
    result.basis = recombine(problem, result.components);
    result.timings_ms["recombine"] = elapsed_ms(t0);
    check_kernel(problem, result);
    result.timings_ms["total"] = elapsed_ms(start);
    return result;
  }

  auto t0 = Clock::now();
  result.koszul = koszul_relations(problem);
  if (R.is_prime_power()) result.h_set = h_set(problem, options.h_mode);
  result.multiplier = saturation_multiplier(problem, options.term_shortcut);
  result.F = build_F(problem, options);
  result.timings_ms["build"] = elapsed_ms(t0);

  t0 = Clock::now();
  GroebnerBasis gb = buchberger(result.F, options.groebner);
  result.timings_ms["groebner"] = elapsed_ms(t0);
  result.stats = gb.stats;

  t0 = Clock::now();
  GroebnerBasis elim = eliminate(gb, {"y"});
  for (const auto& g : elim.basis) result.basis.push_back(change_ring(g, problem.ring_without_y()));
  result.certified = elim.certified;
  result.timings_ms["eliminate"] = elapsed_ms(t0);
  check_kernel(problem, result);
  result.timings_ms["total"] = elapsed_ms(start);
  return result;
}

std::vector<Polynomial> recombine(const ReesProblem& problem,
                                  const std::vector<ComponentResult>& components) {
  const RingSpec& R = problem.ring();
  if (!R.is_composite()) throw InputError("recombine needs a composite ring");
  if (components.size() != R.factors().size())
    throw InputError("recombine: expected " + std::to_string(R.factors().size()) + " components, got " +
                     std::to_string(components.size()));
  const auto& S = problem.ring_without_y();
  std::vector<Polynomial> out;
  for (const auto& c : components) {
    for (const auto& g : c.basis) {
      Polynomial lifted = change_ring(g, S).scaled(c.idempotent);
      if (!lifted.is_zero()) out.push_back(std::move(lifted));
    }
  }
  return out;
}

}  // namespace mrees
