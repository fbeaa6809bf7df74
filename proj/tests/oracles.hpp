#pragma once

// Brute-force reference implementations used only by the tests. They share
// no arithmetic with the library beyond reading terms out of a Polynomial.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mrees/division.hpp"
#include "mrees/poly.hpp"
#include "mrees/rees.hpp"

namespace oracle {

using Int = mpz_class;
using Exps = std::vector<unsigned>;

// Modulus 0 means Z.
inline Int mod(const Int& c, const Int& n) {
  if (n == 0) return c;
  Int r = c % n;
  if (r < 0) r += n;
  return r;
}

// Naive sparse polynomial: exponent vector -> coefficient, lex by vector.
struct NPoly {
  Int n = 0;
  std::map<Exps, Int> t;

  void add_term(const Exps& e, const Int& c) {
    Int v = mod(t.count(e) ? t[e] + c : c, n);
    if (v == 0)
      t.erase(e);
    else
      t[e] = v;
  }
  bool zero() const { return t.empty(); }
};

inline NPoly add(const NPoly& a, const NPoly& b, const Int& sb = 1) {
  NPoly r = a;
  for (const auto& [e, c] : b.t) r.add_term(e, sb * c);
  return r;
}

inline NPoly mul(const NPoly& a, const NPoly& b) {
  NPoly r{a.n, {}};
  for (const auto& [ea, ca] : a.t)
    for (const auto& [eb, cb] : b.t) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

inline NPoly scale(const NPoly& a, const Int& c, const Exps& m) {
  NPoly r{a.n, {}};
  for (const auto& [e, v] : a.t) {
    Exps x(e.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = e[i] + m[i];
    r.add_term(x, v * c);
  }
  return r;
}

inline bool equal(const NPoly& a, const NPoly& b) { return add(a, b, -1).zero(); }

inline NPoly from(const mrees::Polynomial& f) {
  NPoly r{f.coeffs().modulus(), {}};
  for (const auto& term : f.terms()) {
    Exps e(term.mono.exponents().begin(), term.mono.exponents().end());
    r.add_term(e, term.coeff);
  }
  return r;
}

// Evaluate in another variable layout: var i of f becomes images[i].
inline NPoly eval(const NPoly& f, const std::vector<NPoly>& images, std::size_t target_nvars) {
  NPoly out{f.n, {}};
  for (const auto& [e, c] : f.t) {
    NPoly acc{f.n, {}};
    acc.add_term(Exps(target_nvars, 0), c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) acc = mul(acc, images[i]);
    out = add(out, acc);
  }
  return out;
}

// phi: T_{k,j} -> f_k t_j; target layout is (x_1..x_n, t_1..t_r).
inline NPoly phi(const mrees::Polynomial& g, const mrees::ReesProblem& problem) {
  const std::size_t nx = problem.x_vars().size();
  const std::size_t nt = nx + problem.num_ideals();
  const Int n = problem.ring().modulus();
  std::vector<NPoly> images;
  for (const auto& v : g.vars().vars()) {
    NPoly img{n, {}};
    if (v.kind == mrees::VarKind::X) {
      auto it = std::find(problem.x_vars().begin(), problem.x_vars().end(), v.name);
      Exps e(nt, 0);
      e[it - problem.x_vars().begin()] = 1;
      img.add_term(e, 1);
    } else if (v.kind == mrees::VarKind::T) {
      for (const auto& term : problem.generator(v.k).terms()) {
        Exps e(nt, 0);
        for (std::size_t i = 0; i < nx; ++i) e[i] = term.mono[i];
        e[nx + v.j - 1] = 1;
        img.add_term(e, term.coeff);
      }
    }
    images.push_back(img);
  }
  return eval(from(g), images, nt);
}

// ---------------------------------------------------------------------------
// Coefficient ring helpers for Z (n = 0) and Z/p^m.

struct Chain {
  Int n = 0;  // 0 for Z
  Int p = 0;
  unsigned m = 0;

  static Chain of(const mrees::RingSpec& r) {
    Chain c;
    c.n = r.modulus();
    if (r.is_prime_power()) {
      c.p = r.prime();
      c.m = r.exponent();
    }
    return c;
  }
  unsigned val(Int c) const {
    c = mod(c, n);
    if (c == 0) return m;
    unsigned v = 0;
    while (c % p == 0) {
      c /= p;
      ++v;
    }
    return v;
  }
  bool divides(const Int& a, const Int& b) const {
    if (n == 0) return b % a == 0;
    return val(a) <= val(b);
  }
  // Some q with q * a = b; brute force over the residues.
  Int quot(const Int& b, const Int& a) const {
    if (n == 0) return b / a;
    for (Int q = 0; q < n; ++q)
      if (mod(q * a - b, n) == 0) return q;
    throw std::logic_error("no quotient");
  }
};

inline Exps leading(const NPoly& f) { return f.t.rbegin()->first; }

inline bool exps_divide(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exps exps_lcm(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exps exps_div(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Full strong reduction under lex on the variable sequence.
inline NPoly strong_normal_form(NPoly f, const std::vector<NPoly>& basis, const Chain& R) {
  NPoly rem{f.n, {}};
  std::size_t guard = 0;
  while (!f.zero()) {
    if (++guard > 200000) throw std::runtime_error("oracle reduction did not terminate");
    auto [m, c] = *f.t.rbegin();
    bool reduced = false;
    for (const auto& g : basis) {
      auto [gm, gc] = *g.t.rbegin();
      if (exps_divide(gm, m) && R.divides(gc, c)) {
        f = add(f, scale(g, R.quot(c, gc), exps_div(m, gm)), -1);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(m, c);
      f.t.erase(m);
    }
  }
  return rem;
}

// Re-derives S-, G- and A-polynomials and checks each reduces to zero.
inline bool certified(const std::vector<mrees::Polynomial>& basis) {
  if (basis.empty()) return true;
  Chain R = Chain::of(basis.front().coeffs());
  std::vector<NPoly> B;
  for (const auto& b : basis) B.push_back(from(b));
  auto reduces = [&](const NPoly& h) { return strong_normal_form(h, B, R).zero(); };
  for (std::size_t i = 0; i < B.size(); ++i) {
    auto [mi, ci] = *B[i].t.rbegin();
    if (R.n != 0 && R.val(ci) > 0) {
      Int ann;
      mpz_pow_ui(ann.get_mpz_t(), R.p.get_mpz_t(), R.m - R.val(ci));
      if (!reduces(scale(B[i], ann, Exps(mi.size(), 0)))) return false;
    }
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      auto [mj, cj] = *B[j].t.rbegin();
      Exps L = exps_lcm(mi, mj);
      Int l;
      if (R.n == 0) {
        mpz_lcm(l.get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
      } else {
        mpz_pow_ui(l.get_mpz_t(), R.p.get_mpz_t(), std::max(R.val(ci), R.val(cj)));
      }
      NPoly s = add(scale(B[i], R.quot(l, ci), exps_div(L, mi)), scale(B[j], R.quot(l, cj), exps_div(L, mj)),
                    -1);
      if (!reduces(s)) return false;
      if (R.n == 0 && ci % cj != 0 && cj % ci != 0) {
        Int g, s1, t1;
        mpz_gcdext(g.get_mpz_t(), s1.get_mpz_t(), t1.get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
        NPoly gp = add(scale(B[i], s1, exps_div(L, mi)), scale(B[j], t1, exps_div(L, mj)));
        if (!reduces(gp)) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Division postconditions under the T-only order.

inline Exps t_part(const Exps& e, const mrees::VariableSet& vars) {
  Exps r = e;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (vars[i].kind == mrees::VarKind::X) r[i] = 0;
  return r;
}

// T-part blocks: T-monomial -> x-coefficient terms.
inline std::map<Exps, NPoly> t_blocks(const NPoly& f, const mrees::VariableSet& vars) {
  std::map<Exps, NPoly> out;
  for (const auto& [e, c] : f.t) {
    Exps u = t_part(e, vars);
    auto [it, fresh] = out.try_emplace(u, NPoly{f.n, {}});
    it->second.add_term(exps_div(e, u), c);
  }
  return out;
}

// PID regime: no T-monomial of s is divisible by a leading T-monomial.
inline bool pid_remainder_ok(const mrees::Polynomial& s, const std::vector<mrees::Polynomial>& F) {
  if (s.is_zero()) return true;
  const auto& vars = s.vars();
  for (const auto& [u, block] : t_blocks(from(s), vars))
    for (const auto& f : F) {
      Exps lm = t_blocks(from(f), vars).rbegin()->first;
      if (exps_divide(lm, u)) return false;
    }
  return true;
}

// Z/p^m regime: for every T-block u of s with content valuation c and every
// divisor f, LM(f) does not divide u or val(LC(f)) > c.
inline bool ppq_remainder_ok(const mrees::Polynomial& s, const std::vector<mrees::Polynomial>& F) {
  if (s.is_zero()) return true;
  const auto& vars = s.vars();
  Chain R = Chain::of(s.coeffs());
  auto content_val = [&](const NPoly& block) {
    unsigned v = R.m;
    for (const auto& [e, c] : block.t) v = std::min(v, R.val(c));
    return v;
  };
  for (const auto& [u, block] : t_blocks(from(s), vars)) {
    unsigned cv = content_val(block);
    for (const auto& f : F) {
      auto lead = *t_blocks(from(f), vars).rbegin();
      if (exps_divide(lead.first, u) && content_val(lead.second) <= cv) return false;
    }
  }
  return true;
}

struct DivisionCheck {
  bool identity = false;    // a*f == sum g_i f_i + s
  bool multiplier = false;  // a == product of the recorded scales
  bool remainder = false;   // regime-specific remainder condition
  bool monotone = false;    // leading T-monomials strictly decrease along the trace
  bool ok() const { return identity && multiplier && remainder && monotone; }
};

inline DivisionCheck check_division(const mrees::Polynomial& f, const std::vector<mrees::Polynomial>& F,
                                    const mrees::DivisionResult& d, bool ppq) {
  DivisionCheck c;
  NPoly lhs = mul(from(d.multiplier), from(f));
  NPoly rhs = from(d.remainder);
  for (std::size_t i = 0; i < F.size(); ++i) rhs = add(rhs, mul(from(d.cofactors[i]), from(F[i])));
  c.identity = d.cofactors.size() == F.size() && equal(lhs, rhs);

  NPoly prod{lhs.n, {}};
  prod.add_term(Exps(f.vars().size(), 0), 1);
  for (const auto& step : d.trace) prod = mul(prod, from(step.scale));
  c.multiplier = equal(prod, from(d.multiplier));

  c.remainder = ppq ? ppq_remainder_ok(d.remainder, F) : pid_remainder_ok(d.remainder, F);

  c.monotone = true;
  for (std::size_t i = 1; i < d.trace.size(); ++i) {
    Exps a(d.trace[i - 1].lm.exponents().begin(), d.trace[i - 1].lm.exponents().end());
    Exps b(d.trace[i].lm.exponents().begin(), d.trace[i].lm.exponents().end());
    if (!(t_part(b, f.vars()) < t_part(a, f.vars()))) c.monotone = false;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Random data.

inline mrees::Polynomial random_poly(std::mt19937& rng, const mrees::PolyRingPtr& ring, int max_terms,
                                     unsigned max_deg, int coeff_range) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::vector<mrees::Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    mrees::Monomial m(ring->vars.size());
    for (std::size_t v = 0; v < ring->vars.size(); ++v) m[v] = deg(rng) % (max_deg + 1);
    // keep total degree bounded
    unsigned total = 0;
    for (std::size_t v = 0; v < ring->vars.size(); ++v) {
      if (total + m[v] > max_deg) m[v] = max_deg - total;
      total += m[v];
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    terms.push_back({m, Int(c)});
  }
  return mrees::Polynomial(ring, terms);
}

}  // namespace oracle
