#include "mrees/poly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_set>

#include "mrees/error.hpp"

namespace mrees {

std::string t_variable_name(unsigned k, unsigned j) {
  return "T_" + std::to_string(k) + "_" + std::to_string(j);
}

Variable classify_variable(std::string_view name) {
  Variable v{std::string(name), VarKind::X, 0, 0};
  if (name == "y") {
    v.kind = VarKind::Y;
    return v;
  }
  if (name.size() < 5 || name.substr(0, 2) != "T_") return v;
  auto rest = name.substr(2);
  auto sep = rest.find('_');
  if (sep == std::string_view::npos) return v;
  unsigned k = 0;
  unsigned j = 0;
  auto a = rest.substr(0, sep);
  auto b = rest.substr(sep + 1);
  auto ra = std::from_chars(a.data(), a.data() + a.size(), k);
  auto rb = std::from_chars(b.data(), b.data() + b.size(), j);
  if (ra.ec != std::errc{} || ra.ptr != a.data() + a.size() || rb.ec != std::errc{} ||
      rb.ptr != b.data() + b.size() || k == 0 || j == 0)
    return v;
  v.kind = VarKind::T;
  v.k = k;
  v.j = j;
  return v;
}

// ---------------------------------------------------------------------------
// VariableSet

VariableSet::VariableSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw InputError("empty variable name");
    if (!seen.insert(v.name).second) throw InputError("duplicate variable " + v.name);
  }
}

VariableSet VariableSet::from_names(const std::vector<std::string>& names) {
  std::vector<Variable> vs;
  vs.reserve(names.size());
  for (const auto& n : names) vs.push_back(classify_variable(n));
  return VariableSet(std::move(vs));
}

std::optional<std::size_t> VariableSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VariableSet::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown variable " + std::string(name));
  return *i;
}

bool VariableSet::has_y() const {
  return std::any_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.kind == VarKind::Y; });
}

std::vector<std::string> VariableSet::names() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
  return r;
}

PolyRingPtr make_poly_ring(RingSpec coeffs, VariableSet vars) {
  return std::make_shared<const PolyRing>(PolyRing{std::move(coeffs), std::move(vars)});
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InputError("polynomial without a ring");
}

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : Polynomial(std::move(ring)) {
  const auto n = ring_->vars.size();
  for (auto& t : terms) {
    if (t.mono.size() != n) throw InputError("monomial length does not match the variable set");
    t.coeff = ring_->coeffs.reduce(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = ring_->coeffs.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Int& c) {
  Monomial one(ring->vars.size());
  return monomial(std::move(ring), c, std::move(one));
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::string_view name) {
  Monomial m(ring->vars.size());
  m[ring->vars.index(name)] = 1;
  return monomial(std::move(ring), 1, std::move(m));
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Int& c, Monomial m) {
  std::vector<Term> ts;
  ts.push_back({std::move(m), c});
  return Polynomial(std::move(ring), std::move(ts));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  return terms_.front();
}

Term Polynomial::pop_leading() {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[index] != 0; });
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (ring_ != g.ring_ && !(*ring_ == *g.ring_))
    throw InputError("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->coeffs.neg(t.coeff);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  Monomial one(ring_->vars.size());
  sub_mul_term(Int(-1), one, g);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_compatible(g);
  Monomial one(ring_->vars.size());
  sub_mul_term(Int(1), one, g);
  return *this;
}

void Polynomial::sub_mul_term(const Int& c, const Monomial& m, const Polynomial& g) {
  check_compatible(g);
  const RingSpec& R = ring_->coeffs;
  Int cc = R.reduce(c);
  if (cc == 0 || g.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  const bool unit_mono = m.is_one();
  while (it != terms_.end() || jt != g.terms_.end()) {
    if (jt == g.terms_.end()) {
      out.push_back(std::move(*it++));
      continue;
    }
    Monomial gm = unit_mono ? jt->mono : jt->mono * m;
    if (it == terms_.end() || gm > it->mono) {
      Int v = R.neg(cc * jt->coeff);
      if (v != 0) out.push_back({std::move(gm), std::move(v)});
      ++jt;
    } else if (it->mono > gm) {
      out.push_back(std::move(*it++));
    } else {
      Int v = R.sub(it->coeff, cc * jt->coeff);
      if (v != 0) out.push_back({std::move(gm), std::move(v)});
      ++it;
      ++jt;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial Polynomial::scaled(const Int& c) const {
  Monomial one(ring_->vars.size());
  return mul_term(c, one);
}

Polynomial Polynomial::mul_term(const Int& c, const Monomial& m) const {
  const RingSpec& R = ring_->coeffs;
  Polynomial r(ring_);
  Int cc = R.reduce(c);
  if (cc == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Int v = R.mul(cc, t.coeff);
    // Multiplying by a monomial keeps the order; only zero divisors drop terms.
    if (v != 0) r.terms_.push_back({t.mono * m, std::move(v)});
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial operator+(Polynomial f, const Polynomial& g) {
  f += g;
  return f;
}

Polynomial operator-(Polynomial f, const Polynomial& g) {
  f -= g;
  return f;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.ring_ptr() != g.ring_ptr() && !(f.ring() == g.ring()))
    throw InputError("polynomials live in different rings");
  std::vector<Term> prod;
  prod.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return Polynomial(f.ring_ptr(), std::move(prod));
}

Polynomial pow(const Polynomial& f, unsigned e) {
  Polynomial r = Polynomial::constant(f.ring_ptr(), 1);
  Polynomial b = f;
  while (e > 0) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return r;
}

Int content(const Polynomial& f) {
  if (f.is_zero()) throw InputError("content of the zero polynomial");
  const RingSpec& R = f.coeffs();
  if (R.is_prime_power()) {
    unsigned v = R.exponent();
    for (const auto& t : f.terms()) v = std::min(v, valuation(t.coeff, R));
    Int pv;
    mpz_pow_ui(pv.get_mpz_t(), R.prime().get_mpz_t(), v);
    return pv;
  }
  if (!R.is_integers()) throw InputError("content needs Z or a prime-power ring");
  Int g = 0;
  for (const auto& t : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  if (f.leading_term().coeff < 0) g = -g;
  return g;
}

Polynomial red(const Polynomial& f) {
  Int c = content(f);
  std::vector<Term> ts;
  ts.reserve(f.size());
  // Exact integer division of the stored representative.
  for (const auto& t : f.terms()) ts.push_back({t.mono, Int(t.coeff / c)});
  return Polynomial(f.ring_ptr(), std::move(ts));
}

Polynomial change_ring(const Polynomial& f, const PolyRingPtr& target) {
  const auto& src = f.vars();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->vars.find(src[i].name);
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->vars.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw InputError("variable " + src[i].name + " missing from target ring");
      m[*map[i]] = t.mono[i];
    }
    ts.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(ts));
}

Polynomial project(const Polynomial& f, std::size_t component) {
  const RingSpec& R = f.coeffs();
  if (!R.is_composite()) throw InputError("project needs a composite ring");
  auto target = make_poly_ring(R.component(component), f.vars());
  return change_ring(f, target);
}

Polynomial substitute(const Polynomial& f, const PolyRingPtr& target,
                      std::span<const Polynomial> images) {
  const auto n = f.vars().size();
  if (images.size() != n) throw InputError("substitute: one image per variable required");
  // powers[i][e] = images[i]^e, built lazily.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial acc = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < n && !acc.is_zero(); ++i)
      if (t.mono[i] != 0) acc = acc * power(i, t.mono[i]);
    result += acc;
  }
  return result;
}

}  // namespace mrees
