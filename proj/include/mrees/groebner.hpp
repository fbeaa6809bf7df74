#pragma once

// Strong Groebner bases over Z and Z/p^mZ under full lex.
//
// Over Z the critical polynomials are S- and G-polynomials; over Z/p^m,
// where any two coefficients are comparable under divisibility, they are
// S-polynomials plus annihilator multiples p^(m - val(lc f)) * f.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrees/division.hpp"
#include "mrees/order.hpp"
#include "mrees/poly.hpp"

namespace mrees {

struct CriticalPolys {
  Polynomial spoly;
  std::optional<Polynomial> gpoly;
  std::optional<Polynomial> apoly_f;
  std::optional<Polynomial> apoly_g;
};

CriticalPolys critical_polys(const Polynomial& f, const Polynomial& g);
// p^(m - val(lc f)) * f when lc f is a zero divisor in Z/p^m.
std::optional<Polynomial> annihilator_poly(const Polynomial& f);

struct GroebnerStats {
  std::size_t pairs = 0;
  std::size_t spolys = 0;
  std::size_t gpolys = 0;
  std::size_t apolys = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis = 0;
};

struct GroebnerOptions {
  // Critical items processed before giving up; 0 means unlimited.
  std::size_t pair_budget = 1'000'000;
  // Keep, for every basis element, cofactors over the input generators.
  bool track_cofactors = false;
};

struct GroebnerBasis {
  std::vector<Polynomial> basis;
  MonomialOrder order;
  bool certified = false;
  GroebnerStats stats;
  // basis[i] == sum(representation[i][k] * generators[k]) when tracked.
  std::vector<std::vector<Polynomial>> representation;
};

// Scales f so that its leading coefficient is p^v (Z/p^m) or positive (Z).
Polynomial normalize_leading(const Polynomial& f);

GroebnerBasis buchberger(std::span<const Polynomial> gens, const GroebnerOptions& options = {});

// Independent re-check: every S-, G- and A-polynomial strong-reduces to 0.
bool certify(std::span<const Polynomial> basis);

// Elements free of the dropped variables; those must precede all others.
GroebnerBasis eliminate(const GroebnerBasis& g, const std::vector<std::string>& drop);

struct Membership {
  bool member = false;
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // f == sum(cofactors[i] * basis[i]) + remainder
};

Membership member(const Polynomial& f, const GroebnerBasis& g);

bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                 const GroebnerOptions& options = {});

}  // namespace mrees
