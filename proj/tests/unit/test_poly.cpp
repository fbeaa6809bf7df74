#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "mrees/error.hpp"
#include "mrees/poly.hpp"
#include "mrees/rees.hpp"

using namespace mrees;

namespace {

PolyRingPtr ring(long n, std::vector<std::string> names) {
  return make_poly_ring(RingSpec::from_modulus(n), VariableSet::from_names(names));
}

Polynomial P(const std::string& s, const PolyRingPtr& r) { return parse_polynomial(s, r); }

}  // namespace

TEST_CASE("variable classification") {
  CHECK(classify_variable("y").kind == VarKind::Y);
  auto t = classify_variable("T_12_3");
  CHECK(t.kind == VarKind::T);
  CHECK(t.k == 12);
  CHECK(t.j == 3);
  CHECK(classify_variable("x1").kind == VarKind::X);
  CHECK(classify_variable("T_1").kind == VarKind::X);
  CHECK(t_variable_name(3, 2) == "T_3_2");
  CHECK_THROWS_AS(VariableSet::from_names({"x", "x"}), InputError);
}

TEST_CASE("ring-exact arithmetic") {
  auto r9 = ring(9, {"x"});
  CHECK((P("3*x", r9) * P("3*x", r9)).is_zero());
  auto rz = ring(0, {"x"});
  CHECK(P("2*x+1", rz) + P("-2*x", rz) == Polynomial::constant(rz, 1));
  auto r8 = ring(8, {"x1", "x2"});
  CHECK((P("2*x1", r8) * P("4*x2", r8)).is_zero());
  CHECK(pow(P("x1+1", r8), 2) == P("x1^2 + 2*x1 + 1", r8));
  CHECK_THROWS_AS(P("x", rz) + P("x", r9), InputError);
}

TEST_CASE("content and red") {
  auto r9 = ring(9, {"T_2_1", "T_1_1", "x1", "x2", "x3"});
  Polynomial f = P("6*x1^2*x2*T_2_1 - 6*x1*x3*T_1_1", r9);
  CHECK(content(f) == 3);
  Polynomial rf = red(f);
  CHECK(rf.scaled(content(f)) == f);
  CHECK(content(rf) == 1);
  CHECK(red(rf) == rf);

  auto r8 = ring(8, {"T_2_1", "T_1_1", "x1", "x2", "x3"});
  Polynomial g = P("2*x1^2*x2*T_2_1 - 2*x1*x3*T_1_1", r8);
  CHECK(content(g) == 2);
  CHECK(red(g).scaled(2) == g);
  CHECK(red(g).leading_term().coeff == 1);

  auto rz = ring(0, {"x"});
  Polynomial h = P("-4*x + 6", rz);
  CHECK(abs(content(h)) == 2);
  CHECK(red(h).scaled(content(h)) == h);
  CHECK(red(h).leading_term().coeff > 0);
  CHECK_THROWS_AS(content(Polynomial(rz)), InputError);
}

TEST_CASE("parse and render") {
  auto r = ring(9, {"T_2_1", "x1", "x2", "x3"});
  Polynomial f = P("2*x1^2*x2+6*x3", r);
  CHECK(f.size() == 2);
  CHECK(render(f) == "2*x1^2*x2 - 3*x3");
  CHECK(render(P("-T_2_1", r)) == "-T_2_1");
  CHECK(P("x1*x1", r) == P("x1^2", r));
  CHECK(render(P("3*x3*T_2_1 + 2*x1^2*x2", r)) == "3*x3*T_2_1 + 2*x1^2*x2");
  CHECK(render(Polynomial(r)) == "0");
  CHECK(P(" 2 * x1 ^ 2 ", r) == P("2*x1^2", r));
  CHECK_THROWS_AS(P("2*x1 +", r), ParseError);
  CHECK_THROWS_AS(P("z", r), InputError);
  CHECK_THROWS_AS(P("x1^0", r), ParseError);
  try {
    P("x1 + * x2", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("parse inverts render on random polynomials") {
  std::mt19937 rng(7);
  for (long n : {0L, 8L, 9L, 6L}) {
    auto r = ring(n, {"T_1_1", "T_2_1", "x1", "x2"});
    for (int i = 0; i < 200; ++i) {
      Polynomial f = oracle::random_poly(rng, r, 5, 4, 40);
      CHECK(P(render(f), r) == f);
    }
  }
}

TEST_CASE("projection onto CRT components") {
  auto r6 = ring(6, {"x"});
  Polynomial f = P("3*x + 4", r6);
  Polynomial a = project(f, 0);
  Polynomial b = project(f, 1);
  CHECK(render(a) == "x");
  CHECK(a.coeffs().modulus() == 2);
  CHECK(render(b) == "1");
  CHECK(project(Polynomial(r6), 0).is_zero());
  CHECK_THROWS_AS(project(f, 2), InputError);

  std::mt19937 rng(11);
  auto r72 = ring(72, {"x", "y1"});
  for (int i = 0; i < 100; ++i) {
    Polynomial g = oracle::random_poly(rng, r72, 4, 3, 100);
    Polynomial h = oracle::random_poly(rng, r72, 4, 3, 100);
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(project(g * h, c) == project(g, c) * project(h, c));
      CHECK(project(g + h, c) == project(g, c) + project(h, c));
    }
  }
}

TEST_CASE("phi images on reference data") {
  ReesProblem linear(RingSpec::from_modulus(8), {"x1", "x2"}, {{"2*x1", "2*x2"}});
  auto S = linear.ring_without_y();
  CHECK(substitute_phi(P("T_1_1^3", S), linear).is_zero());
  CHECK(render(substitute_phi(P("T_1_1", S), linear)) == "2*x1*t_1");

  ReesProblem mod9(RingSpec::from_modulus(9), {"x1", "x2", "x3"},
                   {{"2*x1^2*x2 + 6*x3", "6*x1*x3", "3*x3^2"}, {"6*x1*x3", "3*x3^2"}});
  auto S1 = mod9.ring_without_y();
  CHECK(substitute_phi(P("x1*x2*T_2_1 - 3*x3*T_1_1", S1), mod9).is_zero());
  CHECK_FALSE(substitute_phi(P("T_1_1", S1), mod9).is_zero());
  CHECK_THROWS_AS(substitute_phi(Polynomial::variable(mod9.ring_with_y(), "y"), mod9), InputError);
}

TEST_CASE("phi is a ring homomorphism and matches the oracle") {
  std::mt19937 rng(3);
  for (long n : {0L, 8L, 27L}) {
    ReesProblem pr(RingSpec::from_modulus(n), {"x1", "x2"}, {{"3*x1 + x2", "x2^2"}, {"2*x1*x2"}});
    auto S = pr.ring_without_y();
    for (int i = 0; i < 60; ++i) {
      Polynomial f = oracle::random_poly(rng, S, 3, 3, 9);
      Polynomial g = oracle::random_poly(rng, S, 3, 3, 9);
      Polynomial pf = substitute_phi(f, pr);
      CHECK(oracle::equal(oracle::from(pf), oracle::phi(f, pr)));
      CHECK(substitute_phi(f * g, pr) == pf * substitute_phi(g, pr));
      CHECK(substitute_phi(f + g, pr) == pf + substitute_phi(g, pr));
    }
  }
}

TEST_CASE("change_ring maps variables by name") {
  auto a = ring(9, {"x1", "x2"});
  auto b = ring(9, {"T_1_1", "x2", "x1"});
  Polynomial f = P("x1^2 + 3*x2", a);
  Polynomial g = change_ring(f, b);
  CHECK(render(g) == "3*x2 + x1^2");
  CHECK(change_ring(g, a) == f);
  CHECK_THROWS_AS(change_ring(P("T_1_1", b), a), InputError);
}
