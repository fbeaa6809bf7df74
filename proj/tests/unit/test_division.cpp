#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "mrees/division.hpp"
#include "mrees/error.hpp"

using namespace mrees;

namespace {

PolyRingPtr ring(long n, std::vector<std::string> names) {
  return make_poly_ring(RingSpec::from_modulus(n), VariableSet::from_names(names));
}

Polynomial P(const std::string& s, const PolyRingPtr& r) { return parse_polynomial(s, r); }

void random_trials(long n, int trials, unsigned seed) {
  std::mt19937 rng(seed);
  auto r = ring(n, {"T_1_1", "T_2_1", "x1", "x2"});
  std::uniform_int_distribution<int> count(1, 3);
  bool ppq = n != 0;
  for (int i = 0; i < trials; ++i) {
    Polynomial f = oracle::random_poly(rng, r, 5, 4, 12);
    std::vector<Polynomial> F;
    int k = count(rng);
    while (static_cast<int>(F.size()) < k) {
      Polynomial g = oracle::random_poly(rng, r, 3, 2, 12);
      if (!g.is_zero()) F.push_back(g);
    }
    DivisionResult d = ppq ? pseudo_divide_ppq(f, F) : pseudo_divide_pid(f, F);
    auto c = oracle::check_division(f, F, d, ppq);
    INFO("f = " << render(f));
    CHECK(c.identity);
    CHECK(c.multiplier);
    CHECK(c.remainder);
    CHECK(c.monotone);
  }
}

}  // namespace

TEST_CASE("PID regime examples") {
  auto r = ring(0, {"T_1_1", "x"});
  auto d = pseudo_divide_pid(P("2*T_1_1 + x", r), std::vector{P("2*T_1_1 + x", r)});
  CHECK(render(d.multiplier) == "2");
  CHECK(render(d.cofactors[0]) == "2");
  CHECK(d.remainder.is_zero());

  auto r2 = ring(0, {"T_1_1", "x"});
  auto e = pseudo_divide_pid(P("x^2", r2), std::vector{P("x*T_1_1", r2)});
  CHECK(render(e.multiplier) == "1");
  CHECK(e.cofactors[0].is_zero());
  CHECK(render(e.remainder) == "x^2");

  CHECK_THROWS_AS(pseudo_divide_pid(P("x", r2), std::vector{Polynomial(r2)}), InputError);
  CHECK_THROWS_AS(pseudo_divide_pid(P("x", ring(8, {"x"})), std::vector{P("x", ring(8, {"x"}))}), InputError);
}

TEST_CASE("prime-power regime examples") {
  auto r = ring(9, {"T_1_1", "x"});
  auto d = pseudo_divide_ppq(P("3*T_1_1", r), std::vector{P("3*T_1_1", r)});
  CHECK(render(d.multiplier) == "1");
  CHECK(render(d.cofactors[0]) == "1");
  CHECK(d.remainder.is_zero());

  auto e = pseudo_divide_ppq(P("T_1_1", r), std::vector{P("3*T_1_1", r)});
  CHECK(render(e.multiplier) == "1");
  CHECK(e.cofactors[0].is_zero());
  CHECK(render(e.remainder) == "T_1_1");

  CHECK_THROWS_AS(pseudo_divide_ppq(P("T_1_1", ring(0, {"T_1_1"})), std::vector{P("T_1_1", ring(0, {"T_1_1"}))}),
                  InputError);
}

TEST_CASE("division identity on random instances") {
  random_trials(0, 150, 1);
  random_trials(8, 150, 2);
  random_trials(27, 150, 3);
}

TEST_CASE("strong reduction") {
  auto r = ring(8, {"T_1_1", "x1"});
  CHECK(strong_reduce(P("4*T_1_1", r), std::vector{P("4*T_1_1", r)}).is_zero());
  CHECK(render(strong_reduce(P("2*T_1_1", r), std::vector{P("4*T_1_1", r)})) == "2*T_1_1");

  std::vector<Polynomial> G{P("4*T_1_1", r), P("x1*T_1_1 - 2*x1", r)};
  StrongReducer red(G);
  Polynomial f = P("6*x1^2*T_1_1^2 + 3*T_1_1 + x1", r);
  Reduction out = red.reduce_with_cofactors(f);
  Polynomial back = out.remainder;
  for (std::size_t i = 0; i < G.size(); ++i) back += out.cofactors[i] * G[i];
  CHECK(back == f);
  for (const auto& t : out.remainder.terms()) CHECK_FALSE(red.top_reducible(t));
}

TEST_CASE("strong reduction preserves phi on a mod-9 kernel basis") {
  ReesProblem pr(RingSpec::from_modulus(9), {"x1", "x2", "x3"},
                 {{"2*x1^2*x2 + 6*x3", "6*x1*x3", "3*x3^2"}, {"6*x1*x3", "3*x3^2"}});
  auto S = pr.ring_without_y();
  std::vector<Polynomial> L;
  for (const char* s : {"x1*x2*T_2_1 - 3*x3*T_1_1", "2*x1*T_3_1 - x3*T_2_1", "2*x1*T_3_2 - x3*T_2_2", "3*T_2_1",
                        "T_2_1^2", "3*T_3_1", "T_3_1^2", "3*T_2_2", "T_2_2^2", "3*T_3_2", "T_3_2^2"})
    L.push_back(P(s, S));
  Polynomial f = P("x1*x2*T_2_1", S);
  Polynomial nf = strong_reduce(f, L);
  CHECK(nf != f);
  CHECK(substitute_phi(nf, pr) == substitute_phi(f, pr));
}
