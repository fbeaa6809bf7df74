#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "mrees/error.hpp"
#include "mrees/verify.hpp"

using namespace mrees;

namespace {

PolyRingPtr ring(long n, std::vector<std::string> names) {
  return make_poly_ring(RingSpec::from_modulus(n), VariableSet::from_names(names));
}

Polynomial P(const std::string& s, const PolyRingPtr& r) { return parse_polynomial(s, r); }

ReesProblem linear() { return ReesProblem(RingSpec::from_modulus(8), {"x1", "x2"}, {{"2*x1", "2*x2"}}); }

PolyMatrix lin_phi(const ReesProblem& pr) {
  auto X = pr.x_ring();
  return {{P("-x2", X), P("4", X), Polynomial(X)}, {P("x1", X), Polynomial(X), P("4", X)}};
}

}  // namespace

TEST_CASE("zero-divisor predicate examples") {
  auto r9 = ring(9, {"x", "x1", "x2", "x3"});
  CHECK(is_nonzerodivisor(P("2*x1^2*x2 + 6*x3", r9)).nonzerodivisor);
  CHECK(is_nonzerodivisor(P("3*x + 1", r9)).nonzerodivisor);
  auto r8 = ring(8, {"x1"});
  auto z = is_nonzerodivisor(P("2*x1", r8));
  CHECK_FALSE(z.nonzerodivisor);
  REQUIRE(z.witness);
  CHECK(*z.witness == 4);
  CHECK(P("2*x1", r8).scaled(*z.witness).is_zero());
  auto zero = is_nonzerodivisor(Polynomial(r8));
  CHECK_FALSE(zero.nonzerodivisor);
  CHECK(*zero.witness == 1);
  CHECK_THROWS_AS(is_nonzerodivisor(P("x", ring(0, {"x"}))), InputError);
}

TEST_CASE("zero-divisor predicate is consistent with products") {
  std::mt19937 rng(13);
  for (long n : {4L, 8L, 9L, 27L}) {
    auto r = ring(n, {"x1", "x2"});
    for (int i = 0; i < 30; ++i) {
      Polynomial f = oracle::random_poly(rng, r, 3, 2, 30);
      auto z = is_nonzerodivisor(f);
      if (!z.nonzerodivisor) {
        REQUIRE(z.witness);
        CHECK(r->coeffs.reduce(*z.witness) != 0);
        CHECK(f.scaled(*z.witness).is_zero());
        continue;
      }
      for (int k = 0; k < 200; ++k) {
        Polynomial g = oracle::random_poly(rng, r, 3, 2, 30);
        if (g.is_zero()) continue;
        CHECK_FALSE((f * g).is_zero());
      }
    }
  }
}

TEST_CASE("kernel check") {
  ReesProblem p9(RingSpec::from_modulus(9), {"x1", "x2", "x3"},
                  {{"2*x1^2*x2 + 6*x3", "6*x1*x3", "3*x3^2"}, {"6*x1*x3", "3*x3^2"}});
  auto S = p9.ring_without_y();
  std::vector<Polynomial> L;
  for (const char* s :
       {"x1*x2*T_2_1 - 3*x3*T_1_1", "2*x1*T_3_1 - x3*T_2_1", "2*x1*T_3_2 - x3*T_2_2", "3*T_2_1", "T_2_1^2", "3*T_3_1",
        "T_3_1^2", "3*T_2_2", "T_2_2^2", "3*T_3_2", "T_3_2^2", "T_2_1*T_3_1", "T_2_1*T_2_2", "T_2_1*T_3_2",
        "T_3_1*T_2_2", "T_3_1*T_3_2", "T_2_2*T_3_2"})
    L.push_back(P(s, S));
  auto rep = kernel_check(L, p9);
  CHECK(rep.pass);
  CHECK(rep.images.size() == 17);

  auto bad = kernel_check(std::vector{P("T_1_1", S)}, p9);
  CHECK_FALSE(bad.pass);
  CHECK(render(bad.images[0]) == "2*x1^2*x2*t_1 - 3*x3*t_1");
  CHECK(kernel_check(std::vector<Polynomial>{}, p9).pass);
}

TEST_CASE("matrix ideal") {
  auto pr = linear();
  auto S = pr.ring_without_y();
  auto M = matrix_ideal(pr, lin_phi(pr));
  REQUIRE(M.size() == 3);
  CHECK(M[0] == P("x1*T_2_1 - x2*T_1_1", S));
  CHECK(M[1] == P("4*T_1_1", S));
  CHECK(M[2] == P("4*T_2_1", S));

  auto X = pr.x_ring();
  PolyMatrix zero{{Polynomial(X)}, {Polynomial(X)}};
  CHECK(matrix_ideal(pr, zero).empty());
  ReesProblem one(RingSpec::from_modulus(8), {"x1"}, {{"2*x1"}});
  PolyMatrix id{{Polynomial::constant(one.x_ring(), 1)}};
  auto M1 = matrix_ideal(one, id);
  REQUIRE(M1.size() == 1);
  CHECK(render(M1[0]) == "T_1_1");
  CHECK_THROWS_AS(matrix_ideal(pr, id), InputError);
}

TEST_CASE("saturation gap on the zero-divisor example") {
  auto pr = linear();
  auto S = pr.ring_without_y();
  auto rep = saturation_gap_report(pr, lin_phi(pr), {P("T_1_1^3", S), Polynomial(S)});
  REQUIRE(rep.probes.size() == 2);
  CHECK(rep.probes[0].in_kernel);
  CHECK_FALSE(rep.probes[0].in_matrix_ideal);
  CHECK(rep.probes[1].in_kernel);
  CHECK(rep.probes[1].in_matrix_ideal);
  CHECK_FALSE(rep.saturation_matches);

  auto defaults = saturation_gap_report(pr, lin_phi(pr));
  REQUIRE(defaults.probes.size() == 1);
  CHECK(defaults.probes[0].probe == P("T_1_1^3", S));
}

TEST_CASE("saturated Koszul matrix ideal over Z equals the kernel") {
  ReesProblem pr(RingSpec::integers(), {"x1", "x2", "x3"},
                 {{"6*x1^2*x2", "3*x1*x3", "5*x1*x3^2"}, {"6*x1^2*x2", "3*x1*x3", "x2*x3"}});
  auto X = pr.x_ring();
  auto rows = default_matrix_rows(pr);
  CHECK(rows == std::vector<std::string>{"T_1_1", "T_2_1", "T_3_1", "T_1_2", "T_2_2", "T_4_2"});
  // Columns are the Koszul syzygies against the pivot of each group.
  auto f = [&](unsigned k) { return pr.generator(k); };
  auto z = Polynomial(X);
  PolyMatrix phi{{-f(2), -f(3), z, z}, {f(1), z, z, z}, {z, f(1), z, z},
                 {z, z, -f(2), -f(4)}, {z, z, f(1), z}, {z, z, z, f(1)}};
  auto rep = saturation_gap_report(pr, phi);
  REQUIRE(rep.saturation_matches);
  CHECK(*rep.saturation_matches);
}
