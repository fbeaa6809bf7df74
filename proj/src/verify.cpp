#include "mrees/verify.hpp"

#include <algorithm>

#include "mrees/error.hpp"

namespace mrees {

ZeroDivisorTest is_nonzerodivisor(const Polynomial& f) {
  const RingSpec& R = f.coeffs();
  if (!R.is_prime_power()) throw InputError("is_nonzerodivisor needs a Z/p^m coefficient ring");
  if (f.is_zero()) return {false, Int(1)};
  for (const auto& t : f.terms())
    if (R.is_unit(t.coeff)) return {true, std::nullopt};
  Int w;
  mpz_pow_ui(w.get_mpz_t(), R.prime().get_mpz_t(), R.exponent() - 1);
  return {false, w};
}

KernelReport kernel_check(std::span<const Polynomial> gens, const ReesProblem& problem) {
  KernelReport report;
  for (const auto& g : gens) {
    Polynomial img = substitute_phi(g, problem);
    if (!img.is_zero()) report.pass = false;
    report.images.push_back(std::move(img));
  }
  return report;
}

std::vector<std::string> default_matrix_rows(const ReesProblem& problem) {
  std::vector<std::string> rows;
  for (unsigned j = 1; j <= problem.num_ideals(); ++j) {
    std::vector<unsigned> ks = problem.group(j);
    std::sort(ks.begin(), ks.end());
    for (unsigned k : ks) rows.push_back(t_variable_name(k, j));
  }
  return rows;
}

std::vector<Polynomial> matrix_ideal(const ReesProblem& problem, const PolyMatrix& phi,
                                     const std::vector<std::string>& rows) {
  const auto names = rows.empty() ? default_matrix_rows(problem) : rows;
  if (phi.size() != names.size())
    throw InputError("matrix has " + std::to_string(phi.size()) + " rows, expected " +
                     std::to_string(names.size()));
  const std::size_t cols = phi.empty() ? 0 : phi[0].size();
  for (const auto& row : phi)
    if (row.size() != cols) throw InputError("matrix rows have different lengths");

  const auto& S = problem.ring_without_y();
  std::vector<Polynomial> ts;
  for (const auto& n : names) {
    if (!S->vars.find(n)) throw InputError("unknown row variable " + n);
    ts.push_back(Polynomial::variable(S, n));
  }
  std::vector<Polynomial> out;
  for (std::size_t c = 0; c < cols; ++c) {
    Polynomial e(S);
    for (std::size_t r = 0; r < names.size(); ++r) {
      if (phi[r][c].coeffs() != problem.ring()) throw InputError("matrix entry over a different ring");
      e += ts[r] * change_ring(phi[r][c], S);
    }
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

GapReport saturation_gap_report(const ReesProblem& problem, const PolyMatrix& phi,
                                std::vector<Polynomial> probes, const std::vector<std::string>& rows,
                                const ReesOptions& options) {
  const RingSpec& R = problem.ring();
  if (R.is_composite()) throw InputError("gap report needs Z or Z/p^m");
  const auto& S = problem.ring_without_y();

  GapReport report;
  report.matrix_gens = matrix_ideal(problem, phi, rows);
  ReesResult rees = rees_equations(problem, options);
  report.kernel_basis = rees.basis;

  if (probes.empty()) {
    for (unsigned j = 1; j <= problem.num_ideals(); ++j)
      probes.push_back(pow(Polynomial::variable(S, t_variable_name(problem.pivot(j), j)), 3));
  }

  GroebnerBasis kernel_gb = buchberger(rees.basis, options.groebner);
  GroebnerBasis matrix_gb = buchberger(report.matrix_gens, options.groebner);
  for (auto& p : probes) {
    Polynomial q = change_ring(p, S);
    ProbeResult pr{q, member(q, kernel_gb).member, member(q, matrix_gb).member};
    report.probes.push_back(std::move(pr));
  }

  if (R.is_integers()) {
    const auto& Sy = problem.ring_with_y();
    std::vector<Polynomial> gens;
    Polynomial h = change_ring(saturation_multiplier(problem, false), Sy);
    gens.push_back(Polynomial::variable(Sy, "y") * h - Polynomial::constant(Sy, 1));
    for (const auto& g : report.matrix_gens) gens.push_back(change_ring(g, Sy));
    GroebnerBasis sat = eliminate(buchberger(gens, options.groebner), {"y"});
    std::vector<Polynomial> saturated;
    for (const auto& g : sat.basis) saturated.push_back(change_ring(g, S));
    report.saturation_matches = ideal_equal(saturated, rees.basis, options.groebner);
  }
  return report;
}

}  // namespace mrees
