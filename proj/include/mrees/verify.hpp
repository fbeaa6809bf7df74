#pragma once

// Independent checks on computed kernels: phi-images, the zero-divisor
// predicate over Z/p^m and membership against a presentation-matrix ideal.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrees/rees.hpp"

namespace mrees {

struct ZeroDivisorTest {
  bool nonzerodivisor = false;
  // Nonzero constant g with f * g = 0 when f is a zero divisor.
  std::optional<Int> witness;
};

// Over Z/p^m: f is a nonzerodivisor iff some coefficient is a unit.
ZeroDivisorTest is_nonzerodivisor(const Polynomial& f);

struct KernelReport {
  bool pass = true;
  std::vector<Polynomial> images;  // phi(g) in R[x, t]
};

KernelReport kernel_check(std::span<const Polynomial> gens, const ReesProblem& problem);

// Entries over R[x]; one row per T-variable.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Default row order: j ascending, then k ascending within I_j.
std::vector<std::string> default_matrix_rows(const ReesProblem& problem);

// Nonzero entries of (T_row_1, ..., T_row_s) * Phi in R[T, x].
std::vector<Polynomial> matrix_ideal(const ReesProblem& problem, const PolyMatrix& phi,
                                     const std::vector<std::string>& rows = {});

struct ProbeResult {
  Polynomial probe;
  bool in_kernel = false;         // member of the computed defining ideal
  bool in_matrix_ideal = false;   // member of the matrix ideal itself
};

struct GapReport {
  std::vector<Polynomial> matrix_gens;
  std::vector<Polynomial> kernel_basis;
  std::vector<ProbeResult> probes;
  // Over Z: whether the matrix ideal saturated by the multiplier equals the kernel.
  std::optional<bool> saturation_matches;
};

// Probes default to the cube of each pivot T-variable.
GapReport saturation_gap_report(const ReesProblem& problem, const PolyMatrix& phi,
                                std::vector<Polynomial> probes = {},
                                const std::vector<std::string>& rows = {},
                                const ReesOptions& options = {});

}  // namespace mrees
