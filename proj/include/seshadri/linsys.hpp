#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "seshadri/exactnum.hpp"
#include "seshadri/linalg.hpp"

namespace seshadri {

/// Plane-curve system L(d; m_1, ..., m_r): curves of degree d with
/// multiplicity at least m_i at the i-th point. Points are either generic
/// (sampled) or explicit rational affine points.
struct LinearSystem2D {
  long degree = 0;
  std::vector<long> mults;
  /// Explicit pairwise-distinct affine points; empty means generic points.
  std::vector<std::pair<Rat, Rat>> explicit_points;

  bool generic() const { return explicit_points.empty(); }
  void validate() const;
};

long binom2(long n);            // C(n, 2)
long monomial_count(long d);    // C(d+2, 2)

/// Expected dimension C(d+2,2) - sum C(m_i+1,2) - 1.
long virtual_dim(const LinearSystem2D& sys);

enum class ProbeVerdict { CertifiedEmpty, LikelyNonempty };

/// Outcome of exact rank probing. CertifiedEmpty is a certificate (full
/// column rank can only drop under specialization, so full rank at any
/// sampled points proves generic emptiness); LikelyNonempty is a Monte
/// Carlo claim carrying the trial count and an exact kernel vector at the
/// reported points.
struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::LikelyNonempty;
  long kernel_dim = 0;  // C(d+2,2) - rank
  long rank = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<Rat, Rat>> points;  // points of the reported trial
  std::vector<Int> kernel_basis_vector;     // empty when CertifiedEmpty
};

/// Conditions matrix of the system at the given points: one row per
/// vanishing partial derivative of order < m_i, one column per monomial of
/// degree <= d. Rows are scaled to integers and content-reduced.
IMatrix conditions_matrix(long degree, const std::vector<long>& mults,
                          const std::vector<std::pair<Rat, Rat>>& points);

/// Exact rank probe. Generic systems sample integer coordinates in
/// [-1000, 1000] from per-trial sub-seeds derived from (seed, trial) and
/// keep the maximum rank; explicit systems use exactly one evaluation.
ProbeResult interpolation_rank(const LinearSystem2D& sys, long trials,
                               std::uint64_t seed);

/// Observed kernel dimension minus max(0, vdim + 1); zero means nonspecial.
long speciality(const LinearSystem2D& sys, long trials, std::uint64_t seed);

/// Deterministic sub-seed stream (splitmix64 mixing).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);
/// Next state and value of the splitmix64 generator.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace seshadri
