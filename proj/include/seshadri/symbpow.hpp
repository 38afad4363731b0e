#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/exactnum.hpp"

namespace seshadri {

/// Monomial ideal as a minimal generator set of exponent vectors. The
/// factory minimalizes: no generator divides another.
struct MonomialIdeal {
  int num_vars = 0;
  std::vector<std::vector<int>> gens;

  static MonomialIdeal make(int num_vars, std::vector<std::vector<int>> gens);
  bool is_zero() const { return gens.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
};

/// I cap J by pairwise least common multiples, minimalized.
MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimal generators of I^m. m = 0 yields the unit ideal.
MonomialIdeal mono_power(const MonomialIdeal& ideal, long m);

/// J subseteq I: every generator of J is divisible by a generator of I.
bool mono_contains(const MonomialIdeal& ideal, const MonomialIdeal& sub);

/// Minimal primes of a squarefree monomial ideal, each a sorted list of
/// variable indices (the minimal covers of the generator supports).
std::vector<std::vector<int>> minimal_primes_squarefree(
    const MonomialIdeal& ideal);

/// I^(m) = intersection of P^m over the minimal primes P; variable-generated
/// primes are complete intersections, so P^(m) = P^m.
MonomialIdeal symbolic_power_squarefree(const MonomialIdeal& ideal, long m);

/// Whether I^(m) is contained in I^r.
bool check_symbolic_in_power(const MonomialIdeal& ideal, long m, long r);

/// Least total degree among the minimal generators.
long alpha(const MonomialIdeal& ideal);

/// Maximum height of a minimal prime (the codimension).
int codim_squarefree(const MonomialIdeal& ideal);

/// Star configuration Z(N, s, e): the union of the codimension-e
/// intersections of s generic hyperplanes in projective N-space.
struct StarConfig {
  int N = 2;
  long s = 3;
  int e = 2;
  void validate() const;
};

/// alpha of the m-th symbolic power in the cases with a closed form:
/// m = 1, e | m, and e = N. Unknown (nullopt) otherwise.
std::optional<long> star_alpha(const StarConfig& cfg, long m);

struct StarInvariants {
  Rat gamma;                     // s/e
  Rat rho_lower;                 // alpha/gamma = e(s-e+1)/s
  std::optional<long> reg;       // s-N+1 when e = N
  std::optional<Rat> rho_exact;  // N(s-N+1)/s when e = N
  std::optional<SeshadriValue> seshadri;  // (s/(N C(s,N)))^(1/(N-1)) when e = N
};
StarInvariants star_invariants(const StarConfig& cfg);

enum class Containment { NotContained, Contained, Inconclusive };

struct ContainmentVerdict {
  Containment verdict = Containment::Inconclusive;
  std::string via;  // the criterion that decided
};

/// alpha comparison criteria: alpha_m < r*alpha_I refutes containment;
/// r*reg <= alpha_m proves it when the codimension is maximal.
ContainmentVerdict containment_criteria(long alpha_m, long alpha_I, long r,
                                        std::optional<long> reg,
                                        bool codim_is_N);

struct GenericPointsCertificate {
  bool holds = false;
  long reg_bound = 0;           // least t with C(t+N,N) >= j, plus one
  SeshadriValue eps_lower;      // ((j-1)/j) * (j-1)^(-1/N)
  SeshadriValue gamma_lower;    // j * eps_lower^(N-1)
  Rat threshold;                // (rN - (N-1)) / r
};

/// Checks the symbolic-power containment bound for j generic points in
/// projective N-space: holds when reg_bound / gamma_lower < threshold,
/// decided exactly in root arithmetic.
GenericPointsCertificate generic_points_check(int N, long j, long r);

/// The m = 3, r = 2 containment question for plane star configurations:
/// always affirmative, via the regularity criterion.
bool huneke_star_check(long s);

/// Explicit rational realization of Z(2, s, 2): pairwise intersection
/// points (-(i+j), -ij) of the lines y = ix + i^2, i = 1..s.
std::vector<std::pair<Rat, Rat>> star_points_p2(long s);

/// Number of k-subsets of an n-set.
Int binomial(long n, long k);

}  // namespace seshadri
