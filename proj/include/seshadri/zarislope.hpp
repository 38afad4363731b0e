#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seshadri/exactnum.hpp"

namespace seshadri {

struct DivisorClass {
  std::vector<Rat> coeffs;
};

/// Intersection data for a set of irreducible components on a surface:
/// labels, the symmetric Gram matrix of pairwise intersection numbers, and
/// optionally the pairings against the canonical class and a polarization.
/// The module works purely from these numbers; it never verifies that a
/// geometric surface realizes them.
struct IntersectionData {
  std::vector<std::string> labels;
  std::vector<std::vector<Int>> gram;
  std::optional<std::vector<Int>> k_dot;  // K.C_i
  std::optional<std::vector<Int>> l_dot;  // L.C_i
  std::optional<Int> l_self;              // L^2
  std::optional<Int> k_dot_l;             // K.L
  unsigned long dim = 2;

  std::size_t size() const { return gram.size(); }
  void validate() const;
};

/// Pairing of a divisor class (in component coordinates) against a vector
/// of intersection numbers with the components.
Rat pair_against(const std::vector<Int>& against, const DivisorClass& d);

struct ZariskiDecomposition {
  DivisorClass positive;
  DivisorClass negative;
  std::vector<std::size_t> support;  // components carrying the negative part
};

/// Zariski decomposition D = P + N computed by the iterative procedure:
/// seed the support with the components D meets negatively, solve for the
/// negative part orthogonal to its support, enlarge the support with any
/// component the remainder meets negatively, repeat to a fixpoint. Fails
/// when the data do not describe the full negative locus of an effective
/// divisor (singular or non-negative-definite support, or a negative part
/// with negative multiplicities).
ZariskiDecomposition zariski_decompose(const IntersectionData& data,
                                       const DivisorClass& d);

/// Slope of a polarized n-fold from the two leading Hilbert coefficients:
/// -n K.L^(n-1) / (2 L^n).
Rat slope_mu(unsigned long n, const Rat& K_Ln1, const Rat& Ln);

/// Slope of a divisor Z on a surface with respect to the parameter c:
/// 3(2 L.Z - c(K.Z + Z^2)) / (2c(3 L.Z - c Z^2)).
Rat slope_mu_c(const Rat& LZ, const Rat& KZ, const Rat& Z2, const Rat& c);

struct DestabVerdict {
  bool destabilizes = false;
  std::optional<Rat> witness;       // rational c with mu_c(c) < mu
  std::optional<Rat> mu_c_witness;  // value of mu_c at the witness
};

/// Decides whether some c in (0, c_max] has mu_c(c) < mu, by exact sign
/// analysis of the two quadratics obtained after clearing denominators.
/// Poles of mu_c inside the range split it. The caller supplies c_max as a
/// certified lower bound for the Seshadri constant of Z.
DestabVerdict destabilizes(const Rat& LZ, const Rat& KZ, const Rat& Z2,
                           const Rat& mu, const Rat& c_max);

/// Arithmetic genus from adjunction: 1 + (K.Z + Z^2)/2.
Rat arithmetic_genus(const Int& KZ, const Int& Z2);

}  // namespace seshadri
