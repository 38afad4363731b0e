#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seshadri/exactnum.hpp"

namespace seshadri {

// Citation tags attached to computed values. Each names the classification
// result the value comes from.
namespace cite {
inline constexpr const char* kUpperBound = "intersection-upper-bound";
inline constexpr const char* kAbelianFloor = "abelian-ample-floor";
inline constexpr const char* kAbelianSimpleFloor = "abelian-simple-four-thirds";
inline constexpr const char* kAbelianEllipticFloor =
    "abelian-elliptic-degree-floor";
inline constexpr const char* kAbelianPell = "abelian-rank-one-pell-value";
inline constexpr const char* kAbelianSquare = "abelian-rank-one-square";
inline constexpr const char* kHalfPeriod = "abelian-half-period-multipoint";
inline constexpr const char* kMultiPointTrivial = "multi-point-trivial-floor";
inline constexpr const char* kRuledPositive = "ruled-surface-e-positive";
inline constexpr const char* kRuledNonpositive = "ruled-surface-e-nonpositive";
inline constexpr const char* kDelPezzo = "del-pezzo-anticanonical";
inline constexpr const char* kK3Square = "k3-rank-one-square";
inline constexpr const char* kK3Floor = "k3-rank-one-floor";
inline constexpr const char* kK3Exceptional = "k3-rank-one-exceptional-pair";
inline constexpr const char* kGentype = "general-type-canonical-values";
inline constexpr const char* kCanonicalSlope = "canonical-slope-lower-bound";
inline constexpr const char* kEpsRL = "multi-point-very-ample-floor";
inline constexpr const char* kSSlopeSingle = "s-slope-classification";
inline constexpr const char* kSSlopeMulti = "s-slope-multi-classification";
inline constexpr const char* kEnriques = "enriques-lower-bound";
inline constexpr const char* kEnriquesSpecial = "enriques-special-half";
inline constexpr const char* kEinLazarsfeld = "ein-lazarsfeld-surface-floor";
inline constexpr const char* kEKL = "ekl-dimension-floor";
inline constexpr const char* kSpanned = "spanned-bundle-floor";
inline constexpr const char* kJets = "jet-generation-floor";
inline constexpr const char* kSteffens = "steffens-rank-one-floor";
inline constexpr const char* kEmbeddedGrid = "embedded-surface-value-grid";
}  // namespace cite

struct AbelianSurfaceSpec {
  Int d = 1;                    // polarization type (1, d)
  bool simple = false;
  bool rank_one = false;        // Picard number one, forces simple
  std::optional<Int> elliptic_min_degree;  // minimal degree of an elliptic curve
};

struct RuledSurfaceSpec {
  Int e = 0;
  Int a = 0;
  Int b = 0;
  bool point_on_sigma = false;  // on the section (e > 0) / on a section class (e = 0)
};

/// A value together with the citations contributing its endpoints, plus the
/// exceptional candidate pairs some classifications carry.
struct BoundReport {
  SeshadriValue value;
  std::vector<std::string> citations;
  std::vector<std::pair<Int, Rat>> exceptional_pairs;  // (L^2, candidate value)
};

/// (L^n / r)^(1/n): the intersection-theoretic upper bound for the
/// Seshadri constant at r distinct points.
SeshadriValue upper_bound(const Int& Ln, unsigned long n, const Int& r);

/// Exact one-point value on an abelian surface of type (1,d) with Picard
/// number one: sqrt(2d) when rational, otherwise the Pell-equation value
/// 2d*k0/ell0 for D = 2d.
SeshadriValue abelian_rank1(const Int& d);

/// Certified [lower, upper] interval for an abelian surface of type (1,d)
/// from the applicable floor and ceiling results.
BoundReport abelian_bounds(const AbelianSurfaceSpec& spec);

/// Multi-point value at r of the sixteen half-period points: exact
/// sqrt(2d/r) in the rational case, otherwise a certified interval.
SeshadriValue abelian_halfperiod_multipoint(const Int& d, const Int& r);

/// Closed-form values on ruled surfaces for the class a*sigma + b*f.
SeshadriValue ruled_e_positive(const RuledSurfaceSpec& spec);
SeshadriValue ruled_e_nonpositive(const RuledSurfaceSpec& spec);

enum class DelPezzoPosition { General, Special, Special12 };

/// Anticanonical Seshadri constants on the blow-up of the plane in r <= 8
/// general points. Special12 is the at-most-twelve exceptional points case
/// and is legal only for r = 8.
SeshadriValue delpezzo_anticanonical(int r, DelPezzoPosition position);

/// K3 surface with Picard group Z[L]: exact value when L^2 is a square and
/// no exceptional pair matches; otherwise the floor/ceiling interval with
/// the matching exceptional candidate pairs listed.
BoundReport k3_rank1(const Int& L2);

/// Possible values in (0,1) of the canonical Seshadri constant on a
/// minimal surface of general type, by the size of K^2.
struct GentypeValues {
  bool infinite_family = false;  // true for K^2 = 1: all (m-1)/m, m >= 2
  std::vector<Rat> values;       // explicit members (first ten when infinite)
};
GentypeValues gentype_small_values(const Int& K2);

/// 2 / (1 + sqrt(4*sigma + 13)). Exact when the radicand is a perfect
/// square; otherwise a certified rational enclosure (the value is a
/// quadratic irrational outside the exact/root value model).
SeshadriValue canonical_slope_lower_bound(const Rat& sigma);

/// The maximum of the three finite sets defining the multi-point floor for
/// very ample bundles with l = L^2 at r general points.
Rat eps_rl(const Int& r, const Int& l);

struct SlopeClassification {
  bool below_threshold = false;  // false means no conclusion
  bool fibered_candidate = false;
  bool matches_cubic = false;           // single-point case only
  bool matches_rational_genus3 = false; // single-point case only
  bool matches_minimal_degree = false;  // multi-point case only
  SeshadriValue threshold;
};

/// Classification by S-slope. mode_r = 0 requests the single-point
/// classification, otherwise the r-point one (r >= 2).
SlopeClassification sslope_classify(const Int& mode_r,
                                    const SeshadriValue& sigma);

/// min of the genus-0 and genus-1 constants and sqrt(L^2)/4.
SeshadriValue enriques_lower_bound(const SeshadriValue& eps0,
                                   const SeshadriValue& eps1, const Int& L2);
/// The value 1/2 forced by the (p_a = 0, L.E = 1, mult 2) configuration,
/// the only way an Enriques surface gets below 1.
SeshadriValue enriques_special_value();

// Universal very-general-point floors used when assembling bound reports.
SeshadriValue ein_lazarsfeld_floor();             // surfaces: >= 1
SeshadriValue ekl_floor(unsigned long n);         // dimension n: >= 1/n
SeshadriValue spanned_floor();                    // ample and spanned: >= 1
SeshadriValue jet_generation_floor(const Int& s); // generates s-jets: >= s
SeshadriValue steffens_floor(const Int& L2);      // rank one: >= floor(sqrt(L^2))

/// Admissible local values a/b strictly between 1 and 2 on smooth degree-d
/// embedded surfaces without lines: 3 <= a <= d, a/2 < b < a.
std::vector<Rat> embedded_surface_value_grid(const Int& d);

}  // namespace seshadri
