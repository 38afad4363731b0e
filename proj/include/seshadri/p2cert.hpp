#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/exactnum.hpp"
#include "seshadri/linsys.hpp"

namespace seshadri {

/// Divisor-class candidate tL - m(E_1 + ... + E_r) - kE_i for a
/// weakly-submaximal curve through r >= 10 general plane points.
struct CandidateTriple {
  long t = 0;
  long m = 0;
  long k = 0;
  long r = 0;
};

/// Checks the arithmetic restrictions (b), (c), (d) on (t, m, k):
///   (b) -m < k and k^2 (r-1) < r min{m, m+k};
///   (c) the three-branch window on t^2 by the sign of k;
///   (d) t^2 - (m+k)^2 - (r-1) m^2 - 3t + mr + k >= -2.
/// All comparisons are exact. Requires r >= 10.
bool satisfies_restrictions(const CandidateTriple& c);

/// The ratio t / (m r + k) a curve in the class would force on the
/// multi-point Seshadri quotient.
Rat ratio(const CandidateTriple& c);

struct CandidateList {
  std::vector<CandidateTriple> triples;  // sorted by ratio
  bool complete = false;  // true when the window bounds exclude all m > m_max
  long m_bound = 0;       // smallest m cutoff proven sufficient
};

/// All candidates with ratio < alpha and multiplicity m <= m_max.
/// Requires alpha < sqrt(1/r) exactly.
CandidateList enumerate_candidates(long r, const Rat& alpha, long m_max);

enum class CertVerdict { Certified, Refuted, Unknown };

struct CertificationReport {
  long r = 0;
  Rat alpha;
  CandidateList candidates;
  std::vector<std::pair<CandidateTriple, ProbeResult>> probes;
  std::vector<CandidateTriple> skipped;  // matrices over the size budget
  CertVerdict verdict = CertVerdict::Unknown;
  std::optional<std::size_t> refuting_probe;  // index into probes
};

/// Certifies eps(r general points) >= alpha by proving every candidate
/// system L(t; m+k, m^(r-1)) empty. Certified requires a complete candidate
/// list with every probe CertifiedEmpty; a LikelyNonempty probe whose exact
/// kernel vector survives re-checking refutes the certification attempt.
CertificationReport certify_lower_bound(long r, const Rat& alpha, long m_max,
                                        long trials, std::uint64_t seed,
                                        long size_budget);

/// One row of the published estimate table: the certified fraction, its
/// printed decimal, the system not yet proven empty, and the conjectured
/// value 1/sqrt(r).
struct TableRow {
  long r;
  long frac_num;
  long frac_den;
  const char* approx;       // printed decimal of the fraction
  long t;                   // degree of the non-checked system L(t; m^r)
  long m;                   // its multiplicity
  const char* conjectured;  // printed decimal of 1/sqrt(r)
};

const std::vector<TableRow>& estimate_table();

struct RowReport {
  long r;
  bool fraction_consistent;   // printed fraction equals t/(m r)
  bool approx_matches;        // printed decimal within 5e-10 of the fraction
  bool conjectured_matches;   // printed decimal within 5e-10 of 1/sqrt(r)
  bool restrictions_hold;     // (t, m, 0, r) passes (b)-(d)
  bool all() const {
    return fraction_consistent && approx_matches && conjectured_matches &&
           restrictions_hold;
  }
};

/// Verifies all 21 rows of the embedded estimate table.
std::vector<RowReport> verify_table();

}  // namespace seshadri
