#include "seshadri/p2cert.hpp"

#include <algorithm>

namespace seshadri {

namespace {

Int max_int(const Int& a, const Int& b) { return a > b ? a : b; }

}  // namespace

bool satisfies_restrictions(const CandidateTriple& c) {
  if (c.r < 10)
    throw DomainError("satisfies_restrictions: requires r >= 10 points");
  if (c.m <= 0) return false;
  if (c.t <= 0) return false;
  const Int t = c.t, m = c.m, k = c.k, r = c.r;

  // (b)
  if (!(-m < k)) return false;
  Int min_mk = k >= 0 ? m : Int(m + k);
  if (!(k * k * (r - 1) < r * min_mk)) return false;

  // (c)
  const Int t2 = t * t;
  const Int base = m * m * r + 2 * m * k;
  if (k > 0) {
    Int lower = base + max_int(k * k - m, 0);
    if (!(lower <= t2)) return false;
    if (!(r * t2 <= r * base + k * k)) return false;
  } else if (k == 0) {
    if (!(m * m * r - m <= t2)) return false;
    if (!(t2 < m * m * r)) return false;
  } else {
    Int lower = base + max_int(k * k - (m + k), 0);
    if (!(lower <= t2)) return false;
    if (!(r * t2 <= r * base + k * k)) return false;
  }

  // (d)
  Int d = t2 - (m + k) * (m + k) - (r - 1) * m * m - 3 * t + m * r + k;
  return d >= -2;
}

Rat ratio(const CandidateTriple& c) {
  Int den = Int(c.m) * c.r + c.k;
  if (den <= 0) throw DomainError("ratio: m r + k must be positive");
  return rat(Int(c.t), den);
}

CandidateList enumerate_candidates(long r, const Rat& alpha, long m_max) {
  if (r < 10) throw DomainError("enumerate_candidates: requires r >= 10");
  if (m_max < 1) throw DomainError("enumerate_candidates: m_max must be >= 1");
  if (compare_root(alpha, rat(1, r), 2) != Ordering::Less)
    throw DomainError("enumerate_candidates: alpha must be below sqrt(1/r)");

  CandidateList out;
  if (sgn(alpha) <= 0) {  // ratios are positive, so nothing qualifies
    out.complete = true;
    out.m_bound = 0;
    return out;
  }

  // Any candidate satisfies t^2 >= m^2 r + 2mk - m (window lower bounds)
  // and t^2 < alpha^2 (mr+k)^2 (the ratio cut), which together force
  // m < r / ((r-1)(r-2)(1 - alpha^2 r)). Scanning up to that cutoff is
  // therefore exhaustive.
  Rat beta = alpha * alpha;
  Rat cutoff = Rat(r) / (Rat(r - 1) * Rat(r - 2) * (1 - beta * Rat(r)));
  Int floor_cutoff = cutoff.get_num() / cutoff.get_den();
  out.m_bound = floor_cutoff.get_si();
  if (Rat(floor_cutoff) == cutoff && out.m_bound > 0) --out.m_bound;
  out.complete = m_max >= out.m_bound;

  const long m_stop = std::min(m_max, out.m_bound);
  for (long m = 1; m <= m_stop; ++m) {
    // k window from (b): k > -m, and k^2 (r-1) < r min{m, m+k}.
    for (long k = -m + 1;; ++k) {
      Int kk = Int(k) * k;
      Int min_mk = k >= 0 ? Int(m) : Int(m + k);
      if (k >= 0 && !(kk * (r - 1) < Int(r) * min_mk)) break;
      if (k < 0 && !(kk * (r - 1) < Int(r) * min_mk)) continue;

      Int base = Int(m) * m * r + 2 * Int(m) * k;
      Int lower;
      if (k > 0)
        lower = base + max_int(kk - m, 0);
      else if (k == 0)
        lower = base - m;
      else
        lower = base + max_int(kk - (m + k), 0);
      if (lower < 1) lower = 1;
      Int t_min = isqrt(lower);
      if (t_min * t_min < lower) ++t_min;
      // Upper end of the window: r t^2 <= r base + k^2 (strict at k = 0).
      Int t_max = isqrt((Int(r) * base + kk) / r);
      while (Int(r) * (t_max + 1) * (t_max + 1) <= Int(r) * base + kk)
        ++t_max;
      while (t_max >= t_min && Int(r) * t_max * t_max > Int(r) * base + kk)
        --t_max;
      for (Int t = t_min; t <= t_max; ++t) {
        CandidateTriple cand{t.get_si(), m, k, r};
        if (!satisfies_restrictions(cand)) continue;
        if (compare_rat(ratio(cand), alpha) != Ordering::Less) continue;
        out.triples.push_back(cand);
      }
    }
  }
  std::sort(out.triples.begin(), out.triples.end(),
            [](const CandidateTriple& a, const CandidateTriple& b) {
              Ordering o = compare_rat(ratio(a), ratio(b));
              if (o != Ordering::Equal) return o == Ordering::Less;
              if (a.t != b.t) return a.t < b.t;
              if (a.m != b.m) return a.m < b.m;
              return a.k < b.k;
            });
  return out;
}

CertificationReport certify_lower_bound(long r, const Rat& alpha, long m_max,
                                        long trials, std::uint64_t seed,
                                        long size_budget) {
  CertificationReport report;
  report.r = r;
  report.alpha = alpha;
  report.candidates = enumerate_candidates(r, alpha, m_max);

  bool all_empty = true;
  for (std::size_t i = 0; i < report.candidates.triples.size(); ++i) {
    const CandidateTriple& c = report.candidates.triples[i];
    LinearSystem2D sys;
    sys.degree = c.t;
    sys.mults.push_back(c.m + c.k);  // the distinguished point comes first
    for (long j = 1; j < c.r; ++j) sys.mults.push_back(c.m);
    long rows = 0;
    for (long mm : sys.mults) rows += binom2(mm + 1);
    long cols = monomial_count(sys.degree);
    if (std::max(rows, cols) > size_budget) {
      report.skipped.push_back(c);
      all_empty = false;
      continue;
    }
    ProbeResult probe =
        interpolation_rank(sys, trials, mix_seed(seed, static_cast<std::uint64_t>(i)));
    report.probes.emplace_back(c, probe);
    if (probe.verdict == ProbeVerdict::LikelyNonempty) {
      all_empty = false;
      // A kernel vector that exactly annihilates the conditions matrix at
      // the reported points is a genuine curve through those points.
      IMatrix m = conditions_matrix(sys.degree, sys.mults, probe.points);
      bool annihilates = !probe.kernel_basis_vector.empty();
      for (std::size_t row = 0; annihilates && row < m.rows(); ++row) {
        Int s = 0;
        for (std::size_t col = 0; col < m.cols(); ++col)
          s += m.at(row, col) * probe.kernel_basis_vector[col];
        if (s != 0) annihilates = false;
      }
      if (annihilates && !report.refuting_probe) {
        report.refuting_probe = report.probes.size() - 1;
        report.verdict = CertVerdict::Refuted;
      }
    }
  }
  if (report.verdict != CertVerdict::Refuted) {
    report.verdict = (all_empty && report.candidates.complete)
                         ? CertVerdict::Certified
                         : CertVerdict::Unknown;
  }
  return report;
}

const std::vector<TableRow>& estimate_table() {
  static const std::vector<TableRow> rows = {
      {10, 313, 990, "0.3161616162", 313, 99, "0.3162277660"},
      {11, 242, 803, "0.3013698630", 242, 73, "0.3015113446"},
      {12, 277, 960, "0.2885416667", 277, 80, "0.2886751346"},
      {13, 602, 2171, "0.2772915707", 602, 167, "0.2773500981"},
      {14, 389, 1456, "0.2671703297", 389, 104, "0.2672612419"},
      {15, 484, 1875, "0.2581333333", 484, 125, "0.2581988897"},
      {17, 305, 1258, "0.2424483307", 305, 74, "0.2425356250"},
      {18, 369, 1566, "0.2356321839", 369, 87, "0.2357022604"},
      {19, 741, 3230, "0.2294117647", 741, 170, "0.2294157339"},
      {20, 796, 3560, "0.2235955056", 796, 178, "0.2236067977"},
      {21, 1865, 8547, "0.2182052182", 1865, 407, "0.2182178902"},
      {22, 924, 4334, "0.2131979695", 924, 197, "0.2132007164"},
      {23, 585, 2806, "0.2084818247", 585, 122, "0.2085144141"},
      {24, 965, 4728, "0.2041032149", 965, 197, "0.2041241452"},
      {26, 622, 3172, "0.1960907945", 622, 122, "0.1961161351"},
      {27, 956, 4968, "0.1924315620", 956, 184, "0.1924500897"},
      {28, 2434, 12880, "0.1889751553", 2434, 460, "0.1889822365"},
      {29, 2364, 12731, "0.1856884769", 2364, 439, "0.1856953382"},
      {30, 2388, 13080, "0.1825688073", 2388, 436, "0.1825741858"},
      {31, 10729, 59737, "0.1796039306", 10729, 1927, "0.1796053020"},
      {32, 1137, 6432, "0.1767723881", 1137, 201, "0.1767766953"},
  };
  return rows;
}

std::vector<RowReport> verify_table() {
  std::vector<RowReport> out;
  const Rat tol = rat(5, 10000000000L);  // 5e-10
  for (const TableRow& row : estimate_table()) {
    RowReport rep{};
    rep.r = row.r;
    Rat frac = rat(row.frac_num, row.frac_den);
    rep.fraction_consistent = frac == rat(Int(row.t), Int(row.m) * row.r);
    Rat approx = rat_from_decimal(row.approx);
    rep.approx_matches = abs(approx - frac) <= tol;
    // conjectured value is 1/sqrt(r): both decimal +- tol must bracket it.
    Rat conj = rat_from_decimal(row.conjectured);
    Rat inv_r = rat(1, row.r);
    rep.conjectured_matches =
        compare_root(conj + tol, inv_r, 2) != Ordering::Less &&
        compare_root(conj - tol, inv_r, 2) != Ordering::Greater;
    rep.restrictions_hold =
        satisfies_restrictions(CandidateTriple{row.t, row.m, 0, row.r});
    out.push_back(rep);
  }
  return out;
}

}  // namespace seshadri
