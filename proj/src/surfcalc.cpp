#include "seshadri/surfcalc.hpp"

#include <algorithm>
#include <set>

namespace seshadri {

SeshadriValue upper_bound(const Int& Ln, unsigned long n, const Int& r) {
  if (Ln < 1) throw DomainError("upper_bound: L^n must be positive");
  if (n < 1) throw DomainError("upper_bound: dimension must be >= 1");
  if (r < 1) throw DomainError("upper_bound: point count must be >= 1");
  return SeshadriValue::root(rat(Ln, r), n, cite::kUpperBound);
}

SeshadriValue abelian_rank1(const Int& d) {
  if (d < 1) throw DomainError("abelian_rank1: d must be >= 1");
  Int D = 2 * d;
  if (is_perfect_square(D))
    return SeshadriValue::exact(Rat(isqrt(D)), cite::kAbelianSquare);
  PellSolution pell = pell_fundamental(D);
  return SeshadriValue::exact(rat(D * pell.k0, pell.ell0), cite::kAbelianPell);
}

BoundReport abelian_bounds(const AbelianSurfaceSpec& spec) {
  if (spec.d < 1) throw DomainError("abelian_bounds: d must be >= 1");
  if (spec.rank_one && !spec.simple)
    throw DomainError("abelian_bounds: rank one implies simple");

  SeshadriValue lower = SeshadriValue::exact(Rat(1), cite::kAbelianFloor);
  std::vector<std::string> lower_cits{cite::kAbelianFloor};
  if (spec.simple) {
    SeshadriValue cand = SeshadriValue::exact(rat(4, 3),
                                              cite::kAbelianSimpleFloor);
    if (value_lt(lower, cand)) {
      lower = cand;
      lower_cits = {cite::kAbelianSimpleFloor};
    }
  }
  // The elliptic-degree bound min(eps_1, sqrt(7d)/2) applies when eps_1 is
  // known. On a simple surface eps_1 is vacuous (no elliptic curves), but
  // that reading is only endorsed for d > 2, where it beats the 4/3 floor.
  if (spec.elliptic_min_degree || (spec.simple && spec.d > 2)) {
    SeshadriValue cand = SeshadriValue::root(rat(7 * spec.d, 4), 2,
                                             cite::kAbelianEllipticFloor);
    if (spec.elliptic_min_degree) {
      SeshadriValue e1 = SeshadriValue::exact(Rat(*spec.elliptic_min_degree),
                                              cite::kAbelianEllipticFloor);
      if (value_lt(e1, cand)) cand = e1;
    }
    if (value_lt(lower, cand)) {
      lower = cand;
      lower_cits = {cite::kAbelianEllipticFloor};
    }
  }

  SeshadriValue upper = abelian_rank1(spec.d);
  std::string upper_cit = upper.provenance();

  if (compare_values(lower, upper) == Ordering::Greater) {
    std::vector<std::string> cits = lower_cits;
    cits.push_back(upper_cit);
    throw InconsistencyError(
        "abelian_bounds: cited lower bound exceeds cited upper bound", cits);
  }
  BoundReport report;
  report.value = SeshadriValue::interval(lower, upper);
  report.citations = lower_cits;
  report.citations.push_back(upper_cit);
  return report;
}

SeshadriValue abelian_halfperiod_multipoint(const Int& d, const Int& r) {
  if (d < 1) throw DomainError("half-period multipoint: d must be >= 1");
  if (r < 1 || r > 16)
    throw DomainError("half-period multipoint: r must be in 1..16");
  Rat q = rat(2 * d, r);
  Rat root_out;
  if (exact_nth_root(q, 2, root_out))
    return SeshadriValue::exact(root_out, cite::kHalfPeriod);
  // Upper bound: the r-point intersection bound, sharpened by the Pell
  // value when sqrt(2d) is irrational.
  SeshadriValue upper = upper_bound(2 * d, 2, r);
  if (!is_perfect_square(Int(2 * d))) {
    SeshadriValue pell_upper = abelian_rank1(d).with_provenance(cite::kHalfPeriod);
    if (value_lt(pell_upper, upper)) upper = pell_upper;
  }
  // Lower bound: eps(L) >= 1 spread over r points.
  SeshadriValue lower =
      SeshadriValue::exact(rat(Int(1), r), cite::kMultiPointTrivial);
  return SeshadriValue::interval(lower, upper, cite::kHalfPeriod);
}

namespace {

void check_nef(const RuledSurfaceSpec& s) {
  // a >= 0 and b >= a e (e >= 0), respectively b - a e / 2 >= 0 (e < 0).
  bool nef;
  if (s.e >= 0)
    nef = s.a >= 0 && s.b >= s.a * s.e;
  else
    nef = s.a >= 0 && 2 * s.b - s.a * s.e >= 0;
  if (!nef) throw DomainError("ruled surface: class is not nef");
}

}  // namespace

SeshadriValue ruled_e_positive(const RuledSurfaceSpec& spec) {
  if (spec.e <= 0) throw DomainError("ruled_e_positive: requires e > 0");
  check_nef(spec);
  if (spec.point_on_sigma)
    return SeshadriValue::exact(Rat(std::min(spec.a, Int(spec.b - spec.a * spec.e))),
                                cite::kRuledPositive);
  return SeshadriValue::exact(Rat(spec.a), cite::kRuledPositive);
}

SeshadriValue ruled_e_nonpositive(const RuledSurfaceSpec& spec) {
  if (spec.e > 0) throw DomainError("ruled_e_nonpositive: requires e <= 0");
  check_nef(spec);
  if (spec.e == 0 && spec.point_on_sigma)
    return SeshadriValue::exact(Rat(std::min(spec.a, spec.b)),
                                cite::kRuledNonpositive);
  Rat w = rat(2 * spec.b - spec.a * spec.e, 2);  // b - a e / 2
  if (w >= rat(spec.a, 2))
    return SeshadriValue::exact(Rat(spec.a), cite::kRuledNonpositive);
  SeshadriValue lower =
      SeshadriValue::exact(2 * w, cite::kRuledNonpositive);
  // sqrt(A^2) with A^2 = 2a(b - a e / 2) = a(2b - a e)
  SeshadriValue upper = SeshadriValue::root(
      Rat(spec.a * (2 * spec.b - spec.a * spec.e)), 2, cite::kUpperBound);
  return SeshadriValue::interval(lower, upper, cite::kRuledNonpositive);
}

SeshadriValue delpezzo_anticanonical(int r, DelPezzoPosition position) {
  if (r < 0 || r > 8)
    throw DomainError("delpezzo_anticanonical: r must be in 0..8");
  if (position == DelPezzoPosition::Special12 && r != 8)
    throw DomainError("delpezzo_anticanonical: Special12 is legal only for r = 8");
  long num, den = 1;
  if (r <= 5)
    num = position == DelPezzoPosition::General ? 2 : 1;
  else if (r == 6) {
    if (position == DelPezzoPosition::General) {
      num = 3;
      den = 2;
    } else
      num = 1;
  } else if (r == 7) {
    if (position == DelPezzoPosition::General) {
      num = 4;
      den = 3;
    } else
      num = 1;
  } else {  // r == 8: 1 everywhere except at most 12 points with 1/2
    if (position == DelPezzoPosition::Special12) {
      num = 1;
      den = 2;
    } else
      num = 1;
  }
  return SeshadriValue::exact(rat(num, den), cite::kDelPezzo);
}

BoundReport k3_rank1(const Int& L2) {
  if (L2 < 2 || L2 % 2 != 0)
    throw DomainError("k3_rank1: L^2 must be a positive even integer");
  Int alpha = floor_root(L2, 2);
  BoundReport report;
  // Exceptional pairs with first coordinate L^2, for alpha = floor(sqrt(L^2)).
  if (L2 == alpha * alpha + alpha - 2)
    report.exceptional_pairs.emplace_back(
        L2, Rat(alpha) - rat(Int(2), alpha + 1));
  if (alpha % 2 == 1 && 2 * L2 == 2 * alpha * alpha + alpha - 1)
    report.exceptional_pairs.emplace_back(
        L2, Rat(alpha) - rat(Int(1), 2 * alpha + 1));

  bool square = is_perfect_square(L2);
  if (square && report.exceptional_pairs.empty()) {
    report.value = SeshadriValue::exact(Rat(alpha), cite::kK3Square);
    report.citations = {cite::kK3Square};
    return report;
  }
  SeshadriValue lower = SeshadriValue::exact(Rat(alpha), cite::kK3Floor);
  SeshadriValue upper = SeshadriValue::root(Rat(L2), 2, cite::kUpperBound);
  report.value = SeshadriValue::interval(lower, upper);
  report.citations = {cite::kK3Floor, cite::kUpperBound};
  if (!report.exceptional_pairs.empty())
    report.citations.push_back(cite::kK3Exceptional);
  return report;
}

GentypeValues gentype_small_values(const Int& K2) {
  if (K2 < 1) throw DomainError("gentype_small_values: K^2 must be >= 1");
  GentypeValues out;
  if (K2 == 1) {
    out.infinite_family = true;
    for (long m = 2; m <= 11; ++m) out.values.push_back(rat(m - 1, m));
  } else if (K2 == 2) {
    out.values = {rat(1, 2), rat(2, 3)};
  } else {
    out.values = {rat(1, 2)};
  }
  return out;
}

SeshadriValue canonical_slope_lower_bound(const Rat& sigma) {
  Rat t = 4 * sigma + 13;
  if (t < 0)
    throw DomainError("canonical_slope_lower_bound: negative radicand");
  Rat s;
  if (exact_nth_root(t, 2, s))
    return SeshadriValue::exact(Rat(2) / (1 + s), cite::kCanonicalSlope);
  // 2/(1 + sqrt(t)) is a quadratic irrational; return a certified rational
  // enclosure instead.
  Rat lo, hi;
  sqrt_enclosure(t, 40, lo, hi);
  return SeshadriValue::interval(
      SeshadriValue::exact(Rat(2) / (1 + hi), cite::kCanonicalSlope),
      SeshadriValue::exact(Rat(2) / (1 + lo), cite::kCanonicalSlope),
      cite::kCanonicalSlope);
}

Rat eps_rl(const Int& r, const Int& l) {
  if (r < 1 || l < 1) throw DomainError("eps_rl: r and l must be >= 1");
  // d ranges over integers with d^2 l <= r.
  Int d_max = isqrt(r / l);
  while ((d_max + 1) * (d_max + 1) * l <= r) ++d_max;
  while (d_max >= 1 && d_max * d_max * l > r) --d_max;
  // ceil(sqrt(r/l))
  Int c = d_max;
  if (c * c * l != r || c == 0) c = d_max + 1;
  Rat best = rat(Int(1), c);
  for (Int d = 1; d <= d_max; ++d) {
    Int s = d * d * r * l;
    Int fl = isqrt(s);
    Rat cand = rat(fl, d * r);  // floor(d sqrt(rl)) / (d r)
    if (cand > best) best = cand;
    Int ce = (fl * fl == s) ? fl : Int(fl + 1);
    cand = rat(d * l, ce);  // d l / ceil(d sqrt(rl))
    if (cand > best) best = cand;
  }
  return best;
}

SlopeClassification sslope_classify(const Int& mode_r,
                                    const SeshadriValue& sigma) {
  if (!sigma.is_point())
    throw DomainError("sslope_classify: sigma must be a point value");
  SeshadriValue zero = SeshadriValue::exact(Rat(0));
  SeshadriValue one = SeshadriValue::exact(Rat(1));
  if (!value_lt(zero, sigma) || !value_le(sigma, one))
    throw DomainError("sslope_classify: sigma must lie in (0, 1]");
  SlopeClassification out;
  if (mode_r == 0) {
    out.threshold = SeshadriValue::root(rat(7, 8), 2, cite::kSSlopeSingle);
    if (value_lt(sigma, out.threshold)) {
      out.below_threshold = true;
      out.fibered_candidate = true;
      out.matches_cubic =
          value_eq(sigma, SeshadriValue::root(rat(3, 4), 2));
      out.matches_rational_genus3 =
          value_eq(sigma, SeshadriValue::root(rat(7, 9), 2));
    }
    return out;
  }
  if (mode_r < 2)
    throw DomainError("sslope_classify: multi-point mode requires r >= 2");
  out.threshold = SeshadriValue::root(
      rat(2 * mode_r - 1, 2 * mode_r), 2, cite::kSSlopeMulti);
  if (value_lt(sigma, out.threshold)) {
    out.below_threshold = true;
    out.fibered_candidate = true;
    out.matches_minimal_degree =
        value_eq(sigma, SeshadriValue::root(rat(mode_r - 1, mode_r), 2));
  }
  return out;
}

SeshadriValue enriques_lower_bound(const SeshadriValue& eps0,
                                   const SeshadriValue& eps1, const Int& L2) {
  if (L2 < 1) throw DomainError("enriques_lower_bound: L^2 must be positive");
  SeshadriValue zero = SeshadriValue::exact(Rat(0));
  if (!value_lt(zero, eps0.lower_endpoint()) ||
      !value_lt(zero, eps1.lower_endpoint()))
    throw DomainError("enriques_lower_bound: constants must be positive");
  SeshadriValue quarter =
      SeshadriValue::root(rat(L2, 16), 2, cite::kEnriques);  // sqrt(L^2)/4
  return value_min(value_min(eps0, eps1), quarter)
      .with_provenance(cite::kEnriques);
}

SeshadriValue enriques_special_value() {
  return SeshadriValue::exact(rat(1, 2), cite::kEnriquesSpecial);
}

SeshadriValue ein_lazarsfeld_floor() {
  return SeshadriValue::exact(Rat(1), cite::kEinLazarsfeld);
}

SeshadriValue ekl_floor(unsigned long n) {
  if (n == 0) throw DomainError("ekl_floor: dimension must be >= 1");
  return SeshadriValue::exact(rat(1, static_cast<long>(n)), cite::kEKL);
}

SeshadriValue spanned_floor() {
  return SeshadriValue::exact(Rat(1), cite::kSpanned);
}

SeshadriValue jet_generation_floor(const Int& s) {
  if (s < 1) throw DomainError("jet_generation_floor: s must be >= 1");
  return SeshadriValue::exact(Rat(s), cite::kJets);
}

SeshadriValue steffens_floor(const Int& L2) {
  if (L2 < 1) throw DomainError("steffens_floor: L^2 must be positive");
  return SeshadriValue::exact(Rat(floor_root(L2, 2)), cite::kSteffens);
}

std::vector<Rat> embedded_surface_value_grid(const Int& d) {
  if (d < 3) return {};
  std::set<Rat> values;
  for (Int a = 3; a <= d; ++a)
    for (Int b = a / 2 + 1; b < a; ++b)
      if (2 * b > a) values.insert(rat(a, b));
  return std::vector<Rat>(values.begin(), values.end());
}

}  // namespace seshadri
