#include "seshadri/zarislope.hpp"

#include <algorithm>

#include "seshadri/linalg.hpp"

namespace seshadri {

void IntersectionData::validate() const {
  const std::size_t m = gram.size();
  if (!labels.empty() && labels.size() != m)
    throw DomainError("intersection data: label count mismatch");
  for (const auto& row : gram)
    if (row.size() != m)
      throw DomainError("intersection data: Gram matrix is not square");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (gram[i][j] != gram[j][i])
        throw DomainError("intersection data: Gram matrix is not symmetric");
  if (k_dot && k_dot->size() != m)
    throw DomainError("intersection data: K pairing length mismatch");
  if (l_dot && l_dot->size() != m)
    throw DomainError("intersection data: L pairing length mismatch");
  if (dim == 0) throw DomainError("intersection data: dimension must be >= 1");
}

Rat pair_against(const std::vector<Int>& against, const DivisorClass& d) {
  if (against.size() != d.coeffs.size())
    throw DomainError("pair_against: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < against.size(); ++i)
    s += d.coeffs[i] * Rat(against[i]);
  return s;
}

namespace {

Rat pairing(const IntersectionData& data, const std::vector<Rat>& coeffs,
            std::size_t j) {
  Rat s = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (sgn(coeffs[k]) != 0) s += coeffs[k] * Rat(data.gram[k][j]);
  return s;
}

}  // namespace

ZariskiDecomposition zariski_decompose(const IntersectionData& data,
                                       const DivisorClass& d) {
  data.validate();
  const std::size_t m = data.size();
  if (d.coeffs.size() != m)
    throw DomainError("zariski_decompose: divisor length mismatch");
  for (const Rat& c : d.coeffs)
    if (sgn(c) < 0)
      throw DomainError("zariski_decompose: divisor must be effective");

  std::vector<bool> in_support(m, false);
  for (std::size_t j = 0; j < m; ++j)
    if (sgn(pairing(data, d.coeffs, j)) < 0) in_support[j] = true;

  std::vector<Rat> nu(m, Rat(0));
  while (true) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < m; ++j)
      if (in_support[j]) support.push_back(j);

    std::fill(nu.begin(), nu.end(), Rat(0));
    if (!support.empty()) {
      // (D - N).C_j = 0 for j in the support.
      std::vector<std::vector<Rat>> A(support.size(),
                                      std::vector<Rat>(support.size()));
      std::vector<Rat> b(support.size());
      for (std::size_t r = 0; r < support.size(); ++r) {
        for (std::size_t c = 0; c < support.size(); ++c)
          A[r][c] = Rat(data.gram[support[c]][support[r]]);
        b[r] = pairing(data, d.coeffs, support[r]);
      }
      auto sol = solve_rational(std::move(A), std::move(b));
      if (!sol)
        throw DomainError(
            "no Zariski decomposition within given components: singular Gram "
            "on candidate support");
      for (std::size_t r = 0; r < support.size(); ++r) nu[support[r]] = (*sol)[r];
    }

    std::vector<Rat> p(m);
    for (std::size_t j = 0; j < m; ++j) p[j] = d.coeffs[j] - nu[j];

    bool grew = false;
    for (std::size_t j = 0; j < m; ++j) {
      if (in_support[j]) continue;
      if (sgn(pairing(data, p, j)) < 0) {
        in_support[j] = true;
        grew = true;
      }
    }
    if (grew) continue;

    for (std::size_t j = 0; j < m; ++j)
      if (sgn(nu[j]) < 0)
        throw DomainError(
            "no Zariski decomposition within given components: negative part "
            "is not effective");
    if (!support.empty()) {
      IMatrix g(support.size(), support.size());
      for (std::size_t r = 0; r < support.size(); ++r)
        for (std::size_t c = 0; c < support.size(); ++c)
          g.at(r, c) = data.gram[support[r]][support[c]];
      if (!is_negative_definite(g))
        throw DomainError(
            "no Zariski decomposition within given components: support Gram "
            "matrix is not negative definite");
    }
    ZariskiDecomposition out;
    out.positive.coeffs = std::move(p);
    out.negative.coeffs = std::move(nu);
    out.support = std::move(support);
    return out;
  }
}

Rat slope_mu(unsigned long n, const Rat& K_Ln1, const Rat& Ln) {
  if (n == 0) throw DomainError("slope_mu: dimension must be >= 1");
  if (sgn(Ln) <= 0) throw DomainError("slope_mu: L^n must be positive");
  return Rat(-static_cast<long>(n)) * K_Ln1 / (2 * Ln);
}

Rat slope_mu_c(const Rat& LZ, const Rat& KZ, const Rat& Z2, const Rat& c) {
  if (sgn(c) <= 0) throw DomainError("slope_mu_c: c must be positive");
  Rat den = 2 * c * (3 * LZ - c * Z2);
  if (sgn(den) == 0) throw PoleError("slope_mu_c: evaluation at a pole");
  return 3 * (2 * LZ - c * (KZ + Z2)) / den;
}

Rat arithmetic_genus(const Int& KZ, const Int& Z2) {
  return 1 + rat(KZ + Z2, Int(2));
}

namespace {

// p + q*sqrt(d); rational iff q == 0. All surds in one destabilization
// analysis share the same radicand, so pairwise comparisons stay decidable
// by sign inspection and one cross multiplication.
struct AlgNum {
  Rat p;
  Rat q;
  Rat d;

  static AlgNum from_rat(Rat v) { return {std::move(v), Rat(0), Rat(0)}; }
  bool rational() const { return sgn(q) == 0; }
};

int sign_of(const AlgNum& x) {
  int sp = sgn(x.p), sq = sgn(x.q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  int c = cmp(x.p * x.p, x.q * x.q * x.d);
  if (c == 0) return 0;
  return (c > 0) ? sp : sq;
}

// sign of a - b; requires a common radicand when both are irrational.
int compare_alg(const AlgNum& a, const AlgNum& b) {
  if (!a.rational() && !b.rational() && cmp(a.d, b.d) != 0)
    throw std::logic_error("compare_alg: mixed radicands");
  AlgNum diff{a.p - b.p, a.q - b.q, a.rational() ? b.d : a.d};
  return sign_of(diff);
}

// Rational enclosure [lo, hi] of x, width controlled by digits.
void enclose(const AlgNum& x, unsigned digits, Rat& lo, Rat& hi) {
  if (x.rational()) {
    lo = hi = x.p;
    return;
  }
  Rat slo, shi;
  sqrt_enclosure(x.d, digits, slo, shi);
  if (sgn(x.q) > 0) {
    lo = x.p + x.q * slo;
    hi = x.p + x.q * shi;
  } else {
    lo = x.p + x.q * shi;
    hi = x.p + x.q * slo;
  }
}

// Real roots of A c^2 + B c + C. Sets identically_zero when all
// coefficients vanish.
std::vector<AlgNum> quadratic_roots(const Rat& A, const Rat& B, const Rat& C,
                                    bool& identically_zero) {
  identically_zero = false;
  if (sgn(A) == 0) {
    if (sgn(B) == 0) {
      identically_zero = sgn(C) == 0;
      return {};
    }
    return {AlgNum::from_rat(-C / B)};
  }
  Rat disc = B * B - 4 * A * C;
  int sd = sgn(disc);
  if (sd < 0) return {};
  if (sd == 0) return {AlgNum::from_rat(-B / (2 * A))};
  Rat sqrt_disc;
  if (exact_nth_root(disc, 2, sqrt_disc)) {
    return {AlgNum::from_rat((-B - sqrt_disc) / (2 * A)),
            AlgNum::from_rat((-B + sqrt_disc) / (2 * A))};
  }
  Rat half = Rat(1) / (2 * A);
  return {AlgNum{-B * half, -half, disc}, AlgNum{-B * half, half, disc}};
}

// Rational point strictly between u and v (u < v).
Rat rational_between(const AlgNum& u, const AlgNum& v) {
  if (u.rational() && v.rational()) return (u.p + v.p) / 2;
  for (unsigned digits = 8;; digits *= 2) {
    Rat ulo, uhi, vlo, vhi;
    enclose(u, digits, ulo, uhi);
    enclose(v, digits, vlo, vhi);
    if (cmp(uhi, vlo) < 0) return (uhi + vlo) / 2;
    if (digits > 1u << 20)
      throw std::logic_error("rational_between: no separation found");
  }
}

}  // namespace

DestabVerdict destabilizes(const Rat& LZ, const Rat& KZ, const Rat& Z2,
                           const Rat& mu, const Rat& c_max) {
  if (sgn(c_max) <= 0) throw DomainError("destabilizes: c_max must be positive");
  // mu_c(c) < mu  <=>  Q(c) * D(c) < 0, with
  //   Q(c) = 2 mu Z2 c^2 - (3(KZ + Z2) + 6 mu LZ) c + 6 LZ   (numerator - mu * denominator)
  //   D(c) = -2 Z2 c^2 + 6 LZ c                              (denominator)
  Rat qa = 2 * mu * Z2;
  Rat qb = -3 * (KZ + Z2) - 6 * mu * LZ;
  Rat qc = 6 * LZ;
  Rat da = -2 * Z2;
  Rat db = 6 * LZ;

  bool q_zero = false, d_zero = false;
  std::vector<AlgNum> breaks = quadratic_roots(qa, qb, qc, q_zero);
  std::vector<AlgNum> droots = quadratic_roots(da, db, Rat(0), d_zero);
  if (d_zero)
    throw PoleError("destabilizes: slope denominator vanishes identically");
  if (q_zero) return {};  // mu_c == mu everywhere it is defined
  breaks.insert(breaks.end(), droots.begin(), droots.end());

  AlgNum zero = AlgNum::from_rat(Rat(0));
  AlgNum right = AlgNum::from_rat(c_max);
  std::vector<AlgNum> inside;
  for (const AlgNum& b : breaks)
    if (compare_alg(b, zero) > 0 && compare_alg(b, right) < 0)
      inside.push_back(b);
  std::sort(inside.begin(), inside.end(),
            [](const AlgNum& a, const AlgNum& b) { return compare_alg(a, b) < 0; });
  inside.erase(std::unique(inside.begin(), inside.end(),
                           [](const AlgNum& a, const AlgNum& b) {
                             return compare_alg(a, b) == 0;
                           }),
               inside.end());

  std::vector<AlgNum> bounds;
  bounds.push_back(zero);
  bounds.insert(bounds.end(), inside.begin(), inside.end());
  bounds.push_back(right);

  // The sign of Q*D is constant on each open subinterval, so one rational
  // sample per subinterval decides everything.
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Rat c = rational_between(bounds[i], bounds[i + 1]);
    Rat qv = qa * c * c + qb * c + qc;
    Rat dv = da * c * c + db * c;
    if (sgn(qv) != 0 && sgn(dv) != 0 && sgn(qv) != sgn(dv)) {
      DestabVerdict v;
      v.destabilizes = true;
      v.witness = c;
      v.mu_c_witness = slope_mu_c(LZ, KZ, Z2, c);
      return v;
    }
  }
  return {};
}

}  // namespace seshadri
