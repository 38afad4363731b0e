#include "seshadri/linsys.hpp"

#include <algorithm>
#include <set>

namespace seshadri {

void LinearSystem2D::validate() const {
  if (degree < 0) throw DomainError("linear system: degree must be >= 0");
  if (mults.empty()) throw DomainError("linear system: no points");
  for (long m : mults)
    if (m < 1) throw DomainError("linear system: multiplicities must be >= 1");
  if (!explicit_points.empty()) {
    if (explicit_points.size() != mults.size())
      throw DomainError("linear system: point/multiplicity count mismatch");
    std::set<std::pair<Rat, Rat>> seen;
    for (const auto& p : explicit_points)
      if (!seen.insert(p).second)
        throw DomainError("linear system: explicit points must be distinct");
  }
}

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

long monomial_count(long d) { return binom2(d + 2); }  // C(d+2,2)

long virtual_dim(const LinearSystem2D& sys) {
  sys.validate();
  long v = binom2(sys.degree + 2);
  for (long m : sys.mults) v -= binom2(m + 1);
  return v - 1;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  return splitmix64(s);
}

namespace {

// Coefficient of x^(alpha-a) y^(beta-b) in d^(a+b)/dx^a dy^b of x^alpha
// y^beta, as a falling factorial product.
Int derivative_factor(long alpha, long a, long beta, long b) {
  Int f = 1;
  for (long k = 0; k < a; ++k) f *= (alpha - k);
  for (long k = 0; k < b; ++k) f *= (beta - k);
  return f;
}

Rat rat_int_pow(const Rat& base, long e) {
  return rat_pow(base, static_cast<unsigned long>(e));
}

std::vector<std::pair<Rat, Rat>> sample_points(std::size_t count,
                                               std::uint64_t sub_seed) {
  std::uint64_t state = sub_seed;
  std::set<std::pair<Rat, Rat>> seen;
  std::vector<std::pair<Rat, Rat>> pts;
  while (pts.size() < count) {
    long x = static_cast<long>(splitmix64(state) % 2001) - 1000;
    long y = static_cast<long>(splitmix64(state) % 2001) - 1000;
    std::pair<Rat, Rat> p{Rat(x), Rat(y)};
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

IMatrix conditions_matrix(long degree, const std::vector<long>& mults,
                          const std::vector<std::pair<Rat, Rat>>& points) {
  if (mults.size() != points.size())
    throw DomainError("conditions_matrix: point/multiplicity count mismatch");
  const long cols = monomial_count(degree);
  long rows = 0;
  for (long m : mults) rows += binom2(m + 1);

  // Column order: monomials x^alpha y^beta with alpha + beta <= d, sorted
  // by total degree then alpha.
  std::vector<std::pair<long, long>> monos;
  for (long t = 0; t <= degree; ++t)
    for (long alpha = t; alpha >= 0; --alpha) monos.emplace_back(alpha, t - alpha);

  IMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::size_t row = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rat& x = points[i].first;
    const Rat& y = points[i].second;
    // Powers up to the degree, reused across rows.
    std::vector<Rat> xp(degree + 1), yp(degree + 1);
    for (long k = 0; k <= degree; ++k) {
      xp[k] = rat_int_pow(x, k);
      yp[k] = rat_int_pow(y, k);
    }
    for (long a = 0; a < mults[i]; ++a) {
      for (long b = 0; a + b < mults[i]; ++b) {
        // Entry: (d/dx)^a (d/dy)^b of x^alpha y^beta at the point.
        Int den_lcm = 1;
        std::vector<Rat> entries(cols);
        for (long c = 0; c < cols; ++c) {
          auto [alpha, beta] = monos[c];
          if (alpha < a || beta < b) continue;
          Rat v = Rat(derivative_factor(alpha, a, beta, b)) * xp[alpha - a] *
                  yp[beta - b];
          den_lcm = lcm(den_lcm, v.get_den());
          entries[c] = std::move(v);
        }
        for (long c = 0; c < cols; ++c) {
          if (sgn(entries[c]) == 0) continue;
          m.at(row, c) =
              entries[c].get_num() * (den_lcm / entries[c].get_den());
        }
        ++row;
      }
    }
  }
  m.reduce_row_content();
  return m;
}

namespace {

struct Trial {
  long rank = 0;
  std::vector<std::pair<Rat, Rat>> points;
};

Trial run_trial(const LinearSystem2D& sys, std::uint64_t sub_seed) {
  Trial t;
  t.points = sys.generic() ? sample_points(sys.mults.size(), sub_seed)
                           : sys.explicit_points;
  t.rank = static_cast<long>(
      matrix_rank(conditions_matrix(sys.degree, sys.mults, t.points)));
  return t;
}

}  // namespace

ProbeResult interpolation_rank(const LinearSystem2D& sys, long trials,
                               std::uint64_t seed) {
  sys.validate();
  if (sys.generic() && trials < 1)
    throw DomainError("interpolation_rank: trials must be >= 1");
  const long n_trials = sys.generic() ? trials : 1;
  const long cols = monomial_count(sys.degree);

  std::vector<Trial> results(n_trials);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n_trials; ++i)
    results[i] = run_trial(sys, mix_seed(seed, static_cast<std::uint64_t>(i)));

  // Reduce in index order: the reported trial is the first one attaining
  // the maximum rank, so the result matches sequential execution.
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].rank > results[best].rank) best = i;

  ProbeResult out;
  out.trials = n_trials;
  out.seed = seed;
  out.rank = results[best].rank;
  out.kernel_dim = cols - out.rank;
  out.points = results[best].points;
  if (out.kernel_dim == 0) {
    out.verdict = ProbeVerdict::CertifiedEmpty;
  } else {
    out.verdict = ProbeVerdict::LikelyNonempty;
    out.kernel_basis_vector = kernel_vector(
        conditions_matrix(sys.degree, sys.mults, results[best].points));
  }
  return out;
}

long speciality(const LinearSystem2D& sys, long trials, std::uint64_t seed) {
  ProbeResult probe = interpolation_rank(sys, trials, seed);
  long expected = std::max(0L, virtual_dim(sys) + 1);
  return probe.kernel_dim - expected;
}

}  // namespace seshadri
