#include "seshadri/symbpow.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace seshadri {

namespace {

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  // x^a | x^b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

long total_degree(const std::vector<int>& g) {
  return std::accumulate(g.begin(), g.end(), 0L);
}

// Keep only divisibility-minimal exponent vectors. Sorting by degree first
// keeps the quadratic filter cheap: a vector can only be absorbed by one of
// lower or equal degree already kept.
std::vector<std::vector<int>> minimalize(std::vector<std::vector<int>> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              long da = total_degree(a), db = total_degree(b);
              if (da != db) return da < db;
              return a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int>> kept;
  for (const auto& g : gens) {
    bool absorbed = false;
    for (const auto& k : kept)
      if (divides(k, g)) {
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back(g);
  }
  return kept;
}

}  // namespace

MonomialIdeal MonomialIdeal::make(int num_vars,
                                  std::vector<std::vector<int>> gens) {
  if (num_vars < 1) throw DomainError("monomial ideal: need at least one variable");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != num_vars)
      throw DomainError("monomial ideal: exponent vector length mismatch");
    for (int e : g)
      if (e < 0) throw DomainError("monomial ideal: negative exponent");
  }
  MonomialIdeal ideal;
  ideal.num_vars = num_vars;
  ideal.gens = minimalize(std::move(gens));
  return ideal;
}

bool MonomialIdeal::is_unit() const {
  for (const auto& g : gens)
    if (total_degree(g) == 0) return true;
  return false;
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens)
    for (int e : g)
      if (e > 1) return false;
  return true;
}

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars != b.num_vars)
    throw DomainError("mono_intersect: variable count mismatch");
  std::vector<std::vector<int>> lcms;
  lcms.reserve(a.gens.size() * b.gens.size());
  for (const auto& g : a.gens)
    for (const auto& h : b.gens) {
      std::vector<int> l(a.num_vars);
      for (int i = 0; i < a.num_vars; ++i) l[i] = std::max(g[i], h[i]);
      lcms.push_back(std::move(l));
    }
  return MonomialIdeal::make(a.num_vars, std::move(lcms));
}

MonomialIdeal mono_power(const MonomialIdeal& ideal, long m) {
  if (m < 0) throw DomainError("mono_power: negative exponent");
  std::vector<std::vector<int>> acc = {std::vector<int>(ideal.num_vars, 0)};
  if (m == 0) return MonomialIdeal::make(ideal.num_vars, std::move(acc));
  for (long step = 0; step < m; ++step) {
    std::vector<std::vector<int>> next;
    next.reserve(acc.size() * ideal.gens.size());
    for (const auto& p : acc)
      for (const auto& g : ideal.gens) {
        std::vector<int> q(ideal.num_vars);
        for (int i = 0; i < ideal.num_vars; ++i) q[i] = p[i] + g[i];
        next.push_back(std::move(q));
      }
    acc = minimalize(std::move(next));
  }
  return MonomialIdeal::make(ideal.num_vars, std::move(acc));
}

bool mono_contains(const MonomialIdeal& ideal, const MonomialIdeal& sub) {
  if (ideal.num_vars != sub.num_vars)
    throw DomainError("mono_contains: variable count mismatch");
  for (const auto& g : sub.gens) {
    bool divided = false;
    for (const auto& h : ideal.gens)
      if (divides(h, g)) {
        divided = true;
        break;
      }
    if (!divided) return false;
  }
  return true;
}

namespace {

// Minimal covers by recursive splitting on the first uncovered generator.
void cover_rec(const std::vector<std::vector<int>>& supports,
               std::vector<int>& chosen, std::set<std::vector<int>>& out) {
  const std::vector<int>* uncovered = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (int v : s)
      if (std::binary_search(chosen.begin(), chosen.end(), v)) {
        hit = true;
        break;
      }
    if (!hit) {
      uncovered = &s;
      break;
    }
  }
  if (!uncovered) {
    out.insert(chosen);
    return;
  }
  for (int v : *uncovered) {
    auto pos = std::lower_bound(chosen.begin(), chosen.end(), v);
    chosen.insert(pos, v);
    cover_rec(supports, chosen, out);
    chosen.erase(std::find(chosen.begin(), chosen.end(), v));
  }
}

}  // namespace

std::vector<std::vector<int>> minimal_primes_squarefree(
    const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw DomainError("minimal_primes_squarefree: ideal is not squarefree");
  if (ideal.is_zero())
    throw DomainError("minimal_primes_squarefree: zero ideal");
  if (ideal.is_unit())
    throw DomainError("minimal_primes_squarefree: unit ideal");
  std::vector<std::vector<int>> supports;
  for (const auto& g : ideal.gens) {
    std::vector<int> s;
    for (int i = 0; i < ideal.num_vars; ++i)
      if (g[i] > 0) s.push_back(i);
    supports.push_back(std::move(s));
  }
  std::set<std::vector<int>> covers;
  std::vector<int> chosen;
  cover_rec(supports, chosen, covers);
  // Filter to inclusion-minimal covers.
  std::vector<std::vector<int>> out;
  for (const auto& c : covers) {
    bool minimal = true;
    for (const auto& d : covers) {
      if (d.size() >= c.size() || d == c) continue;
      if (std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

namespace {

// P^m for the prime generated by the given variables: all monomials of
// degree m in those variables.
MonomialIdeal prime_power(int num_vars, const std::vector<int>& vars, long m) {
  std::vector<std::vector<int>> gens;
  std::vector<int> cur(num_vars, 0);
  // enumerate compositions of m over |vars| slots
  std::vector<long> comp(vars.size(), 0);
  comp[0] = m;
  while (true) {
    std::fill(cur.begin(), cur.end(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i)
      cur[vars[i]] = static_cast<int>(comp[i]);
    gens.push_back(cur);
    // next composition in colex-ish order
    std::size_t i = 0;
    while (i + 1 < comp.size() && comp[i] == 0) ++i;
    if (i + 1 >= comp.size()) break;
    long v = comp[i];
    comp[i] = 0;
    comp[0] = v - 1;
    comp[i + 1] += 1;
  }
  return MonomialIdeal::make(num_vars, std::move(gens));
}

}  // namespace

MonomialIdeal symbolic_power_squarefree(const MonomialIdeal& ideal, long m) {
  if (m < 1) throw DomainError("symbolic_power_squarefree: m must be >= 1");
  auto primes = minimal_primes_squarefree(ideal);
  MonomialIdeal acc;
  bool first = true;
  for (const auto& p : primes) {
    MonomialIdeal pm = prime_power(ideal.num_vars, p, m);
    acc = first ? pm : mono_intersect(acc, pm);
    first = false;
  }
  return acc;
}

bool check_symbolic_in_power(const MonomialIdeal& ideal, long m, long r) {
  if (ideal.is_zero() || ideal.is_unit())
    throw DomainError("check_symbolic_in_power: ideal must be proper and nonzero");
  return mono_contains(mono_power(ideal, r),
                       symbolic_power_squarefree(ideal, m));
}

long alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("alpha: zero ideal");
  long best = -1;
  for (const auto& g : ideal.gens) {
    long d = total_degree(g);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int codim_squarefree(const MonomialIdeal& ideal) {
  int e = 0;
  for (const auto& p : minimal_primes_squarefree(ideal))
    e = std::max(e, static_cast<int>(p.size()));
  return e;
}

void StarConfig::validate() const {
  if (N < 1) throw DomainError("star config: N must be >= 1");
  if (s <= N) throw DomainError("star config: requires s > N hyperplanes");
  if (e < 1 || e > N) throw DomainError("star config: requires 1 <= e <= N");
}

std::optional<long> star_alpha(const StarConfig& cfg, long m) {
  cfg.validate();
  if (m < 1) throw DomainError("star_alpha: m must be >= 1");
  if (m == 1) return cfg.s - cfg.e + 1;
  if (m % cfg.e == 0) return m * cfg.s / cfg.e;
  if (cfg.e == cfg.N) {
    // m = iN + j with 0 < j <= N
    long i = (m - 1) / cfg.N;
    long j = m - i * cfg.N;
    return (i + 1) * cfg.s - cfg.N + j;
  }
  return std::nullopt;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

StarInvariants star_invariants(const StarConfig& cfg) {
  cfg.validate();
  StarInvariants inv;
  inv.gamma = rat(cfg.s, cfg.e);
  inv.rho_lower = rat(static_cast<long>(cfg.e) * (cfg.s - cfg.e + 1), cfg.s);
  if (cfg.e == cfg.N) {
    inv.reg = cfg.s - cfg.N + 1;
    inv.rho_exact = rat(static_cast<long>(cfg.N) * (cfg.s - cfg.N + 1), cfg.s);
    Rat radicand = rat(Int(cfg.s), Int(cfg.N) * binomial(cfg.s, cfg.N));
    if (cfg.N == 1)
      inv.seshadri = SeshadriValue::exact(radicand, "star-config-numerics");
    else
      inv.seshadri = SeshadriValue::root(
          radicand, static_cast<unsigned long>(cfg.N - 1),
          "star-config-numerics");
  }
  return inv;
}

ContainmentVerdict containment_criteria(long alpha_m, long alpha_I, long r,
                                        std::optional<long> reg,
                                        bool codim_is_N) {
  if (alpha_m < 1 || alpha_I < 1)
    throw DomainError("containment_criteria: alpha inputs must be >= 1");
  if (r < 1) throw DomainError("containment_criteria: r must be >= 1");
  if (alpha_m < r * alpha_I)
    return {Containment::NotContained, "alpha-noncontainment-criterion"};
  if (codim_is_N && reg && r * *reg <= alpha_m)
    return {Containment::Contained, "regularity-containment-criterion"};
  return {Containment::Inconclusive, ""};
}

GenericPointsCertificate generic_points_check(int N, long j, long r) {
  if (N < 2) throw DomainError("generic_points_check: N must be >= 2");
  if (j < 2) throw DomainError("generic_points_check: j must be >= 2");
  if (r < 2) throw DomainError("generic_points_check: r must be >= 2");
  GenericPointsCertificate cert;
  long t = 0;
  while (binomial(t + N, N) < j) ++t;
  cert.reg_bound = t + 1;
  // eps_lower = ((j-1)/j) (j-1)^(-1/N) = ((j-1)^(N-1) / j^N)^(1/N)
  cert.eps_lower = SeshadriValue::root(
      rat(int_pow(Int(j - 1), N - 1), int_pow(Int(j), N)), N,
      "very-general-multipoint-floor");
  cert.gamma_lower =
      value_scale(value_pow(cert.eps_lower, N - 1), Rat(j))
          .with_provenance("asymptotic-degree-floor");
  cert.threshold = rat(static_cast<long>(r) * N - (N - 1), r);
  // reg_bound / gamma_lower < threshold  <=>  reg_bound < threshold * gamma_lower
  SeshadriValue rhs = value_scale(cert.gamma_lower, cert.threshold);
  cert.holds = value_lt(SeshadriValue::exact(Rat(cert.reg_bound)), rhs);
  return cert;
}

bool huneke_star_check(long s) {
  if (s < 3) throw DomainError("huneke_star_check: s must be >= 3");
  StarConfig cfg{2, s, 2};
  long alpha_m = *star_alpha(cfg, 3);
  long reg = *star_invariants(cfg).reg;
  return containment_criteria(alpha_m, *star_alpha(cfg, 1), 2, reg, true)
             .verdict == Containment::Contained;
}

std::vector<std::pair<Rat, Rat>> star_points_p2(long s) {
  if (s < 2) throw DomainError("star_points_p2: s must be >= 2");
  std::vector<std::pair<Rat, Rat>> pts;
  for (long i = 1; i <= s; ++i)
    for (long j = i + 1; j <= s; ++j)
      pts.emplace_back(Rat(-(i + j)), Rat(-i * j));
  return pts;
}

}  // namespace seshadri
