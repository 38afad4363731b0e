#include "seshadri/linalg.hpp"

#include <algorithm>
#include <utility>

namespace seshadri {

void IMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
}

void IMatrix::reduce_row_content() {
  for (std::size_t i = 0; i < rows_; ++i) {
    Int g = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      g = gcd(g, a_[i * cols_ + j]);
      if (g == 1) break;
    }
    if (g > 1)
      for (std::size_t j = 0; j < cols_; ++j)
        mpz_divexact(a_[i * cols_ + j].get_mpz_t(),
                     a_[i * cols_ + j].get_mpz_t(), g.get_mpz_t());
  }
}

namespace {

// Deterministic pivot: nonzero entry of least absolute value, lowest row
// index on ties. Keeps the exact minors small.
std::size_t pick_pivot(const IMatrix& m, std::size_t from_row, std::size_t col) {
  std::size_t best = m.rows();
  for (std::size_t i = from_row; i < m.rows(); ++i) {
    const Int& v = m.at(i, col);
    if (v == 0) continue;
    if (best == m.rows() ||
        mpz_cmpabs(v.get_mpz_t(), m.at(best, col).get_mpz_t()) < 0)
      best = i;
  }
  return best;
}

// One Bareiss row update: row i <- (row i * piv - m[i][c] * row r) / prev
// for the columns right of c, then a zero in column c. The scratch value
// is reused across cells so each thread works out of its own buffers.
void update_row(IMatrix& m, std::size_t i, std::size_t r, std::size_t c,
                const Int& piv, const Int& prev, Int& scratch) {
  const std::size_t C = m.cols();
  for (std::size_t j = c + 1; j < C; ++j) {
    mpz_mul(scratch.get_mpz_t(), m.at(i, j).get_mpz_t(), piv.get_mpz_t());
    mpz_submul(scratch.get_mpz_t(), m.at(i, c).get_mpz_t(),
               m.at(r, j).get_mpz_t());
    mpz_divexact(m.at(i, j).get_mpz_t(), scratch.get_mpz_t(),
                 prev.get_mpz_t());
  }
  m.at(i, c) = 0;
}

// After step t every entry is a (t+1)-minor of the content-reduced input,
// so the division by the previous pivot is exact (Sylvester identity).
Echelon bareiss_echelon_impl(IMatrix m, bool parallel) {
  m.reduce_row_content();
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  Echelon e;
  std::size_t r = 0;
  Int prev = 1;
  Int scratch;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = pick_pivot(m, r, c);
    if (p == R) continue;
    m.swap_rows(r, p);
    const Int piv = m.at(r, c);
    const long first = static_cast<long>(r) + 1;
    const long last = static_cast<long>(R);
    // Static scheduling keeps each thread on a contiguous row block; the
    // cutoff skips the fork when the block is too small to pay for it.
    const bool worth_forking =
        parallel && (last - first) * static_cast<long>(C - c) >= 2048;
    if (worth_forking) {
#pragma omp parallel
      {
        Int local_scratch;
#pragma omp for schedule(static)
        for (long i = first; i < last; ++i)
          update_row(m, i, r, c, piv, prev, local_scratch);
      }
    } else {
      for (long i = first; i < last; ++i)
        update_row(m, i, r, c, piv, prev, scratch);
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  e.m = std::move(m);
  return e;
}

}  // namespace

Echelon bareiss_echelon_serial(IMatrix m) {
  return bareiss_echelon_impl(std::move(m), false);
}

Echelon bareiss_echelon_parallel(IMatrix m) {
  return bareiss_echelon_impl(std::move(m), true);
}

std::size_t rank_serial(IMatrix m) {
  return bareiss_echelon_serial(std::move(m)).rank;
}

std::size_t rank_parallel(IMatrix m) {
  return bareiss_echelon_parallel(std::move(m)).rank;
}

std::size_t matrix_rank(IMatrix m) { return rank_parallel(std::move(m)); }

std::vector<Int> kernel_vector(const IMatrix& m) {
  Echelon e = bareiss_echelon_parallel(m);
  const std::size_t C = m.cols();
  if (e.rank == C) return {};
  // First free column; row operations do not change the kernel.
  std::size_t free_col = 0;
  {
    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    while (free_col < C && is_pivot[free_col]) ++free_col;
  }
  std::vector<Rat> x(C, Rat(0));
  x[free_col] = 1;
  for (std::size_t ri = e.rank; ri-- > 0;) {
    std::size_t pc = e.pivot_cols[ri];
    Rat sum = 0;
    for (std::size_t j = pc + 1; j < C; ++j)
      if (sgn(x[j]) != 0 && e.m.at(ri, j) != 0)
        sum += Rat(e.m.at(ri, j)) * x[j];
    x[pc] = -sum / Rat(e.m.at(ri, pc));
  }
  Int scale = 1;
  for (const Rat& v : x) scale = lcm(scale, v.get_den());
  std::vector<Int> out(C);
  for (std::size_t j = 0; j < C; ++j)
    out[j] = x[j].get_num() * (scale / x[j].get_den());
  Int g = 0;
  for (const Int& v : out) g = gcd(g, v);
  if (g > 1)
    for (Int& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  for (const Int& v : out) {
    if (v == 0) continue;
    if (v < 0)
      for (Int& w : out) w = -w;
    break;
  }
  return out;
}

Int determinant(IMatrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: square only");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = pick_pivot(m, k, k);
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(k, p);
      sign = -sign;
    }
    const Int piv = m.at(k, k);
    if (k + 1 == n) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * piv - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = piv;
  }
  return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

bool is_negative_definite(const IMatrix& sym) {
  if (sym.rows() != sym.cols())
    throw DomainError("is_negative_definite: square only");
  const std::size_t n = sym.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    IMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = sym.at(i, j);
    Int d = determinant(std::move(lead));
    int want = (k % 2 == 0) ? 1 : -1;
    if (sgn(d) != want) return false;
  }
  return true;
}

std::optional<std::vector<Rat>> solve_rational(
    std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const std::size_t n = A.size();
  for (auto& row : A)
    if (row.size() != n) throw DomainError("solve_rational: square only");
  if (b.size() != n) throw DomainError("solve_rational: size mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(A[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(A[i][c]) == 0) continue;
      Rat f = A[i][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

std::size_t int_rank(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return 0;
  IMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw DomainError("int_rank: ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return rank_serial(std::move(m));
}

}  // namespace seshadri
