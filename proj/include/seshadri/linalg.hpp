#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "seshadri/exactnum.hpp"

namespace seshadri {

/// Dense integer matrix in row-major order.
class IMatrix {
 public:
  IMatrix() : rows_(0), cols_(0) {}
  IMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  void swap_rows(std::size_t i, std::size_t j);
  /// Divides each row by the gcd of its entries.
  void reduce_row_content();

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Echelon data from fraction-free elimination: the rank and, for kernel
/// extraction, the reduced matrix together with its pivot columns.
struct Echelon {
  IMatrix m;
  std::vector<std::size_t> pivot_cols;  // pivot of row i is at pivot_cols[i]
  std::size_t rank = 0;
};

/// Fraction-free (Bareiss) elimination, serial reference implementation.
Echelon bareiss_echelon_serial(IMatrix m);
/// Same elimination with the row updates distributed over OpenMP threads.
/// Produces entries identical to the serial reference.
Echelon bareiss_echelon_parallel(IMatrix m);

std::size_t rank_serial(IMatrix m);
std::size_t rank_parallel(IMatrix m);
std::size_t matrix_rank(IMatrix m);  // dispatches to the parallel kernel

/// One integer kernel vector of m (content-reduced), or empty if the matrix
/// has full column rank.
std::vector<Int> kernel_vector(const IMatrix& m);

/// Determinant of a square matrix by fraction-free elimination.
Int determinant(IMatrix m);

/// Exact negative-definiteness test for a symmetric integer matrix: the
/// k-th leading principal minor must have sign (-1)^k.
bool is_negative_definite(const IMatrix& sym);

/// Solves A x = b over the rationals. Returns std::nullopt when A is
/// singular.
std::optional<std::vector<Rat>> solve_rational(
    std::vector<std::vector<Rat>> A, std::vector<Rat> b);

/// Rank of a small integer matrix given as nested vectors.
std::size_t int_rank(const std::vector<std::vector<Int>>& rows);

}  // namespace seshadri
