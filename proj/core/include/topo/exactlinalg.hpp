#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace topo {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Integer matrix with column-sparse storage. Columns are kept sorted by row
/// and never hold explicit zeros.
class IntMatrix {
 public:
  using Entry = std::pair<std::size_t, Integer>;
  using Column = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_dense(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nonzeros() const noexcept;
  bool is_zero() const noexcept { return nonzeros() == 0; }

  Integer get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& value);
  void add_to(std::size_t r, std::size_t c, const Integer& value);

  const Column& column(std::size_t c) const { return columns_.at(c); }
  /// Replaces column c; entries must be sorted by row and nonzero.
  void set_column(std::size_t c, Column entries);

  IntMatrix transpose() const;
  std::vector<IntVector> dense() const;
  IntVector apply(const IntVector& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// U * M * V = D with D diagonal and d_1 | d_2 | ... | d_r, trailing zeros.
/// U_inv and V_inv are the exact inverses of U and V.
struct SmithDecomposition {
  std::vector<Integer> diagonal;  // length min(rows, cols)
  IntMatrix U;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;

  std::size_t rank() const;
  /// Nonzero diagonal entries (all positive).
  std::vector<Integer> invariant_factors() const;
  /// The diagonal as an rows x cols matrix.
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

/// Deterministic Smith normal form with unimodular transforms. Pivot: the
/// nonzero entry of least absolute value in the active block, ties broken by
/// lowest row then lowest column.
SmithDecomposition smith_normal_form(const IntMatrix& M);

/// Nonzero invariant factors only. Eliminates unit pivots on sparse storage
/// and runs the dense Smith form on whatever core remains.
std::vector<Integer> invariant_factors(const IntMatrix& M);

bool is_prime(unsigned long n);

/// Rank over Q (characteristic 0) or F_p. Throws NotPrime.
std::size_t rank_over_field(const IntMatrix& M, unsigned long characteristic);

/// Kernel basis. Over characteristic 0 the vectors are integral and form a
/// basis of the kernel lattice; over F_p entries lie in [0, p).
std::vector<IntVector> kernel_basis(const IntMatrix& M, unsigned long characteristic);

/// Basis of the column space made of the first independent columns of M
/// (reduced into [0, p) over F_p).
std::vector<IntVector> image_basis(const IntMatrix& M, unsigned long characteristic);

/// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& M);

}  // namespace topo
