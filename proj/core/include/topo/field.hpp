#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topo/exactlinalg.hpp"

namespace topo {

using Scalar = mpq_class;

/// Q or F_p. Elements of F_p are carried as integer Scalars in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws NotPrime.
  static Field prime(unsigned long p);
  static Field of_characteristic(unsigned long c);

  unsigned long characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  Scalar from_integer(const Integer& v) const;
  Scalar from_long(long v) const { return from_integer(Integer(v)); }
  /// Maps a rational into the field; throws RangeError if the denominator
  /// vanishes mod p.
  Scalar reduce(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  bool operator==(const Field& o) const noexcept { return p_ == o.p_; }
  std::string name() const;

 private:
  explicit Field(unsigned long p) : p_(p) {}
  unsigned long p_;
};

/// Sorted (index, value) pairs without zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

namespace sparse {

/// y + a x
SparseVector axpy(const Field& F, const SparseVector& y, const Scalar& a, const SparseVector& x);
SparseVector scale(const Field& F, const SparseVector& x, const Scalar& a);
Scalar dot(const Field& F, const SparseVector& a, const SparseVector& b);
Scalar dot_dense(const Field& F, const std::vector<Scalar>& dense, const SparseVector& b);
SparseVector from_column(const Field& F, const IntMatrix::Column& column);
SparseVector from_dense(const Field& F, const std::vector<Scalar>& dense);
SparseVector from_integers(const Field& F, const IntVector& dense);
std::vector<Scalar> to_dense(const SparseVector& x, std::size_t size);
SparseVector unit(std::size_t index);
/// M x over the field.
SparseVector apply(const Field& F, const IntMatrix& M, const SparseVector& x);
/// transpose(M) x over the field.
SparseVector apply_transpose(const Field& F, const IntMatrix& M, const SparseVector& x);

}  // namespace sparse

/// Incremental echelon basis with pivot = largest index. Each stored vector
/// remembers how it is combined from the generators inserted so far, so the
/// same structure answers rank, membership, coordinates and kernels.
class Reducer {
 public:
  explicit Reducer(Field field) : field_(std::move(field)) {}

  struct Reduction {
    SparseVector remainder;
    /// v = remainder + Σ combination[k] · generator_k
    SparseVector combination;
  };

  Reduction reduce(const SparseVector& v) const;

  /// Inserts generator number `generator_count()`; returns false when it is
  /// already in the span.
  bool insert(const SparseVector& v);

  std::size_t rank() const noexcept { return stored_.size(); }
  std::size_t generator_count() const noexcept { return generators_; }
  const Field& field() const noexcept { return field_; }

  /// Combinations of generators that vanish (one per dependent insertion).
  const std::vector<SparseVector>& relations() const noexcept { return relations_; }

 private:
  struct Stored {
    SparseVector vector;
    SparseVector combination;
  };
  Field field_;
  std::vector<Stored> stored_;
  std::unordered_map<std::size_t, std::size_t> pivot_slot_;
  std::vector<SparseVector> relations_;
  std::size_t generators_ = 0;

  const Stored* find_pivot(std::size_t pivot) const;
};

/// Dense matrices over a field, used for small (homology-sized) problems.
using ScalarMatrix = std::vector<std::vector<Scalar>>;

ScalarMatrix identity_matrix(std::size_t n);
ScalarMatrix multiply(const Field& F, const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix transpose(const ScalarMatrix& a);
std::size_t rank(const Field& F, ScalarMatrix a);
Scalar trace(const Field& F, const ScalarMatrix& a);
Scalar determinant(const Field& F, ScalarMatrix a);
/// Throws InternalMismatch when singular.
ScalarMatrix inverse(const Field& F, const ScalarMatrix& a);
std::string format_scalar(const Scalar& v);

}  // namespace topo
