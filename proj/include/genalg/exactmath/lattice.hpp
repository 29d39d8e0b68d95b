#pragma once

#include <cstddef>
#include <vector>

#include "genalg/exactmath/integer.hpp"

namespace genalg {

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  /// Matrix whose columns are the given vectors of length `rows`.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Subgroup of Z^m in Hermite normal form.
///
/// The basis vectors are stored in echelon order: the leading (pivot) column
/// of each vector strictly increases, every pivot is positive, and every
/// entry sitting in another vector's pivot column above that pivot is reduced
/// into [0, pivot). Equal subgroups therefore have identical representations.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_rank) : ambient_(ambient_rank) {}

  std::size_t ambient_rank() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds v to the subgroup; returns true iff the subgroup grew.
  bool insert(const IntVector& v);
  bool contains(const IntVector& v) const;
  /// Index [Z^m : L], or 0 when the index is infinite.
  Integer index() const;
  bool is_full() const;
  /// m x rank matrix whose columns are the basis vectors.
  IntMatrix generator_matrix() const;

  bool operator==(const IntegerLattice&) const = default;

 private:
  void normalize();

  std::size_t ambient_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical HNF of the column span of `columns`.
IntegerLattice hnf(const IntMatrix& columns);

/// U * A * V = diag(diagonal), with d_1 | d_2 | ... and U, V unimodular.
struct SmithDecomposition {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithDecomposition snf(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws InputError if `a` is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace genalg
