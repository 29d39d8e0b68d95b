#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "genalg/exactmath/field.hpp"

namespace genalg {

/// Canonical reduced row-echelon basis of a subspace of F^n.
///
/// Rows are kept sorted by pivot column, every pivot entry is 1 and every
/// pivot column is zero outside its own row, so two equal subspaces always
/// produce identical bases.
template <class F>
class EchelonBasis {
 public:
  using Element = typename F::Element;

  EchelonBasis(F field, std::size_t ambient_dimension);

  const F& field() const noexcept { return field_; }
  std::size_t ambient_dimension() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_full() const noexcept { return rows_.size() == ambient_; }
  const std::vector<Vec<F>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Residual of v after elimination against the basis.
  Vec<F> reduce(Vec<F> v) const;
  bool contains(const Vec<F>& v) const;
  /// Adds v to the span; returns true iff the rank grew.
  bool insert(const Vec<F>& v);

  bool operator==(const EchelonBasis& other) const {
    return field_ == other.field_ && ambient_ == other.ambient_ && pivots_ == other.pivots_ &&
           rows_ == other.rows_;
  }

 private:
  void check_vector(const Vec<F>& v) const;
  /// Eliminates the pivot entries of v in place.
  void eliminate(Vec<F>& v) const;

  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Row space of `rows`, each of length `columns`. Throws InputError on a
/// ragged matrix or entries that are not residues of `field`.
template <class F>
EchelonBasis<F> rref(const F& field, std::size_t columns, std::span<const Vec<F>> rows);

template <class F>
Vec<F> reduce_vector(const EchelonBasis<F>& basis, const Vec<F>& v) {
  return basis.reduce(v);
}

template <class F>
bool is_zero_vector(const F& field, const Vec<F>& v) {
  for (const auto& x : v) {
    if (!field.is_zero(x)) return false;
  }
  return true;
}

}  // namespace genalg
