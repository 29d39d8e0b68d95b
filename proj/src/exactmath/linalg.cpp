#include "genalg/exactmath/linalg.hpp"

#include <algorithm>
#include <string>

#include "genalg/exactmath/errors.hpp"

namespace genalg {

template <class F>
EchelonBasis<F>::EchelonBasis(F field, std::size_t ambient_dimension)
    : field_(std::move(field)), ambient_(ambient_dimension) {}

template <class F>
void EchelonBasis<F>::check_vector(const Vec<F>& v) const {
  if (v.size() != ambient_) {
    throw InputError("vector of length " + std::to_string(v.size()) +
                     " in ambient dimension " + std::to_string(ambient_));
  }
  for (const auto& x : v) {
    if (!field_.is_member(x)) throw InputError("entry outside " + field_.name());
  }
}

template <class F>
void EchelonBasis<F>::eliminate(Vec<F>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t pc = pivots_[k];
    if (field_.is_zero(v[pc])) continue;
    const Element factor = field_.neg(v[pc]);
    const Vec<F>& row = rows_[k];
    for (std::size_t c = pc; c < ambient_; ++c) {
      if (!field_.is_zero(row[c])) field_.add_product(v[c], factor, row[c]);
    }
  }
}

template <class F>
Vec<F> EchelonBasis<F>::reduce(Vec<F> v) const {
  check_vector(v);
  eliminate(v);
  return v;
}

template <class F>
bool EchelonBasis<F>::contains(const Vec<F>& v) const {
  return is_zero_vector(field_, reduce(v));
}

template <class F>
bool EchelonBasis<F>::insert(const Vec<F>& input) {
  check_vector(input);
  if (is_full()) return false;
  Vec<F> v = input;
  eliminate(v);
  std::size_t lead = 0;
  while (lead < ambient_ && field_.is_zero(v[lead])) ++lead;
  if (lead == ambient_) return false;

  const Element scale = field_.inv(v[lead]);
  for (std::size_t c = lead; c < ambient_; ++c) v[c] = field_.mul(v[c], scale);

  // Clear the new pivot column in the existing rows.
  for (auto& row : rows_) {
    if (field_.is_zero(row[lead])) continue;
    const Element factor = field_.neg(row[lead]);
    for (std::size_t c = lead; c < ambient_; ++c) {
      if (!field_.is_zero(v[c])) field_.add_product(row[c], factor, v[c]);
    }
  }

  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

template <class F>
EchelonBasis<F> rref(const F& field, std::size_t columns, std::span<const Vec<F>> rows) {
  EchelonBasis<F> basis(field, columns);
  for (const auto& row : rows) basis.insert(row);
  return basis;
}

template class EchelonBasis<PrimeField>;
template class EchelonBasis<RationalField>;
template EchelonBasis<PrimeField> rref(const PrimeField&, std::size_t,
                                       std::span<const Vec<PrimeField>>);
template EchelonBasis<RationalField> rref(const RationalField&, std::size_t,
                                          std::span<const Vec<RationalField>>);

}  // namespace genalg
