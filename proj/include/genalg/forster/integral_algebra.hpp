#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genalg/algebra/multialgebra.hpp"
#include "genalg/exactmath/lattice.hpp"

namespace genalg {

/// Coefficient ring tag for integral structure tensors.
struct IntegerRing {
  using Element = Integer;
};

using IntegerTensor = OperationTensor<IntegerRing>;

/// An algebra over Z whose underlying module is Z/d_1 + ... + Z/d_m, with
/// d_i = 0 standing for a free summand Z.
///
/// Elements are integer vectors of length m, coordinate i read modulo d_i.
/// Tensor coefficients into a torsion coordinate are reduced into [0, d_l).
/// Every operation must descend to the quotient: for each term with
/// coefficient c, each input slot carrying coordinate i and output l,
/// d_i * c must vanish modulo d_l.
class IntegralAlgebra {
 public:
  IntegralAlgebra(std::vector<Integer> invariants, std::vector<IntegerTensor> operations);

  /// The module Z^g / (relations), normalized to invariant-factor coordinates
  /// with the same operations transported through the change of basis.
  struct Normalized;
  static Normalized from_presentation(std::size_t generators,
                                      const std::vector<IntVector>& relations,
                                      const std::vector<IntegerTensor>& operations);

  /// A free algebra with the same structure constants. Throws InputError if a
  /// coefficient is not an integer.
  static IntegralAlgebra from_rational(const Multialgebra<RationalField>& algebra);

  std::size_t rank() const noexcept { return invariants_.size(); }
  const std::vector<Integer>& invariants() const noexcept { return invariants_; }
  const std::vector<IntegerTensor>& operations() const noexcept { return ops_; }
  std::size_t free_rank() const;

  void check_element(const IntVector& v) const;
  /// Reduces torsion coordinates into [0, d_i).
  IntVector canonical(IntVector v) const;
  /// Multilinear extension of an operation on integer vectors, unreduced.
  IntVector evaluate_raw(std::size_t op, std::span<const IntVector> args) const;
  IntVector evaluate(std::size_t op, std::span<const IntVector> args) const;

  /// Coordinates that survive in the fiber at p: free ones and those with
  /// p | d_i.
  std::vector<std::size_t> fiber_coordinates(std::uint64_t p) const;
  Multialgebra<PrimeField> fiber_mod_p(std::uint64_t p) const;
  Vec<PrimeField> project(const IntVector& v, std::uint64_t p) const;
  /// Integer representative in [0, p) of every fiber coordinate, 0 elsewhere.
  IntVector lift(const Vec<PrimeField>& v, std::uint64_t p) const;

  std::vector<std::size_t> free_coordinates() const;
  Multialgebra<RationalField> generic_fiber() const;
  Vec<RationalField> project_generic(const IntVector& v) const;
  /// Integral vectors of the generic fiber placed on the free coordinates.
  IntVector lift_generic(const Vec<RationalField>& v) const;

  bool operator==(const IntegralAlgebra&) const = default;

 private:
  template <class F>
  Multialgebra<F> restrict_to(const F& field, const std::vector<std::size_t>& coords) const;

  std::vector<Integer> invariants_;
  std::vector<IntegerTensor> ops_;
};

struct IntegralAlgebra::Normalized {
  IntegralAlgebra algebra;
  /// Maps presentation coordinates to invariant-factor coordinates.
  IntMatrix coordinate_map;

  IntVector transport(const IntVector& presentation_vector) const;
};

}  // namespace genalg
