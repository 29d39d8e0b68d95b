#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genalg/exactmath/field.hpp"

namespace genalg {

/// What an operation means to the rest of the library. Only the roles matter
/// for validation and for products of algebras; closure treats every
/// operation alike.
enum class OperationRole { kGeneric, kProduct, kUnit, kInvolution };

std::string role_name(OperationRole role);
OperationRole parse_role(const std::string& name);

/// A k-multilinear map A^k -> A given by its values on basis tuples.
///
/// Each term maps the basis tuple (inputs[0], ..., inputs[k-1]) to
/// coefficient * e_output; the value on a basis tuple is the sum of its
/// terms. For k = 0 the inputs are empty and the terms spell out a constant.
template <class F>
struct OperationTensor {
  using Element = typename F::Element;

  struct Term {
    std::vector<std::uint32_t> inputs;
    std::uint32_t output = 0;
    Element coefficient{};

    bool operator==(const Term&) const = default;
  };

  std::size_t arity = 0;
  OperationRole role = OperationRole::kGeneric;
  std::vector<Term> terms;

  bool operator==(const OperationTensor&) const = default;
};

/// A finite-dimensional algebra over a field carrying any number of
/// multilinear operations and constants.
///
/// The constructor canonicalizes every tensor (terms sorted by
/// (inputs, output), duplicates merged, zero coefficients dropped) and checks
/// the structural contract: exactly one binary product; unit and involution
/// laws on basis elements when those roles are present. Violations throw
/// InputError.
template <class F>
class Multialgebra {
 public:
  using Element = typename F::Element;
  using Tensor = OperationTensor<F>;

  Multialgebra(F field, std::size_t dimension, std::vector<Tensor> operations);

  const F& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Tensor>& operations() const noexcept { return ops_; }
  const Tensor& operation(std::size_t index) const { return ops_.at(index); }

  std::size_t product_index() const noexcept { return product_; }
  std::optional<std::size_t> unit_index() const noexcept { return unit_; }
  std::optional<std::size_t> involution_index() const noexcept { return involution_; }

  Vec<F> zero_vector() const { return Vec<F>(dimension_, field_.zero()); }
  Vec<F> basis_vector(std::size_t i) const;
  std::optional<Vec<F>> unit() const;

  /// Multilinear extension of operation `op` applied to `args`. Throws
  /// InputError on an arity mismatch or a malformed argument.
  Vec<F> evaluate(std::size_t op, std::span<const Vec<F>> args) const;
  Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const;
  /// out += op(args), skipping all argument checks. Hot path of closure.
  void accumulate(std::size_t op, std::span<const Vec<F>> args, Vec<F>& out) const;
  Vec<F> involute(const Vec<F>& x) const;

  /// Checks that v is a coordinate vector of this algebra.
  void check_element(const Vec<F>& v) const;

  /// The same algebra with only the designated product kept.
  Multialgebra product_only() const;

  bool operator==(const Multialgebra& other) const {
    return field_ == other.field_ && dimension_ == other.dimension_ && ops_ == other.ops_;
  }

 private:
  void canonicalize(Tensor& tensor) const;
  void validate_roles();

  F field_;
  std::size_t dimension_;
  std::vector<Tensor> ops_;
  std::size_t product_ = 0;
  std::optional<std::size_t> unit_;
  std::optional<std::size_t> involution_;
};

extern template class Multialgebra<PrimeField>;
extern template class Multialgebra<RationalField>;

}  // namespace genalg
