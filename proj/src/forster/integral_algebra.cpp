#include "genalg/forster/integral_algebra.hpp"

#include <algorithm>

#include "genalg/exactmath/errors.hpp"

namespace genalg {

namespace {

bool next_index_tuple(std::vector<std::uint32_t>& idx, std::size_t bound) {
  for (std::size_t s = idx.size(); s-- > 0;) {
    if (++idx[s] < bound) return true;
    idx[s] = 0;
  }
  return false;
}

}  // namespace

IntegralAlgebra::IntegralAlgebra(std::vector<Integer> invariants,
                                 std::vector<IntegerTensor> operations)
    : invariants_(std::move(invariants)), ops_(std::move(operations)) {
  const std::size_t m = invariants_.size();
  for (const auto& d : invariants_) {
    if (d < 0) throw InputError("invariant factors must be nonnegative");
  }
  std::size_t products = 0;
  for (auto& op : ops_) {
    if (op.role == OperationRole::kProduct) {
      ++products;
      if (op.arity != 2) throw InputError("the product must be binary");
    }
    if (op.role == OperationRole::kUnit && op.arity != 0) {
      throw InputError("the unit must be a constant (arity 0)");
    }
    if (op.role == OperationRole::kInvolution && op.arity != 1) {
      throw InputError("the involution must be unary");
    }
    for (auto& term : op.terms) {
      if (term.inputs.size() != op.arity) throw InputError("tensor term of the wrong arity");
      for (auto i : term.inputs)
        if (i >= m) throw InputError("tensor input index out of range");
      if (term.output >= m) throw InputError("tensor output index out of range");
      const Integer& dl = invariants_[term.output];
      if (dl != 0) term.coefficient = mod_floor(term.coefficient, dl);
    }
    std::stable_sort(op.terms.begin(), op.terms.end(), [](const auto& a, const auto& b) {
      if (a.inputs != b.inputs) return a.inputs < b.inputs;
      return a.output < b.output;
    });
    std::vector<IntegerTensor::Term> merged;
    for (auto& term : op.terms) {
      if (!merged.empty() && merged.back().inputs == term.inputs &&
          merged.back().output == term.output) {
        merged.back().coefficient += term.coefficient;
        const Integer& dl = invariants_[term.output];
        if (dl != 0) merged.back().coefficient = mod_floor(merged.back().coefficient, dl);
      } else {
        merged.push_back(std::move(term));
      }
    }
    std::erase_if(merged, [](const auto& t) { return t.coefficient == 0; });
    op.terms = std::move(merged);

    for (const auto& term : op.terms) {
      const Integer& dl = invariants_[term.output];
      for (auto i : term.inputs) {
        const Integer image = invariants_[i] * term.coefficient;
        const bool vanishes = dl == 0 ? image == 0 : mod_floor(image, dl) == 0;
        if (!vanishes) {
          throw InputError("operation does not descend to the module: coordinate " +
                           std::to_string(i) + " has order " + to_string(invariants_[i]) +
                           " but maps with coefficient " + to_string(term.coefficient) +
                           " into coordinate " + std::to_string(term.output));
        }
      }
    }
  }
  if (products != 1) throw InputError("exactly one binary product must be designated");
}

IntegralAlgebra::Normalized IntegralAlgebra::from_presentation(
    std::size_t generators, const std::vector<IntVector>& relations,
    const std::vector<IntegerTensor>& operations) {
  for (const auto& r : relations) {
    if (r.size() != generators) throw InputError("relation of the wrong length");
  }
  IntMatrix u = IntMatrix::identity(generators);
  std::vector<Integer> diagonal(generators, 0);
  if (!relations.empty()) {
    const SmithDecomposition s = snf(IntMatrix::from_columns(relations, generators));
    u = s.left;
    for (std::size_t t = 0; t < s.diagonal.size(); ++t) diagonal[t] = s.diagonal[t];
  }
  const IntMatrix u_inv = unimodular_inverse(u);

  std::vector<std::size_t> kept;
  std::vector<Integer> invariants;
  for (std::size_t t = 0; t < generators; ++t) {
    if (diagonal[t] != 1) {
      kept.push_back(t);
      invariants.push_back(diagonal[t]);
    }
  }

  // Evaluate the original tensors on the new basis vectors (columns of U^-1)
  // and express the result in new coordinates.
  auto raw = [&](const IntegerTensor& op, std::span<const IntVector> args) {
    IntVector out(generators, 0);
    for (const auto& term : op.terms) {
      if (term.output >= generators) throw InputError("tensor output index out of range");
      Integer c = term.coefficient;
      for (std::size_t s = 0; s < op.arity && c != 0; ++s) {
        if (term.inputs.at(s) >= generators) throw InputError("tensor input index out of range");
        c *= args[s][term.inputs[s]];
      }
      out[term.output] += c;
    }
    return out;
  };

  std::vector<IntegerTensor> transported;
  for (const auto& op : operations) {
    IntegerTensor t{op.arity, op.role, {}};
    std::vector<std::uint32_t> idx(op.arity, 0);
    if (op.arity == 0 || !kept.empty()) {
      do {
        std::vector<IntVector> args;
        for (auto k : idx) args.push_back(u_inv.column(kept[k]));
        const IntVector value = raw(op, args);
        for (std::size_t l = 0; l < kept.size(); ++l) {
          Integer y = 0;
          for (std::size_t c = 0; c < generators; ++c) y += u(kept[l], c) * value[c];
          if (y != 0) t.terms.push_back({idx, static_cast<std::uint32_t>(l), y});
        }
      } while (next_index_tuple(idx, kept.size()));
    }
    transported.push_back(std::move(t));
  }

  IntMatrix map(kept.size(), generators);
  for (std::size_t l = 0; l < kept.size(); ++l)
    for (std::size_t c = 0; c < generators; ++c) map(l, c) = u(kept[l], c);
  return Normalized{IntegralAlgebra(std::move(invariants), std::move(transported)), map};
}

IntVector IntegralAlgebra::Normalized::transport(const IntVector& v) const {
  if (v.size() != coordinate_map.cols()) throw InputError("element of the wrong length");
  IntVector out(coordinate_map.rows(), 0);
  for (std::size_t l = 0; l < out.size(); ++l)
    for (std::size_t c = 0; c < v.size(); ++c) out[l] += coordinate_map(l, c) * v[c];
  return algebra.canonical(std::move(out));
}

IntegralAlgebra IntegralAlgebra::from_rational(const Multialgebra<RationalField>& algebra) {
  std::vector<IntegerTensor> ops;
  for (const auto& op : algebra.operations()) {
    IntegerTensor t{op.arity, op.role, {}};
    for (const auto& term : op.terms) {
      if (term.coefficient.get_den() != 1) {
        throw InputError("structure constant " + to_string(term.coefficient) +
                         " is not an integer");
      }
      t.terms.push_back({term.inputs, term.output, term.coefficient.get_num()});
    }
    ops.push_back(std::move(t));
  }
  return IntegralAlgebra(std::vector<Integer>(algebra.dimension(), 0), std::move(ops));
}

std::size_t IntegralAlgebra::free_rank() const {
  return static_cast<std::size_t>(std::count(invariants_.begin(), invariants_.end(), 0));
}

void IntegralAlgebra::check_element(const IntVector& v) const {
  if (v.size() != rank()) {
    throw InputError("element of length " + std::to_string(v.size()) +
                     " in a module of rank " + std::to_string(rank()));
  }
}

IntVector IntegralAlgebra::canonical(IntVector v) const {
  check_element(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (invariants_[i] != 0) v[i] = mod_floor(v[i], invariants_[i]);
  }
  return v;
}

IntVector IntegralAlgebra::evaluate_raw(std::size_t op, std::span<const IntVector> args) const {
  const IntegerTensor& t = ops_.at(op);
  if (args.size() != t.arity) throw InputError("wrong number of arguments");
  IntVector out(rank(), 0);
  Integer c;
  for (const auto& term : t.terms) {
    c = term.coefficient;
    for (std::size_t s = 0; s < t.arity && c != 0; ++s) c *= args[s][term.inputs[s]];
    out[term.output] += c;
  }
  return out;
}

IntVector IntegralAlgebra::evaluate(std::size_t op, std::span<const IntVector> args) const {
  for (const auto& a : args) check_element(a);
  return canonical(evaluate_raw(op, args));
}

std::vector<std::size_t> IntegralAlgebra::fiber_coordinates(std::uint64_t p) const {
  const Integer pz = from_u64(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (invariants_[i] == 0 || mpz_divisible_p(invariants_[i].get_mpz_t(), pz.get_mpz_t())) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> IntegralAlgebra::free_coordinates() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank(); ++i)
    if (invariants_[i] == 0) out.push_back(i);
  return out;
}

template <class F>
Multialgebra<F> IntegralAlgebra::restrict_to(const F& field,
                                             const std::vector<std::size_t>& coords) const {
  std::vector<std::int64_t> position(rank(), -1);
  for (std::size_t k = 0; k < coords.size(); ++k) position[coords[k]] = static_cast<std::int64_t>(k);
  std::vector<OperationTensor<F>> ops;
  for (const auto& op : ops_) {
    OperationTensor<F> t{op.arity, op.role, {}};
    for (const auto& term : op.terms) {
      if (position[term.output] < 0) continue;
      std::vector<std::uint32_t> inputs;
      bool inside = true;
      for (auto i : term.inputs) {
        if (position[i] < 0) {
          inside = false;
          break;
        }
        inputs.push_back(static_cast<std::uint32_t>(position[i]));
      }
      if (!inside) continue;
      t.terms.push_back({std::move(inputs), static_cast<std::uint32_t>(position[term.output]),
                         field.from_integer(term.coefficient)});
    }
    ops.push_back(std::move(t));
  }
  return Multialgebra<F>(field, coords.size(), std::move(ops));
}

Multialgebra<PrimeField> IntegralAlgebra::fiber_mod_p(std::uint64_t p) const {
  const PrimeField field(p);
  return restrict_to(field, fiber_coordinates(p));
}

Vec<PrimeField> IntegralAlgebra::project(const IntVector& v, std::uint64_t p) const {
  check_element(v);
  const PrimeField field(p);
  Vec<PrimeField> out;
  for (auto i : fiber_coordinates(p)) out.push_back(field.from_integer(v[i]));
  return out;
}

IntVector IntegralAlgebra::lift(const Vec<PrimeField>& v, std::uint64_t p) const {
  const auto coords = fiber_coordinates(p);
  if (v.size() != coords.size()) throw InputError("fiber element of the wrong length");
  IntVector out(rank(), 0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (v[k] >= p) throw InputError("fiber coordinate is not a residue mod p");
    out[coords[k]] = from_u64(v[k]);
  }
  return out;
}

Multialgebra<RationalField> IntegralAlgebra::generic_fiber() const {
  return restrict_to(RationalField{}, free_coordinates());
}

Vec<RationalField> IntegralAlgebra::project_generic(const IntVector& v) const {
  check_element(v);
  Vec<RationalField> out;
  for (auto i : free_coordinates()) out.push_back(Rational(v[i]));
  return out;
}

IntVector IntegralAlgebra::lift_generic(const Vec<RationalField>& v) const {
  const auto coords = free_coordinates();
  if (v.size() != coords.size()) throw InputError("generic-fiber element of the wrong length");
  IntVector out(rank(), 0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (v[k].get_den() != 1) throw InputError("generic-fiber element is not integral");
    out[coords[k]] = v[k].get_num();
  }
  return out;
}

}  // namespace genalg
