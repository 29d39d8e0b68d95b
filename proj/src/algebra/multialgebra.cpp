#include "genalg/algebra/multialgebra.hpp"

#include <algorithm>

#include "genalg/exactmath/errors.hpp"
#include "genalg/exactmath/linalg.hpp"

namespace genalg {

std::string role_name(OperationRole role) {
  switch (role) {
    case OperationRole::kProduct:
      return "product";
    case OperationRole::kUnit:
      return "unit";
    case OperationRole::kInvolution:
      return "involution";
    case OperationRole::kGeneric:
      break;
  }
  return "operation";
}

OperationRole parse_role(const std::string& name) {
  if (name == "product") return OperationRole::kProduct;
  if (name == "unit") return OperationRole::kUnit;
  if (name == "involution") return OperationRole::kInvolution;
  if (name == "operation" || name.empty()) return OperationRole::kGeneric;
  throw InputError("unknown operation role '" + name + "'");
}

template <class F>
Multialgebra<F>::Multialgebra(F field, std::size_t dimension, std::vector<Tensor> operations)
    : field_(std::move(field)), dimension_(dimension), ops_(std::move(operations)) {
  for (auto& op : ops_) canonicalize(op);
  validate_roles();
}

template <class F>
void Multialgebra<F>::canonicalize(Tensor& tensor) const {
  for (const auto& term : tensor.terms) {
    if (term.inputs.size() != tensor.arity) {
      throw InputError("tensor term with " + std::to_string(term.inputs.size()) +
                       " indices in an operation of arity " + std::to_string(tensor.arity));
    }
    for (auto i : term.inputs) {
      if (i >= dimension_) throw InputError("tensor input index out of range");
    }
    if (term.output >= dimension_) throw InputError("tensor output index out of range");
    if (!field_.is_member(term.coefficient)) {
      throw InputError("tensor coefficient outside " + field_.name());
    }
  }
  auto key_less = [](const auto& a, const auto& b) {
    if (a.inputs != b.inputs) return a.inputs < b.inputs;
    return a.output < b.output;
  };
  std::stable_sort(tensor.terms.begin(), tensor.terms.end(), key_less);
  std::vector<typename Tensor::Term> merged;
  merged.reserve(tensor.terms.size());
  for (auto& term : tensor.terms) {
    if (!merged.empty() && merged.back().inputs == term.inputs &&
        merged.back().output == term.output) {
      merged.back().coefficient = field_.add(merged.back().coefficient, term.coefficient);
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [&](const auto& t) { return field_.is_zero(t.coefficient); });
  tensor.terms = std::move(merged);
}

template <class F>
void Multialgebra<F>::validate_roles() {
  std::optional<std::size_t> product;
  for (std::size_t k = 0; k < ops_.size(); ++k) {
    const auto& op = ops_[k];
    switch (op.role) {
      case OperationRole::kProduct:
        if (op.arity != 2) throw InputError("the product must be binary");
        if (product) throw InputError("more than one designated product");
        product = k;
        break;
      case OperationRole::kUnit:
        if (op.arity != 0) throw InputError("the unit must be a constant (arity 0)");
        if (unit_) throw InputError("more than one designated unit");
        unit_ = k;
        break;
      case OperationRole::kInvolution:
        if (op.arity != 1) throw InputError("the involution must be unary");
        if (involution_) throw InputError("more than one designated involution");
        involution_ = k;
        break;
      case OperationRole::kGeneric:
        break;
    }
  }
  if (!product) throw InputError("no designated binary product");
  product_ = *product;

  if (unit_) {
    const Vec<F> e = *unit();
    for (std::size_t i = 0; i < dimension_; ++i) {
      const Vec<F> b = basis_vector(i);
      if (multiply(e, b) != b || multiply(b, e) != b) {
        throw InputError("designated unit fails e*x = x = x*e on basis vector " +
                         std::to_string(i));
      }
    }
  }
  if (involution_) {
    for (std::size_t i = 0; i < dimension_; ++i) {
      const Vec<F> bi = basis_vector(i);
      const Vec<F> si = involute(bi);
      if (involute(si) != bi) {
        throw InputError("involution is not of order 2 on basis vector " + std::to_string(i));
      }
      for (std::size_t j = 0; j < dimension_; ++j) {
        const Vec<F> bj = basis_vector(j);
        if (involute(multiply(bi, bj)) != multiply(involute(bj), si)) {
          throw InputError("involution is not an anti-automorphism on basis pair (" +
                           std::to_string(i) + ", " + std::to_string(j) + ")");
        }
      }
    }
  }
}

template <class F>
Vec<F> Multialgebra<F>::basis_vector(std::size_t i) const {
  Vec<F> v = zero_vector();
  v.at(i) = field_.one();
  return v;
}

template <class F>
std::optional<Vec<F>> Multialgebra<F>::unit() const {
  if (!unit_) return std::nullopt;
  return evaluate(*unit_, {});
}

template <class F>
void Multialgebra<F>::check_element(const Vec<F>& v) const {
  if (v.size() != dimension_) {
    throw InputError("element of length " + std::to_string(v.size()) +
                     " in an algebra of dimension " + std::to_string(dimension_));
  }
  for (const auto& x : v) {
    if (!field_.is_member(x)) throw InputError("element coordinate outside " + field_.name());
  }
}

template <class F>
void Multialgebra<F>::accumulate(std::size_t op, std::span<const Vec<F>> args,
                                 Vec<F>& out) const {
  const Tensor& tensor = ops_[op];
  const std::size_t k = tensor.arity;
  for (const auto& term : tensor.terms) {
    bool zero = false;
    for (std::size_t s = 0; s < k; ++s) {
      if (field_.is_zero(args[s][term.inputs[s]])) {
        zero = true;
        break;
      }
    }
    if (zero) continue;
    if (k == 0) {
      out[term.output] = field_.add(out[term.output], term.coefficient);
    } else if (k == 1) {
      field_.add_product(out[term.output], term.coefficient, args[0][term.inputs[0]]);
    } else {
      Element c = field_.mul(term.coefficient, args[0][term.inputs[0]]);
      for (std::size_t s = 1; s + 1 < k; ++s) c = field_.mul(c, args[s][term.inputs[s]]);
      field_.add_product(out[term.output], c, args[k - 1][term.inputs[k - 1]]);
    }
  }
}

template <class F>
Vec<F> Multialgebra<F>::evaluate(std::size_t op, std::span<const Vec<F>> args) const {
  const Tensor& tensor = ops_.at(op);
  if (args.size() != tensor.arity) {
    throw InputError("operation " + std::to_string(op) + " has arity " +
                     std::to_string(tensor.arity) + ", got " + std::to_string(args.size()) +
                     " arguments");
  }
  for (const auto& a : args) check_element(a);
  Vec<F> out = zero_vector();
  accumulate(op, args, out);
  return out;
}

template <class F>
Vec<F> Multialgebra<F>::multiply(const Vec<F>& x, const Vec<F>& y) const {
  const std::vector<Vec<F>> args = {x, y};
  return evaluate(product_, args);
}

template <class F>
Vec<F> Multialgebra<F>::involute(const Vec<F>& x) const {
  if (!involution_) throw InputError("algebra has no designated involution");
  const std::vector<Vec<F>> args = {x};
  return evaluate(*involution_, args);
}

template <class F>
Multialgebra<F> Multialgebra<F>::product_only() const {
  return Multialgebra(field_, dimension_, {ops_[product_]});
}

template class Multialgebra<PrimeField>;
template class Multialgebra<RationalField>;

}  // namespace genalg
