#include "genalg/algebra/closure.hpp"

#include "genalg/exactmath/errors.hpp"

namespace genalg {

namespace {

// Advances `idx` to the next tuple in [0, bound)^k, lexicographic. Returns
// false after the last tuple.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t bound) {
  for (std::size_t s = idx.size(); s-- > 0;) {
    if (++idx[s] < bound) return true;
    idx[s] = 0;
  }
  return false;
}

}  // namespace

template <class F>
Closure<F> closure(const Multialgebra<F>& algebra, std::span<const Vec<F>> seed, bool unital,
                   bool stop_when_full) {
  for (const auto& s : seed) algebra.check_element(s);
  const F& field = algebra.field();
  const std::size_t r = algebra.dimension();
  Closure<F> out{EchelonBasis<F>(field, r), {}, 0, 0};

  auto push = [&](const Vec<F>& v) {
    if (out.basis.insert(v)) out.spanning.push_back(v);
  };
  auto done = [&] { return stop_when_full && out.basis.is_full(); };

  for (const auto& s : seed) push(s);
  const auto& ops = algebra.operations();
  if (unital) {
    for (std::size_t k = 0; k < ops.size(); ++k) {
      if (ops[k].arity == 0) {
        ++out.evaluations;
        push(algebra.evaluate(k, {}));
      }
    }
  }

  std::vector<Vec<F>> args;
  Vec<F> value;
  std::size_t processed = 0;
  while (processed < out.spanning.size() && !done()) {
    const std::size_t frontier = out.spanning.size();
    ++out.rounds;
    for (std::size_t k = 0; k < ops.size() && !done(); ++k) {
      const std::size_t arity = ops[k].arity;
      if (arity == 0) continue;
      std::vector<std::size_t> idx(arity, 0);
      args.resize(arity);
      do {
        bool touches_new = false;
        for (auto i : idx) touches_new = touches_new || i >= processed;
        if (!touches_new) continue;
        for (std::size_t s = 0; s < arity; ++s) args[s] = out.spanning[idx[s]];
        value.assign(r, field.zero());
        algebra.accumulate(k, args, value);
        ++out.evaluations;
        if (!is_zero_vector(field, value)) push(value);
        if (done()) break;
      } while (next_tuple(idx, frontier));
    }
    processed = frontier;
  }
  return out;
}

template <class F>
GenerationVerdict<F> is_generating(const Multialgebra<F>& algebra, std::span<const Vec<F>> tuple,
                                   bool unital, GenerationMethod method) {
  const Closure<F> c = closure(algebra, tuple, unital, /*stop_when_full=*/true);
  GenerationVerdict<F> verdict;
  verdict.generating = c.dimension() == algebra.dimension();
  verdict.certificate.tuple.assign(tuple.begin(), tuple.end());
  verdict.certificate.closure_dimension = c.dimension();
  verdict.certificate.unital = unital;
  verdict.certificate.monomial_witness_count = c.evaluations;
  verdict.certificate.method = method;
  return verdict;
}

template <class F>
bool replay(const Multialgebra<F>& algebra, const GenerationCertificate<F>& certificate) {
  for (const auto& v : certificate.tuple) {
    if (v.size() != algebra.dimension()) return false;
    for (const auto& x : v)
      if (!algebra.field().is_member(x)) return false;
  }
  const auto verdict = is_generating(algebra, std::span<const Vec<F>>(certificate.tuple),
                                     certificate.unital, certificate.method);
  return verdict.certificate == certificate;
}

Multialgebra<PrimeField> reduce_mod_p(const Multialgebra<RationalField>& algebra, std::uint64_t p) {
  const PrimeField field(p);
  std::vector<OperationTensor<PrimeField>> ops;
  for (const auto& op : algebra.operations()) {
    OperationTensor<PrimeField> reduced{op.arity, op.role, {}};
    for (const auto& term : op.terms) {
      reduced.terms.push_back({term.inputs, term.output, field.from_rational(term.coefficient)});
    }
    ops.push_back(std::move(reduced));
  }
  return Multialgebra<PrimeField>(field, algebra.dimension(), std::move(ops));
}

bool base_change_check(const Multialgebra<RationalField>& algebra, std::uint64_t p,
                       std::span<const Vec<RationalField>> tuple, bool unital) {
  const Multialgebra<PrimeField> reduced = reduce_mod_p(algebra, p);
  std::vector<Vec<PrimeField>> images;
  for (const auto& v : tuple) {
    algebra.check_element(v);
    Vec<PrimeField> w;
    w.reserve(v.size());
    for (const auto& x : v) w.push_back(reduced.field().from_rational(x));
    images.push_back(std::move(w));
  }
  return is_generating(reduced, std::span<const Vec<PrimeField>>(images), unital).generating;
}

template Closure<PrimeField> closure(const Multialgebra<PrimeField>&,
                                     std::span<const Vec<PrimeField>>, bool, bool);
template Closure<RationalField> closure(const Multialgebra<RationalField>&,
                                        std::span<const Vec<RationalField>>, bool, bool);
template GenerationVerdict<PrimeField> is_generating(const Multialgebra<PrimeField>&,
                                                     std::span<const Vec<PrimeField>>, bool,
                                                     GenerationMethod);
template GenerationVerdict<RationalField> is_generating(const Multialgebra<RationalField>&,
                                                        std::span<const Vec<RationalField>>,
                                                        bool, GenerationMethod);
template bool replay(const Multialgebra<PrimeField>&, const GenerationCertificate<PrimeField>&);
template bool replay(const Multialgebra<RationalField>&,
                     const GenerationCertificate<RationalField>&);

}  // namespace genalg
