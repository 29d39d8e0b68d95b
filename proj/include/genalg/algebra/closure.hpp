#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "genalg/algebra/multialgebra.hpp"
#include "genalg/exactmath/linalg.hpp"

namespace genalg {

/// Subalgebra spanned by all operation monomials in a seed set.
template <class F>
struct Closure {
  EchelonBasis<F> basis;
  /// Independent vectors in the order they were discovered; a basis of the
  /// closure whose first members come from the seed.
  std::vector<Vec<F>> spanning;
  std::size_t rounds = 0;
  std::size_t evaluations = 0;

  std::size_t dimension() const { return basis.rank(); }
};

/// Smallest subspace containing span(seed) that is closed under every
/// operation of positive arity. Arity-0 constants are added only when
/// `unital` is set.
///
/// Evaluation visits operations in declared order and argument tuples in
/// lexicographic order over the current spanning list; each round only
/// evaluates tuples touching a vector found in the previous round, which is
/// enough by multilinearity. When `stop_when_full` is set the computation
/// ends as soon as the closure is the whole algebra.
template <class F>
Closure<F> closure(const Multialgebra<F>& algebra, std::span<const Vec<F>> seed, bool unital,
                   bool stop_when_full = false);

/// How a tuple was produced, so that a certificate can be replayed.
enum class MethodTag { kExplicit, kRandom, kExhaustive };

struct GenerationMethod {
  MethodTag tag = MethodTag::kExplicit;
  // kRandom: tuple regenerated from (seed, trial, height).
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::int64_t height = 0;
  // kExhaustive: lexicographic index of the tuple among all tuples of its size.
  std::uint64_t index = 0;

  bool operator==(const GenerationMethod&) const = default;
};

template <class F>
struct GenerationCertificate {
  std::vector<Vec<F>> tuple;
  std::size_t closure_dimension = 0;
  bool unital = false;
  std::size_t monomial_witness_count = 0;
  GenerationMethod method;

  bool operator==(const GenerationCertificate&) const = default;
};

template <class F>
struct GenerationVerdict {
  bool generating = false;
  GenerationCertificate<F> certificate;
};

template <class F>
GenerationVerdict<F> is_generating(const Multialgebra<F>& algebra, std::span<const Vec<F>> tuple,
                                   bool unital, GenerationMethod method = {});

/// Recomputes the closure of a certificate's tuple and compares the recorded
/// dimension and witness count.
template <class F>
bool replay(const Multialgebra<F>& algebra, const GenerationCertificate<F>& certificate);

/// Reduces every structure constant mod p. Throws InputError unless all
/// coefficients are p-integral.
Multialgebra<PrimeField> reduce_mod_p(const Multialgebra<RationalField>& algebra, std::uint64_t p);

/// is_generating after reducing the algebra and the tuple mod p.
bool base_change_check(const Multialgebra<RationalField>& algebra, std::uint64_t p,
                       std::span<const Vec<RationalField>> tuple, bool unital = false);

extern template Closure<PrimeField> closure(const Multialgebra<PrimeField>&,
                                            std::span<const Vec<PrimeField>>, bool, bool);
extern template Closure<RationalField> closure(const Multialgebra<RationalField>&,
                                               std::span<const Vec<RationalField>>, bool, bool);

}  // namespace genalg
