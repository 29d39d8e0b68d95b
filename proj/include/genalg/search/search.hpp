#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genalg/algebra/closure.hpp"
#include "genalg/algebra/multialgebra.hpp"
#include "genalg/exactmath/integer.hpp"

namespace genalg {

struct SearchBudget {
  std::uint64_t max_exhaustive = 1'000'000;
  std::uint64_t random_trials = 1000;
  std::uint64_t seed = 0;
  std::int64_t coeff_height = 10;
  /// Selects the OpenMP kernels; the serial ones give identical answers.
  bool parallel = true;

  void validate() const;
  bool operator==(const SearchBudget&) const = default;
};

/// Writes the tuple with lexicographic index `index` among all `count`-tuples
/// of F_p^dim into `out` (first element most significant; coordinate 0 most
/// significant within an element).
void decode_tuple(const PrimeField& field, std::size_t dim, std::size_t count, std::uint64_t index,
                  std::vector<Vec<PrimeField>>& out);
std::uint64_t encode_tuple(const PrimeField& field, std::span<const Vec<PrimeField>> tuple);

/// Number of count-tuples, p^(dim*count), when it does not exceed `cap`.
std::optional<std::uint64_t> tuple_space_size(const PrimeField& field, std::size_t dim,
                                              std::size_t count, std::uint64_t cap);

/// The deterministic random tuple for (seed, trial): integer coordinates in
/// [-height, height], mapped into the field.
template <class F>
std::vector<Vec<F>> random_tuple(const F& field, std::size_t dim, std::size_t count,
                                 std::uint64_t seed, std::uint64_t trial, std::int64_t height);

struct SearchAttempt {
  std::size_t size = 0;
  bool exhaustive = false;
  /// Exhaustive: size of the tuple space. Random: trials allowed.
  std::uint64_t candidates = 0;
  /// Candidates examined up to and including the first success.
  std::uint64_t examined = 0;
  bool found = false;

  bool operator==(const SearchAttempt&) const = default;
};

enum class SearchStatus { kFound, kCertifiedNone, kInconclusive };

struct MinGenReport {
  SearchStatus status = SearchStatus::kInconclusive;
  std::size_t n_upper = 0;
  bool lower_bound_certified = false;
  bool unital = false;
  std::optional<GenerationCertificate<PrimeField>> certificate;
  std::vector<SearchAttempt> attempts;

  bool operator==(const MinGenReport&) const = default;
};

/// Tries n = 0, 1, 2, ... up to the dimension. Each size is enumerated
/// exhaustively when the tuple space fits the budget and sampled otherwise;
/// the first generating tuple ends the search. The lower bound is certified
/// only when every smaller size was exhaustively refuted.
MinGenReport min_generators(const Multialgebra<PrimeField>& algebra, const SearchBudget& budget,
                            bool unital = false);

/// Seeded random n-tuples; returns the first generating one.
template <class F>
std::optional<GenerationCertificate<F>> random_probe(const Multialgebra<F>& algebra, std::size_t n,
                                                     const SearchBudget& budget,
                                                     bool unital = false);

struct Completion {
  SearchStatus status = SearchStatus::kInconclusive;
  /// Full generating n-tuple (partial prefix included) when found.
  std::vector<Vec<PrimeField>> tuple;
  /// The element placed right after the partial tuple; empty when i = n.
  Vec<PrimeField> next;
  GenerationMethod method;
  SearchAttempt attempt;
};

/// Decides whether `partial` (i elements, i <= n) extends to a generating
/// n-tuple: exhaustively over all p^(r(n-i)) extensions when that fits the
/// budget (the lexicographically first completion wins), otherwise by
/// seeded sampling, which can only report kFound or kInconclusive.
Completion completable(const Multialgebra<PrimeField>& algebra,
                       std::span<const Vec<PrimeField>> partial, std::size_t n,
                       const SearchBudget& budget, bool unital = false);

/// Largest closure dimension over every count-tuple, or nullopt if the space
/// exceeds the budget.
std::optional<std::size_t> max_closure_dimension(const Multialgebra<PrimeField>& algebra,
                                                 std::size_t count, const SearchBudget& budget,
                                                 bool unital = false);

extern template std::optional<GenerationCertificate<PrimeField>> random_probe(
    const Multialgebra<PrimeField>&, std::size_t, const SearchBudget&, bool);
extern template std::optional<GenerationCertificate<RationalField>> random_probe(
    const Multialgebra<RationalField>&, std::size_t, const SearchBudget&, bool);

}  // namespace genalg
