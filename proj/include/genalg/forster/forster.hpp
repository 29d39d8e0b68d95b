#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genalg/exactmath/errors.hpp"
#include "genalg/exactmath/lattice.hpp"
#include "genalg/forster/integral_algebra.hpp"
#include "genalg/forster/prime_set.hpp"
#include "genalg/search/search.hpp"

namespace genalg {

/// Factorization of a needed integer did not finish within the bound.
class FactorizationIncomplete : public Inconclusive {
 public:
  explicit FactorizationIncomplete(Integer cofactor)
      : Inconclusive("could not factor " + to_string(cofactor)), cofactor_(std::move(cofactor)) {}
  const Integer& cofactor() const noexcept { return cofactor_; }

 private:
  Integer cofactor_;
};

/// Some fiber needs more than n generators.
class HypothesisFailure : public std::runtime_error {
 public:
  explicit HypothesisFailure(Integer prime)
      : std::runtime_error("the fiber at p = " + to_string(prime) + " is not generated by n elements"),
        prime_(std::move(prime)) {}
  const Integer& prime() const noexcept { return prime_; }

 private:
  Integer prime_;
};

inline const Integer kDefaultFactorBound = 1'000'000;

/// Smallest subgroup of the module containing S and closed under every
/// operation of positive arity (and the constants when `unital`), as a
/// lattice in Z^m that contains the relation vectors d_i e_i.
IntegerLattice monomial_subgroup(const IntegralAlgebra& algebra, const std::vector<IntVector>& s,
                                 bool unital = false);

struct BadPrimes {
  /// The quotient M/B is infinite: S fails in every fiber.
  bool generic_fail = false;
  std::vector<Integer> primes;
  /// Exponent of M/B when finite.
  Integer exponent = 0;
};

/// Primes p for which S does not generate the fiber at p. Throws
/// FactorizationIncomplete when the exponent cannot be factored.
BadPrimes bad_primes(const IntegralAlgebra& algebra, const std::vector<IntVector>& s,
                     bool unital = false, const Integer& factor_bound = kDefaultFactorBound);

struct FiberCheck {
  Integer prime;
  bool expected = false;
  bool observed = false;
};

struct GlobalReport {
  bool generates = false;
  /// Index of B in M, 0 when infinite.
  Integer index = 0;
  BadPrimes bad;
  std::vector<FiberCheck> fiber_checks;
  std::optional<bool> generic_fiber_generates;
  bool consistent = true;
};

/// S generates iff its monomial subgroup is all of M. The report confirms
/// the verdict fiber by fiber at the bad primes, at the torsion primes and
/// at 2, 3 and 5.
GlobalReport verify_global_generation(const IntegralAlgebra& algebra,
                                      const std::vector<IntVector>& s, bool unital = false,
                                      const Integer& factor_bound = kDefaultFactorBound);

enum class LocalStatus { kVerified, kCounterexample, kInconclusive };

struct LocalPrimeCheck {
  Integer prime;
  SearchStatus status = SearchStatus::kInconclusive;
};

struct LocalReport {
  LocalStatus status = LocalStatus::kInconclusive;
  std::optional<Integer> counterexample;
  /// Integer n-tuple generating the generic fiber, when one was found.
  std::optional<std::vector<IntVector>> witness;
  std::vector<Integer> witness_bad_primes;
  std::vector<LocalPrimeCheck> checks;
};

/// Evidence that every fiber of A is generated by n elements.
LocalReport local_requirement(const IntegralAlgebra& algebra, std::size_t n,
                              const SearchBudget& budget,
                              const Integer& factor_bound = kDefaultFactorBound);

struct LiftOptions {
  SearchBudget budget;
  Integer factor_bound = kDefaultFactorBound;

  bool operator==(const LiftOptions&) const = default;
};

struct PartitionCell {
  PrimeSet region;
  std::size_t level = 0;
  /// Indices (0-based) into the generators chosen so far.
  std::vector<std::size_t> witness;

  bool operator==(const PartitionCell&) const = default;
};

/// The local work done at one representative prime of one cell.
struct LocalChoice {
  std::size_t cell = 0;
  Integer prime;
  /// Generating n-tuple of the fiber that extends the witnessed elements.
  std::vector<Vec<PrimeField>> completion;
  GenerationMethod method;
  /// Bad primes of the integral lift (witnessed generators, new element,
  /// lifted remainder of the completion).
  std::vector<Integer> bad_primes;

  bool operator==(const LocalChoice&) const = default;
};

struct LiftStep {
  std::vector<LocalChoice> choices;
  IntVector element;
  /// Open set per active cell, indexed like `choices` by cell.
  std::vector<PrimeSet> open_sets;
  std::vector<PartitionCell> partition;

  bool operator==(const LiftStep&) const = default;
};

struct LiftCertificate {
  std::size_t n = 0;
  LiftOptions options;
  std::vector<IntVector> generators;
  std::vector<PartitionCell> initial_partition;
  std::vector<LiftStep> steps;
  bool verified = false;
  Integer final_index = 0;

  bool operator==(const LiftCertificate&) const = default;
};

/// Builds n + 1 generators of A over Z by refining a partition of Max Z one
/// chosen element at a time. Runs local_requirement first and throws
/// HypothesisFailure on a certified counterexample, Inconclusive when a
/// budget runs out and InvariantViolation if a bookkeeping check fails.
LiftCertificate forster_lift(const IntegralAlgebra& algebra, std::size_t n,
                             const LiftOptions& options = {});

/// Independent checks on a certificate: partition soundness and the
/// dimension bounds at every step, each local completion against its fiber,
/// each new element against its local values, every open set against a fresh
/// bad-prime computation, and global generation of the final tuple. Returns
/// the list of failed checks.
std::vector<std::string> audit_lift(const IntegralAlgebra& algebra, const LiftCertificate& cert);

/// Pairwise disjoint regions covering every prime.
bool is_partition_of_spectrum(const std::vector<PartitionCell>& cells);

/// Whether every level i < n has dimension at most 1 + i - j.
bool dimension_bounds_hold(const std::vector<PartitionCell>& cells, std::size_t n, std::size_t j);

}  // namespace genalg
