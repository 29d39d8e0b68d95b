#pragma once

#include <set>
#include <string>
#include <vector>

#include "genalg/exactmath/integer.hpp"

namespace genalg {

/// A locally closed subset of Max Z: either a finite set of primes or the
/// complement of one.
class PrimeSet {
 public:
  enum class Kind { kFinite, kCofinite };

  static PrimeSet finite(std::set<Integer> primes);
  static PrimeSet cofinite(std::set<Integer> excluded);
  static PrimeSet everything() { return cofinite({}); }
  static PrimeSet nothing() { return finite({}); }

  Kind kind() const noexcept { return kind_; }
  /// Members of a finite set, or the excluded primes of a cofinite one.
  const std::set<Integer>& primes() const noexcept { return primes_; }

  bool empty() const noexcept { return kind_ == Kind::kFinite && primes_.empty(); }
  bool contains(const Integer& p) const;
  /// Krull dimension: 1 for cofinite, 0 for a nonempty finite set, and -1
  /// standing in for the empty set.
  int dimension() const noexcept;
  bool dimension_at_most(int bound) const noexcept;

  /// Smallest member. Throws InputError on the empty set.
  Integer smallest() const;

  PrimeSet intersect(const PrimeSet& other) const;
  PrimeSet unite(const PrimeSet& other) const;
  PrimeSet minus(const PrimeSet& other) const;

  std::string describe() const;
  bool operator==(const PrimeSet&) const = default;

 private:
  PrimeSet(Kind kind, std::set<Integer> primes) : kind_(kind), primes_(std::move(primes)) {}

  Kind kind_ = Kind::kFinite;
  std::set<Integer> primes_;
};

}  // namespace genalg
