#pragma once

#include <optional>
#include <span>
#include <vector>

#include "genalg/exactmath/integer.hpp"

namespace genalg {

struct Congruence {
  Integer modulus;
  Integer residue;
};

/// Smallest nonnegative x with x = residue (mod modulus) for every entry.
/// Moduli need not be coprime as long as the residues are consistent;
/// throws InputError otherwise, or on a nonpositive modulus. An empty system
/// yields 0.
Integer crt(std::span<const Congruence> system);

/// Prime factorization with multiplicities, in ascending order. When a
/// cofactor could not be split or proven prime, `unfactored` holds it and the
/// factorization is incomplete.
struct Factorization {
  std::vector<Integer> primes;
  std::optional<Integer> unfactored;

  bool complete() const { return !unfactored.has_value(); }
  std::vector<Integer> distinct_primes() const;
};

/// Trial division up to `bound`, then Pollard-Brent rho with fixed seeds on
/// the cofactor. A rho factor is only accepted once proven prime (exact
/// primality for cofactors below 2^64); anything else is reported unfactored.
/// Throws InputError for n = 0. Signs are ignored.
Factorization factor(const Integer& n, const Integer& bound);

/// Proven primality; nullopt when the number is too large to decide exactly.
std::optional<bool> is_prime_proven(const Integer& n);

Integer next_prime(const Integer& n);

}  // namespace genalg
