#pragma once

#include <string>
#include <vector>

#include "genalg/io/serialize.hpp"

namespace genalg::io {

struct Verdict {
  bool accepted = false;
  std::vector<std::string> reasons;
};

enum class CheckMode {
  /// Digest, algebra hash and semantic replay.
  kFull,
  /// Semantic replay only; the digest is ignored.
  kReplayOnly,
};

/// Checks a certificate emitted by check, mingen, bad-primes or forster-lift
/// against the algebra. Malformed certificate content is a rejection, never
/// an exception.
Verdict verify_certificate(const LoadedAlgebra& algebra, const Json& cert,
                           CheckMode mode = CheckMode::kFull);

/// Certificate builders shared by the command line and the tests. Each
/// result is sealed with the algebra hash and a digest.
Json generation_certificate(const LoadedAlgebra& algebra, const Json& tuple, bool unital,
                            const Integer& factor_bound = kDefaultFactorBound);
Json mingen_certificate(const LoadedAlgebra& algebra, const SearchBudget& budget, bool unital);
Json bad_primes_certificate(const LoadedAlgebra& algebra, const Json& tuple, bool unital,
                            const Integer& factor_bound);
Json lift_certificate(const LoadedAlgebra& algebra, std::size_t n, const LiftOptions& options);

}  // namespace genalg::io
