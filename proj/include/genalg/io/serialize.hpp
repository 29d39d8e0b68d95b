#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "genalg/algebra/closure.hpp"
#include "genalg/forster/forster.hpp"
#include "genalg/search/search.hpp"

namespace genalg::io {

using Json = nlohmann::ordered_json;

/// An algebra file after validation: a field algebra or an integral one.
struct LoadedAlgebra {
  std::variant<Multialgebra<PrimeField>, Multialgebra<RationalField>, IntegralAlgebra> algebra;
  /// Present when a Z-algebra was given by generators and relations; maps
  /// tuples written in those generators to invariant-factor coordinates.
  std::optional<IntMatrix> presentation_map;

  bool is_integral() const { return std::holds_alternative<IntegralAlgebra>(algebra); }
  std::string base_name() const;
};

// Integers travel as decimal strings; JSON numbers are accepted on input.
Integer json_integer(const Json& j);
std::uint64_t json_u64(const Json& j);
std::size_t json_size(const Json& j);
Rational json_rational(const Json& j);

template <class F>
Json algebra_to_json(const Multialgebra<F>& algebra);
Json algebra_to_json(const IntegralAlgebra& algebra);
Json algebra_to_json(const LoadedAlgebra& algebra);

LoadedAlgebra algebra_from_json(const Json& j);
LoadedAlgebra load_algebra_file(const std::string& path);

/// Reads a JSON document from a file; throws InputError when unreadable.
Json read_json_file(const std::string& path);
/// Inline JSON, or the contents of a file when the text starts with '@'.
Json json_argument(const std::string& text);

/// SHA-256 of the canonical JSON of the (normalized) algebra, in hex.
std::string algebra_hash(const LoadedAlgebra& algebra);
std::string sha256_hex(const std::string& data);

template <class F>
Json vector_to_json(const F& field, const Vec<F>& v);
template <class F>
Vec<F> vector_from_json(const F& field, const Json& j);
Json int_vector_to_json(const IntVector& v);
IntVector int_vector_from_json(const Json& j);

template <class F>
Json tuple_to_json(const F& field, const std::vector<Vec<F>>& tuple);
template <class F>
std::vector<Vec<F>> tuple_from_json(const Multialgebra<F>& algebra, const Json& j);
/// Integer tuple in the algebra's own coordinates, transported through the
/// presentation when there is one.
std::vector<IntVector> integral_tuple_from_json(const LoadedAlgebra& algebra, const Json& j);

Json budget_to_json(const SearchBudget& budget);
SearchBudget budget_from_json(const Json& j);

Json method_to_json(const GenerationMethod& method);
GenerationMethod method_from_json(const Json& j);

template <class F>
Json generation_certificate_to_json(const F& field, const GenerationCertificate<F>& cert,
                                    std::size_t dimension);
template <class F>
GenerationCertificate<F> generation_certificate_from_json(const Multialgebra<F>& algebra,
                                                          const Json& j);

Json mingen_report_to_json(const MinGenReport& report, const SearchBudget& budget,
                           const Multialgebra<PrimeField>& algebra);
Json bad_primes_to_json(const BadPrimes& bad);
Json global_report_to_json(const GlobalReport& report);
Json local_report_to_json(const LocalReport& report);

Json prime_set_to_json(const PrimeSet& set);
PrimeSet prime_set_from_json(const Json& j);
Json lift_certificate_to_json(const LiftCertificate& cert);
LiftCertificate lift_certificate_from_json(const Json& j);

/// Adds "algebra_hash" and a trailing "digest" over everything else.
Json seal(Json payload, const LoadedAlgebra& algebra);
/// Digest of a certificate with its "digest" member removed.
std::string certificate_digest(const Json& cert);

}  // namespace genalg::io
