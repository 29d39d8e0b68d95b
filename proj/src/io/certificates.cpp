#include "genalg/io/certificates.hpp"

#include "genalg/exactmath/errors.hpp"

namespace genalg::io {

namespace {

Json strip(Json cert) {
  cert.erase("digest");
  cert.erase("algebra_hash");
  return cert;
}

template <class F>
Json generation_payload(const Multialgebra<F>& algebra, const std::vector<Vec<F>>& tuple,
                        bool unital, const GenerationMethod& method) {
  const auto verdict =
      is_generating(algebra, std::span<const Vec<F>>(tuple), unital, method);
  return generation_certificate_to_json(algebra.field(), verdict.certificate,
                                        algebra.dimension());
}

template <class F>
bool method_reproduces(const Multialgebra<F>& algebra, const GenerationCertificate<F>& cert) {
  const F& field = algebra.field();
  const std::size_t r = algebra.dimension();
  const std::size_t count = cert.tuple.size();
  switch (cert.method.tag) {
    case MethodTag::kExplicit:
      return true;
    case MethodTag::kRandom:
      return cert.method.height > 0 &&
             random_tuple(field, r, count, cert.method.seed, cert.method.trial,
                          cert.method.height) == cert.tuple;
    case MethodTag::kExhaustive:
      if constexpr (F::kFinite) {
        const auto total = tuple_space_size(field, r, count, ~std::uint64_t{0});
        if (!total || cert.method.index >= *total) return false;
        std::vector<Vec<F>> decoded;
        decode_tuple(field, r, count, cert.method.index, decoded);
        return decoded == cert.tuple;
      } else {
        return false;
      }
  }
  return false;
}

Json integral_tuple_json(const std::vector<IntVector>& tuple) {
  Json out = Json::array();
  for (const auto& v : tuple) out.push_back(int_vector_to_json(v));
  return out;
}

std::vector<IntVector> canonical_tuple(const IntegralAlgebra& algebra, const Json& j) {
  if (!j.is_array()) throw InputError("a tuple must be an array of elements");
  std::vector<IntVector> out;
  for (const auto& e : j) {
    IntVector v = int_vector_from_json(e);
    if (algebra.canonical(v) != v) throw InputError("tuple element is not in canonical form");
    out.push_back(std::move(v));
  }
  return out;
}

Json global_payload(const IntegralAlgebra& algebra, const std::vector<IntVector>& tuple,
                    bool unital, const Integer& factor_bound) {
  return {{"kind", "global-generation"},
          {"unital", unital},
          {"tuple", integral_tuple_json(tuple)},
          {"factor_bound", to_string(factor_bound)},
          {"report", global_report_to_json(
                         verify_global_generation(algebra, tuple, unital, factor_bound))}};
}

Json bad_primes_payload(const IntegralAlgebra& algebra, const std::vector<IntVector>& tuple,
                        bool unital, const Integer& factor_bound) {
  return {{"kind", "bad-primes"},
          {"unital", unital},
          {"tuple", integral_tuple_json(tuple)},
          {"factor_bound", to_string(factor_bound)},
          {"result", bad_primes_to_json(bad_primes(algebra, tuple, unital, factor_bound))}};
}

bool flag(const Json& payload, const char* key) {
  if (!payload.contains(key) || !payload.at(key).is_boolean()) {
    throw InputError(std::string("missing flag '") + key + "'");
  }
  return payload.at(key).get<bool>();
}

const IntegralAlgebra& integral(const LoadedAlgebra& loaded, const char* what) {
  if (const auto* a = std::get_if<IntegralAlgebra>(&loaded.algebra)) return *a;
  throw InputError(std::string(what) + " needs a Z-algebra");
}

const Multialgebra<PrimeField>& finite(const LoadedAlgebra& loaded, const char* what) {
  if (const auto* a = std::get_if<Multialgebra<PrimeField>>(&loaded.algebra)) return *a;
  throw InputError(std::string(what) + " needs an algebra over a prime field");
}

}  // namespace

Json generation_certificate(const LoadedAlgebra& loaded, const Json& tuple, bool unital,
                            const Integer& factor_bound) {
  if (const auto* a = std::get_if<IntegralAlgebra>(&loaded.algebra)) {
    return seal(global_payload(*a, integral_tuple_from_json(loaded, tuple), unital, factor_bound),
                loaded);
  }
  return std::visit(
      [&](const auto& a) -> Json {
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, IntegralAlgebra>) {
          return nullptr;
        } else {
          return seal(generation_payload(a, tuple_from_json(a, tuple), unital, {}), loaded);
        }
      },
      loaded.algebra);
}

Json mingen_certificate(const LoadedAlgebra& loaded, const SearchBudget& budget, bool unital) {
  const auto& algebra = finite(loaded, "mingen");
  return seal(mingen_report_to_json(min_generators(algebra, budget, unital), budget, algebra),
              loaded);
}

Json bad_primes_certificate(const LoadedAlgebra& loaded, const Json& tuple, bool unital,
                            const Integer& factor_bound) {
  const auto& algebra = integral(loaded, "bad-primes");
  return seal(bad_primes_payload(algebra, integral_tuple_from_json(loaded, tuple), unital,
                                 factor_bound),
              loaded);
}

Json lift_certificate(const LoadedAlgebra& loaded, std::size_t n, const LiftOptions& options) {
  const auto& algebra = integral(loaded, "forster-lift");
  return seal(lift_certificate_to_json(forster_lift(algebra, n, options)), loaded);
}

Verdict verify_certificate(const LoadedAlgebra& loaded, const Json& cert, CheckMode mode) {
  Verdict verdict;
  auto reject = [&](std::string reason) { verdict.reasons.push_back(std::move(reason)); };
  try {
    if (!cert.is_object()) throw InputError("a certificate must be a JSON object");
    if (mode == CheckMode::kFull) {
      if (!cert.contains("digest") || !cert.at("digest").is_string() ||
          cert.at("digest").get<std::string>() != certificate_digest(cert)) {
        reject("digest does not match the certificate contents");
      }
    }
    if (!cert.contains("algebra_hash") || cert.at("algebra_hash") != algebra_hash(loaded)) {
      reject("certificate was issued for a different algebra");
    }
    const Json payload = strip(cert);
    const std::string kind = payload.at("kind").get<std::string>();

    if (kind == "generation") {
      std::visit(
          [&](const auto& a) {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, IntegralAlgebra>) {
              reject("generation certificates describe field algebras");
            } else {
              const auto parsed = generation_certificate_from_json(a, payload);
              if (!method_reproduces(a, parsed)) reject("recorded method does not produce the tuple");
              if (generation_payload(a, parsed.tuple, parsed.unital, parsed.method) != payload) {
                reject("closure replay disagrees with the certificate");
              }
            }
          },
          loaded.algebra);
    } else if (kind == "mingen") {
      const auto& algebra = finite(loaded, "a mingen certificate");
      const SearchBudget budget = budget_from_json(payload.at("budget"));
      const bool unital = flag(payload, "unital");
      if (!payload.at("certificate").is_null()) {
        const auto embedded = generation_certificate_from_json(algebra, payload.at("certificate"));
        if (!replay(algebra, embedded) || !method_reproduces(algebra, embedded)) {
          reject("embedded generation certificate does not replay");
        }
      }
      if (mingen_report_to_json(min_generators(algebra, budget, unital), budget, algebra) !=
          payload) {
        reject("re-running the search gives a different report");
      }
    } else if (kind == "global-generation") {
      const auto& algebra = integral(loaded, "a global-generation certificate");
      const auto tuple = canonical_tuple(algebra, payload.at("tuple"));
      const Integer bound = json_integer(payload.at("factor_bound"));
      if (global_payload(algebra, tuple, flag(payload, "unital"), bound) != payload) {
        reject("recomputed subgroup disagrees with the certificate");
      }
    } else if (kind == "bad-primes") {
      const auto& algebra = integral(loaded, "a bad-primes certificate");
      const auto tuple = canonical_tuple(algebra, payload.at("tuple"));
      const Integer bound = json_integer(payload.at("factor_bound"));
      if (bad_primes_payload(algebra, tuple, flag(payload, "unital"), bound) != payload) {
        reject("recomputed bad primes disagree with the certificate");
      }
    } else if (kind == "forster-lift") {
      const auto& algebra = integral(loaded, "a lift certificate");
      const LiftCertificate parsed = lift_certificate_from_json(payload);
      const auto failures = audit_lift(algebra, parsed);
      for (const auto& f : failures) reject(f);
      if (failures.empty() &&
          lift_certificate_to_json(forster_lift(algebra, parsed.n, parsed.options)) != payload) {
        reject("re-running the lift gives a different certificate");
      }
    } else {
      reject("unknown certificate kind '" + kind + "'");
    }
  } catch (const std::exception& e) {
    reject(std::string("malformed certificate: ") + e.what());
  }
  verdict.accepted = verdict.reasons.empty();
  return verdict;
}

}  // namespace genalg::io
