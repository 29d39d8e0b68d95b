#include "genalg/io/serialize.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "genalg/exactmath/errors.hpp"

namespace genalg::io {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

const Json& array_member(const Json& j, const char* key) {
  const Json& a = member(j, key);
  if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return a;
}

bool json_bool(const Json& j) {
  if (!j.is_boolean()) throw InputError("expected true or false");
  return j.get<bool>();
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }

template <class Format, class C>
Json ops_to_json(const Format& field, const std::vector<OperationTensor<C>>& ops) {
  Json out = Json::array();
  for (const auto& op : ops) {
    Json entries = Json::array();
    for (const auto& term : op.terms) {
      Json e = Json::array();
      for (auto i : term.inputs) e.push_back(std::to_string(i));
      e.push_back(std::to_string(term.output));
      e.push_back(field.format(term.coefficient));
      entries.push_back(std::move(e));
    }
    out.push_back({{"arity", std::to_string(op.arity)},
                   {"role", role_name(op.role)},
                   {"entries", std::move(entries)}});
  }
  return out;
}

struct IntegerFormat {
  std::string format(const Integer& c) const { return to_string(c); }
};

std::string coefficient_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  throw InputError("coefficients must be integers or \"num/den\" strings");
}

template <class Coefficient, class Parse>
std::vector<OperationTensor<Coefficient>> ops_from_json(const Json& j, Parse&& parse) {
  std::vector<OperationTensor<Coefficient>> ops;
  for (const auto& op : j) {
    OperationTensor<Coefficient> t;
    t.arity = json_size(member(op, "arity"));
    t.role = parse_role(op.contains("role") ? op.at("role").get<std::string>() : "operation");
    for (const auto& e : array_member(op, "entries")) {
      if (!e.is_array() || e.size() != t.arity + 2) {
        throw InputError("tensor entry must list " + std::to_string(t.arity) +
                         " inputs, an output and a coefficient");
      }
      typename OperationTensor<Coefficient>::Term term;
      for (std::size_t s = 0; s < t.arity; ++s) {
        term.inputs.push_back(static_cast<std::uint32_t>(json_size(e[s])));
      }
      term.output = static_cast<std::uint32_t>(json_size(e[t.arity]));
      term.coefficient = parse(coefficient_text(e[t.arity + 1]));
      t.terms.push_back(std::move(term));
    }
    ops.push_back(std::move(t));
  }
  return ops;
}

Json method_tag(MethodTag tag) {
  switch (tag) {
    case MethodTag::kRandom: return "random";
    case MethodTag::kExhaustive: return "exhaustive";
    case MethodTag::kExplicit: break;
  }
  return "explicit";
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kCertifiedNone: return "certified-none";
    case SearchStatus::kInconclusive: break;
  }
  return "inconclusive";
}

Json cells_to_json(const std::vector<PartitionCell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    Json witness = Json::array();
    for (auto w : c.witness) witness.push_back(std::to_string(w));
    out.push_back({{"region", prime_set_to_json(c.region)},
                   {"level", std::to_string(c.level)},
                   {"witness", std::move(witness)}});
  }
  return out;
}

std::vector<PartitionCell> cells_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("partition must be an array");
  std::vector<PartitionCell> out;
  for (const auto& c : j) {
    PartitionCell cell{prime_set_from_json(member(c, "region")), json_size(member(c, "level")), {}};
    for (const auto& w : array_member(c, "witness")) cell.witness.push_back(json_size(w));
    out.push_back(std::move(cell));
  }
  return out;
}

Json integers_to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<Integer> integers_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(json_integer(x));
  return out;
}

}  // namespace

std::string LoadedAlgebra::base_name() const {
  if (const auto* fp = std::get_if<Multialgebra<PrimeField>>(&algebra)) return fp->field().name();
  if (std::holds_alternative<Multialgebra<RationalField>>(algebra)) return "Q";
  return "Z";
}

Integer json_integer(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return parse_integer(j.dump());
  throw InputError("expected an integer, got " + j.dump());
}

std::uint64_t json_u64(const Json& j) {
  const auto v = to_u64(json_integer(j));
  if (!v) throw InputError("integer out of range: " + j.dump());
  return *v;
}

std::size_t json_size(const Json& j) {
  const std::uint64_t v = json_u64(j);
  if (v > (std::uint64_t{1} << 40)) throw InputError("size out of range: " + j.dump());
  return static_cast<std::size_t>(v);
}

Rational json_rational(const Json& j) { return parse_rational(coefficient_text(j)); }

template <class F>
Json algebra_to_json(const Multialgebra<F>& algebra) {
  Json out;
  if constexpr (F::kFinite) {
    out["base"] = "Fp";
    out["p"] = str(algebra.field().modulus());
  } else {
    out["base"] = "Q";
  }
  out["dimension"] = std::to_string(algebra.dimension());
  out["ops"] = ops_to_json(algebra.field(), algebra.operations());
  return out;
}

Json algebra_to_json(const IntegralAlgebra& algebra) {
  Json out;
  out["base"] = "Z";
  out["invariant_factors"] = integers_to_json(algebra.invariants());
  out["ops"] = ops_to_json(IntegerFormat{}, algebra.operations());
  return out;
}

Json algebra_to_json(const LoadedAlgebra& algebra) {
  return std::visit([](const auto& a) { return algebra_to_json(a); }, algebra.algebra);
}

LoadedAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("an algebra file must be a JSON object");
  const std::string base = member(j, "base").get<std::string>();
  const Json& ops = array_member(j, "ops");
  if (base == "Fp") {
    const std::uint64_t p = json_u64(member(j, "p"));
    const PrimeField field(p);
    auto tensors = ops_from_json<PrimeField>(ops, [&](const std::string& s) { return field.parse(s); });
    return {Multialgebra<PrimeField>(field, json_size(member(j, "dimension")), std::move(tensors)),
            std::nullopt};
  }
  if (base == "Q") {
    auto tensors = ops_from_json<RationalField>(ops, [](const std::string& s) { return parse_rational(s); });
    return {Multialgebra<RationalField>(RationalField{}, json_size(member(j, "dimension")),
                                        std::move(tensors)),
            std::nullopt};
  }
  if (base == "Z") {
    auto tensors = ops_from_json<IntegerRing>(ops, [](const std::string& s) { return parse_integer(s); });
    const bool has_invariants = j.contains("invariant_factors");
    const bool has_presentation = j.contains("generators") || j.contains("relations");
    if (has_invariants == has_presentation) {
      throw InputError("a Z-algebra needs either invariant_factors or generators and relations");
    }
    if (has_invariants) {
      return {IntegralAlgebra(integers_from_json(j.at("invariant_factors")), std::move(tensors)),
              std::nullopt};
    }
    const std::size_t g = json_size(member(j, "generators"));
    std::vector<IntVector> relations;
    for (const auto& r : array_member(j, "relations")) relations.push_back(integers_from_json(r));
    auto normalized = IntegralAlgebra::from_presentation(g, relations, tensors);
    return {std::move(normalized.algebra), std::move(normalized.coordinate_map)};
  }
  throw InputError("unknown base '" + base + "' (expected Fp, Q or Z)");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json json_argument(const std::string& text) {
  if (!text.empty() && text[0] == '@') return read_json_file(text.substr(1));
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON argument: ") + e.what());
  }
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  return algebra_from_json(read_json_file(path));
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw InvariantViolation("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

std::string algebra_hash(const LoadedAlgebra& algebra) {
  return sha256_hex(algebra_to_json(algebra).dump());
}

template <class F>
Json vector_to_json(const F& field, const Vec<F>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(field.format(x));
  return out;
}

template <class F>
Vec<F> vector_from_json(const F& field, const Json& j) {
  if (!j.is_array()) throw InputError("an element must be an array of coordinates");
  Vec<F> out;
  for (const auto& x : j) {
    if constexpr (F::kFinite) {
      const Integer v = json_integer(x);
      if (v < 0 || v >= field.characteristic()) {
        throw InputError("coordinate " + to_string(v) + " is not a residue mod " +
                         to_string(field.characteristic()));
      }
      out.push_back(*to_u64(v));
    } else {
      out.push_back(json_rational(x));
    }
  }
  return out;
}

Json int_vector_to_json(const IntVector& v) { return integers_to_json(v); }
IntVector int_vector_from_json(const Json& j) { return integers_from_json(j); }

template <class F>
Json tuple_to_json(const F& field, const std::vector<Vec<F>>& tuple) {
  Json out = Json::array();
  for (const auto& v : tuple) out.push_back(vector_to_json(field, v));
  return out;
}

template <class F>
std::vector<Vec<F>> tuple_from_json(const Multialgebra<F>& algebra, const Json& j) {
  if (!j.is_array()) throw InputError("a tuple must be an array of elements");
  std::vector<Vec<F>> out;
  for (const auto& e : j) {
    out.push_back(vector_from_json(algebra.field(), e));
    algebra.check_element(out.back());
  }
  return out;
}

std::vector<IntVector> integral_tuple_from_json(const LoadedAlgebra& loaded, const Json& j) {
  const auto& algebra = std::get<IntegralAlgebra>(loaded.algebra);
  if (!j.is_array()) throw InputError("a tuple must be an array of elements");
  std::vector<IntVector> out;
  for (const auto& e : j) {
    IntVector v = int_vector_from_json(e);
    if (loaded.presentation_map) {
      out.push_back(IntegralAlgebra::Normalized{algebra, *loaded.presentation_map}.transport(v));
    } else {
      out.push_back(algebra.canonical(std::move(v)));
    }
  }
  return out;
}

Json budget_to_json(const SearchBudget& budget) {
  return {{"max_exhaustive", str(budget.max_exhaustive)},
          {"random_trials", str(budget.random_trials)},
          {"seed", str(budget.seed)},
          {"coeff_height", str(budget.coeff_height)}};
}

SearchBudget budget_from_json(const Json& j) {
  SearchBudget b;
  b.max_exhaustive = json_u64(member(j, "max_exhaustive"));
  b.random_trials = json_u64(member(j, "random_trials"));
  b.seed = json_u64(member(j, "seed"));
  const auto h = to_u64(json_integer(member(j, "coeff_height")));
  if (!h || *h > (std::uint64_t{1} << 40)) throw InputError("coefficient height out of range");
  b.coeff_height = static_cast<std::int64_t>(*h);
  b.validate();
  return b;
}

Json method_to_json(const GenerationMethod& method) {
  return {{"tag", method_tag(method.tag)},
          {"seed", str(method.seed)},
          {"trial", str(method.trial)},
          {"height", str(method.height)},
          {"index", str(method.index)}};
}

GenerationMethod method_from_json(const Json& j) {
  GenerationMethod m;
  const std::string tag = member(j, "tag").get<std::string>();
  if (tag == "explicit") {
    m.tag = MethodTag::kExplicit;
  } else if (tag == "random") {
    m.tag = MethodTag::kRandom;
  } else if (tag == "exhaustive") {
    m.tag = MethodTag::kExhaustive;
  } else {
    throw InputError("unknown generation method '" + tag + "'");
  }
  m.seed = json_u64(member(j, "seed"));
  m.trial = json_u64(member(j, "trial"));
  const auto h = to_u64(json_integer(member(j, "height")));
  if (!h || *h > (std::uint64_t{1} << 40)) throw InputError("method height out of range");
  m.height = static_cast<std::int64_t>(*h);
  m.index = json_u64(member(j, "index"));
  return m;
}

template <class F>
Json generation_certificate_to_json(const F& field, const GenerationCertificate<F>& cert,
                                    std::size_t dimension) {
  return {{"kind", "generation"},
          {"unital", cert.unital},
          {"tuple", tuple_to_json(field, cert.tuple)},
          {"dimension", std::to_string(dimension)},
          {"closure_dimension", std::to_string(cert.closure_dimension)},
          {"generating", cert.closure_dimension == dimension},
          {"monomial_witness_count", std::to_string(cert.monomial_witness_count)},
          {"method", method_to_json(cert.method)}};
}

template <class F>
GenerationCertificate<F> generation_certificate_from_json(const Multialgebra<F>& algebra,
                                                          const Json& j) {
  GenerationCertificate<F> cert;
  cert.tuple = tuple_from_json(algebra, member(j, "tuple"));
  cert.closure_dimension = json_size(member(j, "closure_dimension"));
  cert.unital = json_bool(member(j, "unital"));
  cert.monomial_witness_count = json_size(member(j, "monomial_witness_count"));
  cert.method = method_from_json(member(j, "method"));
  return cert;
}

Json mingen_report_to_json(const MinGenReport& report, const SearchBudget& budget,
                           const Multialgebra<PrimeField>& algebra) {
  Json attempts = Json::array();
  for (const auto& a : report.attempts) {
    attempts.push_back({{"size", std::to_string(a.size)},
                        {"exhaustive", a.exhaustive},
                        {"candidates", str(a.candidates)},
                        {"examined", str(a.examined)},
                        {"found", a.found}});
  }
  Json out = {{"kind", "mingen"},
              {"unital", report.unital},
              {"budget", budget_to_json(budget)},
              {"status", status_name(report.status)},
              {"n_upper", std::to_string(report.n_upper)},
              {"lower_bound_certified", report.lower_bound_certified},
              {"attempts", std::move(attempts)}};
  out["certificate"] = report.certificate ? generation_certificate_to_json(
                                                algebra.field(), *report.certificate,
                                                algebra.dimension())
                                          : Json(nullptr);
  return out;
}

Json bad_primes_to_json(const BadPrimes& bad) {
  return {{"generic_fail", bad.generic_fail},
          {"exponent", to_string(bad.exponent)},
          {"primes", integers_to_json(bad.primes)}};
}

Json global_report_to_json(const GlobalReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.fiber_checks) {
    checks.push_back(
        {{"prime", to_string(c.prime)}, {"expected", c.expected}, {"observed", c.observed}});
  }
  Json out = {{"generates", report.generates},
              {"index", to_string(report.index)},
              {"bad_primes", bad_primes_to_json(report.bad)},
              {"fiber_checks", std::move(checks)}};
  out["generic_fiber_generates"] =
      report.generic_fiber_generates ? Json(*report.generic_fiber_generates) : Json(nullptr);
  out["consistent"] = report.consistent;
  return out;
}

Json local_report_to_json(const LocalReport& report) {
  static const char* kNames[] = {"verified", "counterexample", "inconclusive"};
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"prime", to_string(c.prime)}, {"status", status_name(c.status)}});
  }
  Json out = {{"status", kNames[static_cast<int>(report.status)]}};
  out["counterexample_prime"] =
      report.counterexample ? Json(to_string(*report.counterexample)) : Json(nullptr);
  if (report.witness) {
    Json w = Json::array();
    for (const auto& v : *report.witness) w.push_back(int_vector_to_json(v));
    out["generic_witness"] = std::move(w);
  } else {
    out["generic_witness"] = nullptr;
  }
  out["witness_bad_primes"] = integers_to_json(report.witness_bad_primes);
  out["checks"] = std::move(checks);
  return out;
}

Json prime_set_to_json(const PrimeSet& set) {
  std::vector<Integer> primes(set.primes().begin(), set.primes().end());
  return {{"kind", set.kind() == PrimeSet::Kind::kFinite ? "finite" : "cofinite"},
          {"primes", integers_to_json(primes)}};
}

PrimeSet prime_set_from_json(const Json& j) {
  const std::string kind = member(j, "kind").get<std::string>();
  const auto list = integers_from_json(member(j, "primes"));
  std::set<Integer> primes(list.begin(), list.end());
  if (primes.size() != list.size()) throw InputError("repeated prime in a prime set");
  if (kind == "finite") return PrimeSet::finite(std::move(primes));
  if (kind == "cofinite") return PrimeSet::cofinite(std::move(primes));
  throw InputError("unknown prime-set kind '" + kind + "'");
}

Json lift_certificate_to_json(const LiftCertificate& cert) {
  Json generators = Json::array();
  for (const auto& g : cert.generators) generators.push_back(int_vector_to_json(g));
  Json steps = Json::array();
  for (const auto& step : cert.steps) {
    Json choices = Json::array();
    for (const auto& c : step.choices) {
      const PrimeField field(*to_u64(c.prime));
      choices.push_back({{"cell", std::to_string(c.cell)},
                         {"prime", to_string(c.prime)},
                         {"completion", tuple_to_json(field, c.completion)},
                         {"method", method_to_json(c.method)},
                         {"bad_primes", integers_to_json(c.bad_primes)}});
    }
    Json open_sets = Json::array();
    for (const auto& u : step.open_sets) open_sets.push_back(prime_set_to_json(u));
    steps.push_back({{"choices", std::move(choices)},
                     {"element", int_vector_to_json(step.element)},
                     {"open_sets", std::move(open_sets)},
                     {"partition", cells_to_json(step.partition)}});
  }
  return {{"kind", "forster-lift"},
          {"n", std::to_string(cert.n)},
          {"options",
           {{"budget", budget_to_json(cert.options.budget)},
            {"factor_bound", to_string(cert.options.factor_bound)}}},
          {"generators", std::move(generators)},
          {"initial_partition", cells_to_json(cert.initial_partition)},
          {"steps", std::move(steps)},
          {"verified", cert.verified},
          {"final_index", to_string(cert.final_index)}};
}

LiftCertificate lift_certificate_from_json(const Json& j) {
  LiftCertificate cert;
  cert.n = json_size(member(j, "n"));
  const Json& options = member(j, "options");
  cert.options.budget = budget_from_json(member(options, "budget"));
  cert.options.factor_bound = json_integer(member(options, "factor_bound"));
  for (const auto& g : array_member(j, "generators")) cert.generators.push_back(int_vector_from_json(g));
  cert.initial_partition = cells_from_json(member(j, "initial_partition"));
  for (const auto& s : array_member(j, "steps")) {
    LiftStep step;
    for (const auto& c : array_member(s, "choices")) {
      LocalChoice choice;
      choice.cell = json_size(member(c, "cell"));
      choice.prime = json_integer(member(c, "prime"));
      for (const auto& v : array_member(c, "completion")) {
        Vec<PrimeField> w;
        if (!v.is_array()) throw InputError("completion element must be an array");
        for (const auto& x : v) w.push_back(json_u64(x));
        choice.completion.push_back(std::move(w));
      }
      choice.method = method_from_json(member(c, "method"));
      choice.bad_primes = integers_from_json(member(c, "bad_primes"));
      step.choices.push_back(std::move(choice));
    }
    step.element = int_vector_from_json(member(s, "element"));
    for (const auto& u : array_member(s, "open_sets")) step.open_sets.push_back(prime_set_from_json(u));
    step.partition = cells_from_json(member(s, "partition"));
    cert.steps.push_back(std::move(step));
  }
  cert.verified = json_bool(member(j, "verified"));
  cert.final_index = json_integer(member(j, "final_index"));
  return cert;
}

std::string certificate_digest(const Json& cert) {
  Json copy = cert;
  if (copy.is_object()) copy.erase("digest");
  return sha256_hex(copy.dump());
}

Json seal(Json payload, const LoadedAlgebra& algebra) {
  payload["algebra_hash"] = algebra_hash(algebra);
  payload["digest"] = certificate_digest(payload);
  return payload;
}

template Json algebra_to_json(const Multialgebra<PrimeField>&);
template Json algebra_to_json(const Multialgebra<RationalField>&);
template Json vector_to_json(const PrimeField&, const Vec<PrimeField>&);
template Json vector_to_json(const RationalField&, const Vec<RationalField>&);
template Vec<PrimeField> vector_from_json(const PrimeField&, const Json&);
template Vec<RationalField> vector_from_json(const RationalField&, const Json&);
template Json tuple_to_json(const PrimeField&, const std::vector<Vec<PrimeField>>&);
template Json tuple_to_json(const RationalField&, const std::vector<Vec<RationalField>>&);
template std::vector<Vec<PrimeField>> tuple_from_json(const Multialgebra<PrimeField>&, const Json&);
template std::vector<Vec<RationalField>> tuple_from_json(const Multialgebra<RationalField>&,
                                                         const Json&);
template Json generation_certificate_to_json(const PrimeField&,
                                             const GenerationCertificate<PrimeField>&,
                                             std::size_t);
template Json generation_certificate_to_json(const RationalField&,
                                             const GenerationCertificate<RationalField>&,
                                             std::size_t);
template GenerationCertificate<PrimeField> generation_certificate_from_json(
    const Multialgebra<PrimeField>&, const Json&);
template GenerationCertificate<RationalField> generation_certificate_from_json(
    const Multialgebra<RationalField>&, const Json&);

}  // namespace genalg::io
