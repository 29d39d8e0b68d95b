#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genalg/exactmath/errors.hpp"
#include "genalg/io/certificates.hpp"
#include "genalg/zoo/zoo.hpp"

namespace {

using namespace genalg;
using io::Json;

enum Exit : int { kPositive = 0, kNegative = 1, kInconclusive = 2, kInvalid = 3 };

struct Options {
  std::string family;
  std::string field = "Q";
  std::size_t n = 2;
  std::string poly;
  std::string mu;
  std::string sizes;
  std::string invariants;
  std::string algebra_path;
  std::string certificate_path;
  std::string tuple;
  bool unital = false;
  std::uint64_t max_exhaustive = SearchBudget{}.max_exhaustive;
  std::uint64_t trials = SearchBudget{}.random_trials;
  std::uint64_t seed = SearchBudget{}.seed;
  std::int64_t height = SearchBudget{}.coeff_height;
  std::string factor_bound = to_string(kDefaultFactorBound);
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InputError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  return out;
}

std::vector<Integer> integer_list(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& s : split_list(text)) out.push_back(parse_integer(s));
  return out;
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.max_exhaustive = o.max_exhaustive;
  b.random_trials = o.trials;
  b.seed = o.seed;
  b.coeff_height = o.height;
  b.validate();
  return b;
}

Integer factor_bound_of(const Options& o) {
  Integer bound = parse_integer(o.factor_bound);
  if (bound < 2) throw InputError("--factor-bound must be at least 2");
  return bound;
}

ZooRecipe recipe_of(const Options& o) {
  ZooRecipe r;
  r.family = parse_family(o.family);
  r.n = o.n;
  if (!o.poly.empty()) r.poly = integer_list(o.poly);
  if (!o.mu.empty()) {
    r.mu.clear();
    for (const auto& s : split_list(o.mu)) r.mu.push_back(parse_rational(s));
  }
  if (!o.sizes.empty()) {
    for (const auto& s : split_list(o.sizes)) {
      const Integer v = parse_integer(s);
      if (v < 1 || v > 64) throw InputError("matrix sizes must lie in 1..64");
      r.sizes.push_back(static_cast<std::size_t>(v.get_ui()));
    }
  }
  return r;
}

int run_zoo(const Options& o) {
  const ZooRecipe recipe = recipe_of(o);
  Json out;
  std::size_t dimension = 0;
  if (o.field == "Q") {
    const auto a = build(RationalField{}, recipe);
    dimension = a.dimension();
    out = io::algebra_to_json(a);
  } else if (o.field == "Z") {
    if (recipe.family == Family::kZero && !o.invariants.empty()) {
      IntegerTensor product;
      product.arity = 2;
      product.role = OperationRole::kProduct;
      IntegralAlgebra a(integer_list(o.invariants), {product});
      dimension = a.rank();
      out = io::algebra_to_json(a);
    } else {
      const auto a = IntegralAlgebra::from_rational(build(RationalField{}, recipe));
      dimension = a.rank();
      out = io::algebra_to_json(a);
    }
  } else if (o.field.size() > 1 && o.field[0] == 'F') {
    const Integer p = parse_integer(o.field.substr(1));
    if (p < 2 || p.fits_ulong_p() == 0) throw InputError("unsupported prime in --field");
    const auto a = build(PrimeField(p.get_ui()), recipe);
    dimension = a.dimension();
    out = io::algebra_to_json(a);
  } else {
    throw InputError("--field must be F<p>, Q or Z");
  }
  std::cout << out.dump(2) << "\n";
  std::cerr << o.family << " over " << o.field << ": dimension " << dimension << "\n";
  return kPositive;
}

int run_check(const Options& o) {
  const auto loaded = io::load_algebra_file(o.algebra_path);
  const Json cert = io::generation_certificate(loaded, io::json_argument(o.tuple), o.unital,
                                               factor_bound_of(o));
  std::cout << cert.dump(2) << "\n";
  bool generates = false;
  if (cert.at("kind") == "global-generation") {
    generates = cert.at("report").at("generates").get<bool>();
    std::cerr << (generates ? "generates" : "does not generate") << " (index "
              << cert.at("report").at("index").get<std::string>() << ")\n";
  } else {
    generates = cert.at("generating").get<bool>();
    std::cerr << (generates ? "generates" : "does not generate") << ": closure dimension "
              << cert.at("closure_dimension").get<std::string>() << " of "
              << cert.at("dimension").get<std::string>() << "\n";
  }
  return generates ? kPositive : kNegative;
}

int run_mingen(const Options& o) {
  const auto loaded = io::load_algebra_file(o.algebra_path);
  const Json cert = io::mingen_certificate(loaded, budget_of(o), o.unital);
  std::cout << cert.dump(2) << "\n";
  const std::string status = cert.at("status").get<std::string>();
  std::cerr << "status " << status << ", n = " << cert.at("n_upper").get<std::string>()
            << (cert.at("lower_bound_certified").get<bool>() ? " (certified minimum)"
                                                             : " (upper bound only)")
            << "\n";
  if (status == "found") return kPositive;
  if (status == "certified-none") return kNegative;
  return kInconclusive;
}

int run_bad_primes(const Options& o) {
  const auto loaded = io::load_algebra_file(o.algebra_path);
  const Json cert = io::bad_primes_certificate(loaded, io::json_argument(o.tuple), o.unital,
                                               factor_bound_of(o));
  std::cout << cert.dump(2) << "\n";
  const Json& result = cert.at("result");
  if (result.at("generic_fail").get<bool>()) {
    std::cerr << "generic-fail\n";
    return kNegative;
  }
  std::cerr << "bad primes:";
  for (const auto& p : result.at("primes")) std::cerr << " " << p.get<std::string>();
  std::cerr << "\n";
  return kPositive;
}

int run_lift(const Options& o) {
  const auto loaded = io::load_algebra_file(o.algebra_path);
  LiftOptions options;
  options.budget = budget_of(o);
  options.factor_bound = factor_bound_of(o);
  const Json cert = io::lift_certificate(loaded, o.n, options);
  std::cout << cert.dump(2) << "\n";
  std::cerr << cert.at("generators").size() << " generators, verified "
            << (cert.at("verified").get<bool>() ? "yes" : "no") << "\n";
  return cert.at("verified").get<bool>() ? kPositive : kInconclusive;
}

int run_verify(const Options& o) {
  const auto loaded = io::load_algebra_file(o.algebra_path);
  const Json cert = io::read_json_file(o.certificate_path);
  const auto verdict = io::verify_certificate(loaded, cert);
  Json out = {{"accepted", verdict.accepted}, {"reasons", verdict.reasons}};
  std::cout << out.dump(2) << "\n";
  std::cerr << (verdict.accepted ? "certificate accepted" : "certificate rejected") << "\n";
  for (const auto& r : verdict.reasons) std::cerr << "  " << r << "\n";
  return verdict.accepted ? kPositive : kNegative;
}

void add_budget(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-exhaustive", o.max_exhaustive, "Largest tuple space to enumerate");
  cmd->add_option("--trials", o.trials, "Random trials per tuple size");
  cmd->add_option("--seed", o.seed, "Seed for random probing");
  cmd->add_option("--height", o.height, "Coefficient height of random tuples");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generators of finite-dimensional multialgebras"};
  app.require_subcommand(1);
  Options o;
  int code = kInvalid;

  auto* zoo = app.add_subcommand("zoo", "Print an algebra from the built-in families");
  zoo->add_option("family", o.family, "zero, matrix, split-etale, field-extension, quaternion, "
                                      "split-octonion, albert or matrix-product")
      ->required();
  zoo->add_option("--field", o.field, "F<p>, Q or Z");
  zoo->add_option("--n", o.n, "Size parameter");
  zoo->add_option("--poly", o.poly, "Monic polynomial coefficients, constant term first");
  zoo->add_option("--mu", o.mu, "Quaternion parameters mu1,mu2");
  zoo->add_option("--sizes", o.sizes, "Matrix sizes for matrix-product");
  zoo->add_option("--invariants", o.invariants, "Invariant factors of a zero Z-module");
  zoo->callback([&] { code = run_zoo(o); });

  auto* check = app.add_subcommand("check", "Decide whether a tuple generates");
  check->add_option("algebra", o.algebra_path)->required();
  check->add_option("--tuple", o.tuple, "JSON list of vectors, or @file")->required();
  check->add_flag("--unital", o.unital, "Allow the unit constant");
  check->add_option("--factor-bound", o.factor_bound, "Trial division bound over Z");
  check->callback([&] { code = run_check(o); });

  auto* mingen = app.add_subcommand("mingen", "Search for the minimal number of generators");
  mingen->add_option("algebra", o.algebra_path)->required();
  mingen->add_flag("--unital", o.unital, "Allow the unit constant");
  add_budget(mingen, o);
  mingen->callback([&] { code = run_mingen(o); });

  auto* bad = app.add_subcommand("bad-primes", "Primes where a tuple fails to generate");
  bad->add_option("algebra", o.algebra_path)->required();
  bad->add_option("--tuple", o.tuple, "JSON list of vectors, or @file")->required();
  bad->add_flag("--unital", o.unital, "Allow the unit constant");
  bad->add_option("--factor-bound", o.factor_bound, "Trial division bound");
  bad->callback([&] { code = run_bad_primes(o); });

  auto* lift = app.add_subcommand("forster-lift", "Build n+1 global generators over Z");
  lift->add_option("algebra", o.algebra_path)->required();
  lift->add_option("--n", o.n, "Local generator count")->required();
  lift->add_option("--factor-bound", o.factor_bound, "Trial division bound");
  add_budget(lift, o);
  lift->callback([&] { code = run_lift(o); });

  auto* verify = app.add_subcommand("verify-cert", "Replay a certificate against an algebra");
  verify->add_option("algebra", o.algebra_path)->required();
  verify->add_option("certificate", o.certificate_path)->required();
  verify->callback([&] { code = run_verify(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli = app.exit(e);
    return cli == 0 ? kPositive : kInvalid;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const HypothesisFailure& e) {
    std::cerr << "hypothesis fails: " << e.what() << "\n";
    return kNegative;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kInconclusive;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  }
  return code;
}
