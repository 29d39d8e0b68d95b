// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "genalg/algebra/closure.hpp"
#include "genalg/forster/forster.hpp"
#include "genalg/io/certificates.hpp"
#include "genalg/zoo/zoo.hpp"
#include "oracles.hpp"
#include "random_integral.hpp"
#include "tamper.hpp"

using namespace genalg;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

template <class F>
std::size_t closure_dim(const Multialgebra<F>& a, const std::vector<Vec<F>>& t, bool unital = false) {
  return closure(a, std::span<const Vec<F>>(t), unital).dimension();
}

std::size_t ceil_log(std::uint64_t q, std::uint64_t x) {
  std::size_t k = 0;
  for (std::uint64_t power = 1; power < x; power *= q) ++k;
  return k;
}

std::uint64_t ipow(std::uint64_t q, std::size_t k) {
  std::uint64_t r = 1;
  while (k--) r *= q;
  return r;
}

IntegralAlgebra zero_module(std::vector<Integer> d) {
  return IntegralAlgebra(std::move(d), {IntegerTensor{2, OperationRole::kProduct, {}}});
}

std::vector<oracle::Residues> reduce(const IntegralAlgebra& a, const std::vector<IntVector>& s,
                                     std::uint64_t p) {
  std::vector<oracle::Residues> out;
  for (const auto& v : s) {
    oracle::Residues r;
    for (std::size_t i = 0; i < a.rank(); ++i) {
      const auto& d = a.invariants()[i];
      if (d == 0 || mpz_divisible_ui_p(d.get_mpz_t(), p)) r.push_back(mod_floor(v[i], p).get_ui());
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool fiber_generates(const IntegralAlgebra& a, const std::vector<IntVector>& s, std::uint64_t p,
                     bool unital) {
  const auto f = oracle::fiber(a, p);
  return oracle::closure_dimension(f, reduce(a, s, p), unital) == f.r;
}

bool fiber_spans(const IntegralAlgebra& a, const std::vector<IntVector>& s, std::uint64_t p) {
  const auto f = oracle::fiber(a, p);
  oracle::Span span(p, f.r);
  for (const auto& v : reduce(a, s, p)) span.insert(v);
  return span.rank() == f.r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (oracle::is_prime(p)) out.push_back(p);
  }
  return out;
}

void criterion1(Outcome& out) {
  for (std::size_t n : {2, 3, 4}) {
    for (std::uint64_t p : {2u, 3u}) {
      const PrimeField f(p);
      const auto d = closure_dim(matrix_algebra(f, n), canonical_matrix_generators(f, n));
      out.require(d == n * n, "Mat_" + std::to_string(n) + "(F" + std::to_string(p) + ")");
    }
    const RationalField q;
    out.require(closure_dim(matrix_algebra(q, n), canonical_matrix_generators(q, n)) == n * n,
                "Mat_" + std::to_string(n) + "(Q)");
  }
  out.detail << "canonical pair spans n^2 for n = 2, 3, 4 over F2, F3, Q";
}

void criterion2(Outcome& out) {
  for (std::uint64_t p : {2u, 3u}) {
    const auto m = matrix_algebra(PrimeField(p), 2);
    const auto report = min_generators(m, {}, false);
    const std::uint64_t singles = p == 2 ? 16 : 81;
    out.require(report.attempts.size() >= 2 && report.attempts[1].exhaustive &&
                    report.attempts[1].candidates == singles && !report.attempts[1].found,
                "single elements not exhaustively refuted over F" + std::to_string(p));
    out.require(report.status == SearchStatus::kFound && report.n_upper == 2 &&
                    report.lower_bound_certified,
                "minimum 2 not certified over F" + std::to_string(p));
    out.require(report.certificate && replay(m, *report.certificate), "certificate replay");
    const auto o = oracle::from_library(m);
    std::size_t oracle_hits = 0;
    for (std::uint64_t idx = 0; idx < singles; ++idx) {
      std::vector<Vec<PrimeField>> t;
      decode_tuple(m.field(), 4, 1, idx, t);
      oracle_hits += oracle::closure_dimension(o, t, false) == 4;
    }
    out.require(oracle_hits == 0, "oracle found a single generator");
  }
  out.detail << "16 and 81 single candidates refuted, min = 2 certified";
}

void criterion3(Outcome& out) {
  const std::vector<std::pair<std::uint64_t, std::size_t>> cases{{2, 2}, {2, 3}, {2, 7}, {3, 3}, {3, 8}};
  SearchBudget budget;
  budget.max_exhaustive = 1'000'000;
  std::size_t exact = 0, constructed = 0;
  for (const auto& [q, n] : cases) {
    const auto a = split_etale(PrimeField(q), n);
    for (bool unital : {false, true}) {
      const std::size_t k = unital ? ceil_log(q, n) : ceil_log(q, n + 1);
      const std::string tag = "(" + std::to_string(q) + "," + std::to_string(n) +
                              (unital ? ",unital)" : ")");
      const auto report = min_generators(a, budget, unital);
      bool lower = report.attempts.size() >= k;
      for (std::size_t s = 0; s < k && lower; ++s) {
        lower = report.attempts[s].exhaustive && !report.attempts[s].found;
      }
      out.require(lower, "sizes below " + std::to_string(k) + " not refuted " + tag);
      const auto g = etale_logq_generators(q, n, unital);
      const bool construction = g.size() == k && closure_dim(a, g, unital) == n;
      out.require(construction, "construction fails " + tag);
      out.require(report.status == SearchStatus::kFound && report.n_upper >= k,
                  "search below the bound " + tag);
      if (report.n_upper == k && report.lower_bound_certified) ++exact;
      else ++constructed;

      if ((q == 2 && n <= 3) || (q == 3 && n == 3)) {
        for (std::size_t c = 1; c <= k; ++c) {
          const auto best = max_closure_dimension(a, c, budget, unital);
          const std::uint64_t cap = unital ? ipow(q, c) : ipow(q, c) - 1;
          out.require(best.has_value() && *best <= cap,
                      "counting bound q^k" + std::string(unital ? "" : " - 1") + " violated " + tag);
        }
      }
    }
  }
  out.detail << exact << " cases certified by search alone, " << constructed
             << " by construction plus exhaustive lower bound";
}

void criterion4(Outcome& out) {
  auto check = [&](const auto& field, const std::string& name) {
    const auto o = split_octonion(field);
    out.require(o.dimension() == 8, name + " dimension");
    out.require(is_alternative(o), name + " alternative");
    out.require(associativity_violation(o).has_value(), name + " associative");
    const auto g = octonion_generators(field);
    out.require(g.size() == 3 && closure_dim(o, g) == 8, name + " triple");
  };
  check(PrimeField(2), "F2");
  check(PrimeField(5), "F5");
  check(RationalField{}, "Q");
  out.detail << "dimension 8, alternative, non-associative, triple generates over F2, F5, Q";
}

void criterion5(Outcome& out) {
  auto check = [&](const auto& field, const std::string& name) {
    const auto j = albert(field);
    out.require(j.dimension() == 27, name + " dimension");
    out.require(is_commutative(j), name + " commutative");
    std::size_t ok = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto xy = random_tuple(field, 27, 2, 2024, s, 3);
      ok += jordan_identity_holds(j, xy[0], xy[1]);
    }
    out.require(ok == 100, name + " Jordan identity");
    SearchBudget budget;
    budget.seed = 5;
    budget.random_trials = 200;
    const auto cert = random_probe(j, 3, budget);
    out.require(cert.has_value(), name + " random probe");
    if (cert) {
      const auto v = is_generating(j, std::span<const Vec<std::decay_t<decltype(field)>>>(cert->tuple), false);
      out.require(v.generating && v.certificate.closure_dimension == 27, name + " closure 27");
      out.require(replay(j, *cert), name + " replay");
      out.detail << name << " triple at trial " << cert->method.trial << "; ";
    }
  };
  check(RationalField{}, "Q");
  check(PrimeField(5), "F5");
  out.detail << "commutative, 100 Jordan samples each";
}

void criterion6(Outcome& out) {
  const RationalField q;
  for (std::size_t n = 1; n <= 6; ++n) {
    out.require(closure_dim(split_etale(q, n), {distinct_entries_generator(q, n)}) == n,
                "Q^" + std::to_string(n));
  }
  out.detail << "(1, ..., n) generates Q^n for n = 1..6";
}

void criterion7(Outcome& out) {
  std::mt19937_64 rng(20240607);
  const auto primes = primes_up_to(50);
  std::size_t mixed = 0, with_bad = 0, comparisons = 0;
  for (int t = 0; t < 50; ++t) {
    const auto a = testgen::random_integral_algebra(rng, 4);
    const auto s = testgen::random_integral_tuple(rng, a, 1 + rng() % 3, 8);
    const bool unital = t % 3 == 0;
    const auto bad = bad_primes(a, s, unital);
    const std::set<Integer> listed(bad.primes.begin(), bad.primes.end());
    const bool has_free = a.free_rank() > 0, has_torsion = a.free_rank() < a.rank();
    mixed += has_free && has_torsion;
    with_bad += bad.generic_fail || !bad.primes.empty();
    for (auto p : primes) {
      const bool claimed_bad = bad.generic_fail || listed.count(p) > 0;
      ++comparisons;
      out.require(claimed_bad == !fiber_generates(a, s, p, unital),
                  "pair " + std::to_string(t) + " at p = " + std::to_string(p));
    }
  }
  out.require(mixed > 0, "no mixed free/torsion samples");
  out.detail << comparisons << " fiber comparisons, " << mixed << " mixed modules, " << with_bad
             << " pairs with bad primes";
}

struct LiftCase {
  std::string name;
  IntegralAlgebra algebra;
  std::size_t n;
  std::optional<std::size_t> exact_size;
};

std::vector<LiftCase> lift_cases() {
  return {
      {"Z/2+Z/3+Z", zero_module({2, 3, 0}), 2, std::nullopt},
      {"Z/6", zero_module({6}), 1, 2},
      {"Mat2(Z)", IntegralAlgebra::from_rational(matrix_algebra(RationalField{}, 2)), 2, 3},
      {"Z^3", IntegralAlgebra::from_rational(split_etale(RationalField{}, 3)), 2, std::nullopt},
  };
}

void criterion8(Outcome& out) {
  for (const auto& c : lift_cases()) {
    const auto cert = forster_lift(c.algebra, c.n);
    out.require(cert.generators.size() <= c.n + 1, c.name + " too many generators");
    if (c.exact_size) out.require(cert.generators.size() == *c.exact_size, c.name + " size");
    out.require(verify_global_generation(c.algebra, cert.generators).generates,
                c.name + " does not generate");
    for (std::size_t j = 0; j < cert.steps.size(); ++j) {
      out.require(is_partition_of_spectrum(cert.steps[j].partition), c.name + " partition");
      out.require(dimension_bounds_hold(cert.steps[j].partition, c.n, j + 1),
                  c.name + " dimension bound at step " + std::to_string(j + 1));
    }
    out.require(audit_lift(c.algebra, cert).empty(), c.name + " audit");
    const io::LoadedAlgebra loaded{c.algebra, std::nullopt};
    out.require(io::verify_certificate(loaded, io::lift_certificate(loaded, c.n, {})).accepted,
                c.name + " replay");
    out.detail << c.name << ": " << cert.generators.size() << "; ";
  }
  out.detail << "all audited";
}

void criterion9(Outcome& out) {
  const std::vector<std::vector<Integer>> modules{
      {2, 3, 0}, {6}, {2, 2}, {0, 0}, {4, 12, 0}, {3, 3, 3}, {2, 0, 0}};
  std::mt19937_64 rng(99);
  std::size_t checks = 0;
  for (const auto& d : modules) {
    const auto a = zero_module(d);
    std::size_t n = 0;
    for (auto p : primes_up_to(13)) n = std::max(n, oracle::fiber(a, p).r);
    const auto cert = forster_lift(a, n);
    out.require(cert.generators.size() == n + 1, "lift size for module of rank " + std::to_string(d.size()));
    out.require(cert.verified, "lift not verified");
    for (int t = 0; t < 20; ++t) {
      const auto s = testgen::random_integral_tuple(rng, a, 1 + rng() % (n + 1), 7);
      const auto report = verify_global_generation(a, s);
      for (const auto& fc : report.fiber_checks) {
        ++checks;
        out.require(fc.observed == fiber_spans(a, s, fc.prime.get_ui()), "fiber check disagrees");
      }
      for (const auto& p : report.bad.primes) {
        ++checks;
        out.require(!fiber_spans(a, s, p.get_ui()), "listed bad prime spans");
      }
      bool spans_everywhere = !report.bad.generic_fail;
      for (auto p : primes_up_to(50)) spans_everywhere = spans_everywhere && fiber_spans(a, s, p);
      for (const auto& p : report.bad.primes) spans_everywhere = spans_everywhere && fiber_spans(a, s, p.get_ui());
      out.require(report.generates == spans_everywhere, "global verdict vs spanning criterion");
    }
  }
  out.detail << modules.size() << " zero-product modules, lift size n + 1, " << checks
             << " prime-level comparisons with the spanning criterion";
}

void criterion10(Outcome& out) {
  std::vector<std::pair<io::LoadedAlgebra, io::Json>> certs;
  const auto m2 = io::algebra_from_json(io::algebra_to_json(matrix_algebra(PrimeField(2), 2)));
  certs.emplace_back(m2, io::generation_certificate(
                             m2, io::Json::parse(R"([["1","0","0","0"],["0","1","1","0"]])"), false));
  certs.emplace_back(m2, io::generation_certificate(m2, io::Json::parse(R"([["1","0","0","1"]])"), false));
  certs.emplace_back(m2, io::mingen_certificate(m2, {}, false));
  const auto e3 = io::algebra_from_json(io::algebra_to_json(split_etale(PrimeField(2), 3)));
  certs.emplace_back(e3, io::mingen_certificate(e3, {}, true));
  const auto q3 = io::algebra_from_json(io::algebra_to_json(split_etale(RationalField{}, 3)));
  certs.emplace_back(q3, io::generation_certificate(q3, io::Json::parse(R"([["1","2","3"]])"), false));
  const auto ez = io::LoadedAlgebra{IntegralAlgebra::from_rational(split_etale(RationalField{}, 3)), std::nullopt};
  certs.emplace_back(ez, io::bad_primes_certificate(ez, io::Json::parse(R"([["1","2","3"]])"), true,
                                                    kDefaultFactorBound));
  certs.emplace_back(ez, io::generation_certificate(ez, io::Json::parse(R"([["1","2","3"]])"), false));
  for (const auto& c : lift_cases()) {
    const io::LoadedAlgebra loaded{c.algebra, std::nullopt};
    certs.emplace_back(loaded, io::lift_certificate(loaded, c.n, {}));
  }
  std::size_t tampers = 0, replay_caught = 0;
  for (const auto& [alg, cert] : certs) {
    out.require(io::verify_certificate(alg, cert).accepted, "genuine certificate rejected");
    for (const auto& forged : tamper::single_leaf_variants(cert)) {
      ++tampers;
      out.require(!io::verify_certificate(alg, forged).accepted, "tamper accepted");
      replay_caught += !io::verify_certificate(alg, forged, io::CheckMode::kReplayOnly).accepted;
    }
  }
  out.detail << certs.size() << " certificates, " << tampers << " single-leaf tampers all rejected ("
             << replay_caught << " also caught by semantic replay without the digest)";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "matrix pair generates Mat_n", 5, criterion1},
      {2, "Mat_2 minimality by exhaustion", 5, criterion2},
      {3, "split etale logarithmic bounds", 60, criterion3},
      {4, "split octonions", 10, criterion4},
      {5, "Albert algebra", 60, criterion5},
      {6, "etale over Q", 5, criterion6},
      {7, "bad primes vs fiber closure", 60, criterion7},
      {8, "Forster lift over Z", 120, criterion8},
      {9, "zero-product modules", 120, criterion9},
      {10, "certificate tamper rejection", 5, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds <= c.limit_seconds, "time limit exceeded");
    failures += !out.ok;
    std::printf("%s criterion %2d  %-34s %7.2fs / %4.0fs  %s\n", out.ok ? "PASS" : "FAIL", c.id,
                c.title, seconds, c.limit_seconds, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
