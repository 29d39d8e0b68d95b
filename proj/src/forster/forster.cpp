#include "genalg/forster/forster.hpp"

#include <algorithm>
#include <set>

#include "genalg/algebra/closure.hpp"
#include "genalg/exactmath/numtheory.hpp"

namespace genalg {

namespace {

constexpr std::uint64_t kPrimeFieldLimit = std::uint64_t{1} << 62;

std::optional<std::uint64_t> small_prime(const Integer& p) {
  const auto v = to_u64(p);
  if (!v || *v >= kPrimeFieldLimit) return std::nullopt;
  return v;
}

bool next_tuple(std::vector<std::size_t>& idx, std::size_t bound) {
  for (std::size_t s = idx.size(); s-- > 0;) {
    if (++idx[s] < bound) return true;
    idx[s] = 0;
  }
  return false;
}

std::vector<Vec<PrimeField>> project_all(const IntegralAlgebra& algebra,
                                         const std::vector<IntVector>& s, std::uint64_t p) {
  std::vector<Vec<PrimeField>> out;
  for (const auto& v : s) out.push_back(algebra.project(v, p));
  return out;
}

bool fiber_generated_by(const IntegralAlgebra& algebra, const std::vector<IntVector>& s,
                        std::uint64_t p, bool unital) {
  const auto fiber = algebra.fiber_mod_p(p);
  const auto images = project_all(algebra, s, p);
  return is_generating(fiber, std::span<const Vec<PrimeField>>(images), unital).generating;
}

// Whether the fiber at p is generated by n elements.
SearchStatus fiber_n_generated(const IntegralAlgebra& algebra, std::uint64_t p, std::size_t n,
                               const SearchBudget& budget) {
  const auto fiber = algebra.fiber_mod_p(p);
  if (n == 0) {
    return fiber.dimension() == 0 ? SearchStatus::kFound : SearchStatus::kCertifiedNone;
  }
  return completable(fiber, {}, n, budget).status;
}

std::set<Integer> as_set(const std::vector<Integer>& v) { return {v.begin(), v.end()}; }

struct Representative {
  std::size_t cell;
  Integer prime;
};

std::vector<Representative> representatives(const std::vector<PartitionCell>& cells,
                                            std::size_t n) {
  std::vector<Representative> out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    if (cell.level >= n || cell.region.empty()) continue;
    if (cell.region.kind() == PrimeSet::Kind::kFinite) {
      for (const auto& p : cell.region.primes()) out.push_back({c, p});
    } else {
      out.push_back({c, cell.region.smallest()});
    }
  }
  return out;
}

IntVector crt_element(const IntegralAlgebra& algebra, const std::vector<Representative>& reps,
                      const std::vector<Vec<PrimeField>>& local_values) {
  const std::size_t m = algebra.rank();
  IntVector out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Congruence> system;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const std::uint64_t p = *to_u64(reps[k].prime);
      const auto coords = algebra.fiber_coordinates(p);
      const auto it = std::find(coords.begin(), coords.end(), i);
      if (it == coords.end()) continue;
      system.push_back({reps[k].prime, from_u64(local_values[k][it - coords.begin()])});
    }
    out[i] = crt(system);
  }
  return algebra.canonical(std::move(out));
}

std::vector<IntVector> open_set_tuple(const IntegralAlgebra& algebra,
                                      const std::vector<IntVector>& generators,
                                      const PartitionCell& cell, const IntVector& element,
                                      const std::vector<Vec<PrimeField>>& completion,
                                      std::uint64_t p) {
  std::vector<IntVector> tuple;
  for (auto w : cell.witness) tuple.push_back(generators.at(w));
  tuple.push_back(element);
  for (std::size_t k = cell.level + 1; k < completion.size(); ++k) {
    tuple.push_back(algebra.lift(completion[k], p));
  }
  return tuple;
}

std::vector<PrimeSet> open_sets_for(const std::vector<PartitionCell>& cells,
                                    const std::vector<LocalChoice>& choices) {
  std::vector<PrimeSet> out(cells.size(), PrimeSet::nothing());
  for (const auto& choice : choices) {
    out.at(choice.cell) = out[choice.cell].unite(PrimeSet::cofinite(as_set(choice.bad_primes)));
  }
  return out;
}

std::vector<PartitionCell> refine(const std::vector<PartitionCell>& cells,
                                  const std::vector<PrimeSet>& open_sets, std::size_t n,
                                  std::size_t j) {
  std::vector<PartitionCell> out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    if (cell.level >= n) {
      out.push_back(cell);
      continue;
    }
    PartitionCell up{cell.region.intersect(open_sets[c]), cell.level + 1, cell.witness};
    up.witness.push_back(j);
    PartitionCell stay{cell.region.minus(open_sets[c]), cell.level, cell.witness};
    if (!up.region.empty()) out.push_back(std::move(up));
    if (!stay.region.empty()) out.push_back(std::move(stay));
  }
  return out;
}

}  // namespace

IntegerLattice monomial_subgroup(const IntegralAlgebra& algebra, const std::vector<IntVector>& s,
                                 bool unital) {
  const std::size_t m = algebra.rank();
  IntegerLattice lattice(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (algebra.invariants()[i] == 0) continue;
    IntVector relation(m, 0);
    relation[i] = algebra.invariants()[i];
    lattice.insert(relation);
  }
  for (const auto& v : s) {
    algebra.check_element(v);
    lattice.insert(v);
  }
  const auto& ops = algebra.operations();
  if (unital) {
    for (std::size_t k = 0; k < ops.size(); ++k)
      if (ops[k].arity == 0) lattice.insert(algebra.evaluate_raw(k, {}));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<IntVector> gens = lattice.basis();
    if (gens.empty()) break;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const std::size_t arity = ops[k].arity;
      if (arity == 0) continue;
      std::vector<std::size_t> idx(arity, 0);
      std::vector<IntVector> args(arity);
      do {
        for (std::size_t a = 0; a < arity; ++a) args[a] = gens[idx[a]];
        if (lattice.insert(algebra.evaluate_raw(k, args))) grew = true;
      } while (next_tuple(idx, gens.size()));
    }
  }
  return lattice;
}

BadPrimes bad_primes(const IntegralAlgebra& algebra, const std::vector<IntVector>& s, bool unital,
                     const Integer& factor_bound) {
  const IntegerLattice lattice = monomial_subgroup(algebra, s, unital);
  BadPrimes out;
  if (lattice.rank() < algebra.rank()) {
    out.generic_fail = true;
    return out;
  }
  if (algebra.rank() == 0) {
    out.exponent = 1;
    return out;
  }
  const SmithDecomposition smith = snf(lattice.generator_matrix());
  out.exponent = 1;
  for (const auto& d : smith.diagonal)
    if (d != 0) out.exponent = d;
  const Factorization f = factor(out.exponent, factor_bound);
  if (!f.complete()) throw FactorizationIncomplete(*f.unfactored);
  out.primes = f.distinct_primes();
  return out;
}

GlobalReport verify_global_generation(const IntegralAlgebra& algebra,
                                      const std::vector<IntVector>& s, bool unital,
                                      const Integer& factor_bound) {
  GlobalReport report;
  report.bad = bad_primes(algebra, s, unital, factor_bound);
  const IntegerLattice lattice = monomial_subgroup(algebra, s, unital);
  report.index = lattice.index();
  report.generates = !report.bad.generic_fail && report.index == 1;
  if (report.generates != (!report.bad.generic_fail && report.bad.primes.empty())) {
    report.consistent = false;
  }

  std::set<Integer> probe = {2, 3, 5};
  for (const auto& p : report.bad.primes) probe.insert(p);
  for (const auto& d : algebra.invariants()) {
    if (d <= 1) continue;
    const Factorization f = factor(d, factor_bound);
    if (!f.complete()) throw FactorizationIncomplete(*f.unfactored);
    for (const auto& p : f.distinct_primes()) probe.insert(p);
  }
  const std::set<Integer> bad = as_set(report.bad.primes);
  for (const auto& p : probe) {
    const auto small = small_prime(p);
    if (!small) continue;
    FiberCheck check{p, !report.bad.generic_fail && bad.count(p) == 0, false};
    check.observed = fiber_generated_by(algebra, s, *small, unital);
    if (check.observed != check.expected) report.consistent = false;
    report.fiber_checks.push_back(std::move(check));
  }

  const auto generic = algebra.generic_fiber();
  std::vector<Vec<RationalField>> images;
  for (const auto& v : s) images.push_back(algebra.project_generic(v));
  report.generic_fiber_generates =
      is_generating(generic, std::span<const Vec<RationalField>>(images), unital).generating;
  if (*report.generic_fiber_generates == report.bad.generic_fail) report.consistent = false;
  return report;
}

LocalReport local_requirement(const IntegralAlgebra& algebra, std::size_t n,
                              const SearchBudget& budget, const Integer& factor_bound) {
  LocalReport report;
  bool inconclusive = false;
  auto check_prime = [&](const Integer& p) {
    const auto small = small_prime(p);
    const SearchStatus status =
        small ? fiber_n_generated(algebra, *small, n, budget) : SearchStatus::kInconclusive;
    report.checks.push_back({p, status});
    if (status == SearchStatus::kCertifiedNone) {
      report.status = LocalStatus::kCounterexample;
      report.counterexample = p;
      return false;
    }
    if (status == SearchStatus::kInconclusive) inconclusive = true;
    return true;
  };

  const auto probe = random_probe(algebra.generic_fiber(), n, budget);
  if (!probe) {
    for (int p : {2, 3, 5}) {
      if (!check_prime(p)) return report;
    }
    report.status = LocalStatus::kInconclusive;
    return report;
  }
  std::vector<IntVector> witness;
  for (const auto& v : probe->tuple) witness.push_back(algebra.canonical(algebra.lift_generic(v)));
  const BadPrimes bad = bad_primes(algebra, witness, false, factor_bound);
  if (bad.generic_fail) throw InvariantViolation("generic witness fails to generate over Q");
  report.witness = witness;
  report.witness_bad_primes = bad.primes;
  for (const auto& p : bad.primes) {
    if (!check_prime(p)) return report;
  }
  report.status = inconclusive ? LocalStatus::kInconclusive : LocalStatus::kVerified;
  return report;
}

bool is_partition_of_spectrum(const std::vector<PartitionCell>& cells) {
  PrimeSet covered = PrimeSet::nothing();
  for (const auto& cell : cells) {
    if (!cell.region.intersect(covered).empty()) return false;
    covered = covered.unite(cell.region);
  }
  return covered == PrimeSet::everything();
}

bool dimension_bounds_hold(const std::vector<PartitionCell>& cells, std::size_t n, std::size_t j) {
  for (std::size_t i = 0; i < n; ++i) {
    PrimeSet level = PrimeSet::nothing();
    for (const auto& cell : cells)
      if (cell.level == i) level = level.unite(cell.region);
    const int bound = 1 + static_cast<int>(i) - static_cast<int>(j);
    if (!level.dimension_at_most(bound)) return false;
  }
  return true;
}

LiftCertificate forster_lift(const IntegralAlgebra& algebra, std::size_t n,
                             const LiftOptions& options) {
  options.budget.validate();
  const LocalReport local = local_requirement(algebra, n, options.budget, options.factor_bound);
  if (local.status == LocalStatus::kCounterexample) throw HypothesisFailure(*local.counterexample);
  if (local.status == LocalStatus::kInconclusive) {
    throw Inconclusive("could not verify that every fiber is generated by " + std::to_string(n) +
                       " elements within the search budget");
  }

  LiftCertificate cert;
  cert.n = n;
  cert.options = options;
  std::vector<PartitionCell> cells = {{PrimeSet::everything(), 0, {}}};
  cert.initial_partition = cells;

  for (std::size_t j = 0; j <= n; ++j) {
    LiftStep step;
    const auto reps = representatives(cells, n);
    std::set<Integer> distinct;
    for (const auto& r : reps) distinct.insert(r.prime);
    if (distinct.size() != reps.size()) {
      throw InvariantViolation("representative primes of distinct cells coincide");
    }

    std::vector<Vec<PrimeField>> local_values;
    for (const auto& rep : reps) {
      const auto& cell = cells[rep.cell];
      const auto p = small_prime(rep.prime);
      if (!p) throw Inconclusive("representative prime too large: " + to_string(rep.prime));
      const auto fiber = algebra.fiber_mod_p(*p);
      std::vector<Vec<PrimeField>> partial;
      for (auto w : cell.witness) partial.push_back(algebra.project(cert.generators[w], *p));
      const Completion completion =
          completable(fiber, partial, n, options.budget);
      if (completion.status == SearchStatus::kCertifiedNone) {
        if (cell.level == 0) throw HypothesisFailure(rep.prime);
        throw InvariantViolation("witnessed elements are not completable at p = " +
                                 to_string(rep.prime));
      }
      if (completion.status == SearchStatus::kInconclusive) {
        throw Inconclusive("no completion found at p = " + to_string(rep.prime) +
                           " within the search budget");
      }
      local_values.push_back(completion.next);
      step.choices.push_back({rep.cell, rep.prime, completion.tuple, completion.method, {}});
    }

    step.element = crt_element(algebra, reps, local_values);
    cert.generators.push_back(step.element);

    for (auto& choice : step.choices) {
      const std::uint64_t p = *to_u64(choice.prime);
      const auto tuple = open_set_tuple(algebra, cert.generators, cells[choice.cell],
                                        step.element, choice.completion, p);
      const BadPrimes bad = bad_primes(algebra, tuple, false, options.factor_bound);
      if (bad.generic_fail || std::count(bad.primes.begin(), bad.primes.end(), choice.prime) > 0) {
        throw InvariantViolation("the lifted completion does not generate at p = " +
                                 to_string(choice.prime));
      }
      choice.bad_primes = bad.primes;
    }

    step.open_sets = open_sets_for(cells, step.choices);
    step.partition = refine(cells, step.open_sets, n, j);
    if (!is_partition_of_spectrum(step.partition)) {
      throw InvariantViolation("step " + std::to_string(j + 1) + " broke the partition");
    }
    if (!dimension_bounds_hold(step.partition, n, j + 1)) {
      throw InvariantViolation("dimension bound violated after step " + std::to_string(j + 1));
    }
    cells = step.partition;
    cert.steps.push_back(std::move(step));
  }

  for (const auto& cell : cells) {
    if (cell.level < n) throw InvariantViolation("a cell below level n survived the last step");
  }
  const GlobalReport global =
      verify_global_generation(algebra, cert.generators, false, options.factor_bound);
  cert.verified = global.generates;
  cert.final_index = global.index;
  if (!global.generates || !global.consistent) {
    throw InvariantViolation("the lifted tuple does not generate over Z");
  }
  return cert;
}

std::vector<std::string> audit_lift(const IntegralAlgebra& algebra, const LiftCertificate& cert) {
  std::vector<std::string> failures;
  auto fail = [&](std::string what) { failures.push_back(std::move(what)); };
  const std::size_t n = cert.n;

  if (cert.generators.size() != n + 1) fail("expected n + 1 generators");
  if (cert.steps.size() != n + 1) fail("expected n + 1 steps");
  const std::vector<PartitionCell> start = {{PrimeSet::everything(), 0, {}}};
  if (cert.initial_partition != start) fail("initial partition is not a single level-0 cell");
  for (const auto& g : cert.generators) {
    if (g.size() != algebra.rank() || algebra.canonical(g) != g) {
      fail("generator is not a canonical module element");
      return failures;
    }
  }
  if (!failures.empty()) return failures;

  std::vector<PartitionCell> cells = cert.initial_partition;
  for (std::size_t j = 0; j < cert.steps.size(); ++j) {
    const LiftStep& step = cert.steps[j];
    const std::string where = "step " + std::to_string(j + 1) + ": ";
    if (step.element != cert.generators[j]) fail(where + "element differs from generator");

    const auto reps = representatives(cells, n);
    if (reps.size() != step.choices.size()) {
      fail(where + "wrong number of representative primes");
      return failures;
    }
    std::vector<Vec<PrimeField>> local_values;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const LocalChoice& choice = step.choices[k];
      if (choice.cell != reps[k].cell || choice.prime != reps[k].prime) {
        fail(where + "representative mismatch");
        return failures;
      }
      const PartitionCell& cell = cells[choice.cell];
      const auto p = small_prime(choice.prime);
      if (!p) {
        fail(where + "representative prime out of range");
        return failures;
      }
      const auto fiber = algebra.fiber_mod_p(*p);
      if (choice.completion.size() != n) {
        fail(where + "completion has the wrong length");
        return failures;
      }
      try {
        if (!is_generating(fiber, std::span<const Vec<PrimeField>>(choice.completion), false)
                 .generating) {
          fail(where + "completion does not generate the fiber at " + to_string(choice.prime));
        }
      } catch (const InputError&) {
        fail(where + "completion is not a tuple of fiber elements");
        return failures;
      }
      for (std::size_t t = 0; t < cell.witness.size(); ++t) {
        if (cell.witness[t] >= j ||
            algebra.project(cert.generators[cell.witness[t]], *p) != choice.completion[t]) {
          fail(where + "completion does not extend the witnessed elements");
        }
      }
      if (algebra.project(step.element, *p) != choice.completion[cell.level]) {
        fail(where + "new element has the wrong value at " + to_string(choice.prime));
      }
      local_values.push_back(choice.completion[cell.level]);
      const auto tuple =
          open_set_tuple(algebra, cert.generators, cell, step.element, choice.completion, *p);
      const BadPrimes bad = bad_primes(algebra, tuple, false, cert.options.factor_bound);
      if (bad.generic_fail || bad.primes != choice.bad_primes) {
        fail(where + "recorded bad primes differ from a fresh computation");
      }
      if (std::count(choice.bad_primes.begin(), choice.bad_primes.end(), choice.prime) > 0) {
        fail(where + "open set misses its own representative");
      }
    }
    if (crt_element(algebra, reps, local_values) != step.element) {
      fail(where + "element is not the canonical CRT combination");
    }
    const auto open_sets = open_sets_for(cells, step.choices);
    if (open_sets != step.open_sets) fail(where + "open sets differ from the local choices");
    const auto next = refine(cells, open_sets, n, j);
    if (next != step.partition) fail(where + "partition differs from the refinement");
    if (!is_partition_of_spectrum(step.partition)) fail(where + "regions do not partition Max Z");
    if (!dimension_bounds_hold(step.partition, n, j + 1)) fail(where + "dimension bound violated");
    cells = next;
  }
  for (const auto& cell : cells) {
    if (cell.level < n) fail("a cell below level n survived the last step");
  }
  const GlobalReport global =
      verify_global_generation(algebra, cert.generators, false, cert.options.factor_bound);
  if (!global.generates) fail("generators do not generate over Z");
  if (global.generates != cert.verified || global.index != cert.final_index) {
    fail("recorded verification differs from a fresh one");
  }
  return failures;
}

}  // namespace genalg
