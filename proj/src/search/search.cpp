#include "genalg/search/search.hpp"

#include <random>
#include <string>

#include "genalg/exactmath/errors.hpp"
#include "genalg/search/kernels.hpp"

namespace genalg {

namespace {

template <class Pred>
std::optional<std::uint64_t> scan_first(const SearchBudget& budget, std::uint64_t total,
                                        Pred&& pred) {
  if (budget.parallel) return search::parallel::find_first(total, pred);
  return search::serial::find_first(total, pred);
}

bool tuple_generates(const Multialgebra<PrimeField>& algebra,
                     const std::vector<Vec<PrimeField>>& tuple, bool unital) {
  return closure(algebra, std::span<const Vec<PrimeField>>(tuple), unital, true).dimension() ==
         algebra.dimension();
}

SearchAttempt make_attempt(std::size_t size, bool exhaustive, std::uint64_t candidates,
                           const std::optional<std::uint64_t>& hit) {
  return {size, exhaustive, candidates, hit ? *hit + 1 : candidates, hit.has_value()};
}

}  // namespace

void SearchBudget::validate() const {
  if (max_exhaustive == 0 || random_trials == 0 || coeff_height <= 0) {
    throw InputError("search budget parameters must be positive");
  }
}

void decode_tuple(const PrimeField& field, std::size_t dim, std::size_t count, std::uint64_t index,
                  std::vector<Vec<PrimeField>>& out) {
  const std::uint64_t p = field.modulus();
  out.resize(count);
  for (std::size_t e = count; e-- > 0;) {
    out[e].resize(dim);
    for (std::size_t c = dim; c-- > 0;) {
      out[e][c] = index % p;
      index /= p;
    }
  }
}

std::uint64_t encode_tuple(const PrimeField& field, std::span<const Vec<PrimeField>> tuple) {
  std::uint64_t index = 0;
  for (const auto& v : tuple)
    for (auto x : v) index = index * field.modulus() + x;
  return index;
}

std::optional<std::uint64_t> tuple_space_size(const PrimeField& field, std::size_t dim,
                                              std::size_t count, std::uint64_t cap) {
  std::uint64_t total = 1;
  const std::uint64_t p = field.modulus();
  for (std::size_t k = 0; k < dim * count; ++k) {
    if (total > cap / p) return std::nullopt;
    total *= p;
  }
  if (total > cap) return std::nullopt;
  return total;
}

template <class F>
std::vector<Vec<F>> random_tuple(const F& field, std::size_t dim, std::size_t count,
                                 std::uint64_t seed, std::uint64_t trial, std::int64_t height) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 engine(seq);
  const auto span = static_cast<std::uint64_t>(2 * height + 1);
  std::vector<Vec<F>> out(count);
  for (auto& v : out) {
    v.reserve(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      const auto x = static_cast<std::int64_t>(engine() % span) - height;
      v.push_back(field.from_int(x));
    }
  }
  return out;
}

MinGenReport min_generators(const Multialgebra<PrimeField>& algebra, const SearchBudget& budget,
                            bool unital) {
  budget.validate();
  const PrimeField& field = algebra.field();
  const std::size_t r = algebra.dimension();
  MinGenReport report;
  report.unital = unital;

  for (std::size_t n = 0; n <= r; ++n) {
    const auto total = tuple_space_size(field, r, n, budget.max_exhaustive);
    std::optional<std::uint64_t> hit;
    GenerationMethod method;
    if (total) {
      hit = scan_first(budget, *total, [&](std::uint64_t idx) {
        std::vector<Vec<PrimeField>> tuple;
        decode_tuple(field, r, n, idx, tuple);
        return tuple_generates(algebra, tuple, unital);
      });
      report.attempts.push_back(make_attempt(n, true, *total, hit));
      if (hit) method = {MethodTag::kExhaustive, 0, 0, 0, *hit};
    } else {
      hit = scan_first(budget, budget.random_trials, [&](std::uint64_t trial) {
        return tuple_generates(
            algebra, random_tuple(field, r, n, budget.seed, trial, budget.coeff_height), unital);
      });
      report.attempts.push_back(make_attempt(n, false, budget.random_trials, hit));
      if (hit) method = {MethodTag::kRandom, budget.seed, *hit, budget.coeff_height, 0};
    }
    if (!hit) continue;

    std::vector<Vec<PrimeField>> tuple;
    if (method.tag == MethodTag::kExhaustive) {
      decode_tuple(field, r, n, *hit, tuple);
    } else {
      tuple = random_tuple(field, r, n, budget.seed, *hit, budget.coeff_height);
    }
    auto verdict = is_generating(algebra, std::span<const Vec<PrimeField>>(tuple), unital, method);
    if (!verdict.generating) throw InvariantViolation("search hit does not generate on replay");
    report.status = SearchStatus::kFound;
    report.n_upper = n;
    report.certificate = std::move(verdict.certificate);
    report.lower_bound_certified = true;
    for (std::size_t k = 0; k + 1 < report.attempts.size(); ++k) {
      report.lower_bound_certified = report.lower_bound_certified && report.attempts[k].exhaustive;
    }
    return report;
  }
  report.status = SearchStatus::kInconclusive;
  return report;
}

template <class F>
std::optional<GenerationCertificate<F>> random_probe(const Multialgebra<F>& algebra, std::size_t n,
                                                     const SearchBudget& budget, bool unital) {
  budget.validate();
  const F& field = algebra.field();
  const std::size_t r = algebra.dimension();
  auto generates = [&](std::uint64_t trial) {
    const auto tuple = random_tuple(field, r, n, budget.seed, trial, budget.coeff_height);
    return closure(algebra, std::span<const Vec<F>>(tuple), unital, true).dimension() == r;
  };
  const auto hit = scan_first(budget, budget.random_trials, generates);
  if (!hit) return std::nullopt;
  const auto tuple = random_tuple(field, r, n, budget.seed, *hit, budget.coeff_height);
  auto verdict = is_generating(algebra, std::span<const Vec<F>>(tuple), unital,
                               {MethodTag::kRandom, budget.seed, *hit, budget.coeff_height, 0});
  return std::move(verdict.certificate);
}

Completion completable(const Multialgebra<PrimeField>& algebra,
                       std::span<const Vec<PrimeField>> partial, std::size_t n,
                       const SearchBudget& budget, bool unital) {
  budget.validate();
  const std::size_t i = partial.size();
  if (i > n) {
    throw InputError("completable needs a partial tuple of length at most n (" +
                     std::to_string(i) + " > " + std::to_string(n) + ")");
  }
  for (const auto& v : partial) algebra.check_element(v);
  const PrimeField& field = algebra.field();
  const std::size_t r = algebra.dimension();
  const std::size_t free = n - i;

  auto assemble = [&](std::vector<Vec<PrimeField>> tail) {
    std::vector<Vec<PrimeField>> tuple(partial.begin(), partial.end());
    for (auto& v : tail) tuple.push_back(std::move(v));
    return tuple;
  };

  Completion out;
  const auto total = tuple_space_size(field, r, free, budget.max_exhaustive);
  std::optional<std::uint64_t> hit;
  if (total) {
    hit = scan_first(budget, *total, [&](std::uint64_t idx) {
      std::vector<Vec<PrimeField>> tail;
      decode_tuple(field, r, free, idx, tail);
      return tuple_generates(algebra, assemble(std::move(tail)), unital);
    });
    out.attempt = make_attempt(free, true, *total, hit);
    if (!hit) {
      out.status = SearchStatus::kCertifiedNone;
      return out;
    }
    std::vector<Vec<PrimeField>> tail;
    decode_tuple(field, r, free, *hit, tail);
    out.tuple = assemble(std::move(tail));
    out.method = {MethodTag::kExhaustive, 0, 0, 0, *hit};
  } else {
    hit = scan_first(budget, budget.random_trials, [&](std::uint64_t trial) {
      return tuple_generates(
          algebra,
          assemble(random_tuple(field, r, free, budget.seed, trial, budget.coeff_height)),
          unital);
    });
    out.attempt = make_attempt(free, false, budget.random_trials, hit);
    if (!hit) {
      out.status = SearchStatus::kInconclusive;
      return out;
    }
    out.tuple = assemble(random_tuple(field, r, free, budget.seed, *hit, budget.coeff_height));
    out.method = {MethodTag::kRandom, budget.seed, *hit, budget.coeff_height, 0};
  }
  out.status = SearchStatus::kFound;
  if (i < n) out.next = out.tuple[i];
  return out;
}

std::optional<std::size_t> max_closure_dimension(const Multialgebra<PrimeField>& algebra,
                                                 std::size_t count, const SearchBudget& budget,
                                                 bool unital) {
  const PrimeField& field = algebra.field();
  const std::size_t r = algebra.dimension();
  const auto total = tuple_space_size(field, r, count, budget.max_exhaustive);
  if (!total) return std::nullopt;
  auto score = [&](std::uint64_t idx) -> std::uint64_t {
    std::vector<Vec<PrimeField>> tuple;
    decode_tuple(field, r, count, idx, tuple);
    return closure(algebra, std::span<const Vec<PrimeField>>(tuple), unital).dimension();
  };
  if (budget.parallel) return search::parallel::max_over(*total, score);
  return search::serial::max_over(*total, score);
}

template std::vector<Vec<PrimeField>> random_tuple(const PrimeField&, std::size_t, std::size_t,
                                                   std::uint64_t, std::uint64_t, std::int64_t);
template std::vector<Vec<RationalField>> random_tuple(const RationalField&, std::size_t,
                                                      std::size_t, std::uint64_t, std::uint64_t,
                                                      std::int64_t);
template std::optional<GenerationCertificate<PrimeField>> random_probe(
    const Multialgebra<PrimeField>&, std::size_t, const SearchBudget&, bool);
template std::optional<GenerationCertificate<RationalField>> random_probe(
    const Multialgebra<RationalField>&, std::size_t, const SearchBudget&, bool);

}  // namespace genalg
