#include <doctest.h>

#include <random>

#include "genalg/algebra/closure.hpp"
#include "genalg/exactmath/errors.hpp"
#include "oracles.hpp"

using namespace genalg;

namespace {

template <class F>
OperationTensor<F> tensor(std::size_t arity, OperationRole role,
                          std::vector<typename OperationTensor<F>::Term> terms) {
  return {arity, role, std::move(terms)};
}

Multialgebra<PrimeField> random_algebra(std::mt19937_64& rng, std::uint64_t p, std::size_t r,
                                        bool with_unit_op) {
  using T = OperationTensor<PrimeField>;
  T product{2, OperationRole::kProduct, {}};
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = 0; j < r; ++j) {
      if (rng() % 3 == 0) product.terms.push_back({{i, j}, static_cast<std::uint32_t>(rng() % r), rng() % p});
    }
  }
  std::vector<T> ops{product};
  if (with_unit_op) {
    T c{0, OperationRole::kGeneric, {}};
    c.terms.push_back({{}, static_cast<std::uint32_t>(rng() % r), 1});
    ops.push_back(c);
  }
  if (rng() % 2) {
    T g{1, OperationRole::kGeneric, {}};
    g.terms.push_back({{static_cast<std::uint32_t>(rng() % r)}, static_cast<std::uint32_t>(rng() % r), 1});
    ops.push_back(g);
  }
  return Multialgebra<PrimeField>(PrimeField(p), r, ops);
}

}  // namespace

TEST_CASE("structural contract of multialgebras") {
  using T = OperationTensor<PrimeField>;
  const PrimeField f(3);
  CHECK_THROWS_AS(Multialgebra<PrimeField>(f, 2, {}), InputError);
  CHECK_THROWS_AS(Multialgebra<PrimeField>(f, 2, {T{2, OperationRole::kProduct, {}},
                                                  T{2, OperationRole::kProduct, {}}}),
                  InputError);
  CHECK_THROWS_AS(Multialgebra<PrimeField>(f, 2, {T{1, OperationRole::kProduct, {}}}), InputError);
  CHECK_THROWS_AS(Multialgebra<PrimeField>(f, 2, {T{2, OperationRole::kProduct, {{{0, 5}, 0, 1}}}}),
                  InputError);
  CHECK_THROWS_AS(Multialgebra<PrimeField>(f, 2, {T{2, OperationRole::kProduct, {{{0}, 0, 1}}}}),
                  InputError);
  CHECK_THROWS_AS(Multialgebra<PrimeField>(f, 2, {T{2, OperationRole::kProduct, {{{0, 0}, 0, 7}}}}),
                  InputError);
  CHECK_THROWS_AS(Multialgebra<PrimeField>(f, 2, {T{2, OperationRole::kProduct, {}},
                                                  T{2, OperationRole::kUnit, {}}}),
                  InputError);
  CHECK_THROWS_AS(Multialgebra<PrimeField>(f, 2, {T{2, OperationRole::kProduct, {}},
                                                  T{2, OperationRole::kInvolution, {}}}),
                  InputError);
}

TEST_CASE("tensors are canonicalized: duplicate terms merge and zeros vanish") {
  using T = OperationTensor<PrimeField>;
  const Multialgebra<PrimeField> a(PrimeField(3), 2,
                                   {T{2, OperationRole::kProduct,
                                      {{{1, 0}, 1, 1}, {{0, 0}, 0, 2}, {{0, 0}, 0, 1}, {{1, 0}, 1, 1}}}});
  const auto& terms = a.operation(0).terms;
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].inputs == std::vector<std::uint32_t>{1, 0});
  CHECK(terms[0].coefficient == 2);
  CHECK(a.multiply({0, 1}, {1, 0}) == Vec<PrimeField>{0, 2});
}

TEST_CASE("closure dimension agrees with the naive oracle on random algebras") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint64_t p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 5);
    const std::size_t r = 1 + rng() % 5;
    const bool unit_op = trial % 4 == 0;
    const auto a = random_algebra(rng, p, r, unit_op);
    std::vector<Vec<PrimeField>> seed(rng() % 3, Vec<PrimeField>(r));
    for (auto& v : seed) {
      for (auto& x : v) x = rng() % p;
    }
    for (bool unital : {false, true}) {
      const auto c = closure(a, std::span<const Vec<PrimeField>>(seed), unital);
      const auto expected = oracle::closure_dimension(oracle::from_library(a), seed, unital);
      CHECK(c.dimension() == expected);
      CHECK(c.spanning.size() == c.dimension());
      for (const auto& s : seed) CHECK(c.basis.contains(s));
      const auto early = closure(a, std::span<const Vec<PrimeField>>(seed), unital, true);
      CHECK((early.dimension() == expected || early.dimension() == r));
      if (expected == r) CHECK(early.dimension() == r);
    }
  }
}

TEST_CASE("closure as a set matches p^dimension on tiny algebras") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const std::uint64_t p = trial % 2 ? 2 : 3;
    const std::size_t r = 1 + rng() % 3;
    const auto a = random_algebra(rng, p, r, false);
    std::vector<Vec<PrimeField>> seed(1 + rng() % 2, Vec<PrimeField>(r));
    for (auto& v : seed) {
      for (auto& x : v) x = rng() % p;
    }
    const auto dim = closure(a, std::span<const Vec<PrimeField>>(seed), false).dimension();
    std::size_t expected = 1;
    for (std::size_t k = 0; k < dim; ++k) expected *= p;
    CHECK(oracle::closure_size(oracle::from_library(a), seed, false) == expected);
  }
}

TEST_CASE("closure is monotone in the seed") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_algebra(rng, 3, 4, trial % 2 == 0);
    std::vector<Vec<PrimeField>> seed(3, Vec<PrimeField>(4));
    for (auto& v : seed) {
      for (auto& x : v) x = rng() % 3;
    }
    const auto small = closure(a, std::span<const Vec<PrimeField>>(seed.data(), 2), false);
    const auto large = closure(a, std::span<const Vec<PrimeField>>(seed), false);
    CHECK(small.dimension() <= large.dimension());
    for (const auto& v : small.basis.rows()) CHECK(large.basis.contains(v));
  }
}

TEST_CASE("unital closure includes constants only when asked") {
  using T = OperationTensor<RationalField>;
  const Multialgebra<RationalField> a(
      RationalField{}, 2,
      {T{2, OperationRole::kProduct, {{{0, 0}, 0, 1}, {{1, 1}, 1, 1}}},
       T{0, OperationRole::kUnit, {{{}, 0, 1}, {{}, 1, 1}}}});
  const std::vector<Vec<RationalField>> seed{{1, 2}};
  CHECK(closure(a, std::span<const Vec<RationalField>>(seed), false).dimension() == 2);
  const std::vector<Vec<RationalField>> none;
  CHECK(closure(a, std::span<const Vec<RationalField>>(none), false).dimension() == 0);
  CHECK(closure(a, std::span<const Vec<RationalField>>(none), true).dimension() == 1);
  CHECK(a.unit() == std::optional<Vec<RationalField>>(Vec<RationalField>{1, 1}));
}

TEST_CASE("generation certificates replay and detect tampering") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_algebra(rng, 5, 3, false);
    std::vector<Vec<PrimeField>> seed(2, Vec<PrimeField>(3));
    for (auto& v : seed) {
      for (auto& x : v) x = rng() % 5;
    }
    const auto verdict = is_generating(a, std::span<const Vec<PrimeField>>(seed), false);
    CHECK(verdict.generating == (verdict.certificate.closure_dimension == 3));
    CHECK(replay(a, verdict.certificate));
    auto forged = verdict.certificate;
    forged.closure_dimension = forged.closure_dimension == 3 ? 2 : forged.closure_dimension + 1;
    CHECK_FALSE(replay(a, forged));
  }
}

TEST_CASE("reduction mod p and base change") {
  using T = OperationTensor<RationalField>;
  const Multialgebra<RationalField> a(RationalField{}, 2,
                                      {T{2, OperationRole::kProduct, {{{0, 0}, 1, 6}, {{1, 1}, 0, 1}}}});
  const auto a3 = reduce_mod_p(a, 3);
  CHECK(a3.operation(0).terms.size() == 1);
  const std::vector<Vec<RationalField>> seed{{1, 0}};
  CHECK(is_generating(a, std::span<const Vec<RationalField>>(seed), false).generating);
  CHECK(base_change_check(a, 5, std::span<const Vec<RationalField>>(seed)));
  CHECK_FALSE(base_change_check(a, 3, std::span<const Vec<RationalField>>(seed)));
  CHECK_FALSE(base_change_check(a, 2, std::span<const Vec<RationalField>>(seed)));
  const Multialgebra<RationalField> half(RationalField{}, 1,
                                         {T{2, OperationRole::kProduct, {{{0, 0}, 0, Rational(1, 2)}}}});
  CHECK_THROWS_AS(reduce_mod_p(half, 2), InputError);
  CHECK_NOTHROW(reduce_mod_p(half, 3));
}

TEST_CASE("elements of the wrong length are rejected") {
  const auto a = Multialgebra<PrimeField>(PrimeField(2), 2,
                                          {OperationTensor<PrimeField>{2, OperationRole::kProduct, {}}});
  const std::vector<Vec<PrimeField>> bad{{1, 0, 1}};
  CHECK_THROWS_AS(closure(a, std::span<const Vec<PrimeField>>(bad), false), InputError);
  const std::vector<Vec<PrimeField>> big{{1, 2}};
  CHECK_THROWS_AS(closure(a, std::span<const Vec<PrimeField>>(big), false), InputError);
}

TEST_CASE("small documented cases") {
  using T = OperationTensor<PrimeField>;
  const PrimeField f2(2);
  const Multialgebra<PrimeField> e2(f2, 2, {T{2, OperationRole::kProduct, {{{0, 0}, 0, 1}, {{1, 1}, 1, 1}}}});
  const std::vector<Vec<PrimeField>> idem{{1, 0}};
  const auto c = closure(e2, std::span<const Vec<PrimeField>>(idem), false);
  CHECK(c.dimension() == 1);
  CHECK(c.basis.contains({1, 0}));
  CHECK(e2.multiply({1, 0}, {0, 0}) == Vec<PrimeField>{0, 0});
  CHECK(e2.multiply(e2.basis_vector(1), e2.basis_vector(1)) == Vec<PrimeField>{0, 1});

  const Multialgebra<PrimeField> zero(PrimeField(3), 3, {T{2, OperationRole::kProduct, {}}});
  const std::vector<Vec<PrimeField>> s{{1, 2, 0}, {2, 1, 0}};
  CHECK(closure(zero, std::span<const Vec<PrimeField>>(s), false).dimension() == 1);
  const std::vector<Vec<PrimeField>> empty;
  CHECK_FALSE(is_generating(zero, std::span<const Vec<PrimeField>>(empty), false).generating);
  const std::vector<Vec<PrimeField>> basis{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(is_generating(zero, std::span<const Vec<PrimeField>>(basis), false).generating);

  using TQ = OperationTensor<RationalField>;
  const Multialgebra<RationalField> e3(
      RationalField{}, 3,
      {TQ{2, OperationRole::kProduct, {{{0, 0}, 0, 1}, {{1, 1}, 1, 1}, {{2, 2}, 2, 1}}}});
  const std::vector<Vec<RationalField>> distinct{{1, 2, 3}};
  CHECK(is_generating(e3, std::span<const Vec<RationalField>>(distinct), false).generating);
  CHECK_FALSE(base_change_check(e3, 2, std::span<const Vec<RationalField>>(distinct)));
  CHECK(base_change_check(e3, 5, std::span<const Vec<RationalField>>(distinct)));
  const std::vector<Vec<RationalField>> zeros{{0, 0, 0}};
  for (std::uint64_t p : {2u, 3u, 7u}) {
    CHECK_FALSE(base_change_check(e3, p, std::span<const Vec<RationalField>>(zeros)));
  }
}
