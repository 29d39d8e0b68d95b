#include <doctest.h>

#include <random>

#include "genalg/exactmath/errors.hpp"
#include "genalg/exactmath/field.hpp"
#include "genalg/exactmath/lattice.hpp"
#include "genalg/exactmath/linalg.hpp"
#include "genalg/exactmath/numtheory.hpp"
#include "oracles.hpp"

using namespace genalg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int h) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<int> d(-h, h);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  }
  return m;
}

std::vector<std::vector<Integer>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

}  // namespace

TEST_CASE("integers and rationals parse canonically") {
  CHECK(parse_integer("-12345678901234567890123") * 2 == parse_integer("-24691357802469135780246"));
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS_AS(parse_integer("12a"), InputError);
  CHECK_THROWS_AS(parse_integer(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK(mod_floor(-7, 3) == 2);
  CHECK(to_u64(from_u64(~std::uint64_t{0})) == ~std::uint64_t{0});
  CHECK_FALSE(to_u64(Integer(-1)).has_value());
}

TEST_CASE("prime fields reject composite moduli") {
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(91), InputError);
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField((std::uint64_t{1} << 61) - 1));
}

TEST_CASE("prime field arithmetic matches modular arithmetic") {
  for (std::uint64_t p : {2u, 3u, 101u}) {
    const PrimeField f(p);
    for (std::uint64_t a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_int(-1) == p - 1);
    if (p > 2) CHECK(f.parse("1/2") == f.inv(2));
  }
  const PrimeField big((std::uint64_t{1} << 61) - 1);
  const std::uint64_t a = big.from_int(1234567890123);
  CHECK(big.mul(a, big.inv(a)) == 1);
  CHECK(big.pow(3, big.modulus() - 1) == 1);
  CHECK_THROWS(PrimeField(5).inv(0));
  CHECK_THROWS_AS(PrimeField(2).parse("1/2"), InputError);
  CHECK_THROWS_AS(PrimeField(5).from_rational(Rational(1, 5)), InputError);
}

TEST_CASE("echelon bases are canonical and agree with plain elimination") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint64_t p = trial % 2 ? 3 : 7;
    const PrimeField f(p);
    const std::size_t cols = 5;
    std::vector<Vec<PrimeField>> rows(1 + trial % 6, Vec<PrimeField>(cols));
    for (auto& r : rows) {
      for (auto& x : r) x = rng() % (trial % 3 ? p : 2);
    }
    const auto basis = rref(f, cols, std::span<const Vec<PrimeField>>(rows));
    oracle::Span reference(p, cols);
    for (const auto& r : rows) reference.insert(r);
    CHECK(basis.rank() == reference.rank());
    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(rref(f, cols, std::span<const Vec<PrimeField>>(shuffled)) == basis);
    for (const auto& r : rows) CHECK(basis.contains(r));
  }
}

TEST_CASE("rref over Q") {
  const RationalField q;
  std::vector<Vec<RationalField>> rows = {{1, 2, 3}, {2, 4, 6}, {Rational(1, 2), 0, 1}};
  const auto basis = rref(q, 3, std::span<const Vec<RationalField>>(rows));
  CHECK(basis.rank() == 2);
  CHECK(basis.contains({Rational(3, 2), 2, 4}));
  CHECK_FALSE(basis.contains({0, 0, 1}));
  std::vector<Vec<RationalField>> ragged = {{1, 2}, {1}};
  CHECK_THROWS_AS(rref(q, 2, std::span<const Vec<RationalField>>(ragged)), InputError);
}

TEST_CASE("smith form of a fixed matrix") {
  const auto a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  const auto s = snf(a);
  CHECK(s.diagonal == std::vector<Integer>{2, 6, 12});
  CHECK(oracle::invariant_factors(rows_of(a), 3, 3) == s.diagonal);
}

TEST_CASE("smith form property: U A V = D with divisibility, minors oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, rows, cols, trial % 3 ? 6 : 40);
    if (trial % 5 == 0) {
      for (std::size_t j = 0; j < cols; ++j) a(0, j) = 0;
    }
    const auto s = snf(a);
    const IntMatrix d = s.left * a * s.right;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        CHECK(d(i, j) == (i == j ? s.diagonal[i] : Integer(0)));
      }
    }
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
      CHECK(s.diagonal[k] >= 0);
      if (s.diagonal[k] == 0) {
        CHECK(s.diagonal[k + 1] == 0);
      } else {
        CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
      }
    }
    CHECK(oracle::invariant_factors(rows_of(a), rows, cols) == s.diagonal);
  }
}

TEST_CASE("determinant and unimodular inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix a = random_matrix(rng, n, n, 9);
    CHECK(determinant(a) == oracle::det(rows_of(a)));
    const auto s = snf(a);
    CHECK(s.left * unimodular_inverse(s.left) == IntMatrix::identity(n));
  }
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2)), InputError);
}

TEST_CASE("hermite lattices are canonical and report the index") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + rng() % 4, k = 1 + rng() % 5;
    std::vector<IntVector> gens(k, IntVector(m));
    std::uniform_int_distribution<int> d(-7, 7);
    for (auto& g : gens) {
      for (auto& x : g) x = d(rng);
    }
    const auto lattice = hnf(IntMatrix::from_columns(gens, m));
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    IntegerLattice incremental(m);
    for (const auto& g : shuffled) incremental.insert(g);
    CHECK(incremental == lattice);
    for (const auto& g : gens) CHECK(lattice.contains(g));
    const auto factors = oracle::invariant_factors(rows_of(IntMatrix::from_columns(gens, m)), m, k);
    Integer index = factors.size() == m ? Integer(1) : Integer(0);
    for (const auto& f : factors) index *= f;
    CHECK(lattice.index() == abs(index));
    for (std::size_t i = 0; i < lattice.rank(); ++i) CHECK(lattice.basis()[i][lattice.pivots()[i]] > 0);
  }
}

TEST_CASE("crt") {
  std::vector<Congruence> sys = {{3, 2}, {5, 3}, {7, 2}};
  CHECK(crt(sys) == 23);
  std::vector<Congruence> shared = {{4, 3}, {6, 1}};
  CHECK(crt(shared) == 7);
  std::vector<Congruence> bad = {{4, 1}, {6, 2}};
  CHECK_THROWS_AS(crt(bad), InputError);
  CHECK(crt(std::span<const Congruence>{}) == 0);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Congruence> s;
    const Integer x = rng() % 100000;
    for (int k = 0; k < 3; ++k) {
      const Integer m = 1 + rng() % 60;
      s.push_back({m, mod_floor(x, m)});
    }
    const Integer y = crt(s);
    for (const auto& c : s) CHECK(mod_floor(y - x, c.modulus) == 0);
  }
}

TEST_CASE("factorization agrees with trial division") {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    const auto f = factor(from_u64(n), 1000);
    CHECK(f.complete());
    Integer product = 1;
    for (const auto& p : f.primes) product *= p;
    CHECK(product == n);
    std::vector<std::uint64_t> distinct;
    for (const auto& p : f.distinct_primes()) distinct.push_back(p.get_ui());
    CHECK(distinct == oracle::distinct_prime_factors(n));
  }
  const auto f = factor(parse_integer("18446744073709551617"), 100);
  CHECK(f.complete());
  CHECK(f.distinct_primes() == std::vector<Integer>{274177, parse_integer("67280421310721")});
  CHECK_THROWS_AS(factor(0, 10), InputError);
}

TEST_CASE("primality and next prime") {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    CHECK(is_prime_proven(from_u64(n)) == std::optional<bool>(oracle::is_prime(n)));
    CHECK(is_prime_u64(n) == oracle::is_prime(n));
  }
  CHECK(next_prime(7) == 11);
  CHECK(next_prime(1) == 2);
  CHECK(is_prime_u64(18446744073709551557ull));
  CHECK(next_prime(from_u64(18446744073709551557ull)) > from_u64(18446744073709551557ull));
}

TEST_CASE("small documented cases") {
  const PrimeField f5(5), f2(2);
  const RationalField q;
  std::vector<Vec<PrimeField>> id{{1, 0}, {0, 1}};
  CHECK(rref(f5, 2, std::span<const Vec<PrimeField>>(id)).rows() == id);
  std::vector<Vec<RationalField>> prop{{2, 4}, {1, 2}};
  const auto pb = rref(q, 2, std::span<const Vec<RationalField>>(prop));
  CHECK(pb.rows() == std::vector<Vec<RationalField>>{{1, 2}});
  std::vector<Vec<PrimeField>> three{{1, 1}, {1, 0}, {0, 1}};
  CHECK(rref(f2, 2, std::span<const Vec<PrimeField>>(three)).rows() == id);
  std::vector<Vec<RationalField>> single{{1, 0}};
  const auto sb = rref(q, 2, std::span<const Vec<RationalField>>(single));
  CHECK(sb.reduce({3, 7}) == Vec<RationalField>{0, 7});
  CHECK(sb.reduce({1, 0}) == Vec<RationalField>{0, 0});

  const auto h = hnf(IntMatrix::from_columns({{2, 0}, {0, 2}, {1, 1}}, 2));
  CHECK(h.index() == 2);
  CHECK(h.pivots().size() == 2);
  CHECK(h.basis()[0][h.pivots()[0]] == 1);
  CHECK(h.basis()[1][h.pivots()[1]] == 2);
  CHECK(hnf(IntMatrix::identity(3)).index() == 1);
  const auto col = hnf(IntMatrix::from_columns({{4, 6}}, 2));
  CHECK(col.rank() == 1);
  CHECK(col.contains({4, 6}));
  CHECK_FALSE(col.contains({2, 3}));

  CHECK(snf(IntMatrix::from_rows({{2, 0}, {0, 3}}, 2)).diagonal == std::vector<Integer>{1, 6});
  CHECK(snf(IntMatrix(2, 3)).diagonal == std::vector<Integer>{0, 0});
  CHECK(snf(IntMatrix::from_rows({{2, 4}, {6, 8}}, 2)).diagonal == std::vector<Integer>{2, 4});

  std::vector<Congruence> a{{2, 1}, {3, 2}}, b{{7, 0}}, c{{2, 0}, {3, 0}, {5, 0}};
  CHECK(crt(a) == 5);
  CHECK(crt(b) == 0);
  CHECK(crt(c) == 0);

  CHECK(factor(12, 100).primes == std::vector<Integer>{2, 2, 3});
  CHECK(factor(1, 100).primes.empty());
  CHECK(factor(221, 20).primes == std::vector<Integer>{13, 17});
}
