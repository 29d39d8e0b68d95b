#pragma once

#include <random>
#include <vector>

#include "genalg/forster/integral_algebra.hpp"

namespace testgen {

/// A random well-defined Z-algebra of rank 1..max_rank mixing free and
/// torsion summands, with a binary product and sometimes a unit constant.
inline genalg::IntegralAlgebra random_integral_algebra(std::mt19937_64& rng, std::size_t max_rank,
                                                       bool allow_unit = true) {
  using genalg::Integer;
  static const int kInvariants[] = {0, 0, 2, 3, 4, 5, 6, 9, 12};
  const std::size_t m = 1 + rng() % max_rank;
  std::vector<Integer> d;
  for (std::size_t i = 0; i < m; ++i) d.push_back(kInvariants[rng() % 9]);
  std::sort(d.begin(), d.end(), [](const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return b == 0 && a != 0;
    return a < b;
  });
  auto step = [&](std::size_t in, std::size_t out) -> Integer {
    if (d[out] == 0) return d[in] == 0 ? 1 : 0;
    Integer g;
    mpz_gcd(g.get_mpz_t(), d[out].get_mpz_t(), d[in].get_mpz_t());
    return d[out] / g;
  };
  genalg::IntegerTensor product{2, genalg::OperationRole::kProduct, {}};
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      if (rng() % 2) continue;
      const auto l = static_cast<std::uint32_t>(rng() % m);
      const Integer a = step(i, l), b = step(j, l);
      if (a == 0 || b == 0) continue;
      Integer unit;
      mpz_lcm(unit.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer c = unit * static_cast<long>(rng() % 7 - 3);
      if (c != 0) product.terms.push_back({{i, j}, l, c});
    }
  }
  std::vector<genalg::IntegerTensor> ops{product};
  if (allow_unit && rng() % 4 == 0) {
    genalg::IntegerTensor unit{0, genalg::OperationRole::kGeneric, {}};
    unit.terms.push_back({{}, static_cast<std::uint32_t>(rng() % m), 1 + static_cast<long>(rng() % 3)});
    ops.push_back(unit);
  }
  return genalg::IntegralAlgebra(d, ops);
}

inline std::vector<genalg::IntVector> random_integral_tuple(std::mt19937_64& rng,
                                                            const genalg::IntegralAlgebra& a,
                                                            std::size_t count, int height) {
  std::vector<genalg::IntVector> out(count, genalg::IntVector(a.rank()));
  for (auto& v : out) {
    for (auto& x : v) x = static_cast<long>(rng() % (2 * height + 1)) - height;
    v = a.canonical(v);
  }
  return out;
}

}  // namespace testgen
