#include "genalg/exactmath/numtheory.hpp"

#include <algorithm>

#include "genalg/exactmath/errors.hpp"
#include "genalg/exactmath/field.hpp"

namespace genalg {

namespace {

constexpr int kRhoSeeds = 16;
constexpr unsigned long kRhoIterations = 200'000;

std::optional<Integer> pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  for (int c = 1; c <= kRhoSeeds; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    unsigned long iterations = 0;
    const unsigned long m = 64;
    auto step = [&](const Integer& v) { return mod_floor(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mod_floor(q * abs(x - y), n);
        }
        g = gcd(q, n);
        k += m;
        iterations += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && iterations < kRhoIterations);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

// Splits n (> 1, no factors at or below the trial bound) into proven primes.
bool split_cofactor(const Integer& n, std::vector<Integer>& primes, std::vector<Integer>& stuck) {
  const auto prime = is_prime_proven(n);
  if (prime.has_value() && *prime) {
    primes.push_back(n);
    return true;
  }
  if (!prime.has_value()) {
    // Too large to certify; try to split anyway, a composite split is exact.
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
      stuck.push_back(n);
      return false;
    }
  }
  const auto d = pollard_brent(n);
  if (!d) {
    stuck.push_back(n);
    return false;
  }
  bool ok = split_cofactor(*d, primes, stuck);
  ok = split_cofactor(n / *d, primes, stuck) && ok;
  return ok;
}

}  // namespace

Integer crt(std::span<const Congruence> system) {
  Integer x = 0;
  Integer modulus = 1;
  for (const auto& c : system) {
    if (c.modulus <= 0) throw InputError("crt modulus must be positive");
    const Integer r = mod_floor(c.residue, c.modulus);
    const Integer g = gcd(modulus, c.modulus);
    const Integer diff = r - x;
    if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) {
      throw InputError("inconsistent congruences modulo " + to_string(modulus) + " and " +
                       to_string(c.modulus));
    }
    // x + modulus * t = r (mod c.modulus)
    const Integer m1 = modulus / g;
    const Integer m2 = c.modulus / g;
    Integer inv;
    if (m2 == 1) {
      inv = 0;
    } else {
      mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    }
    const Integer t = mod_floor((diff / g) * inv, m2 == 1 ? Integer(1) : m2);
    x += modulus * t;
    modulus *= m2;
    x = mod_floor(x, modulus);
  }
  return x;
}

std::vector<Integer> Factorization::distinct_primes() const {
  std::vector<Integer> out = primes;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<bool> is_prime_proven(const Integer& n) {
  if (n < 2) return false;
  if (const auto small = to_u64(n)) return is_prime_u64(*small);
  return std::nullopt;
}

Integer next_prime(const Integer& n) {
  Integer candidate = n < 2 ? Integer(2) : Integer(n + 1);
  while (true) {
    const auto p = is_prime_proven(candidate);
    if (!p.has_value()) {
      mpz_nextprime(candidate.get_mpz_t(), Integer(candidate - 1).get_mpz_t());
      return candidate;
    }
    if (*p) return candidate;
    ++candidate;
  }
}

Factorization factor(const Integer& n, const Integer& bound) {
  if (n == 0) throw InputError("cannot factor 0");
  Factorization out;
  Integer c = abs(n);
  Integer d = 2;
  while (d <= bound && d * d <= c) {
    while (mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      out.primes.push_back(d);
      c /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (c == 1) return out;
  if (d * d > c) {
    // Every prime factor at most sqrt(c) has been removed, so c is prime.
    out.primes.push_back(c);
    return out;
  }
  std::vector<Integer> stuck;
  split_cofactor(c, out.primes, stuck);
  std::sort(out.primes.begin(), out.primes.end());
  if (!stuck.empty()) {
    Integer rest = 1;
    for (const auto& s : stuck) rest *= s;
    out.unfactored = rest;
  }
  return out;
}

}  // namespace genalg
