#include "genalg/exactmath/field.hpp"

#include <array>
#include <stdexcept>

#include "genalg/exactmath/errors.hpp"

namespace genalg {

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000'000'000ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool miller_rabin(std::uint64_t n) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are exact for every n < 2^64.
  constexpr std::array<std::uint64_t, 7> kBases = {2, 325, 9375, 28178, 450775, 9780504,
                                                   1795265022};
  for (std::uint64_t base : kBases) {
    const std::uint64_t a = base % n;
    if (a == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < kTrialDivisionLimit) {
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  return miller_rabin(n);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 62)) {
    throw InputError("prime field modulus too large: " + std::to_string(p));
  }
  if (!is_prime_u64(p)) throw InputError("field modulus is not prime: " + std::to_string(p));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const noexcept {
  return powmod(a, e, p_);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  return powmod(a, p_ - 2, p_);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const Integer& v) const {
  return mpz_fdiv_ui(v.get_mpz_t(), p_);
}

PrimeField::Element PrimeField::from_rational(const Rational& v) const {
  const Element den = from_integer(v.get_den());
  if (den == 0) {
    throw InputError("value " + to_string(v) + " is not " + name() + "-integral");
  }
  return mul(from_integer(v.get_num()), inv(den));
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
  return from_rational(parse_rational(text));
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero in Q");
  return 1 / a;
}

}  // namespace genalg
