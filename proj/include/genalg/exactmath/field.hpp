#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genalg/exactmath/integer.hpp"

namespace genalg {

__extension__ using UInt128 = unsigned __int128;

/// The prime field F_p with residues stored in [0, p). p must be prime and
/// below 2^62 so that sums never overflow and products go through 128 bits.
class PrimeField {
 public:
  using Element = std::uint64_t;
  static constexpr bool kFinite = true;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  Integer characteristic() const { return from_u64(p_); }
  std::string name() const { return "F" + std::to_string(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_member(Element a) const noexcept { return a < p_; }

  Element add(Element a, Element b) const noexcept {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<UInt128>(a) * b % p_);
  }
  /// acc += a * b
  void add_product(Element& acc, Element a, Element b) const noexcept {
    acc = add(acc, mul(a, b));
  }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;

  Element from_int(std::int64_t v) const noexcept;
  Element from_integer(const Integer& v) const;
  /// Throws InputError when p divides the denominator.
  Element from_rational(const Rational& v) const;
  Integer to_integer(Element a) const { return from_u64(a); }

  std::string format(Element a) const { return std::to_string(a); }
  /// Accepts integers and "num/den"; reduces into [0, p).
  Element parse(std::string_view text) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

/// The rational numbers with GMP-backed exact arithmetic.
class RationalField {
 public:
  using Element = Rational;
  static constexpr bool kFinite = false;

  Integer characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_member(const Element&) const noexcept { return true; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  void add_product(Element& acc, const Element& a, const Element& b) const {
    acc += a * b;
  }
  Element inv(const Element& a) const;

  Element from_int(std::int64_t v) const { return Rational(Integer(static_cast<long>(v))); }
  Element from_integer(const Integer& v) const { return Rational(v); }
  Element from_rational(const Rational& v) const { return v; }

  std::string format(const Element& a) const { return to_string(a); }
  Element parse(std::string_view text) const { return parse_rational(text); }

  bool operator==(const RationalField&) const = default;
};

template <class F>
using Vec = std::vector<typename F::Element>;

/// Trial division up to sqrt(n) for n < 10^12, deterministic Miller-Rabin
/// beyond (exact for all 64-bit inputs).
bool is_prime_u64(std::uint64_t n);

}  // namespace genalg
