#include "genalg/forster/prime_set.hpp"

#include <algorithm>
#include <iterator>

#include "genalg/exactmath/errors.hpp"
#include "genalg/exactmath/numtheory.hpp"

namespace genalg {

namespace {

using Set = std::set<Integer>;

Set set_union(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

Set set_intersection(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

Set set_difference(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

PrimeSet PrimeSet::finite(std::set<Integer> primes) {
  for (const auto& p : primes) {
    if (is_prime_proven(p) != std::optional<bool>(true)) {
      throw InputError(to_string(p) + " is not a (provable) prime");
    }
  }
  return PrimeSet(Kind::kFinite, std::move(primes));
}

PrimeSet PrimeSet::cofinite(std::set<Integer> excluded) {
  for (const auto& p : excluded) {
    if (is_prime_proven(p) != std::optional<bool>(true)) {
      throw InputError(to_string(p) + " is not a (provable) prime");
    }
  }
  return PrimeSet(Kind::kCofinite, std::move(excluded));
}

bool PrimeSet::contains(const Integer& p) const {
  const bool listed = primes_.count(p) > 0;
  return kind_ == Kind::kFinite ? listed : !listed;
}

int PrimeSet::dimension() const noexcept {
  if (kind_ == Kind::kCofinite) return 1;
  return primes_.empty() ? -1 : 0;
}

bool PrimeSet::dimension_at_most(int bound) const noexcept {
  return empty() || dimension() <= bound;
}

Integer PrimeSet::smallest() const {
  if (kind_ == Kind::kFinite) {
    if (primes_.empty()) throw InputError("the empty set of primes has no smallest member");
    return *primes_.begin();
  }
  Integer p = 2;
  while (primes_.count(p) > 0) p = next_prime(p);
  return p;
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
  if (kind_ == Kind::kFinite && other.kind_ == Kind::kFinite) {
    return PrimeSet(Kind::kFinite, set_intersection(primes_, other.primes_));
  }
  if (kind_ == Kind::kCofinite && other.kind_ == Kind::kCofinite) {
    return PrimeSet(Kind::kCofinite, set_union(primes_, other.primes_));
  }
  const PrimeSet& fin = kind_ == Kind::kFinite ? *this : other;
  const PrimeSet& cof = kind_ == Kind::kFinite ? other : *this;
  return PrimeSet(Kind::kFinite, set_difference(fin.primes_, cof.primes_));
}

PrimeSet PrimeSet::unite(const PrimeSet& other) const {
  if (kind_ == Kind::kFinite && other.kind_ == Kind::kFinite) {
    return PrimeSet(Kind::kFinite, set_union(primes_, other.primes_));
  }
  if (kind_ == Kind::kCofinite && other.kind_ == Kind::kCofinite) {
    return PrimeSet(Kind::kCofinite, set_intersection(primes_, other.primes_));
  }
  const PrimeSet& fin = kind_ == Kind::kFinite ? *this : other;
  const PrimeSet& cof = kind_ == Kind::kFinite ? other : *this;
  return PrimeSet(Kind::kCofinite, set_difference(cof.primes_, fin.primes_));
}

PrimeSet PrimeSet::minus(const PrimeSet& other) const {
  const PrimeSet complement(other.kind_ == Kind::kFinite ? Kind::kCofinite : Kind::kFinite,
                            other.primes_);
  return intersect(complement);
}

std::string PrimeSet::describe() const {
  std::string list;
  for (const auto& p : primes_) list += (list.empty() ? "" : ", ") + to_string(p);
  if (kind_ == Kind::kFinite) return "{" + list + "}";
  return list.empty() ? "all primes" : "all primes except {" + list + "}";
}

}  // namespace genalg
