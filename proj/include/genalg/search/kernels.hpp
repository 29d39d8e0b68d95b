#pragma once

// Index-space scans shared by the exhaustive and randomized searches.
//
// Both flavours answer the same questions over a candidate range [0, total):
// the smallest index satisfying a predicate, and the maximum of a score. The
// serial versions are the reference; the OpenMP versions split the range into
// fixed blocks and combine with min/max, so their answers never depend on the
// thread count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genalg::search {

inline constexpr std::uint64_t kScanBlock = 64;

namespace serial {

template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t total, Pred&& pred) {
  for (std::uint64_t i = 0; i < total; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

template <class Score>
std::uint64_t max_over(std::uint64_t total, Score&& score) {
  std::uint64_t best = 0;
  for (std::uint64_t i = 0; i < total; ++i) best = std::max<std::uint64_t>(best, score(i));
  return best;
}

}  // namespace serial

namespace parallel {

template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t total, Pred&& pred) {
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> best{kNone};
  const auto blocks = static_cast<std::int64_t>((total + kScanBlock - 1) / kScanBlock);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t start = static_cast<std::uint64_t>(b) * kScanBlock;
    const std::uint64_t stop = std::min(total, start + kScanBlock);
    for (std::uint64_t i = start; i < stop; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) break;
      if (pred(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        break;
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

template <class Score>
std::uint64_t max_over(std::uint64_t total, Score&& score) {
  std::uint64_t best = 0;
  const auto n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, kScanBlock) reduction(max : best)
  for (std::int64_t i = 0; i < n; ++i) {
    best = std::max<std::uint64_t>(best, score(static_cast<std::uint64_t>(i)));
  }
  return best;
}

}  // namespace parallel

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace genalg::search
