#pragma once

#include <cstddef>
#include <span>

namespace univalent {

/// Pairwise (cascade) summation. Blocks of at most 64 terms are summed
/// directly, so short sums are bit-identical to a left-to-right loop.
inline double pairwise_sum(std::span<const double> terms) {
  constexpr std::size_t kBlock = 64;
  if (terms.size() <= kBlock) {
    double s = 0.0;
    for (double x : terms) s += x;
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

}  // namespace univalent
