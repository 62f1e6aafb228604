#pragma once

#include <cstddef>
#include <utility>

namespace lober {

/// Pairwise (cascade) sum of term(0) + ... + term(n-1). The recursion shape
/// depends only on n, so results are reproducible bit for bit.
template <class Term>
double pairwise_sum(std::size_t first, std::size_t last, Term&& term) {
  constexpr std::size_t kLeaf = 32;
  if (last - first <= kLeaf) {
    double s = 0.0;
    for (std::size_t i = first; i < last; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = first + (last - first) / 2;
  return pairwise_sum(first, mid, term) + pairwise_sum(mid, last, term);
}

template <class Term>
double pairwise_sum(std::size_t n, Term&& term) {
  return pairwise_sum(std::size_t{0}, n, std::forward<Term>(term));
}

}  // namespace lober
