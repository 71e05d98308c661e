#pragma once

// Closed-form genus-g counts of dormant PGL_n-opers on unpointed curves:
//
//   N = p^{(n-1)(g-1)-1} / n!  *  sum over n-tuples of distinct p-th roots
//       of unity of (prod zeta_i)^{(n-1)(g-1)} / prod_{i != j} (zeta_i - zeta_j)^{g-1}
//
// valid when p > n * max(g - 1, 2), evaluated in exact cyclotomic arithmetic.

#include "dormant/modular.hpp"
#include "dormant/numeric.hpp"

namespace dormant {

enum class VerlindeSummation {
  Subsets,       // one term per n-subset, times n! (the summand is symmetric)
  OrderedTuples  // every ordered tuple of distinct roots
};

struct VerlindeOptions {
  VerlindeSummation summation = VerlindeSummation::Subsets;
  unsigned threads = 1;
  /// When false, only g >= 2 and 1 <= n < p are required and the formula is
  /// evaluated outside its proven range (used for duality checks).
  bool require_hypothesis = true;
};

/// True iff g >= 2 and p > n * max(g - 1, 2).
[[nodiscard]] bool verlinde_applies(int p, int n, int g) noexcept;

/// Throws InvalidInput when the hypothesis fails, and std::logic_error if the
/// sum is not a nonnegative integer (an arithmetic bug, never expected).
[[nodiscard]] Integer verlinde_count(Prime p, int n, int g, VerlindeOptions options = {});

/// (p^8 / 181440) + (p^6 / 4320) - (11 p^4 / 8640) + (47 p^2 / 45360): the
/// n = 3, g = 2 specialization, as a plain polynomial in p.
[[nodiscard]] Rational poly_n3_g2(const Integer& p);

}  // namespace dormant
