#pragma once

// Generalized hypergeometric operators
//
//   D = delta * prod_j (delta + beta_j - 1) - x * prod_j (delta + alpha_j),
//   delta = x d/dx,
//
// over a field of characteristic p. Viewed as a k(x^p)-linear endomorphism
// of k(x) with basis 1, x, ..., x^{p-1}, the operator (1/x) D is the upper
// bidiagonal matrix with diagonal P(l) = -prod(l + alpha_j) and
// superdiagonal Q(l) = (l + 1) prod(l + beta_j). Its kernel rank has a
// closed form (t_set / kernel_rank) and an independent elimination oracle
// (oracle_rank); both are exposed so they can be compared.

#include <cstddef>
#include <span>
#include <vector>

#include "dormant/modular.hpp"

namespace dormant {

class HGOperator {
 public:
  /// Throws InvalidInput when alpha or beta is empty or an F_p parameter
  /// has a modulus other than p.
  HGOperator(Prime p, std::vector<Parameter> alpha, std::vector<Parameter> beta);

  [[nodiscard]] Prime p() const noexcept { return p_; }
  [[nodiscard]] const std::vector<Parameter>& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const std::vector<Parameter>& beta() const noexcept { return beta_; }
  [[nodiscard]] std::size_t n() const noexcept { return alpha_.size(); }
  [[nodiscard]] std::size_t m() const noexcept { return beta_.size(); }

  /// Number of F_p-valued entries of alpha (n') and beta (m').
  [[nodiscard]] std::size_t n_fp() const noexcept { return alpha_sorted_.fp_sorted.size(); }
  [[nodiscard]] std::size_t m_fp() const noexcept { return beta_sorted_.fp_sorted.size(); }
  [[nodiscard]] bool all_fp() const noexcept { return n_fp() == n() && m_fp() == m(); }

  /// Canonical lifts of the F_p entries, weakly decreasing.
  [[nodiscard]] const std::vector<CanonicalLift>& alpha_lifts() const noexcept {
    return alpha_sorted_.fp_sorted;
  }
  [[nodiscard]] const std::vector<CanonicalLift>& beta_lifts() const noexcept {
    return beta_sorted_.fp_sorted;
  }

 private:
  Prime p_;
  std::vector<Parameter> alpha_;
  std::vector<Parameter> beta_;
  SortedParams alpha_sorted_;
  SortedParams beta_sorted_;
};

/// Gauss's operator: alpha = (a, b), beta = (c).
[[nodiscard]] HGOperator gauss(Prime p, Parameter a, Parameter b, Parameter c);

/// Block indices j in {0, ..., m'} for which some lift alpha~ satisfies
/// beta~_j > alpha~ >= beta~_{j+1}, with beta~_0 := p + 1 and
/// beta~_{m'+1} := 1. Index j names the block of R between the zeros of Q at
/// p - beta~_j and p - beta~_{j+1}; each such block loses exactly one rank.
[[nodiscard]] std::vector<std::size_t> t_set(const HGOperator& op);

/// Kernel rank over k(x^p), from the closed form: the size of t_set(op).
[[nodiscard]] std::size_t kernel_rank(const HGOperator& op);

/// True iff the kernel has the maximal rank n (a full set of root functions).
[[nodiscard]] bool has_full_solutions(const HGOperator& op);

/// The interleaving test: all parameters in F_p, m = n - 1 and
/// alpha~_1 >= beta~_1 > alpha~_2 >= ... >= beta~_{n-1} > alpha~_n.
/// Agrees with has_full_solutions whenever m = n - 1.
[[nodiscard]] bool interleaving_criterion(const HGOperator& op);

struct BidiagMatrix {
  Prime p;
  FpVector diag;       // P(0), ..., P(p-1)
  FpVector superdiag;  // Q(0), ..., Q(p-2)

  /// Matrix-vector product; `v` has length p.
  [[nodiscard]] FpVector multiply(std::span<const FpElem> v) const;
  /// Row-major dense copy.
  [[nodiscard]] std::vector<FpVector> dense() const;
};

/// Throws UnsupportedInput on generic parameters.
[[nodiscard]] BidiagMatrix matrix(const HGOperator& op);

/// p minus the rank of matrix(op), computed by dense Gaussian elimination
/// over F_p. Throws UnsupportedInput on generic parameters.
[[nodiscard]] std::size_t oracle_rank(const HGOperator& op);

struct RootBasis {
  /// Coefficient vectors of 1, x, ..., x^{p-1}.
  std::vector<FpVector> vectors;
};

/// A basis of polynomial solutions of degree < p (the constant-coefficient
/// null space of matrix(op)). Throws UnsupportedInput on generic parameters.
[[nodiscard]] RootBasis root_basis(const HGOperator& op);

/// (1/x) D applied to a polynomial of degree < p, term by term:
/// x^s -> s prod(s - 1 + beta_j) x^{s-1} - prod(s + alpha_j) x^s.
/// Throws UnsupportedInput on generic parameters and InvalidInput when the
/// vector length differs from p.
[[nodiscard]] FpVector apply(const HGOperator& op, std::span<const FpElem> poly);

/// True iff sum(alpha) and sum(beta) both lie in F_p. Generic tokens never
/// cancel, so any generic entry makes its sum leave F_p.
[[nodiscard]] bool pcurvature_sum_test(std::span<const Parameter> alpha,
                                       std::span<const Parameter> beta) noexcept;

}  // namespace dormant
