#pragma once

// Radii: n-element multisets of F_p modulo simultaneous translation.
//
// A class is stored as its lexicographically smallest sorted translate,
// which always starts with 0. Xi_{p,n} is the set of classes with pairwise
// distinct entries; it has C(p, n) / p elements because translation acts
// freely on n-subsets when 0 < n < p.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dormant/modular.hpp"

namespace dormant {

/// A translation class of a multiset of residues (repeats allowed).
class CClass {
 public:
  [[nodiscard]] Prime p() const noexcept { return p_; }
  [[nodiscard]] const std::vector<int>& elems() const noexcept { return elems_; }
  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] bool distinct() const noexcept;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CClass&, const CClass&) = default;
  friend auto operator<=>(const CClass&, const CClass&) = default;

 private:
  friend CClass canonical(Prime p, std::span<const int> elems);
  CClass(Prime p, std::vector<int> elems) : p_(p), elems_(std::move(elems)) {}

  Prime p_;
  std::vector<int> elems_;
};

/// Canonical form of a multiset of residues (any integers; reduced mod p).
/// Throws InvalidInput unless 1 <= size < p.
[[nodiscard]] CClass canonical(Prime p, std::span<const int> elems);

/// An element of Xi_{p,n}: a class with pairwise-distinct entries.
class RadiusClass {
 public:
  /// Throws InvalidInput if `c` has repeated entries.
  explicit RadiusClass(CClass c);

  /// Canonicalizes `elems` first, so any translate is accepted.
  static RadiusClass of(Prime p, std::span<const int> elems);
  static RadiusClass of(Prime p, std::initializer_list<int> elems) {
    return of(p, std::span<const int>(elems.begin(), elems.size()));
  }

  [[nodiscard]] Prime p() const noexcept { return cls_.p(); }
  [[nodiscard]] std::size_t n() const noexcept { return cls_.size(); }
  [[nodiscard]] const std::vector<int>& elems() const noexcept { return cls_.elems(); }
  [[nodiscard]] const CClass& cclass() const noexcept { return cls_; }
  [[nodiscard]] std::string to_string() const { return cls_.to_string(); }

  friend bool operator==(const RadiusClass&, const RadiusClass&) = default;
  friend auto operator<=>(const RadiusClass&, const RadiusClass&) = default;

 private:
  CClass cls_;
};

using RadiiTriple = std::array<RadiusClass, 3>;

[[nodiscard]] std::string to_string(const RadiiTriple& t);

/// All of Xi_{p,n}, sorted. Throws InvalidInput unless 1 <= n < p.
[[nodiscard]] std::vector<RadiusClass> xi(Prime p, int n);

/// [[a_1, ..., a_n]] -> [[-a_1, ..., -a_n]]; an involution on Xi_{p,n}.
[[nodiscard]] RadiusClass neg_dual(const RadiusClass& c);

/// A -> {-a : a in F_p \ A}; maps Xi_{p,n} to Xi_{p,p-n}. Requires n <= p - 2
/// so the complement is a valid class. An involution.
[[nodiscard]] RadiusClass comp_dual(const RadiusClass& c);

[[nodiscard]] RadiiTriple neg_dual(const RadiiTriple& t);
[[nodiscard]] RadiiTriple comp_dual(const RadiiTriple& t);

/// Raw exponent multisets at 0, 1 and infinity (residues, not canonicalized):
///   a1 = [0, 1 - beta_1, ..., 1 - beta_{n-1}]
///   a2 = [0, 1, ..., n - 2, sum(beta) - sum(alpha)]
///   a3 = [alpha_1, ..., alpha_n]
/// Throws InvalidInput unless beta has exactly n - 1 entries over the same p.
[[nodiscard]] std::array<std::vector<int>, 3> exponents(Prime p, std::span<const FpElem> alpha,
                                                        std::span<const FpElem> beta);

struct ExponentRadii {
  std::array<CClass, 3> classes;
  bool in_xi = false;  // all three classes have distinct entries

  /// The triple as an element of Xi_{p,n}^3, when in_xi.
  [[nodiscard]] std::optional<RadiiTriple> triple() const;
};

[[nodiscard]] ExponentRadii radii_triple(Prime p, std::span<const FpElem> alpha,
                                         std::span<const FpElem> beta);

/// True iff some translate equals {0, 1, ..., n - 2, d}.
[[nodiscard]] bool is_hyp_type(const RadiusClass& c);

/// A lift chain p >= a_1 >= b_1 > a_2 >= b_2 > ... >= b_{n-1} > a_n >= 1.
struct Interleaving {
  std::vector<int> alpha_lifts;  // n entries
  std::vector<int> beta_lifts;   // n - 1 entries

  friend bool operator==(const Interleaving&, const Interleaving&) = default;
};

/// Visits every interleaving chain once, in lexicographically decreasing
/// order of (a_1, b_1, a_2, ...). Throws InvalidInput unless 1 < n < p.
void for_each_interleaving(Prime p, int n, const std::function<void(const Interleaving&)>& visit);

[[nodiscard]] std::vector<Interleaving> interleavings(Prime p, int n);

/// Radii triples of the dormant operators themselves (before permuting the
/// three marked points).
[[nodiscard]] std::set<RadiiTriple> hyp_generators(Prime p, int n);

/// Hyp_{p,n}: the S_3-closure of hyp_generators(p, n).
[[nodiscard]] std::set<RadiiTriple> hyp_set(Prime p, int n);

/// The six permutations of a triple (with repeats when components coincide).
[[nodiscard]] std::array<RadiiTriple, 6> permutations(const RadiiTriple& t);

}  // namespace dormant
