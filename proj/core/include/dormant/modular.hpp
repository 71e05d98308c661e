#pragma once

// Arithmetic in F_p, canonical lifts into {1, ..., p}, and the F_p / generic
// parameter split used by the hypergeometric operators.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace dormant {

bool is_odd_prime(long long n) noexcept;

/// An odd prime modulus. Validated by trial division on construction.
class Prime {
 public:
  explicit Prime(int p);

  [[nodiscard]] int value() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  friend class FpElem;
  struct Unchecked {};
  Prime(int p, Unchecked) noexcept : value_(p) {}
  static Prime unchecked(int p) noexcept { return Prime(p, Unchecked{}); }

  int value_;
};

/// An element of F_p.
class FpElem {
 public:
  FpElem(Prime p, long long value) noexcept;

  [[nodiscard]] int value() const noexcept { return value_; }
  [[nodiscard]] Prime modulus() const noexcept { return Prime::unchecked(p_); }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

  [[nodiscard]] FpElem inverse() const;
  [[nodiscard]] FpElem pow(unsigned long long e) const noexcept;

  FpElem operator-() const noexcept;
  FpElem& operator+=(FpElem rhs);
  FpElem& operator-=(FpElem rhs);
  FpElem& operator*=(FpElem rhs);
  friend FpElem operator+(FpElem a, FpElem b) { return a += b; }
  friend FpElem operator-(FpElem a, FpElem b) { return a -= b; }
  friend FpElem operator*(FpElem a, FpElem b) { return a *= b; }

  friend bool operator==(FpElem, FpElem) = default;

 private:
  int p_;
  int value_;
};

using FpVector = std::vector<FpElem>;

/// The unique integer in {1, ..., p} congruent to a residue. Residue 0 lifts to p.
struct CanonicalLift {
  int value;

  friend bool operator==(CanonicalLift, CanonicalLift) = default;
  friend auto operator<=>(CanonicalLift, CanonicalLift) = default;
};

[[nodiscard]] CanonicalLift lift(FpElem x) noexcept;

/// Opaque stand-in for a scalar outside F_p. Distinct tokens never coincide
/// and never equal an F_p element; no arithmetic is defined on them.
struct GenericToken {
  std::uint64_t id;

  friend bool operator==(GenericToken, GenericToken) = default;
};

class Parameter {
 public:
  Parameter(FpElem x) noexcept : value_(x) {}  // NOLINT(google-explicit-constructor)
  Parameter(GenericToken t) noexcept : value_(t) {}  // NOLINT(google-explicit-constructor)

  /// A fresh generic parameter, distinct from every previously issued one.
  static Parameter generic();

  [[nodiscard]] bool is_fp() const noexcept { return std::holds_alternative<FpElem>(value_); }
  [[nodiscard]] bool is_generic() const noexcept { return !is_fp(); }
  [[nodiscard]] FpElem fp() const;
  [[nodiscard]] GenericToken token() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Parameter&, const Parameter&) = default;

 private:
  std::variant<FpElem, GenericToken> value_;
};

struct SortedParams {
  std::vector<CanonicalLift> fp_sorted;  // weakly decreasing
  std::size_t generic_count = 0;
};

/// Splits parameters into lifted F_p values (sorted descending) and a count
/// of generic ones. Throws InvalidInput if an F_p parameter has a modulus
/// other than `p`.
[[nodiscard]] SortedParams sort_params(Prime p, std::span<const Parameter> params);

/// Binomial coefficient for small arguments; 0 when k > n.
[[nodiscard]] std::uint64_t binomial(unsigned n, unsigned k) noexcept;

}  // namespace dormant
