#pragma once

#include <span>
#include <string>
#include <vector>

#include "dormant/modular.hpp"
#include "dormant/numeric.hpp"

namespace dormant {

/// An element of Q(zeta_p) in the power basis 1, zeta, ..., zeta^{p-2}.
///
/// All constructors and operations keep the reduced form, using
/// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
class CycloElem {
 public:
  static CycloElem zero(Prime p);
  static CycloElem one(Prime p);
  static CycloElem rational(Prime p, Rational q);
  /// zeta^k for any integer k.
  static CycloElem zeta_pow(Prime p, long long k);
  /// sum_k coeffs[k] zeta^k for a coefficient list of any length.
  static CycloElem from_coeffs(Prime p, std::span<const Rational> coeffs);

  [[nodiscard]] Prime p() const noexcept { return p_; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_rational() const;
  /// Throws InvalidInput unless is_rational().
  [[nodiscard]] Rational rational_value() const;

  CycloElem& operator+=(const CycloElem& rhs);
  CycloElem& operator-=(const CycloElem& rhs);
  CycloElem operator-() const;
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);

  /// Multiplicative inverse via the extended Euclidean algorithm against the
  /// p-th cyclotomic polynomial. Throws InvalidInput on zero.
  [[nodiscard]] CycloElem inverse() const;

  /// Multiplication by zeta^k (a rotation in the group ring).
  [[nodiscard]] CycloElem times_zeta_pow(long long k) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CycloElem&, const CycloElem&) = default;

 private:
  CycloElem(Prime p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {}
  void require_same_field(const CycloElem& other) const;

  Prime p_;
  std::vector<Rational> coeffs_;  // length p - 1
};

inline CycloElem add(const CycloElem& a, const CycloElem& b) { return a + b; }
inline CycloElem mul(const CycloElem& a, const CycloElem& b) { return a * b; }
inline CycloElem inv(const CycloElem& a) { return a.inverse(); }

}  // namespace dormant
