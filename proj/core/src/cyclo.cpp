#include "dormant/cyclo.hpp"

#include <sstream>
#include <utility>

#include "dormant/error.hpp"

namespace dormant {

namespace {

using Poly = std::vector<Rational>;  // coefficients, lowest degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Folds exponents mod p (zeta^p = 1), then eliminates zeta^{p-1}.
std::vector<Rational> reduce(int p, std::span<const Rational> coeffs) {
  std::vector<Rational> ring(static_cast<std::size_t>(p));
  for (std::size_t k = 0; k < coeffs.size(); ++k) ring[k % static_cast<std::size_t>(p)] += coeffs[k];
  const Rational top = ring.back();
  ring.pop_back();
  if (top != 0) {
    for (auto& c : ring) c -= top;
  }
  return ring;
}

// Quotient and remainder of a / b over Q; b nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

CycloElem CycloElem::zero(Prime p) {
  return CycloElem(p, std::vector<Rational>(static_cast<std::size_t>(p.value() - 1)));
}

CycloElem CycloElem::one(Prime p) { return rational(p, 1); }

CycloElem CycloElem::rational(Prime p, Rational q) {
  CycloElem e = zero(p);
  e.coeffs_[0] = std::move(q);
  return e;
}

CycloElem CycloElem::zeta_pow(Prime p, long long k) {
  const long long q = p.value();
  const auto e = static_cast<std::size_t>(((k % q) + q) % q);
  std::vector<Rational> c(static_cast<std::size_t>(q));
  c[e] = 1;
  return CycloElem(p, reduce(p.value(), c));
}

CycloElem CycloElem::from_coeffs(Prime p, std::span<const Rational> coeffs) {
  return CycloElem(p, reduce(p.value(), coeffs));
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational CycloElem::rational_value() const {
  if (!is_rational()) throw InvalidInput("cyclotomic element " + to_string() + " is not rational");
  return coeffs_[0];
}

void CycloElem::require_same_field(const CycloElem& other) const {
  if (p_ != other.p_) throw InvalidInput("cyclotomic elements from different fields");
}

CycloElem& CycloElem::operator+=(const CycloElem& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycloElem CycloElem::operator-() const {
  CycloElem out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  a.require_same_field(b);
  return CycloElem(a.p_, reduce(a.p_.value(), mul(a.coeffs_, b.coeffs_)));
}

CycloElem CycloElem::inverse() const {
  Poly a = coeffs_;
  trim(a);
  if (a.empty()) throw InvalidInput("inverse of zero in Q(zeta_" + std::to_string(p_.value()) + ")");

  Poly r0(static_cast<std::size_t>(p_.value()), Rational(1));  // Phi_p
  Poly r1 = std::move(a);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // Phi_p is irreducible, so the gcd r0 is a nonzero constant.
  if (r0.size() != 1) throw std::logic_error("cyclotomic gcd is not a unit");
  const Rational c = r0[0];
  for (auto& x : s0) x /= c;
  return CycloElem(p_, reduce(p_.value(), s0));
}

CycloElem CycloElem::times_zeta_pow(long long k) const {
  const long long q = p_.value();
  const auto shift = static_cast<std::size_t>(((k % q) + q) % q);
  std::vector<Rational> ring(static_cast<std::size_t>(q));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) ring[(i + shift) % static_cast<std::size_t>(q)] = coeffs_[i];
  return CycloElem(p_, reduce(p_.value(), ring));
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (any) os << " + ";
    os << "(" << coeffs_[i] << ")";
    if (i > 0) os << "*z^" << i;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace dormant
