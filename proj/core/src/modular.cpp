#include "dormant/modular.hpp"

#include <algorithm>
#include <atomic>

#include "dormant/error.hpp"

namespace dormant {

bool is_odd_prime(long long n) noexcept {
  if (n < 3 || n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(int p) : value_(p) {
  if (!is_odd_prime(p)) {
    throw InvalidInput("modulus " + std::to_string(p) + " is not an odd prime");
  }
}

FpElem::FpElem(Prime p, long long value) noexcept : p_(p.value()) {
  long long r = value % p_;
  if (r < 0) r += p_;
  value_ = static_cast<int>(r);
}

namespace {

void require_same_modulus(int a, int b) {
  if (a != b) {
    throw InvalidInput("mixed moduli " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

FpElem FpElem::pow(unsigned long long e) const noexcept {
  long long base = value_;
  long long acc = 1;
  while (e > 0) {
    if (e & 1ULL) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return FpElem(modulus(), acc);
}

FpElem FpElem::inverse() const {
  if (value_ == 0) throw InvalidInput("inverse of zero in F_" + std::to_string(p_));
  return pow(static_cast<unsigned long long>(p_ - 2));
}

FpElem FpElem::operator-() const noexcept { return FpElem(modulus(), -value_); }

FpElem& FpElem::operator+=(FpElem rhs) {
  require_same_modulus(p_, rhs.p_);
  value_ += rhs.value_;
  if (value_ >= p_) value_ -= p_;
  return *this;
}

FpElem& FpElem::operator-=(FpElem rhs) {
  require_same_modulus(p_, rhs.p_);
  value_ -= rhs.value_;
  if (value_ < 0) value_ += p_;
  return *this;
}

FpElem& FpElem::operator*=(FpElem rhs) {
  require_same_modulus(p_, rhs.p_);
  value_ = static_cast<int>(static_cast<long long>(value_) * rhs.value_ % p_);
  return *this;
}

CanonicalLift lift(FpElem x) noexcept {
  return CanonicalLift{x.value() == 0 ? x.modulus().value() : x.value()};
}

Parameter Parameter::generic() {
  static std::atomic<std::uint64_t> next{1};
  return Parameter(GenericToken{next.fetch_add(1, std::memory_order_relaxed)});
}

FpElem Parameter::fp() const {
  if (const auto* x = std::get_if<FpElem>(&value_)) return *x;
  throw UnsupportedInput("parameter is generic, not an element of F_p");
}

GenericToken Parameter::token() const {
  if (const auto* t = std::get_if<GenericToken>(&value_)) return *t;
  throw UnsupportedInput("parameter is an element of F_p, not generic");
}

std::string Parameter::to_string() const {
  if (is_fp()) return std::to_string(fp().value());
  return "generic#" + std::to_string(token().id);
}

SortedParams sort_params(Prime p, std::span<const Parameter> params) {
  SortedParams out;
  for (const Parameter& param : params) {
    if (param.is_generic()) {
      ++out.generic_count;
      continue;
    }
    const FpElem x = param.fp();
    if (x.modulus() != p) {
      throw InvalidInput("parameter over F_" + std::to_string(x.modulus().value()) +
                         " used with modulus " + std::to_string(p.value()));
    }
    out.fp_sorted.push_back(lift(x));
  }
  std::stable_sort(out.fp_sorted.begin(), out.fp_sorted.end(), std::greater<>{});
  return out;
}

std::uint64_t binomial(unsigned n, unsigned k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace dormant
