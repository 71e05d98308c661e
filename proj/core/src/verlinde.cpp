#include "dormant/verlinde.hpp"

#include <algorithm>
#include <thread>

#include "dormant/cyclo.hpp"
#include "dormant/error.hpp"

namespace dormant {

bool verlinde_applies(int p, int n, int g) noexcept {
  return g >= 2 && n >= 1 && n < p && p > n * std::max(g - 1, 2);
}

namespace {

// Elements of the group ring Z[x]/(x^p - 1); the cyclotomic field is its
// quotient by 1 + x + ... + x^{p-1}. Products of the scaled inverses below
// stay integral here, which keeps the inner loop free of rationals.
using GroupRing = std::vector<Integer>;

GroupRing ring_mul(const GroupRing& a, const GroupRing& b) {
  const std::size_t p = a.size();
  GroupRing out(p);
  for (std::size_t i = 0; i < p; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < p; ++j) {
      if (b[j] == 0) continue;
      const std::size_t k = i + j < p ? i + j : i + j - p;
      out[k] += a[i] * b[j];
    }
  }
  return out;
}

GroupRing ring_rotate(const GroupRing& a, long long k) {
  const auto p = static_cast<long long>(a.size());
  const auto shift = static_cast<std::size_t>(((k % p) + p) % p);
  GroupRing out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[(i + shift) % a.size()] = a[i];
  return out;
}

struct Kernel {
  int p;
  int n;
  int g;
  // p / (zeta^d - 1) for d = 0..p-1 (entry 0 unused), as group-ring elements.
  std::vector<GroupRing> scaled_inverse;

  // p^{n(n-1)(g-1)} times the summand for the roots zeta^{a_1}, ..., zeta^{a_n}.
  GroupRing term(const std::vector<int>& a) const {
    const long long h = g - 1;
    long long sum = 0;
    for (int x : a) sum += x;
    // (prod zeta_i)^{(n-1)(g-1)} / prod_{i != j} (zeta_i - zeta_j)^{g-1}, where
    // zeta_i - zeta_j = zeta^{a_j} (zeta^{a_i - a_j} - 1).
    long long shift = (n - 1) * h * sum;
    GroupRing acc(static_cast<std::size_t>(p));
    acc[0] = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (i == j) continue;
        shift -= h * a[j];
        const auto d = static_cast<std::size_t>(((a[i] - a[j]) % p + p) % p);
        for (long long e = 0; e < h; ++e) acc = ring_mul(acc, scaled_inverse[d]);
      }
    }
    return ring_rotate(acc, shift);
  }
};

Kernel make_kernel(Prime p, int n, int g) {
  Kernel k{p.value(), n, g, {}};
  k.scaled_inverse.resize(static_cast<std::size_t>(k.p));
  for (int d = 1; d < k.p; ++d) {
    const CycloElem inv = (CycloElem::zeta_pow(p, d) - CycloElem::one(p)).inverse();
    GroupRing r(static_cast<std::size_t>(k.p));
    for (std::size_t i = 0; i < inv.coeffs().size(); ++i) {
      const Rational scaled = inv.coeffs()[i] * k.p;
      if (denominator(scaled) != 1) throw std::logic_error("p / (zeta^d - 1) is not integral");
      r[i] = numerator(scaled);
    }
    k.scaled_inverse[static_cast<std::size_t>(d)] = std::move(r);
  }
  return k;
}

// All root-index tuples to sum over: sorted subsets, or ordered tuples.
std::vector<std::vector<int>> index_tuples(int p, int n, bool ordered) {
  std::vector<std::vector<int>> out;
  std::vector<bool> pick(static_cast<std::size_t>(p), false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    std::vector<int> subset;
    for (int i = 0; i < p; ++i) {
      if (pick[static_cast<std::size_t>(i)]) subset.push_back(i);
    }
    if (ordered) {
      do {
        out.push_back(subset);
      } while (std::next_permutation(subset.begin(), subset.end()));
    } else {
      out.push_back(std::move(subset));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

Rational rational_pow(const Rational& base, long long e) {
  Rational r = 1;
  const Rational b = e >= 0 ? base : 1 / base;
  for (long long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return r;
}

}  // namespace

Integer verlinde_count(Prime prime, int n, int g, VerlindeOptions options) {
  const int p = prime.value();
  if (g < 2 || n < 1 || n >= p) {
    throw InvalidInput("closed form needs g >= 2 and 1 <= n < p");
  }
  if (options.require_hypothesis && !verlinde_applies(p, n, g)) {
    throw InvalidInput("closed form needs g >= 2 and p > n * max(g - 1, 2) (p = " + std::to_string(p) +
                       ", n = " + std::to_string(n) + ", g = " + std::to_string(g) + ")");
  }
  const bool ordered = options.summation == VerlindeSummation::OrderedTuples;
  const Kernel kernel = make_kernel(prime, n, g);
  const auto tuples = index_tuples(p, n, ordered);

  const unsigned workers =
      std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(tuples.size())));
  std::vector<GroupRing> partial(workers, GroupRing(static_cast<std::size_t>(p)));
  const std::size_t chunk = (tuples.size() + workers - 1) / workers;
  const auto work = [&](unsigned w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(tuples.size(), begin + chunk);
    for (std::size_t t = begin; t < end; ++t) {
      const GroupRing term = kernel.term(tuples[t]);
      for (std::size_t i = 0; i < term.size(); ++i) partial[w][i] += term[i];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  std::vector<Rational> total(static_cast<std::size_t>(p));
  for (const GroupRing& part : partial) {
    for (std::size_t i = 0; i < part.size(); ++i) total[i] += Rational(part[i]);
  }
  const CycloElem sum = CycloElem::from_coeffs(prime, total);
  if (!sum.is_rational()) throw std::logic_error("closed-form sum is not rational: " + sum.to_string());

  const long long scale = static_cast<long long>(n) * (n - 1) * (g - 1);
  const long long lead = static_cast<long long>(n - 1) * (g - 1) - 1;
  Rational value = sum.rational_value() * rational_pow(Rational(p), lead - scale);
  if (ordered) {
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    value /= Rational(fact);
  }
  if (denominator(value) != 1 || value < 0) {
    throw std::logic_error("closed-form count is not a nonnegative integer");
  }
  return numerator(value);
}

Rational poly_n3_g2(const Integer& p) {
  const Rational x(p);
  const Rational x2 = x * x;
  const Rational x4 = x2 * x2;
  const Rational x6 = x4 * x2;
  const Rational x8 = x4 * x4;
  return x8 / 181440 + x6 / 4320 - Rational(11) * x4 / 8640 + Rational(47) * x2 / 45360;
}

}  // namespace dormant
