#include <algorithm>
#include <numeric>
#include <utility>

#include "dormant/fusion.hpp"

namespace dormant {

CountEngine::CountEngine(std::shared_ptr<const BaseTable> table, ReductionOrder order)
    : table_(std::move(table)), order_(order) {
  if (!table_) throw InvalidInput("count engine needs a base table");
}

const Integer& CountEngine::base(std::size_t i, std::size_t j, std::size_t k) const {
  const BaseValue& v = table_->at(i, j, k);
  if (!v.value) throw UnresolvedBase(table_->p().value(), table_->n(), table_->triple(i, j, k));
  return *v.value;
}

Integer CountEngine::count(int g, std::span<const RadiusClass> radii) const {
  const auto r = static_cast<int>(radii.size());
  if (g < 0) throw InvalidInput("genus must be nonnegative");
  if (!(2 * g - 2 + r > 0 || (g == 1 && r == 0))) {
    throw InvalidInput("unstable surface (g = " + std::to_string(g) + ", r = " + std::to_string(r) + ")");
  }
  std::vector<std::size_t> idx;
  idx.reserve(radii.size());
  for (const RadiusClass& c : radii) idx.push_back(table_->index_of(c));
  return amplitude(g, idx);
}

Integer CountEngine::amplitude(int g, std::span<const std::size_t> indices) const {
  if (g < 0) throw InvalidInput("genus must be nonnegative");
  for (std::size_t i : indices) {
    if (i >= table_->dim()) throw InvalidInput("basis index out of range");
  }
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  Key key{g, sorted};
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  Integer value = compute(g, sorted);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(value)).first->second;
}

Integer CountEngine::compute(int g, const std::vector<std::size_t>& idx) const {
  const BaseTable& t = *table_;
  const std::size_t d = t.dim();
  const std::size_t r = idx.size();

  // Caps, cylinder and torus.
  if (g == 0 && r == 0) return 1;
  if (g == 0 && r == 1) return idx[0] == t.unit_index() ? 1 : 0;
  if (g == 0 && r == 2) return idx[1] == t.dual_index(idx[0]) ? 1 : 0;
  if (g == 1 && r == 0) return Integer(d);
  if (g == 0 && r == 3) return base(idx[0], idx[1], idx[2]);

  // Glue a pair of pants carrying idx[0], idx[1] onto the rest.
  const auto split_pants = [&](int rest_genus) {
    Integer acc = 0;
    for (std::size_t x = 0; x < d; ++x) {
      const Integer& left = base(idx[0], idx[1], x);
      if (left == 0) continue;
      std::vector<std::size_t> rest(idx.begin() + 2, idx.end());
      rest.push_back(t.dual_index(x));
      acc += left * amplitude(rest_genus, rest);
    }
    return acc;
  };
  // Close a handle: sum over x of N(rho, x, x^v) one genus lower.
  const auto remove_handle = [&]() {
    Integer acc = 0;
    for (std::size_t x = 0; x < d; ++x) {
      std::vector<std::size_t> next = idx;
      next.push_back(x);
      next.push_back(t.dual_index(x));
      acc += amplitude(g - 1, next);
    }
    return acc;
  };
  // Split off a one-holed torus: sum over x of N(rho, x; g - 1) N(x^v; 1).
  const auto peel_torus = [&]() {
    Integer acc = 0;
    for (std::size_t x = 0; x < d; ++x) {
      const std::size_t xd = t.dual_index(x);
      const Integer torus = amplitude(1, std::span<const std::size_t>(&xd, 1));
      if (torus == 0) continue;
      std::vector<std::size_t> next = idx;
      next.push_back(x);
      acc += torus * amplitude(g - 1, next);
    }
    return acc;
  };

  if (order_ == ReductionOrder::GenusFirst) {
    if (g > 0) return remove_handle();
    return split_pants(0);
  }
  if (r >= 4) return split_pants(g);
  if (g >= 2 || (g == 1 && r >= 2)) return peel_torus();
  return remove_handle();
}

std::size_t CountEngine::cache_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

void CountEngine::clear_cache() {
  std::lock_guard lock(mutex_);
  memo_.clear();
}

Integer count(Prime p, int n, int g, std::span<const RadiusClass> radii, const OverrideTable& overrides) {
  auto table = std::make_shared<const BaseTable>(BaseTable::build(p, n, overrides));
  return CountEngine(std::move(table)).count(g, radii);
}

Integer theta_sum(const BaseTable& table) {
  const std::size_t d = table.dim();
  Integer acc = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const BaseValue& a = table.at(i, j, k);
        const BaseValue& b = table.at(table.dual_index(i), table.dual_index(j), table.dual_index(k));
        if (!a.value) throw UnresolvedBase(table.p().value(), table.n(), table.triple(i, j, k));
        if (!b.value) {
          throw UnresolvedBase(table.p().value(), table.n(),
                               table.triple(table.dual_index(i), table.dual_index(j), table.dual_index(k)));
        }
        acc += *a.value * *b.value;
      }
    }
  }
  return acc;
}

// --- tensors ---------------------------------------------------------------

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::size_t flat_index(std::size_t dim, std::span<const std::size_t> idx) {
  std::size_t f = 0;
  for (std::size_t i : idx) {
    if (i >= dim) throw InvalidInput("tensor index out of range");
    f = f * dim + i;
  }
  return f;
}

// Advances a multi-index in row-major order; false after the last one.
bool next_index(std::vector<std::size_t>& idx, std::size_t dim) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < dim) return true;
    idx[pos] = 0;
  }
  return false;
}

}  // namespace

Tensor Tensor::scalar(Rational value) { return Tensor{0, 0, {std::move(value)}}; }

Tensor Tensor::zero(std::size_t dim, std::size_t order) {
  return Tensor{dim, order, std::vector<Rational>(power(dim, order))};
}

Tensor Tensor::basis(std::size_t dim, std::span<const std::size_t> indices) {
  Tensor t = zero(dim, indices.size());
  t.at(indices) = 1;
  return t;
}

Rational& Tensor::at(std::span<const std::size_t> indices) {
  if (indices.size() != order) throw InvalidInput("tensor order mismatch");
  return data.at(flat_index(dim, indices));
}

const Rational& Tensor::at(std::span<const std::size_t> indices) const {
  if (indices.size() != order) throw InvalidInput("tensor order mismatch");
  return data.at(flat_index(dim, indices));
}

Tensor evaluate(const CountEngine& engine, const Cobordism& cob, const Tensor& input) {
  const BaseTable& t = engine.table();
  const std::size_t d = t.dim();
  if (cob.genus < 0 || cob.in < 0 || cob.out < 0) throw InvalidInput("cobordism data must be nonnegative");
  const auto r = static_cast<std::size_t>(cob.in);
  const auto s = static_cast<std::size_t>(cob.out);
  if (input.order != r || (r > 0 && input.dim != d)) {
    throw InvalidInput("input tensor does not match the in-boundary of the cobordism");
  }

  Tensor out = Tensor::zero(d, s);
  std::vector<std::size_t> in_idx(r, 0);
  do {
    const Rational& coeff = input.data[flat_index(d, in_idx)];
    if (coeff == 0) continue;
    std::vector<std::size_t> out_idx(s, 0);
    do {
      std::vector<std::size_t> legs = in_idx;
      for (std::size_t j : out_idx) legs.push_back(t.dual_index(j));
      const Integer amp = engine.amplitude(cob.genus, legs);
      if (amp != 0) out.at(out_idx) += coeff * Rational(amp);
    } while (next_index(out_idx, d));
  } while (next_index(in_idx, d));
  return out;
}

}  // namespace dormant
