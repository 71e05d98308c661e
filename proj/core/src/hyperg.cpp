#include "dormant/hyperg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "dormant/error.hpp"

namespace dormant {

HGOperator::HGOperator(Prime p, std::vector<Parameter> alpha, std::vector<Parameter> beta)
    : p_(p), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.empty() || beta_.empty()) {
    throw InvalidInput("hypergeometric operator needs n >= 1 and m >= 1");
  }
  alpha_sorted_ = sort_params(p_, alpha_);
  beta_sorted_ = sort_params(p_, beta_);
}

HGOperator gauss(Prime p, Parameter a, Parameter b, Parameter c) {
  return HGOperator(p, {a, b}, {c});
}

std::vector<std::size_t> t_set(const HGOperator& op) {
  const auto& a = op.alpha_lifts();
  const auto& b = op.beta_lifts();
  const std::size_t blocks = b.size() + 1;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < blocks; ++j) {
    const int upper = j == 0 ? op.p().value() + 1 : b[j - 1].value;
    const int lower = j == b.size() ? 1 : b[j].value;
    const bool hit = std::any_of(a.begin(), a.end(), [&](CanonicalLift x) {
      return upper > x.value && x.value >= lower;
    });
    if (hit) out.push_back(j);
  }
  return out;
}

std::size_t kernel_rank(const HGOperator& op) { return t_set(op).size(); }

bool has_full_solutions(const HGOperator& op) { return kernel_rank(op) == op.n(); }

bool interleaving_criterion(const HGOperator& op) {
  if (!op.all_fp() || op.m() + 1 != op.n()) return false;
  const auto& a = op.alpha_lifts();
  const auto& b = op.beta_lifts();
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!(a[j].value >= b[j].value && b[j].value > a[j + 1].value)) return false;
  }
  return true;
}

namespace {

void require_fp(const HGOperator& op, const char* what) {
  if (!op.all_fp()) {
    throw UnsupportedInput(std::string(what) + " requires all parameters in F_p");
  }
}

// prod_j (x + params_j) in F_p.
FpElem shifted_product(Prime p, long long x, std::span<const Parameter> params) {
  FpElem acc(p, 1);
  for (const Parameter& param : params) acc *= FpElem(p, x) + param.fp();
  return acc;
}

// Row-reduces `rows` in place over F_p; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<FpVector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const FpElem inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FpElem f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FpVector BidiagMatrix::multiply(std::span<const FpElem> v) const {
  if (v.size() != diag.size()) throw InvalidInput("vector length must equal p");
  FpVector out;
  out.reserve(diag.size());
  for (std::size_t l = 0; l < diag.size(); ++l) {
    FpElem acc = diag[l] * v[l];
    if (l + 1 < diag.size()) acc += superdiag[l] * v[l + 1];
    out.push_back(acc);
  }
  return out;
}

std::vector<FpVector> BidiagMatrix::dense() const {
  const std::size_t size = diag.size();
  std::vector<FpVector> rows(size, FpVector(size, FpElem(p, 0)));
  for (std::size_t l = 0; l < size; ++l) {
    rows[l][l] = diag[l];
    if (l + 1 < size) rows[l][l + 1] = superdiag[l];
  }
  return rows;
}

BidiagMatrix matrix(const HGOperator& op) {
  require_fp(op, "matrix");
  const Prime p = op.p();
  BidiagMatrix r{p, {}, {}};
  for (int l = 0; l < p.value(); ++l) {
    r.diag.push_back(-shifted_product(p, l, op.alpha()));
    if (l + 1 < p.value()) r.superdiag.push_back(FpElem(p, l + 1) * shifted_product(p, l, op.beta()));
  }
  return r;
}

std::size_t oracle_rank(const HGOperator& op) {
  auto rows = matrix(op).dense();
  return rows.size() - row_reduce(rows).size();
}

RootBasis root_basis(const HGOperator& op) {
  auto rows = matrix(op).dense();
  const std::size_t size = rows.size();
  const auto pivots = row_reduce(rows);
  const Prime p = op.p();

  std::vector<bool> is_pivot(size, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  RootBasis basis;
  for (std::size_t free = 0; free < size; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(size, FpElem(p, 0));
    v[free] = FpElem(p, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

FpVector apply(const HGOperator& op, std::span<const FpElem> poly) {
  require_fp(op, "apply");
  const Prime p = op.p();
  const auto size = static_cast<std::size_t>(p.value());
  if (poly.size() != size) throw InvalidInput("polynomial must have exactly p coefficients");

  FpVector out(size, FpElem(p, 0));
  for (std::size_t s = 0; s < size; ++s) {
    if (poly[s].is_zero()) continue;
    const auto si = static_cast<long long>(s);
    if (s > 0) {
      out[s - 1] += FpElem(p, si) * shifted_product(p, si - 1, op.beta()) * poly[s];
    }
    out[s] -= shifted_product(p, si, op.alpha()) * poly[s];
  }
  return out;
}

bool pcurvature_sum_test(std::span<const Parameter> alpha, std::span<const Parameter> beta) noexcept {
  const auto fp = [](const Parameter& x) { return x.is_fp(); };
  return std::all_of(alpha.begin(), alpha.end(), fp) && std::all_of(beta.begin(), beta.end(), fp);
}

}  // namespace dormant
