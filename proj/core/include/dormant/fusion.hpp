#pragma once

// Genus-0 three-point counts N(rho) for dormant PGL_n-opers, the Frobenius
// algebra they define over Q with basis Xi_{p,n}, and the factorization
// engine computing N_{p,n,rho,g,r} for arbitrary genus and marked points.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dormant/error.hpp"
#include "dormant/numeric.hpp"
#include "dormant/radii.hpp"

namespace dormant {

// ---------------------------------------------------------------------------
// Base values N_{p,n,rho,0,3}

/// Which rule produced a base value.
enum class BaseRule {
  TopRank,         // n = p - 1: the moduli map is an isomorphism
  Hypergeometric,  // a component is of hypergeometric type: 1 on Hyp, else 0
  Duality,         // resolved at (p, p - n) through the complement duality
  Override,        // explicit data entry
  Unknown,
};

[[nodiscard]] std::string_view to_string(BaseRule rule) noexcept;

struct BaseValue {
  std::optional<Integer> value;  // nullopt iff rule == Unknown
  BaseRule rule = BaseRule::Unknown;
  std::string source;
};

/// Raised when a computation needs a base value no rule can supply.
class UnresolvedBase : public Error {
 public:
  UnresolvedBase(int p, int n, RadiiTriple triple);

  [[nodiscard]] int p() const noexcept { return p_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const RadiiTriple& triple() const noexcept { return triple_; }

 private:
  int p_;
  int n_;
  RadiiTriple triple_;
};

struct OverrideEntry {
  Integer value;
  std::string source;
};

/// Explicit base values, stored S_3-closed.
class OverrideTable {
 public:
  /// The values shipped with the library.
  static const OverrideTable& builtin();

  /// Parses a JSON list of {"p", "n", "triple", "N", "source"} records.
  /// Throws InvalidInput on malformed data or conflicting entries.
  static OverrideTable from_json(std::string_view text);

  /// Adds the entry for every permutation of `triple`.
  void add(const RadiiTriple& triple, Integer value, std::string source);
  void merge(const OverrideTable& other);

  [[nodiscard]] const OverrideEntry* find(const RadiiTriple& triple) const;
  [[nodiscard]] const std::map<RadiiTriple, OverrideEntry>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<RadiiTriple, OverrideEntry> entries_;
};

/// Resolves base values for one (p, n), caching the Hyp sets it needs.
///
/// Resolution order: (1) n = p - 1; (2) a hypergeometric-type component
/// decides by Hyp membership; (3) the complement duality, when the dual
/// triple resolves by (1), (2) or (4); (4) overrides; otherwise Unknown.
class BaseResolver {
 public:
  BaseResolver(Prime p, int n, const OverrideTable& overrides = OverrideTable::builtin());

  [[nodiscard]] Prime p() const noexcept { return p_; }
  [[nodiscard]] int n() const noexcept { return n_; }

  /// Throws InvalidInput when a component is not in Xi_{p,n}.
  [[nodiscard]] BaseValue resolve(const RadiiTriple& triple) const;

 private:
  BaseValue resolve_at(int n, const RadiiTriple& triple, bool allow_duality) const;
  const std::set<RadiiTriple>& hyp(int n) const;

  Prime p_;
  int n_;
  OverrideTable overrides_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::set<RadiiTriple>> hyp_cache_;
};

[[nodiscard]] BaseValue base_n(Prime p, int n, const RadiiTriple& triple,
                               const OverrideTable& overrides = OverrideTable::builtin());

/// All base values on Xi_{p,n}^3.
class BaseTable {
 public:
  /// Resolves every triple; `threads` workers share the work, the result
  /// does not depend on the thread count. Requires 1 < n < p.
  static BaseTable build(Prime p, int n, const OverrideTable& overrides = OverrideTable::builtin(),
                         unsigned threads = 1);

  [[nodiscard]] Prime p() const noexcept { return p_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<RadiusClass>& basis() const noexcept { return basis_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }

  /// Throws InvalidInput when `c` is not in Xi_{p,n}.
  [[nodiscard]] std::size_t index_of(const RadiusClass& c) const;
  [[nodiscard]] std::size_t dual_index(std::size_t i) const { return dual_.at(i); }
  /// Index of [[0, 1, ..., n-1]].
  [[nodiscard]] std::size_t unit_index() const noexcept { return unit_; }

  [[nodiscard]] const BaseValue& at(std::size_t i, std::size_t j, std::size_t k) const;
  [[nodiscard]] const BaseValue& at(const RadiiTriple& t) const;
  [[nodiscard]] RadiiTriple triple(std::size_t i, std::size_t j, std::size_t k) const;

  /// Triples with no value, in basis order.
  [[nodiscard]] std::vector<RadiiTriple> unknown_triples() const;
  [[nodiscard]] bool resolved() const { return unknown_triples().empty(); }

  /// Triples with a positive value (the set O_{p,n}).
  [[nodiscard]] std::set<RadiiTriple> support() const;

  /// A copy with one entry replaced (only that ordering of the triple).
  [[nodiscard]] BaseTable with_value(const RadiiTriple& t, Integer value, std::string source) const;

 private:
  BaseTable(Prime p, int n, std::vector<RadiusClass> basis);
  [[nodiscard]] std::size_t flat(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (i * basis_.size() + j) * basis_.size() + k;
  }

  Prime p_;
  int n_;
  std::vector<RadiusClass> basis_;
  std::map<RadiusClass, std::size_t> index_;
  std::vector<std::size_t> dual_;
  std::size_t unit_ = 0;
  std::vector<BaseValue> values_;
};

// ---------------------------------------------------------------------------
// Frobenius algebra

class FusionAlgebra {
 public:
  using Vector = std::vector<Rational>;

  /// Throws UnresolvedBase naming the first unknown triple in basis order.
  explicit FusionAlgebra(const BaseTable& table);

  [[nodiscard]] Prime p() const noexcept { return p_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] const std::vector<RadiusClass>& basis() const noexcept { return basis_; }
  [[nodiscard]] std::size_t dual_index(std::size_t i) const { return dual_.at(i); }
  [[nodiscard]] std::size_t unit_index() const noexcept { return unit_; }

  /// N(e_i, e_j, e_k) as read from the table.
  [[nodiscard]] const Rational& base(std::size_t i, std::size_t j, std::size_t k) const;
  /// Coefficient of e_k in e_i * e_j, i.e. N(e_i, e_j, e_k^v).
  [[nodiscard]] const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  [[nodiscard]] Vector basis_vector(std::size_t i) const;
  [[nodiscard]] Vector unit() const { return basis_vector(unit_); }
  [[nodiscard]] Vector multiply(const Vector& a, const Vector& b) const;
  /// Bilinear form with pairing(e_i, e_j) = 1 iff e_j = e_i^v.
  [[nodiscard]] Rational pairing(const Vector& a, const Vector& b) const;
  /// The trace form: pairing with the unit.
  [[nodiscard]] Rational counit(const Vector& a) const;
  /// sum_i e_i * e_i^v.
  [[nodiscard]] Vector handle_element() const;

 private:
  Prime p_;
  int n_;
  std::vector<RadiusClass> basis_;
  std::vector<std::size_t> dual_;
  std::size_t unit_;
  std::vector<Rational> base_;
  std::vector<Rational> structure_;
};

[[nodiscard]] FusionAlgebra algebra(Prime p, int n, const BaseTable& table);

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::string witness;  // first offending basis data when !passed
};

struct AxiomReport {
  int p = 0;
  int n = 0;
  std::vector<AxiomResult> results;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const AxiomResult* find(std::string_view name) const;
};

/// Checks base-table resolution and S_3 symmetry, then commutativity,
/// associativity, the unit law, Frobenius compatibility and
/// nondegeneracy of the pairing on the algebra built from `table`.
[[nodiscard]] AxiomReport check_axioms(const BaseTable& table);
[[nodiscard]] AxiomReport check_axioms(Prime p, int n);

// ---------------------------------------------------------------------------
// Counting by factorization

/// Connected surface of genus g with r incoming and s outgoing circles.
struct Cobordism {
  int genus = 0;
  int in = 0;
  int out = 0;
};

enum class ReductionOrder {
  GenusFirst,  // remove handles, then split genus-0 surfaces into pants
  SplitFirst,  // split pants off first, then peel one-holed tori
};

/// Computes N_{p,n,rho,g,r} from a base table by repeated gluing. Results
/// are memoized on (g, sorted basis indices); the cache is shared and safe
/// for concurrent calls.
class CountEngine {
 public:
  explicit CountEngine(std::shared_ptr<const BaseTable> table,
                       ReductionOrder order = ReductionOrder::GenusFirst);

  [[nodiscard]] const BaseTable& table() const noexcept { return *table_; }
  [[nodiscard]] ReductionOrder order() const noexcept { return order_; }

  /// N for 2g - 2 + r > 0, plus the closed torus (g, r) = (1, 0). Throws
  /// InvalidInput for other (g, r) or classes outside Xi_{p,n}, and
  /// UnresolvedBase when a needed base value is unknown.
  [[nodiscard]] Integer count(int g, std::span<const RadiusClass> radii) const;

  /// Same as count, on basis indices, extended to every (g, r) by the
  /// cap, cup and cylinder values of the field theory.
  [[nodiscard]] Integer amplitude(int g, std::span<const std::size_t> indices) const;

  [[nodiscard]] std::size_t cache_size() const;
  void clear_cache();

 private:
  using Key = std::pair<int, std::vector<std::size_t>>;
  [[nodiscard]] Integer compute(int g, const std::vector<std::size_t>& sorted) const;
  [[nodiscard]] const Integer& base(std::size_t i, std::size_t j, std::size_t k) const;

  std::shared_ptr<const BaseTable> table_;
  ReductionOrder order_;
  mutable std::mutex mutex_;
  mutable std::map<Key, Integer> memo_;
};

/// One-shot N_{p,n,rho,g,r} with the built-in overrides.
[[nodiscard]] Integer count(Prime p, int n, int g, std::span<const RadiusClass> radii,
                            const OverrideTable& overrides = OverrideTable::builtin());

/// sum over rho in Xi^3 of N(rho) N(rho^v): the closed genus-2 count from two
/// pairs of pants glued along three circles.
[[nodiscard]] Integer theta_sum(const BaseTable& table);

/// An element of (Q^Xi)^{(x) order}, row-major in basis indices.
struct Tensor {
  std::size_t dim = 0;
  std::size_t order = 0;
  std::vector<Rational> data;

  static Tensor scalar(Rational value);
  static Tensor zero(std::size_t dim, std::size_t order);
  static Tensor basis(std::size_t dim, std::span<const std::size_t> indices);

  [[nodiscard]] Rational& at(std::span<const std::size_t> indices);
  [[nodiscard]] const Rational& at(std::span<const std::size_t> indices) const;

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

/// The linear map Z(M_g^{r=>s}) applied to `input` (order r). Output
/// coefficient of (x)_j lambda_j is sum over inputs of
/// N((rho_i)_i, (lambda_j^v)_j, g, r + s).
[[nodiscard]] Tensor evaluate(const CountEngine& engine, const Cobordism& cob, const Tensor& input);

}  // namespace dormant
