#include <algorithm>
#include <thread>
#include <utility>

#include "dormant/fusion.hpp"
#include "dormant/json.hpp"

namespace dormant {

namespace data {
std::string_view builtin_overrides_json();
}

std::string_view to_string(BaseRule rule) noexcept {
  switch (rule) {
    case BaseRule::TopRank: return "top-rank";
    case BaseRule::Hypergeometric: return "hypergeometric";
    case BaseRule::Duality: return "duality";
    case BaseRule::Override: return "override";
    case BaseRule::Unknown: return "unknown";
  }
  return "unknown";
}

UnresolvedBase::UnresolvedBase(int p, int n, RadiiTriple triple)
    : Error("no rule resolves N_{p=" + std::to_string(p) + ",n=" + std::to_string(n) + "} at " +
            to_string(triple)),
      p_(p),
      n_(n),
      triple_(std::move(triple)) {}

// --- overrides -------------------------------------------------------------

const OverrideTable& OverrideTable::builtin() {
  static const OverrideTable table = from_json(data::builtin_overrides_json());
  return table;
}

OverrideTable OverrideTable::from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("override file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InvalidInput("override file must be a JSON list of records");
  OverrideTable out;
  for (const Json& rec : doc) {
    try {
      const int p = rec.at("p").get<int>();
      const int n = rec.at("n").get<int>();
      RadiiTriple t = triple_from_json(rec.at("triple"));
      if (t[0].p().value() != p || static_cast<int>(t[0].n()) != n) {
        throw InvalidInput("override record triple does not match its p and n");
      }
      Integer value = integer_from_json(rec.at("N"));
      if (value < 0) throw InvalidInput("override values must be nonnegative");
      out.add(t, std::move(value), rec.value("source", std::string{}));
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("malformed override record: ") + e.what());
    }
  }
  return out;
}

void OverrideTable::add(const RadiiTriple& triple, Integer value, std::string source) {
  for (const RadiiTriple& t : permutations(triple)) {
    auto [it, inserted] = entries_.try_emplace(t, OverrideEntry{value, source});
    if (!inserted && it->second.value != value) {
      throw InvalidInput("conflicting override values at " + to_string(t));
    }
  }
}

void OverrideTable::merge(const OverrideTable& other) {
  for (const auto& [t, e] : other.entries_) add(t, e.value, e.source);
}

const OverrideEntry* OverrideTable::find(const RadiiTriple& triple) const {
  auto it = entries_.find(triple);
  return it == entries_.end() ? nullptr : &it->second;
}

// --- resolver --------------------------------------------------------------

namespace {

void require_fusion_range(Prime p, int n) {
  if (n <= 1 || n >= p.value()) {
    throw InvalidInput("base values need 1 < n < p (p = " + std::to_string(p.value()) +
                       ", n = " + std::to_string(n) + ")");
  }
}

void require_in_xi(Prime p, int n, const RadiiTriple& t) {
  for (const RadiusClass& c : t) {
    if (c.p() != p || static_cast<int>(c.n()) != n) {
      throw InvalidInput("class " + c.to_string() + " is not in Xi_{" + std::to_string(p.value()) +
                         "," + std::to_string(n) + "}");
    }
  }
}

}  // namespace

BaseResolver::BaseResolver(Prime p, int n, const OverrideTable& overrides)
    : p_(p), n_(n), overrides_(overrides) {
  require_fusion_range(p, n);
}

const std::set<RadiiTriple>& BaseResolver::hyp(int n) const {
  std::lock_guard lock(mutex_);
  auto it = hyp_cache_.find(n);
  if (it == hyp_cache_.end()) it = hyp_cache_.emplace(n, hyp_set(p_, n)).first;
  return it->second;
}

BaseValue BaseResolver::resolve(const RadiiTriple& triple) const {
  require_in_xi(p_, n_, triple);
  return resolve_at(n_, triple, true);
}

BaseValue BaseResolver::resolve_at(int n, const RadiiTriple& t, bool allow_duality) const {
  const int q = p_.value();
  if (n == q - 1) {
    // Xi_{p,p-1} is the single class [[0, ..., p-1]].
    return {Integer(1), BaseRule::TopRank, "n = p - 1: unique oper for every stable curve"};
  }
  if (std::any_of(t.begin(), t.end(), [](const RadiusClass& c) { return is_hyp_type(c); })) {
    const bool in = hyp(n).count(t) > 0;
    return {Integer(in ? 1 : 0), BaseRule::Hypergeometric,
            in ? "hypergeometric type, in Hyp: rigid" : "hypergeometric type, not in Hyp"};
  }
  if (allow_duality) {
    BaseValue dual = resolve_at(q - n, comp_dual(t), false);
    if (dual.value) {
      return {dual.value, BaseRule::Duality,
              "dual at n = " + std::to_string(q - n) + ", " + std::string(to_string(dual.rule)) + ": " +
                  dual.source};
    }
  }
  if (const OverrideEntry* e = overrides_.find(t)) {
    return {e->value, BaseRule::Override, e->source};
  }
  return {std::nullopt, BaseRule::Unknown, "no rule applies"};
}

BaseValue base_n(Prime p, int n, const RadiiTriple& triple, const OverrideTable& overrides) {
  return BaseResolver(p, n, overrides).resolve(triple);
}

// --- table -----------------------------------------------------------------

BaseTable::BaseTable(Prime p, int n, std::vector<RadiusClass> basis)
    : p_(p), n_(n), basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  for (const RadiusClass& c : basis_) dual_.push_back(index_.at(neg_dual(c)));
  std::vector<int> first(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) first[static_cast<std::size_t>(i)] = i;
  unit_ = index_.at(RadiusClass::of(p, first));
}

BaseTable BaseTable::build(Prime p, int n, const OverrideTable& overrides, unsigned threads) {
  require_fusion_range(p, n);
  BaseTable table(p, n, xi(p, n));
  const std::size_t d = table.dim();
  const std::size_t total = d * d * d;
  table.values_.resize(total);

  const BaseResolver resolver(p, n, overrides);
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t f = begin; f < end; ++f) {
      table.values_[f] = resolver.resolve(table.triple(f / (d * d), (f / d) % d, f % d));
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return table;
}

std::size_t BaseTable::index_of(const RadiusClass& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) {
    throw InvalidInput("class " + c.to_string() + " is not in Xi_{" + std::to_string(p_.value()) +
                       "," + std::to_string(n_) + "}");
  }
  return it->second;
}

const BaseValue& BaseTable::at(std::size_t i, std::size_t j, std::size_t k) const {
  return values_.at(flat(i, j, k));
}

const BaseValue& BaseTable::at(const RadiiTriple& t) const {
  return at(index_of(t[0]), index_of(t[1]), index_of(t[2]));
}

RadiiTriple BaseTable::triple(std::size_t i, std::size_t j, std::size_t k) const {
  return {basis_.at(i), basis_.at(j), basis_.at(k)};
}

std::vector<RadiiTriple> BaseTable::unknown_triples() const {
  std::vector<RadiiTriple> out;
  const std::size_t d = dim();
  for (std::size_t f = 0; f < values_.size(); ++f) {
    if (!values_[f].value) out.push_back(triple(f / (d * d), (f / d) % d, f % d));
  }
  return out;
}

std::set<RadiiTriple> BaseTable::support() const {
  std::set<RadiiTriple> out;
  const std::size_t d = dim();
  for (std::size_t f = 0; f < values_.size(); ++f) {
    if (values_[f].value && *values_[f].value > 0) out.insert(triple(f / (d * d), (f / d) % d, f % d));
  }
  return out;
}

BaseTable BaseTable::with_value(const RadiiTriple& t, Integer value, std::string source) const {
  BaseTable copy = *this;
  copy.values_.at(flat(index_of(t[0]), index_of(t[1]), index_of(t[2]))) =
      BaseValue{std::move(value), BaseRule::Override, std::move(source)};
  return copy;
}

}  // namespace dormant
