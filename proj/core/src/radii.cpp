#include "dormant/radii.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "dormant/error.hpp"

namespace dormant {

namespace {

int mod(long long x, int p) {
  long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

bool CClass::distinct() const noexcept {
  return std::adjacent_find(elems_.begin(), elems_.end()) == elems_.end();
}

std::string CClass::to_string() const { return "[[" + join(elems_) + "]]"; }

CClass canonical(Prime p, std::span<const int> elems) {
  const int q = p.value();
  if (elems.empty() || static_cast<int>(elems.size()) >= q) {
    throw InvalidInput("class size must satisfy 1 <= n < p (n = " + std::to_string(elems.size()) +
                       ", p = " + std::to_string(q) + ")");
  }
  std::vector<int> best;
  std::vector<int> cur(elems.size());
  for (int shift = 0; shift < q; ++shift) {
    std::transform(elems.begin(), elems.end(), cur.begin(),
                   [&](int x) { return mod(static_cast<long long>(x) + shift, q); });
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  }
  return CClass(p, std::move(best));
}

RadiusClass::RadiusClass(CClass c) : cls_(std::move(c)) {
  if (!cls_.distinct()) {
    throw InvalidInput("radius class " + cls_.to_string() + " has repeated entries");
  }
}

RadiusClass RadiusClass::of(Prime p, std::span<const int> elems) {
  return RadiusClass(canonical(p, elems));
}

std::string to_string(const RadiiTriple& t) {
  return "(" + t[0].to_string() + ", " + t[1].to_string() + ", " + t[2].to_string() + ")";
}

std::vector<RadiusClass> xi(Prime p, int n) {
  const int q = p.value();
  if (n < 1 || n >= q) {
    throw InvalidInput("Xi_{p,n} needs 1 <= n < p (n = " + std::to_string(n) + ")");
  }
  // Every class has a representative containing 0, so subsets {0} + (n-1
  // elements of 1..p-1) cover Xi.
  std::set<RadiusClass> found;
  std::vector<bool> pick(static_cast<std::size_t>(q - 1), false);
  std::fill(pick.begin(), pick.begin() + (n - 1), true);
  std::vector<int> subset;
  do {
    subset.assign(1, 0);
    for (int i = 0; i < q - 1; ++i) {
      if (pick[static_cast<std::size_t>(i)]) subset.push_back(i + 1);
    }
    found.insert(RadiusClass::of(p, subset));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

RadiusClass neg_dual(const RadiusClass& c) {
  std::vector<int> neg;
  neg.reserve(c.n());
  for (int a : c.elems()) neg.push_back(-a);
  return RadiusClass::of(c.p(), neg);
}

RadiusClass comp_dual(const RadiusClass& c) {
  const int q = c.p().value();
  std::vector<bool> in(static_cast<std::size_t>(q), false);
  for (int a : c.elems()) in[static_cast<std::size_t>(a)] = true;
  std::vector<int> out;
  for (int a = 0; a < q; ++a) {
    if (!in[static_cast<std::size_t>(a)]) out.push_back(-a);
  }
  return RadiusClass::of(c.p(), out);
}

RadiiTriple neg_dual(const RadiiTriple& t) { return {neg_dual(t[0]), neg_dual(t[1]), neg_dual(t[2])}; }

RadiiTriple comp_dual(const RadiiTriple& t) {
  return {comp_dual(t[0]), comp_dual(t[1]), comp_dual(t[2])};
}

std::array<std::vector<int>, 3> exponents(Prime p, std::span<const FpElem> alpha,
                                          std::span<const FpElem> beta) {
  const int q = p.value();
  const std::size_t n = alpha.size();
  if (n < 1 || beta.size() + 1 != n) {
    throw InvalidInput("exponents need n >= 1 alpha entries and n - 1 beta entries");
  }
  for (const auto* list : {&alpha, &beta}) {
    for (FpElem x : *list) {
      if (x.modulus() != p) throw InvalidInput("exponent parameters must lie in F_p for the given p");
    }
  }
  long long sum_alpha = 0;
  long long sum_beta = 0;
  std::array<std::vector<int>, 3> a;
  a[0].push_back(0);
  for (FpElem b : beta) {
    a[0].push_back(mod(1LL - b.value(), q));
    sum_beta += b.value();
  }
  for (FpElem x : alpha) {
    a[2].push_back(x.value());
    sum_alpha += x.value();
  }
  for (int s = 0; s + 2 <= static_cast<int>(n); ++s) a[1].push_back(s);
  a[1].push_back(mod(sum_beta - sum_alpha, q));
  return a;
}

std::optional<RadiiTriple> ExponentRadii::triple() const {
  if (!in_xi) return std::nullopt;
  return RadiiTriple{RadiusClass(classes[0]), RadiusClass(classes[1]), RadiusClass(classes[2])};
}

ExponentRadii radii_triple(Prime p, std::span<const FpElem> alpha, std::span<const FpElem> beta) {
  const auto a = exponents(p, alpha, beta);
  ExponentRadii out{{canonical(p, a[0]), canonical(p, a[1]), canonical(p, a[2])}, false};
  out.in_xi = std::all_of(out.classes.begin(), out.classes.end(),
                          [](const CClass& c) { return c.distinct(); });
  return out;
}

bool is_hyp_type(const RadiusClass& c) {
  const int q = c.p().value();
  const int n = static_cast<int>(c.n());
  std::vector<bool> in(static_cast<std::size_t>(q), false);
  for (int a : c.elems()) in[static_cast<std::size_t>(a)] = true;
  // Look for a cyclic run of n - 1 consecutive residues.
  for (int start = 0; start < q; ++start) {
    int run = 0;
    while (run < n - 1 && in[static_cast<std::size_t>((start + run) % q)]) ++run;
    if (run == n - 1) return true;
  }
  return false;
}

namespace {

void require_chain_range(Prime p, int n) {
  if (n <= 1 || n >= p.value()) {
    throw InvalidInput("interleavings need 1 < n < p (n = " + std::to_string(n) + ")");
  }
}

void extend_chain(int p, int n, std::vector<int>& chain,
                  const std::function<void(const Interleaving&)>& visit) {
  const auto len = static_cast<int>(chain.size());
  if (len == 2 * n - 1) {
    Interleaving il;
    for (int i = 0; i < len; ++i) {
      (i % 2 == 0 ? il.alpha_lifts : il.beta_lifts).push_back(chain[static_cast<std::size_t>(i)]);
    }
    visit(il);
    return;
  }
  // Positions alternate a, b, a, ...: a_i >= b_i (weak), b_i > a_{i+1} (strict).
  int hi = p;
  if (len > 0) hi = (len % 2 == 1) ? chain.back() : chain.back() - 1;
  // Leave room for the remaining strict descents down to 1.
  const int remaining = 2 * n - 1 - len;
  const int strict_left = remaining / 2;
  for (int v = hi; v >= 1 + strict_left; --v) {
    chain.push_back(v);
    extend_chain(p, n, chain, visit);
    chain.pop_back();
  }
}

}  // namespace

void for_each_interleaving(Prime p, int n, const std::function<void(const Interleaving&)>& visit) {
  require_chain_range(p, n);
  std::vector<int> chain;
  chain.reserve(static_cast<std::size_t>(2 * n - 1));
  extend_chain(p.value(), n, chain, visit);
}

std::vector<Interleaving> interleavings(Prime p, int n) {
  std::vector<Interleaving> out;
  for_each_interleaving(p, n, [&](const Interleaving& il) { out.push_back(il); });
  return out;
}

std::array<RadiiTriple, 6> permutations(const RadiiTriple& t) {
  return {RadiiTriple{t[0], t[1], t[2]}, RadiiTriple{t[0], t[2], t[1]},
          RadiiTriple{t[1], t[0], t[2]}, RadiiTriple{t[1], t[2], t[0]},
          RadiiTriple{t[2], t[0], t[1]}, RadiiTriple{t[2], t[1], t[0]}};
}

std::set<RadiiTriple> hyp_generators(Prime p, int n) {
  std::set<RadiiTriple> out;
  for_each_interleaving(p, n, [&](const Interleaving& il) {
    FpVector alpha;
    FpVector beta;
    for (int a : il.alpha_lifts) alpha.emplace_back(p, a);
    for (int b : il.beta_lifts) beta.emplace_back(p, b);
    const ExponentRadii r = radii_triple(p, alpha, beta);
    if (!r.in_xi) {
      throw std::logic_error("interleaving chain produced radii with repeated entries: " +
                             r.classes[0].to_string() + " " + r.classes[1].to_string() + " " +
                             r.classes[2].to_string());
    }
    out.insert(*r.triple());
  });
  return out;
}

std::set<RadiiTriple> hyp_set(Prime p, int n) {
  std::set<RadiiTriple> out;
  for (const RadiiTriple& t : hyp_generators(p, n)) {
    for (RadiiTriple& s : permutations(t)) out.insert(std::move(s));
  }
  return out;
}

}  // namespace dormant
