#include <algorithm>
#include <sstream>

#include "dormant/fusion.hpp"

namespace dormant {

FusionAlgebra::FusionAlgebra(const BaseTable& table)
    : p_(table.p()), n_(table.n()), basis_(table.basis()), unit_(table.unit_index()) {
  const std::size_t d = basis_.size();
  for (std::size_t i = 0; i < d; ++i) dual_.push_back(table.dual_index(i));
  base_.resize(d * d * d);
  structure_.resize(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const BaseValue& v = table.at(i, j, k);
        if (!v.value) throw UnresolvedBase(p_.value(), n_, table.triple(i, j, k));
        base_[(i * d + j) * d + k] = Rational(*v.value);
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) structure_[(i * d + j) * d + k] = base(i, j, dual_[k]);
    }
  }
}

const Rational& FusionAlgebra::base(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t d = dim();
  return base_.at((i * d + j) * d + k);
}

const Rational& FusionAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t d = dim();
  return structure_.at((i * d + j) * d + k);
}

FusionAlgebra::Vector FusionAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

FusionAlgebra::Vector FusionAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k) {
        const Rational& c = structure_constant(i, j, k);
        if (c != 0) out[k] += ab * c;
      }
    }
  }
  return out;
}

Rational FusionAlgebra::pairing(const Vector& a, const Vector& b) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) acc += a[i] * b[dual_[i]];
  return acc;
}

Rational FusionAlgebra::counit(const Vector& a) const { return pairing(a, unit()); }

FusionAlgebra::Vector FusionAlgebra::handle_element() const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Vector term = multiply(basis_vector(i), basis_vector(dual_[i]));
    for (std::size_t k = 0; k < dim(); ++k) out[k] += term[k];
  }
  return out;
}

FusionAlgebra algebra(Prime, int, const BaseTable& table) { return FusionAlgebra(table); }

// --- axioms ----------------------------------------------------------------

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* AxiomReport::find(std::string_view name) const {
  auto it = std::find_if(results.begin(), results.end(), [&](const AxiomResult& r) { return r.name == name; });
  return it == results.end() ? nullptr : &*it;
}

namespace {

std::string names(const std::vector<RadiusClass>& basis, std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i : idx) {
    os << (first ? "" : " ") << basis[i].to_string();
    first = false;
  }
  return os.str();
}

// Rank over Q by plain Gauss-Jordan elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

AxiomReport check_axioms(const BaseTable& table) {
  AxiomReport report{table.p().value(), table.n(), {}};
  const std::size_t d = table.dim();
  const auto& basis = table.basis();

  AxiomResult resolved{"base table resolved", true, ""};
  if (const auto unknown = table.unknown_triples(); !unknown.empty()) {
    resolved = {"base table resolved", false, to_string(unknown.front())};
  }
  report.results.push_back(resolved);

  AxiomResult symmetric{"S3 symmetry of base table", true, ""};
  for (std::size_t i = 0; i < d && symmetric.passed; ++i) {
    for (std::size_t j = 0; j < d && symmetric.passed; ++j) {
      for (std::size_t k = 0; k < d && symmetric.passed; ++k) {
        const auto& v = table.at(i, j, k).value;
        for (const RadiiTriple& t : permutations(table.triple(i, j, k))) {
          if (table.at(t).value != v) {
            symmetric = {symmetric.name, false, names(basis, {i, j, k})};
            break;
          }
        }
      }
    }
  }
  report.results.push_back(symmetric);

  const char* algebraic[] = {"commutativity", "associativity", "unit law", "Frobenius compatibility",
                             "pairing nondegeneracy"};
  if (!resolved.passed) {
    for (const char* name : algebraic) report.results.push_back({name, false, "base table unresolved"});
    return report;
  }

  const FusionAlgebra alg(table);
  const auto e = [&](std::size_t i) { return alg.basis_vector(i); };

  AxiomResult comm{algebraic[0], true, ""};
  for (std::size_t i = 0; i < d && comm.passed; ++i) {
    for (std::size_t j = i + 1; j < d && comm.passed; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (alg.structure_constant(i, j, k) != alg.structure_constant(j, i, k)) {
          comm = {comm.name, false, names(basis, {i, j, k})};
          break;
        }
      }
    }
  }
  report.results.push_back(comm);

  AxiomResult assoc{algebraic[1], true, ""};
  for (std::size_t i = 0; i < d && assoc.passed; ++i) {
    for (std::size_t j = 0; j < d && assoc.passed; ++j) {
      const auto ij = alg.multiply(e(i), e(j));
      for (std::size_t k = 0; k < d; ++k) {
        if (alg.multiply(ij, e(k)) != alg.multiply(e(i), alg.multiply(e(j), e(k)))) {
          assoc = {assoc.name, false, names(basis, {i, j, k})};
          break;
        }
      }
    }
  }
  report.results.push_back(assoc);

  AxiomResult unit{algebraic[2], true, ""};
  for (std::size_t i = 0; i < d; ++i) {
    if (alg.multiply(alg.unit(), e(i)) != e(i) || alg.multiply(e(i), alg.unit()) != e(i)) {
      unit = {unit.name, false, names(basis, {alg.unit_index(), i})};
      break;
    }
  }
  report.results.push_back(unit);

  AxiomResult frob{algebraic[3], true, ""};
  for (std::size_t i = 0; i < d && frob.passed; ++i) {
    for (std::size_t j = 0; j < d && frob.passed; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (alg.pairing(alg.multiply(e(i), e(j)), e(k)) != alg.pairing(e(i), alg.multiply(e(j), e(k)))) {
          frob = {frob.name, false, names(basis, {i, j, k})};
          break;
        }
      }
    }
  }
  report.results.push_back(frob);

  std::vector<std::vector<Rational>> gram(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) gram[i][j] = alg.pairing(e(i), e(j));
  }
  const std::size_t rank = rational_rank(gram);
  report.results.push_back({algebraic[4], rank == d,
                            rank == d ? "" : "pairing rank " + std::to_string(rank) + " < " + std::to_string(d)});
  return report;
}

AxiomReport check_axioms(Prime p, int n) { return check_axioms(BaseTable::build(p, n)); }

}  // namespace dormant
