#include <map>
#include <set>

#include "cli/cli.hpp"
#include "dormant/error.hpp"
#include "dormant/radii.hpp"
#include "dormant/verlinde.hpp"

namespace dormant::cli {

namespace data {
std::string_view reference_tables_json();
}

namespace {

using Names = std::map<std::string, RadiusClass>;

Names read_names(Prime p, const Json& classes, std::vector<std::string>& problems) {
  Names out;
  for (const auto& [name, elems] : classes.items()) {
    const auto raw = elems.get<std::vector<int>>();
    RadiusClass c = RadiusClass::of(p, raw);
    if (c.elems() != raw) problems.push_back(name + " is listed as non-canonical " + Json(raw).dump());
    out.emplace(name, std::move(c));
  }
  return out;
}

RadiiTriple named_triple(const Names& names, const Json& j) {
  const auto ids = j.get<std::vector<std::string>>();
  if (ids.size() != 3) throw InvalidInput("reference triple must have three names");
  return {names.at(ids[0]), names.at(ids[1]), names.at(ids[2])};
}

std::set<RadiiTriple> named_set(const Names& names, const Json& list) {
  std::set<RadiiTriple> out;
  for (const Json& t : list) out.insert(named_triple(names, t));
  return out;
}

std::set<RadiiTriple> s3_closure(const std::set<RadiiTriple>& in) {
  std::set<RadiiTriple> out;
  for (const RadiiTriple& t : in) {
    for (const RadiiTriple& s : permutations(t)) out.insert(s);
  }
  return out;
}

Check set_check(std::string name, const std::set<RadiiTriple>& got, const std::set<RadiiTriple>& want) {
  Check c{std::move(name), true, {}};
  for (const RadiiTriple& t : want) {
    if (!got.contains(t)) c.diff.push_back("- " + to_string(t));
  }
  for (const RadiiTriple& t : got) {
    if (!want.contains(t)) c.diff.push_back("+ " + to_string(t));
  }
  c.passed = c.diff.empty();
  return c;
}

Check equal_check(std::string name, const Integer& got, const Integer& want) {
  Check c{std::move(name), got == want, {}};
  if (!c.passed) c.diff.push_back("expected " + want.str() + ", got " + got.str());
  return c;
}

std::string label(const char* what, int p, int n) {
  return std::string(what) + "(" + std::to_string(p) + "," + std::to_string(n) + ")";
}

void verify_entry(const Json& entry, const OverrideTable& overrides, unsigned threads,
                  std::vector<Check>& checks) {
  const Prime p(entry.at("p").get<int>());
  const int n = entry.at("n").get<int>();

  std::vector<std::string> problems;
  const Names names = read_names(p, entry.at("classes"), problems);
  if (!problems.empty()) checks.push_back({label("class names ", p.value(), n), false, problems});

  {
    Check c{label("Xi", p.value(), n), true, {}};
    std::vector<RadiusClass> want;
    for (const Json& id : entry.at("xi")) want.push_back(names.at(id.get<std::string>()));
    const auto got = xi(p, n);
    if (got != want) {
      c.passed = false;
      for (const auto& x : got) c.diff.push_back("got " + x.to_string());
      for (const auto& x : want) c.diff.push_back("want " + x.to_string());
    }
    checks.push_back(std::move(c));
  }

  std::set<RadiiTriple> want_o;
  if (entry.contains("O")) {
    want_o = named_set(names, entry.at("O"));
    for (const Json& fix : entry.value("errata", Json::array())) {
      const RadiiTriple printed = named_triple(names, fix.at("printed"));
      const RadiiTriple corrected = named_triple(names, fix.at("corrected"));
      Check c{label("erratum ", p.value(), n), true, {}};
      c.diff.push_back("note: printed orbit of " + to_string(printed) + " read as " + to_string(corrected) + " (" +
                       fix.at("reason").get<std::string>() + ")");
      for (const RadiiTriple& t : permutations(printed)) {
        if (!want_o.contains(t)) c.passed = false;
        want_o.erase(t);
      }
      for (const RadiiTriple& t : permutations(corrected)) {
        if (want_o.contains(t)) c.passed = false;
        want_o.insert(t);
      }
      if (!c.passed) c.diff.push_back("erratum does not apply to the printed list");
      checks.push_back(std::move(c));
    }
  } else {
    const auto gens = named_set(names, entry.at("hyp_generators"));
    checks.push_back(set_check(label("hypergeometric generators ", p.value(), n), hyp_generators(p, n), gens));
    const auto hyp = hyp_set(p, n);
    checks.push_back(equal_check(label("#Hyp", p.value(), n), Integer(hyp.size()),
                                 Integer(entry.at("hyp_count").get<int>())));
    checks.push_back(set_check(label("Hyp", p.value(), n) + " = S3 closure of generators", hyp, s3_closure(gens)));
    want_o = s3_closure(gens);
    for (const RadiiTriple& t : named_set(names, entry.at("O_extra"))) want_o.insert(t);
  }

  const BaseTable table = BaseTable::build(p, n, overrides, threads);
  {
    Check c{label("base table resolved ", p.value(), n), true, {}};
    for (const RadiiTriple& t : table.unknown_triples()) c.diff.push_back("unknown " + to_string(t));
    c.passed = c.diff.empty();
    checks.push_back(std::move(c));
  }
  const auto support = table.support();
  checks.push_back(set_check(label("O", p.value(), n), support, want_o));

  if (entry.value("hyp_equals_O", false)) {
    checks.push_back(set_check(label("Hyp", p.value(), n) + " = O", hyp_set(p, n), want_o));
  }

  {
    std::map<RadiiTriple, Integer> special;
    for (const Json& rec : entry.at("N_values")) {
      const RadiiTriple t = named_triple(names, rec.at("triple"));
      for (const RadiiTriple& s : permutations(t)) special[s] = integer_from_json(rec.at("N"));
    }
    Check c{label("N table ", p.value(), n), true, {}};
    const std::size_t d = table.dim();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          const RadiiTriple t = table.triple(i, j, k);
          const auto it = special.find(t);
          const Integer want = it != special.end() ? it->second : Integer(want_o.contains(t) ? 1 : 0);
          const BaseValue& got = table.at(i, j, k);
          if (!got.value || *got.value != want) {
            c.diff.push_back(to_string(t) + ": expected " + want.str() + ", got " +
                             (got.value ? got.value->str() : std::string("unknown")));
          }
        }
      }
    }
    c.passed = c.diff.empty();
    checks.push_back(std::move(c));
  }

  if (entry.contains("complement_of")) {
    const Json& comp = entry.at("complement_of");
    const int m = comp.at("n").get<int>();
    std::vector<std::string> other_problems;
    const Names other = read_names(p, comp.at("classes"), other_problems);
    Check c{label("complement names ", p.value(), n), other_problems.empty(), other_problems};
    for (const auto& [here, there] : comp.at("map").items()) {
      const RadiusClass mapped = comp_dual(names.at(here));
      if (mapped != other.at(there.get<std::string>())) {
        c.passed = false;
        c.diff.push_back(here + " maps to " + mapped.to_string() + ", listed as " + there.get<std::string>());
      }
    }
    checks.push_back(std::move(c));

    const BaseTable dual = BaseTable::build(p, m, overrides, threads);
    std::set<RadiiTriple> mapped;
    for (const RadiiTriple& t : dual.support()) mapped.insert(comp_dual(t));
    checks.push_back(set_check(label("O", p.value(), n) + " = complement of " + label("O", p.value(), m),
                               support, mapped));
  }

  if (table.resolved()) {
    const AxiomReport report = check_axioms(table);
    Check c{label("axioms ", p.value(), n), report.all_passed(), {}};
    for (const AxiomResult& r : report.results) {
      if (!r.passed) c.diff.push_back(r.name + ": " + r.witness);
    }
    checks.push_back(std::move(c));

    const CountEngine engine(std::make_shared<const BaseTable>(table));
    checks.push_back(equal_check(label("genus-1 count ", p.value(), n), engine.count(1, {}),
                                 Integer(table.dim())));
  }
}

void verify_genus2(const Json& rec, Prime p, const OverrideTable& overrides, unsigned threads,
                   std::vector<Check>& checks) {
  const int n = rec.at("n").get<int>();
  const Integer want = integer_from_json(rec.at("value"));
  const std::string tag = label("genus-2 ", p.value(), n);
  const BaseTable table = BaseTable::build(p, n, overrides, threads);
  if (!table.resolved()) {
    checks.push_back({tag + " pants sum", false, {"base table unresolved"}});
    return;
  }
  checks.push_back(equal_check(tag + " pants sum", theta_sum(table), want));
  const CountEngine engine(std::make_shared<const BaseTable>(table));
  checks.push_back(equal_check(tag + " factorization count", engine.count(2, {}), want));
  if (verlinde_applies(p.value(), n, 2)) {
    VerlindeOptions opts;
    opts.threads = threads;
    checks.push_back(equal_check(tag + " closed form", verlinde_count(p, n, 2, opts), want));
  }
  if (rec.value("polynomial", false)) {
    const Rational poly = poly_n3_g2(Integer(p.value()));
    Check c{tag + " polynomial", poly == Rational(want), {}};
    if (!c.passed) c.diff.push_back("polynomial gives " + poly.str());
    checks.push_back(std::move(c));
  }
}

}  // namespace

std::string_view reference_tables_json() { return data::reference_tables_json(); }

bool VerifyReport::passed() const {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

VerifyReport verify(Prime p, const OverrideTable& overrides, unsigned threads) {
  if (p.value() > 7) throw InvalidInput("reference tables exist only for p = 3, 5, 7");
  const Json doc = Json::parse(data::reference_tables_json());
  VerifyReport report;
  report.p = p.value();
  std::set<int> covered;
  for (const Json& entry : doc.at("tables")) {
    if (entry.at("p").get<int>() != p.value()) continue;
    covered.insert(entry.at("n").get<int>());
    verify_entry(entry, overrides, threads, report.checks);
  }
  {
    Check c{"reference data covers 1 < n < p", true, {}};
    for (int n = 2; n < p.value(); ++n) {
      if (!covered.contains(n)) c.diff.push_back("missing n = " + std::to_string(n));
    }
    c.passed = c.diff.empty();
    report.checks.push_back(std::move(c));
  }
  for (const Json& rec : doc.at("genus2")) {
    if (rec.at("p").get<int>() == p.value()) verify_genus2(rec, p, overrides, threads, report.checks);
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"diff", c.diff}});
  return {{"p", report.p}, {"passed", report.passed()}, {"checks", checks}};
}

}  // namespace dormant::cli
