#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>

#include "dormant/error.hpp"
#include "dormant/hyperg.hpp"
#include "dormant/radii.hpp"
#include "dormant/verlinde.hpp"

namespace dormant::cli {

using dormant::to_json;

namespace {

struct Options {
  int p = 0;
  int n = 0;
  int g = 0;
  std::string alpha;
  std::string beta;
  std::string radii;
  std::string overrides;
  std::string order = "genus-first";
  unsigned threads = 1;
  bool basis = false;
  bool json = false;
  bool ordered = false;
  bool force = false;
};

Json elems_json(const std::vector<RadiusClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back(c.elems());
  return out;
}

Json triple_elems(const RadiiTriple& t) { return Json::array({t[0].elems(), t[1].elems(), t[2].elems()}); }

Json param_json(const Parameter& x) { return x.is_fp() ? Json(x.fp().value()) : Json("generic"); }

Json params_json(const std::vector<Parameter>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(param_json(x));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(std::to_string(x));
  return join(parts, ", ");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Entries from --overrides take precedence over the built-in ones.
OverrideTable overrides_for(const Options& o) {
  if (o.overrides.empty()) return OverrideTable::builtin();
  OverrideTable table = load_overrides(o.overrides);
  for (const auto& [triple, entry] : OverrideTable::builtin().entries()) {
    if (table.find(triple) == nullptr) table.add(triple, entry.value, entry.source);
  }
  return table;
}

// --- commands ---------------------------------------------------------------

int cmd_kernel(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  const HGOperator op(p, parse_params(p, o.alpha), parse_params(p, o.beta));
  const auto t = t_set(op);
  const std::size_t rank = kernel_rank(op);
  std::optional<std::size_t> oracle;
  if (op.all_fp()) oracle = oracle_rank(op);

  Json j{{"p", o.p},
         {"alpha", params_json(op.alpha())},
         {"beta", params_json(op.beta())},
         {"t_set", t},
         {"rank", rank},
         {"oracle_rank", oracle ? Json(*oracle) : Json(nullptr)},
         {"full_solutions", has_full_solutions(op)},
         {"interleaving", interleaving_criterion(op)},
         {"pcurvature_sums_in_fp", pcurvature_sum_test(op.alpha(), op.beta())}};
  if (o.basis) {
    if (!op.all_fp()) throw UnsupportedInput("--basis requires all parameters in F_p");
    Json vectors = Json::array();
    for (const FpVector& v : root_basis(op).vectors) {
      std::vector<int> coeffs;
      for (const FpElem& c : v) coeffs.push_back(c.value());
      const FpVector image = dormant::apply(op, v);
      const bool ok = std::all_of(image.begin(), image.end(), [](const FpElem& x) { return x.is_zero(); });
      vectors.push_back({{"coeffs", coeffs}, {"verified", ok}});
    }
    j["basis"] = vectors;
  }

  if (o.json) {
    emit(out, j);
    return kOk;
  }
  out << "T = {" << join_numbers(t) << "}\n";
  out << "rank (closed form) = " << rank << '\n';
  if (oracle) {
    out << "rank (oracle)      = " << *oracle << '\n';
  } else {
    out << "rank (oracle)      = skipped (generic parameters)\n";
  }
  out << "full solutions     = " << (has_full_solutions(op) ? "true" : "false") << '\n';
  if (o.basis) {
    for (const Json& v : j["basis"]) {
      out << "root " << v["coeffs"].dump() << (v["verified"].get<bool>() ? "  verified" : "  NOT annihilated")
          << '\n';
    }
  }
  return kOk;
}

void require_range(int p, int n) {
  if (n <= 1 || n >= p) throw InvalidInput("need 1 < n < p");
}

int cmd_xi(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  require_range(o.p, o.n);
  const auto classes = xi(p, o.n);
  if (o.json) {
    emit(out, {{"p", o.p}, {"n", o.n}, {"count", classes.size()}, {"classes", elems_json(classes)}});
    return kOk;
  }
  for (const auto& c : classes) out << c.to_string() << '\n';
  out << classes.size() << " classes\n";
  return kOk;
}

int cmd_hyp(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  require_range(o.p, o.n);
  const auto triples = hyp_set(p, o.n);
  if (o.json) {
    Json list = Json::array();
    for (const auto& t : triples) list.push_back(triple_elems(t));
    emit(out, {{"p", o.p}, {"n", o.n}, {"count", triples.size()}, {"triples", list}});
    return kOk;
  }
  for (const auto& t : triples) out << to_string(t) << '\n';
  out << triples.size() << " triples\n";
  return kOk;
}

int cmd_exponents(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  const auto alpha = parse_fp(p, o.alpha);
  const auto beta = parse_fp(p, o.beta);
  const auto raw = exponents(p, alpha, beta);
  const ExponentRadii radii = radii_triple(p, alpha, beta);
  const auto triple = radii.triple();
  const bool in_hyp = triple && hyp_set(p, static_cast<int>(alpha.size())).contains(*triple);

  std::vector<Parameter> a(alpha.begin(), alpha.end());
  std::vector<Parameter> b(beta.begin(), beta.end());
  const HGOperator op(p, a, b);

  Json classes = Json::array();
  Json hyp_type = Json::array();
  for (const CClass& c : radii.classes) {
    classes.push_back(c.elems());
    hyp_type.push_back(c.distinct() ? Json(is_hyp_type(RadiusClass(c))) : Json(nullptr));
  }
  const Json j{{"p", o.p},
               {"exponents", raw},
               {"radii", classes},
               {"in_xi", radii.in_xi},
               {"hypergeometric_type", hyp_type},
               {"in_hyp", in_hyp},
               {"full_solutions", has_full_solutions(op)}};
  if (o.json) {
    emit(out, j);
    return kOk;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    out << "a" << i + 1 << " = " << Json(raw[i]).dump() << "  ->  " << radii.classes[i].to_string() << '\n';
  }
  out << "in Xi: " << (radii.in_xi ? "yes" : "no") << ", in Hyp: " << (in_hyp ? "yes" : "no")
      << ", full solutions: " << (has_full_solutions(op) ? "yes" : "no") << '\n';
  return kOk;
}

ReductionOrder parse_order(const std::string& s) {
  if (s == "genus-first") return ReductionOrder::GenusFirst;
  if (s == "split-first") return ReductionOrder::SplitFirst;
  throw InvalidInput("unknown reduction order '" + s + "'");
}

int cmd_count(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  require_range(o.p, o.n);
  const auto radii = parse_radii(p, o.radii);
  auto table = std::make_shared<const BaseTable>(BaseTable::build(p, o.n, overrides_for(o), o.threads));
  const CountEngine engine(table, parse_order(o.order));
  const Integer value = engine.count(o.g, radii);

  // Provenance: which rules supplied the nonzero base values.
  std::map<std::string, std::size_t> rules;
  std::set<std::string> sources;
  for (const RadiiTriple& t : table->support()) {
    const BaseValue& v = table->at(t);
    ++rules[std::string(to_string(v.rule))];
    sources.insert(v.source);
  }
  Json trace{{"base_rules", rules}, {"sources", sources}};
  if (o.g == 0 && radii.size() == 3) {
    const BaseValue& v = table->at(RadiiTriple{radii[0], radii[1], radii[2]});
    trace["entry"] = {{"rule", to_string(v.rule)}, {"source", v.source}};
  }

  if (o.json) {
    emit(out, {{"p", o.p}, {"n", o.n}, {"g", o.g}, {"radii", elems_json(radii)}, {"N", to_json(value)},
               {"trace", trace}});
    return kOk;
  }
  out << value << '\n';
  for (const auto& [rule, k] : rules) out << "  " << rule << ": " << k << " nonzero base entries\n";
  for (const auto& s : sources) out << "  source: " << s << '\n';
  if (trace.contains("entry")) {
    out << "  entry rule: " << trace["entry"]["rule"].get<std::string>() << " ("
        << trace["entry"]["source"].get<std::string>() << ")\n";
  }
  return kOk;
}

int cmd_verlinde(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  VerlindeOptions opts;
  opts.threads = o.threads;
  opts.summation = o.ordered ? VerlindeSummation::OrderedTuples : VerlindeSummation::Subsets;
  opts.require_hypothesis = !o.force;
  const bool proven = verlinde_applies(o.p, o.n, o.g);
  const Integer value = verlinde_count(p, o.n, o.g, opts);
  Json j{{"p", o.p},
         {"n", o.n},
         {"g", o.g},
         {"N", to_json(value)},
         {"in_proven_range", proven},
         {"summation", o.ordered ? "ordered tuples" : "subsets"}};
  std::optional<Rational> poly;
  if (o.n == 3 && o.g == 2) {
    poly = poly_n3_g2(Integer(o.p));
    j["polynomial"] = poly->str();
  }
  if (o.json) {
    emit(out, j);
    return kOk;
  }
  out << value << '\n';
  out << "  closed form over " << (o.ordered ? "ordered tuples" : "subsets") << " of p-th roots of unity"
      << (proven ? "" : " (outside the proven range p > n*max(g-1,2))") << '\n';
  if (poly) out << "  degree-8 polynomial in p: " << *poly << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  const VerifyReport report = verify(p, overrides_for(o), o.threads);
  if (o.json) {
    emit(out, to_json(report));
  } else {
    for (const Check& c : report.checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << '\n';
      for (const auto& line : c.diff) out << "      " << line << '\n';
    }
    out << (report.passed() ? "all tables reproduced" : "MISMATCH") << '\n';
  }
  return report.passed() ? kOk : kMismatch;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const Prime p(o.p);
  require_range(o.p, o.n);
  const BaseTable table = BaseTable::build(p, o.n, overrides_for(o), o.threads);
  const AxiomReport report = check_axioms(table);
  if (o.json) {
    emit(out, to_json(report));
  } else {
    for (const AxiomResult& r : report.results) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
      if (!r.passed) out << "  [" << r.witness << "]";
      out << '\n';
    }
  }
  if (!table.resolved()) return kUnknownBase;
  return report.all_passed() ? kOk : kMismatch;
}

void report_error(const Options& o, std::ostream& out, std::ostream& err, std::string_view kind,
                  const std::string& message, Json extra = Json::object()) {
  if (o.json) {
    extra["error"] = kind;
    extra["message"] = message;
    emit(out, extra);
  }
  err << "error: " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dormant opers, hypergeometric equations mod p, and their fusion counts", "dormant"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--overrides", o.overrides, "JSON file of extra base values")->check(CLI::ExistingFile);
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  };
  const auto add_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "Odd prime")->required(); };
  const auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Rank")->required(); };

  auto* kernel = app.add_subcommand("kernel", "Kernel rank of a hypergeometric operator");
  add_p(kernel);
  kernel->add_option("--alpha", o.alpha, "Comma list; 'generic' allowed")->required();
  kernel->add_option("--beta", o.beta, "Comma list; 'generic' allowed")->required();
  kernel->add_flag("--basis", o.basis, "Print a verified basis of polynomial solutions");

  auto* xi_cmd = app.add_subcommand("xi", "List the radius classes Xi(p,n)");
  add_p(xi_cmd);
  add_n(xi_cmd);

  auto* hyp = app.add_subcommand("hyp", "List the hypergeometric radii triples Hyp(p,n)");
  add_p(hyp);
  add_n(hyp);

  auto* expo = app.add_subcommand("exponents", "Exponents and radii of (alpha, beta) with m = n - 1");
  add_p(expo);
  expo->add_option("--alpha", o.alpha, "Comma list of residues")->required();
  expo->add_option("--beta", o.beta, "Comma list of residues")->required();

  auto* count_cmd = app.add_subcommand("count", "Number of dormant opers by factorization");
  add_p(count_cmd);
  add_n(count_cmd);
  count_cmd->add_option("--g", o.g, "Genus")->required();
  count_cmd->add_option("--radii", o.radii, "Classes separated by '/', residues by ','");
  count_cmd->add_option("--order", o.order, "genus-first or split-first");

  auto* verl = app.add_subcommand("verlinde", "Closed-form count on an unpointed curve");
  add_p(verl);
  add_n(verl);
  verl->add_option("--g", o.g, "Genus")->required();
  verl->add_flag("--ordered", o.ordered, "Sum over ordered tuples instead of subsets");
  verl->add_flag("--force", o.force, "Evaluate outside the proven range");

  auto* ver = app.add_subcommand("verify", "Regenerate all tables for p and diff against reference data");
  add_p(ver);

  auto* ax = app.add_subcommand("axioms", "Check the Frobenius algebra axioms");
  add_p(ax);
  add_n(ax);

  for (CLI::App* sub : {kernel, xi_cmd, hyp, expo, count_cmd, verl, ver, ax}) common(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(o, out);
    if (xi_cmd->parsed()) return cmd_xi(o, out);
    if (hyp->parsed()) return cmd_hyp(o, out);
    if (expo->parsed()) return cmd_exponents(o, out);
    if (count_cmd->parsed()) return cmd_count(o, out);
    if (verl->parsed()) return cmd_verlinde(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (ax->parsed()) return cmd_axioms(o, out);
  } catch (const UnresolvedBase& e) {
    report_error(o, out, err, "unresolved", e.what(),
                 {{"p", e.p()}, {"n", e.n()}, {"triple", triple_elems(e.triple())}});
    return kUnknownBase;
  } catch (const Error& e) {
    report_error(o, out, err, "invalid", e.what());
    return kInvalid;
  } catch (const Json::exception& e) {
    report_error(o, out, err, "invalid", e.what());
    return kInvalid;
  } catch (const std::exception& e) {
    report_error(o, out, err, "internal", std::string("internal error: ") + e.what());
    return kInvalid;
  }
  return kInvalid;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace dormant::cli
