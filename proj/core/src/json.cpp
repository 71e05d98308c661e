#include "dormant/json.hpp"

#include <limits>
#include <string>

#include "dormant/error.hpp"

namespace dormant {

Json to_json(const CClass& c) { return Json{{"p", c.p().value()}, {"elems", c.elems()}}; }

Json to_json(const RadiusClass& c) { return to_json(c.cclass()); }

Json to_json(const RadiiTriple& t) { return Json::array({to_json(t[0]), to_json(t[1]), to_json(t[2])}); }

RadiusClass radius_from_json(const Json& j) {
  try {
    const Prime p(j.at("p").get<int>());
    const auto elems = j.at("elems").get<std::vector<int>>();
    return RadiusClass::of(p, elems);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed radius class: ") + e.what());
  }
}

RadiiTriple triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidInput("a radii triple must be a 3-element array");
  RadiiTriple t{radius_from_json(j[0]), radius_from_json(j[1]), radius_from_json(j[2])};
  if (t[0].p() != t[1].p() || t[0].p() != t[2].p() || t[0].n() != t[1].n() || t[0].n() != t[2].n()) {
    throw InvalidInput("radii triple components must share p and n");
  }
  return t;
}

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(x.convert_to<std::int64_t>());
  }
  return Json(x.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

Json to_json(const BaseValue& v) {
  Json j;
  j["N"] = v.value ? to_json(*v.value) : Json(nullptr);
  j["rule"] = std::string(to_string(v.rule));
  j["source"] = v.source;
  return j;
}

Json to_json(const BaseTable& table) {
  Json out = Json::array();
  const std::size_t d = table.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Json rec = to_json(table.at(i, j, k));
        rec["p"] = table.p().value();
        rec["n"] = table.n();
        rec["triple"] = to_json(table.triple(i, j, k));
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

Json to_json(const AxiomReport& report) {
  Json axioms = Json::array();
  for (const AxiomResult& r : report.results) {
    axioms.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"witness", r.witness}});
  }
  return Json{{"p", report.p}, {"n", report.n}, {"passed", report.all_passed()}, {"axioms", axioms}};
}

}  // namespace dormant
