#pragma once

// JSON encodings shared by the library and the command-line tool.
//
//   class:   {"p": 7, "elems": [0, 2, 4]}      (elems canonical)
//   triple:  [class, class, class]
//   record:  {"p", "n", "triple", "N", "source"} (base tables, overrides)

#include <json.hpp>

#include "dormant/fusion.hpp"
#include "dormant/numeric.hpp"
#include "dormant/radii.hpp"

namespace dormant {

using Json = nlohmann::json;

[[nodiscard]] Json to_json(const CClass& c);
[[nodiscard]] Json to_json(const RadiusClass& c);
[[nodiscard]] Json to_json(const RadiiTriple& t);

/// Canonicalizes, so any translate is accepted. Throws InvalidInput.
[[nodiscard]] RadiusClass radius_from_json(const Json& j);
[[nodiscard]] RadiiTriple triple_from_json(const Json& j);

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
[[nodiscard]] Json to_json(const Integer& x);
[[nodiscard]] Integer integer_from_json(const Json& j);

[[nodiscard]] Json to_json(const BaseValue& v);
/// One record per triple of Xi^3 in basis order; unknown entries carry "N": null.
[[nodiscard]] Json to_json(const BaseTable& table);
[[nodiscard]] Json to_json(const AxiomReport& report);

}  // namespace dormant
