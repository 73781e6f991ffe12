#pragma once

#include <string>

#include <json.hpp>

#include "diagram.hpp"
#include "groupoid.hpp"
#include "loops.hpp"
#include "morphism.hpp"
#include "subgroup.hpp"

namespace cyclo {

using Json = nlohmann::json;

Json to_json(const Groupoid& g);
Json to_json(const Arrow& f);
Json to_json(const Loop& x);
Json to_json(const GenWitness& w);
Json to_json(const Morphism& h);
Json to_json(const Diagram& d);

Arrow arrow_from_json(const Groupoid& g, const Json& j);
Morphism morphism_from_json(const Json& j);
Diagram diagram_from_json(const Json& j);

/// Arrow literal "disp@src".
Arrow parse_arrow(const Groupoid& g, const std::string& text);
/// Comma-separated arrow literals.
Loop parse_loop(const Groupoid& g, const std::string& text);

}  // namespace cyclo
