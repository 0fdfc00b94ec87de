#pragma once

#include "orbiseif/atlas.hpp"
#include "orbiseif/classify.hpp"
#include "orbiseif/notation.hpp"
#include "orbiseif/singular.hpp"

#include "json.hpp"

namespace orbiseif {

void to_json(nlohmann::json& j, const Orbifold2Symbol& b);
void to_json(nlohmann::json& j, const LocalInvariant& l);
void to_json(nlohmann::json& j, const SeifertSymbol& s);
void to_json(nlohmann::json& j, const SingularGraph& g);
void to_json(nlohmann::json& j, const AbelianNormalIndex& a);

// families list their members up to nu <= bound
nlohmann::json class_json(const DiffeoClass& c, int bound);
nlohmann::json atlas_json(const Atlas& a);
nlohmann::json error_json(const std::string& code, const std::string& message);

}  // namespace orbiseif
