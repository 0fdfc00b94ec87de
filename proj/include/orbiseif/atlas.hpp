#pragma once

#include "orbiseif/classify.hpp"
#include "orbiseif/notation.hpp"

#include <string>
#include <vector>

namespace orbiseif {

// Bases swept by the atlas: the 17 flat ones; spherical ones with family
// parameter n <= bound; bad ones (one or two unequal cones or corners) with
// orders <= bound. Throws "invalid" for an unknown geometry or bound < 1.
std::vector<Orbifold2Symbol> atlas_bases(const std::string& geometry, int bound);

struct AtlasBase {
    Orbifold2Symbol base;
    std::vector<SeifertSymbol> fibrations;
    std::vector<int> class_of;  // per fibration, index into Atlas::classes
};

struct AtlasClass {
    DiffeoClass cls;
    std::vector<SeifertSymbol> members;  // enumerated fibrations in this class, atlas order
};

struct Atlas {
    std::string geometry;
    int bound = 0;
    std::vector<AtlasBase> bases;
    std::vector<AtlasClass> classes;  // in order of first appearance
    int fibration_count() const;
    // classes met by at least two enumerated fibrations
    std::vector<const AtlasClass*> multi_member() const;
};

enum class Execution { serial, parallel };

// Enumerates and classifies every fibration over atlas_bases(geometry, bound).
// The parallel path splits the per-fibration work across OpenMP threads; the
// result is identical to the serial one.
Atlas build_atlas(const std::string& geometry, int bound, Execution exec = Execution::parallel);

}  // namespace orbiseif
