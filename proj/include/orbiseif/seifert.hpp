#pragma once

#include "orbiseif/notation.hpp"

#include <string>
#include <vector>

namespace orbiseif {

// e + sum m/n over cones + sum m/(2n) over corners + sum xi/2, exactly.
Q invariant_total(const SeifertSymbol& s);

struct RelationCheck {
    bool valid = false;
    Q residue{0};  // total mod 1 when violated
};
RelationCheck check_invariant_relation(const SeifertSymbol& s);

// Reduces invariants into [0,n) moving whole units into e, erases order-1
// features and applies the canonical ordering. Preserves invariant_total.
SeifertSymbol normalize(const SeifertSymbol& s);

struct FibrationGeometry {
    std::string tag;  // "R3", "S2xR", "H2xR", "bad", "S3", "Nil", "SL2"
    bool in_scope = true;
};
FibrationGeometry geometry_of_fibration(const SeifertSymbol& s);

// Fills the single unknown xi so that the invariant relation holds.
SeifertSymbol complete_boundary_invariant(const SeifertSymbol& s);

// All normalized e=0 fibrations over a flat, spherical or bad base, sorted by
// printed Conway form.
std::vector<SeifertSymbol> enumerate_fibrations(const Orbifold2Symbol& base);

}  // namespace orbiseif
