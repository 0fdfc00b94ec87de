#pragma once

#include "orbiseif/notation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbiseif {

// ((c nu)_{c mu} (d nu)_{d (nu - mu)}) over a sphere, or the same corners on a
// disc with xi = 1; nu = 1 gives (c_0 d_0) and (*_0 c_0 d_0).
struct FamilyDescriptor {
    std::string id;  // "sphere-two-cones" or "disc-two-corners"
    int c = 1;       // c >= d
    int d = 1;
    SeifertSymbol member(int nu, int mu) const;
    // all members with nu <= bound, deduplicated, in (nu, mu) order
    std::vector<SeifertSymbol> members(int bound) const;
};

struct DiffeoClass {
    std::string geometry;  // "flat", "S2xR", "bad", "H2xR"
    SeifertSymbol canonical;
    std::vector<SeifertSymbol> aliases;  // finite classes; canonical first
    std::optional<FamilyDescriptor> family;
    bool infinite() const { return family.has_value(); }
};

// Throws "scope" for e != 0 and "semantic" for symbols violating the relation.
DiffeoClass canonical_class(const SeifertSymbol& s);
bool are_diffeomorphic(const SeifertSymbol& a, const SeifertSymbol& b);
// finite classes in full; families up to nu <= bound
std::vector<SeifertSymbol> aliases(const SeifertSymbol& s, int bound);
bool has_infinitely_many_fibrations(const SeifertSymbol& s);

// multi-fibration lines for flat orbifolds, first entry canonical
const std::vector<std::vector<SeifertSymbol>>& flat_alias_table();

struct AbelianNormalIndex {
    bool unique = false;
    int index = 0;  // |pi_1(B) : M| when unique
    friend bool operator==(const AbelianNormalIndex&, const AbelianNormalIndex&) = default;
};
std::string to_string(const AbelianNormalIndex& a);
// Spherical bases only; throws "scope" otherwise.
AbelianNormalIndex max_abelian_normal_index(const Orbifold2Symbol& b);

// "S3", "S2xS1", "RP3" or "RP3#RP3" for spherical or bad bases.
std::string underlying_space(const SeifertSymbol& s);

// Name of an implemented invariant taking different values, if any.
std::optional<std::string> distinguishing_invariant(const SeifertSymbol& a, const SeifertSymbol& b);

}  // namespace orbiseif
