#pragma once

#include "orbiseif/finite_group.hpp"
#include "orbiseif/notation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbiseif {

enum class GeometryClass { spherical, flat, hyperbolic, bad };
std::string to_string(GeometryClass g);

Q euler_characteristic(const Orbifold2Symbol& b);
GeometryClass geometry_class(const Orbifold2Symbol& b);

// ---------------------------------------------------------------- presentation

enum class GeneratorKind { handle_x, handle_y, crosscap_z, cone_gamma, boundary_delta, boundary_rho };

struct Generator {
    std::string name;
    GeneratorKind kind;
    int orientation;  // +1 / -1
};

struct Letter {
    int generator;
    int exponent;  // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

struct Relation {
    std::string label;
    Word base;      // the relation word is base^power
    int power = 1;  // > 1 for cone and corner relations
    Word word() const;
};

struct FeatureRef {
    std::string feature;  // "cone 1", "boundary 1", "corner 1.2"
    std::vector<int> generators;
};

struct Presentation {
    std::vector<Generator> generators;
    std::vector<Relation> relations;  // global relation last
    std::vector<FeatureRef> feature_map;
    // generators removed through the global relation, expressed as words
    std::vector<std::pair<std::string, Word>> eliminated;

    int find(const std::string& name) const;  // -1 if absent
    int orientation(const Word& w) const;
    std::string format(const Word& w) const;
};

// Generators are x_s, y_s, z_r, g_k, then per boundary d_i, r_i_0..r_i_h.
// Built from the canonical form of b.
Presentation fundamental_group_presentation(const Orbifold2Symbol& b);

// ---------------------------------------------------------------- spherical

struct SphericalFamily {
    int row;           // 1..14 in the order 532, *532, 432, *432, 332, *332, 3*2,
                       // 22n, *22n, 2*n, nn, *nn, n*, nx
    int n;             // family parameter (rows 8..14), else 0
    std::string name;  // e.g. "*22n"
};
std::optional<SphericalFamily> identify_spherical(const Orbifold2Symbol& b);

struct FiniteRealization {
    Presentation presentation;
    FiniteGroup group;               // the ambient group, generated by the images
    std::vector<int> images;         // element index per presentation generator
    std::string group_name;          // isomorphism type of pi_1
    std::string preserving_name;     // isomorphism type of pi_1^+
    std::size_t order() const { return group.order(); }
    std::vector<int> preserving() const { return group.orientation_preserving(); }
    int degree() const;
};

// Searches generator images inside the table-driven ambient group of the
// family; every relation holds and the images generate the whole group.
FiniteRealization spherical_realization(const Orbifold2Symbol& b);

// Generator images in g satisfying every relation, with exact orders for the
// power relations and signs matching orientation characters, generating g.
std::optional<std::vector<int>> realize_in(const Presentation& p, const FiniteGroup& g);

// Ambient group used for a family together with its names.
struct AmbientGroup {
    std::vector<SignedPerm> generators;
    std::string name;
    std::string preserving_name;
};
AmbientGroup ambient_group(const SphericalFamily& f);

}  // namespace orbiseif
