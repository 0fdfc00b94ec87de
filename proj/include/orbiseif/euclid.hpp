#pragma once

#include "orbiseif/holonomy.hpp"
#include "orbiseif/linalg.hpp"
#include "orbiseif/notation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbiseif {

// x -> A x + t
struct AffineIsometryQ {
    MatQ A;
    VecQ t;
    static AffineIsometryQ identity(int dim) { return {MatQ::identity(dim), VecQ(dim)}; }
    static AffineIsometryQ translation(const VecQ& v) { return {MatQ::identity(v.n), v}; }
    VecQ apply(const VecQ& x) const { return A * x + t; }
    AffineIsometryQ inverse() const;
    friend bool operator==(const AffineIsometryQ&, const AffineIsometryQ&) = default;
};
AffineIsometryQ operator*(const AffineIsometryQ& a, const AffineIsometryQ& b);
std::string to_string(const AffineIsometryQ& g);

// An isometry together with its action on the fiber circle. Plain crystallographic
// groups carry the identity there; horizontal parts carry the vertical action mod 1.
struct Motion {
    AffineIsometryQ g;
    CircleIsometry c;
    Motion inverse() const { return {g.inverse(), c.inverse()}; }
};
Motion operator*(const Motion& a, const Motion& b);

struct CrystGroupQ {
    int dim = 0;
    MatQ gram;
    std::vector<Motion> generators;
    std::vector<MatQ> points;           // point group, identity first
    std::vector<Motion> reps;           // coset representative per point-group element
    std::vector<VecQ> lattice;          // basis of the translation subgroup
    std::vector<Q> lattice_shift;       // circle rotation carried by each basis vector

    int point_index(const MatQ& A) const;  // -1 if absent
    VecQ lattice_coords(const VecQ& v) const;
    bool orientation_preserving() const;
    // the group element with linear part points[i] and translation reps[i].t + sum n_k b_k
    Motion element(int i, const VecQ& n) const;
    bool contains(const AffineIsometryQ& g) const;
};

// Point group by saturation (capped at 96 elements), translation lattice from
// the Schreier generators of the kernel. Throws "invalid" for non-isometries,
// "closure" when the point group does not close or the lattice is degenerate.
CrystGroupQ group_closure(const std::vector<Motion>& gens, const MatQ& gram);
CrystGroupQ group_closure(const std::vector<AffineIsometryQ>& gens);
CrystGroupQ group_closure(const std::vector<AffineIsometryQ>& gens, const MatQ& gram);

// Among 1, nn, 22n, 332, 432 for an orientation-preserving space group.
Orbifold2Symbol point_orbifold(const CrystGroupQ& g);

struct InvariantDirections {
    bool all = false;
    std::vector<VecQ> lines;                    // primitive, first nonzero entry positive
    std::vector<std::pair<VecQ, VecQ>> planes;  // every direction in the span is invariant
    std::string kind() const;                   // "all", "axis_plus_plane", "finite"
    bool contains(const VecQ& v) const;
};
InvariantDirections invariant_directions(const CrystGroupQ& g);

// shortest lattice translation on the ray of v; nullopt when v is not invariant
std::optional<VecQ> translation_in_direction(const CrystGroupQ& g, const VecQ& v);
bool has_translation_in_direction(const CrystGroupQ& g, const VecQ& v);

struct HorizontalPart {
    VecQ vertical;                 // primitive lattice vector along the direction
    std::vector<VecQ> frame;       // horizontal basis h1, h2 then vertical, det > 0
    std::vector<Motion> generators;
    CrystGroupQ group;             // dim 2, circle parts = vertical action mod 1
};
HorizontalPart horizontal_part(const CrystGroupQ& g, const VecQ& v);

struct SingularPointData {
    VecQ point;       // lattice coordinates of the horizontal group
    int order = 1;    // order of the rotation subgroup of the stabilizer
    Motion rotation;  // counterclockwise rotation by 2 pi / order
};

struct WallpaperAnalysis {
    int handles = 0;
    int crosscaps = 0;
    std::vector<SingularPointData> cones;
    struct Boundary {
        std::vector<SingularPointData> corners;  // in boundary order
        std::optional<Motion> loop;              // translation along the mirror when corner-free
    };
    std::vector<Boundary> boundaries;
    Orbifold2Symbol symbol() const;  // canonical
};
WallpaperAnalysis analyze_wallpaper(const CrystGroupQ& g);
Orbifold2Symbol classify_wallpaper(const CrystGroupQ& g);

// Seifert symbol of the fibration by lines parallel to v.
SeifertSymbol induced_fibration(const CrystGroupQ& g, const VecQ& v);
// Every fibration by parallel lines along an invariant direction with a
// translation, deduplicated and sorted by printed form. Planes and the
// all-directions case are sampled on small integer combinations.
std::vector<SeifertSymbol> induced_fibrations(const CrystGroupQ& g);

// One generator per line: "A11 A12 A13 | A21 ... | A31 A32 A33 ; t1 t2 t3", or the
// 2-dimensional analogue. '#' starts a comment.
std::vector<AffineIsometryQ> parse_generators(std::string_view text);
std::vector<AffineIsometryQ> load_generators(const std::string& path);
// "e1", "e2", "e3" or comma separated rationals
VecQ parse_direction(std::string_view text, int dim);

// Wallpaper realization of a flat base: one affine image per presentation
// generator, in presentation order, with the metric of the coordinates.
struct FlatRealization {
    MatQ gram;
    std::vector<AffineIsometryQ> images;
};
FlatRealization flat_realization(const Orbifold2Symbol& base);

// Space group fibered by vertical lines with the given symbol: horizontal
// realization of the base times psi, plus the unit vertical translation.
struct FibrationGroup {
    MatQ gram;
    std::vector<AffineIsometryQ> generators;
};
FibrationGroup fibration_group(const SeifertSymbol& s);

}  // namespace orbiseif
