#include "orbiseif/classify.hpp"

#include "orbiseif/error.hpp"
#include "orbiseif/euclid.hpp"
#include "orbiseif/orbifold2.hpp"
#include "orbiseif/seifert.hpp"
#include "orbiseif/singular.hpp"

#include <map>
#include <numeric>

namespace orbiseif {

namespace {

SeifertSymbol sym(const char* text) { return normalize(parse_fibration(text)); }

// (family, nu) when s is a sphere with at most two cones or a disc with at most
// two corners and nothing else
std::optional<std::pair<FamilyDescriptor, int>> match_family(const SeifertSymbol& s) {
    const auto& b = s.base;
    if (b.handles != 0 || b.crosscaps != 0) return std::nullopt;
    std::vector<LocalInvariant> two;
    FamilyDescriptor f;
    if (b.boundaries.empty() && s.cone_invariants.size() <= 2) {
        f.id = "sphere-two-cones";
        two = s.cone_invariants;
    } else if (b.boundaries.size() == 1 && s.cone_invariants.empty() && s.corner_invariants[0].size() <= 2) {
        f.id = "disc-two-corners";
        two = s.corner_invariants[0];
    } else {
        return std::nullopt;
    }
    while (two.size() < 2) two.push_back({0, 1});
    auto [P, a] = std::pair{two[0].n, two[0].m};
    auto [R, b2] = std::pair{two[1].n, two[1].m};
    std::int64_t c = std::gcd(P, a), d = std::gcd(R, b2);
    std::int64_t nu = P / c;
    if (R / d != nu) throw Error("internal", "two-feature symbol outside the lens family: " + print_fibration(s));
    f.c = static_cast<int>(std::max(c, d));
    f.d = static_cast<int>(std::min(c, d));
    return std::pair{f, static_cast<int>(nu)};
}

}  // namespace

SeifertSymbol FamilyDescriptor::member(int nu, int mu) const {
    std::vector<LocalInvariant> two;
    if (nu == 1)
        two = {{0, c}, {0, d}};
    else
        two = {{std::int64_t(c) * mu, std::int64_t(c) * nu}, {std::int64_t(d) * (nu - mu), std::int64_t(d) * nu}};
    if (id == "sphere-two-cones") return normalize(make_fibration(0, 0, two, {}, {}));
    return normalize(make_fibration(0, 0, {}, {two}, {nu == 1 ? 0 : 1}));
}

std::vector<SeifertSymbol> FamilyDescriptor::members(int bound) const {
    std::vector<SeifertSymbol> out;
    std::vector<std::string> seen;
    for (int nu = 1; nu <= bound; ++nu)
        for (int mu = nu == 1 ? 0 : 1; mu <= (nu == 1 ? 0 : nu - 1); ++mu) {
            if (nu > 1 && std::gcd(nu, mu) != 1) continue;
            auto s = member(nu, mu);
            auto key = print_fibration(s);
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
            seen.push_back(key);
            out.push_back(s);
        }
    return out;
}

const std::vector<std::vector<SeifertSymbol>>& flat_alias_table() {
    static const std::vector<std::vector<SeifertSymbol>> table = {
        {sym("(2_0 2_0 2_0 2_0)"), sym("(*_0 *_0)")},
        {sym("(2_0 2_0 2_1 2_1)"), sym("(*_1 *_1)"), sym("(*_0 x)")},
        {sym("(2_1 2_1 2_1 2_1)"), sym("(x x)")},
        {sym("(2_0 2_0 *_0)"), sym("(*_0 2_1 2_1 2_1 2_1)")},
        {sym("(2_0 2_1 *_1)"), sym("(2_1 *_0 2_1 2_1)")},
        {sym("(2_1 2_1 *_0)"), sym("(2_0 2_0 x)")},
        {sym("(2_0 *_0 2_0 2_0)"), sym("(*_1 2_0 2_0 2_1 2_1)")},
    };
    return table;
}

DiffeoClass canonical_class(const SeifertSymbol& s_in) {
    auto s = normalize(s_in);
    if (s.euler != Q(0))
        throw Error("scope", "out of classification scope: e = " + to_string(s.euler) +
                                 " != 0 (geometry S3, Nil or SL2)");
    for (int x : s.xi)
        if (x == kUnknownXi) throw Error("semantic", "boundary invariant is unknown");
    if (!check_invariant_relation(s).valid)
        throw Error("semantic", "invariant relation violated by " + print_fibration(s));
    DiffeoClass out;
    if (auto fam = match_family(s)) {
        out.geometry = fam->first.c == fam->first.d ? "S2xR" : "bad";
        out.family = fam->first;
        out.canonical = fam->first.member(1, 0);
        out.aliases = {out.canonical};
        return out;
    }
    switch (geometry_class(s.base)) {
        case GeometryClass::flat:
            out.geometry = "flat";
            for (const auto& line : flat_alias_table())
                for (const auto& entry : line)
                    if (entry == s) {
                        out.canonical = line[0];
                        out.aliases = line;
                        return out;
                    }
            break;
        case GeometryClass::spherical: out.geometry = "S2xR"; break;
        case GeometryClass::hyperbolic: out.geometry = "H2xR"; break;
        case GeometryClass::bad: throw Error("internal", "bad base outside the lens family");
    }
    out.canonical = s;
    out.aliases = {s};
    return out;
}

bool are_diffeomorphic(const SeifertSymbol& a, const SeifertSymbol& b) {
    auto ca = canonical_class(a), cb = canonical_class(b);
    return ca.geometry == cb.geometry && ca.canonical == cb.canonical;
}

std::vector<SeifertSymbol> aliases(const SeifertSymbol& s, int bound) {
    if (bound < 1) throw Error("invalid", "bound must be at least 1");
    auto c = canonical_class(s);
    if (c.family) return c.family->members(bound);
    return c.aliases;
}

bool has_infinitely_many_fibrations(const SeifertSymbol& s) {
    const auto b = canonical_base(s.base);
    if (b.handles != 0 || b.crosscaps != 0) return false;
    if (b.boundaries.empty()) return b.cones.size() <= 2;
    return b.boundaries.size() == 1 && b.cones.empty() && b.boundaries[0].size() <= 2;
}

std::string to_string(const AbelianNormalIndex& a) { return a.unique ? std::to_string(a.index) : "multiple"; }

AbelianNormalIndex max_abelian_normal_index(const Orbifold2Symbol& b) {
    if (geometry_class(b) != GeometryClass::spherical)
        throw Error("scope", "maximal abelian normal subgroups need a spherical base, got " + print_base(b));
    auto r = spherical_realization(b);
    auto plus = r.preserving();
    auto maximal = r.group.maximal_abelian_normal(plus);
    if (maximal.size() != 1) return {false, 0};
    return {true, static_cast<int>(r.order() / maximal[0].size())};
}

std::string underlying_space(const SeifertSymbol& s_in) {
    auto s = normalize(s_in);
    auto g = geometry_class(s.base);
    if (g != GeometryClass::spherical && g != GeometryClass::bad)
        throw Error("scope", "underlying space is not computed (out of scope) for " + to_string(g) + " bases");
    if (s.euler != Q(0)) throw Error("scope", "underlying space needs e = 0");
    // drop 0/p features, reduce the rest to lowest terms
    auto reduce = [](const std::vector<LocalInvariant>& v) {
        std::vector<LocalInvariant> out;
        for (const auto& li : v) {
            if (li.m == 0) continue;
            auto k = std::gcd(li.m, li.n);
            out.push_back({li.m / k, li.n / k});
        }
        return out;
    };
    auto cones = reduce(s.cone_invariants);
    std::vector<std::vector<LocalInvariant>> corners;
    for (const auto& cyc : s.corner_invariants) corners.push_back(reduce(cyc));
    const auto& b = s.base;
    if (b.handles == 0 && b.crosscaps == 0 && b.boundaries.size() == 1 && cones.empty()) return "S3";
    if (b.handles == 0 && b.crosscaps == 0 && b.boundaries.empty()) {
        if (cones.empty()) return "S2xS1";
        if (cones.size() == 2 && cones[0].n == cones[1].n && cones[0].m + cones[1].m == cones[0].n) return "S2xS1";
    }
    if (b.handles == 0 && b.crosscaps == 0 && b.boundaries.size() == 1 && corners[0].empty() && s.xi[0] == 1 &&
        cones.size() == 1 && cones[0] == LocalInvariant{1, 2})
        return "RP3";
    if (b.handles == 0 && b.crosscaps == 1 && b.boundaries.empty() && cones.empty()) return "RP3#RP3";
    throw Error("unsupported", "underlying space of " + print_fibration(s) + " is not determined by the reduction rules");
}

std::optional<std::string> distinguishing_invariant(const SeifertSymbol& a, const SeifertSymbol& b) {
    auto ca = canonical_class(a), cb = canonical_class(b);
    if (ca.geometry != cb.geometry) return "geometry";
    auto sa = singular_signature(a), sb = singular_signature(b);
    if (sa.vertices != sb.vertices) return "vertex count";
    if (sa.components != sb.components) return "component count";
    if (sa.vertex_distribution != sb.vertex_distribution) return "vertices per component";
    if (sa.circles_by_index != sb.circles_by_index) return "circles by index";
    if (sa.index_components != sb.index_components) return "components by index";
    if (sa.separable != sb.separable) return "separable by a point";
    if (ca.geometry == "S2xR" || ca.geometry == "bad") {
        std::string ua, ub;
        try {
            ua = underlying_space(a);
            ub = underlying_space(b);
        } catch (const Error& e) {
            if (e.code() != "unsupported") throw;
        }
        if (!ua.empty() && !ub.empty() && ua != ub) return "underlying space";
    }
    if (ca.geometry == "S2xR" && max_abelian_normal_index(a.base) != max_abelian_normal_index(b.base))
        return "maximal abelian normal subgroup";
    if (ca.geometry == "flat") {
        auto pa = fibration_group(normalize(a)), pb = fibration_group(normalize(b));
        auto ga = group_closure(pa.generators, pa.gram), gb = group_closure(pb.generators, pb.gram);
        if (!(point_orbifold(ga) == point_orbifold(gb))) return "point group";
        // orientation-preserving affine conjugacy carries one set onto the other
        if (induced_fibrations(ga) != induced_fibrations(gb)) return "fibrations by parallel lines";
    }
    return std::nullopt;
}

}  // namespace orbiseif
