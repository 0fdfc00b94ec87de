#include "orbiseif/orbifold2.hpp"

#include "orbiseif/error.hpp"

#include <algorithm>
#include <functional>

namespace orbiseif {

std::string to_string(GeometryClass g) {
    switch (g) {
        case GeometryClass::spherical: return "spherical";
        case GeometryClass::flat: return "flat";
        case GeometryClass::hyperbolic: return "hyperbolic";
        case GeometryClass::bad: return "bad";
    }
    return "?";
}

Q euler_characteristic(const Orbifold2Symbol& b) {
    Q chi(2 - 2 * b.handles - b.crosscaps - static_cast<int>(b.boundaries.size()));
    for (int n : b.cones) chi -= Q(1) - Q(1, n);
    for (const auto& cyc : b.boundaries)
        for (int n : cyc) chi -= (Q(1) - Q(1, n)) / 2;
    return chi;
}

GeometryClass geometry_class(const Orbifold2Symbol& in) {
    auto b = canonical_base(in);
    if (b.handles == 0 && b.crosscaps == 0) {
        bool two_distinct = [](const std::vector<int>& v) {
            return v.size() == 2 && v[0] != v[1];
        }(b.cones);
        if (b.boundaries.empty() && (b.cones.size() == 1 || two_distinct)) return GeometryClass::bad;
        if (b.boundaries.size() == 1 && b.cones.empty()) {
            const auto& c = b.boundaries[0];
            if (c.size() == 1 || (c.size() == 2 && c[0] != c[1])) return GeometryClass::bad;
        }
    }
    Q chi = euler_characteristic(b);
    if (chi > Q(0)) return GeometryClass::spherical;
    if (chi == Q(0)) return GeometryClass::flat;
    return GeometryClass::hyperbolic;
}

// ---------------------------------------------------------------- presentation

Word Relation::word() const {
    Word w;
    for (int k = 0; k < power; ++k) w.insert(w.end(), base.begin(), base.end());
    return w;
}

int Presentation::find(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return static_cast<int>(i);
    return -1;
}

int Presentation::orientation(const Word& w) const {
    int s = 1;
    for (const auto& l : w) s *= generators[l.generator].orientation;
    return s;
}

std::string Presentation::format(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ' ';
        out += generators[w[k].generator].name;
        if (w[k].exponent < 0) out += "^-1";
    }
    return out;
}

Presentation fundamental_group_presentation(const Orbifold2Symbol& in) {
    auto b = canonical_base(in);
    Presentation p;
    auto add = [&](std::string name, GeneratorKind kind, int orient) {
        p.generators.push_back({std::move(name), kind, orient});
        return static_cast<int>(p.generators.size()) - 1;
    };
    auto relation = [&](Word base, int power, const std::string& label = "") {
        Relation r{label, std::move(base), power};
        if (r.label.empty()) {
            Presentation tmp = p;
            r.label = (power > 1 && r.base.size() > 1 ? "(" + tmp.format(r.base) + ")"
                                                      : tmp.format(r.base)) +
                      (power > 1 ? "^" + std::to_string(power) : "");
        }
        p.relations.push_back(std::move(r));
    };

    // "**": eliminate d2 = d1^-1 through the global relation
    if (b.handles == 0 && b.crosscaps == 0 && b.cones.empty() && b.boundaries.size() == 2 &&
        b.boundaries[0].empty() && b.boundaries[1].empty()) {
        int d = add("d1", GeneratorKind::boundary_delta, 1);
        int r1 = add("r1_0", GeneratorKind::boundary_rho, -1);
        int r2 = add("r2_0", GeneratorKind::boundary_rho, -1);
        relation({{r1, 1}}, 2);
        relation({{r2, 1}}, 2);
        relation({{d, 1}, {r1, 1}, {d, -1}, {r1, 1}}, 1);
        relation({{d, -1}, {r2, 1}, {d, 1}, {r2, 1}}, 1);
        relation({}, 1, "global");
        p.feature_map.push_back({"boundary 1", {d, r1}});
        p.feature_map.push_back({"boundary 2", {r2}});
        p.eliminated.push_back({"d2", {{d, -1}}});
        return p;
    }

    std::vector<int> xs, ys, zs, gs, ds;
    std::vector<std::vector<int>> rs;
    for (int s = 1; s <= b.handles; ++s) {
        xs.push_back(add("x" + std::to_string(s), GeneratorKind::handle_x, 1));
        ys.push_back(add("y" + std::to_string(s), GeneratorKind::handle_y, 1));
    }
    for (int r = 1; r <= b.crosscaps; ++r)
        zs.push_back(add("z" + std::to_string(r), GeneratorKind::crosscap_z, -1));
    for (std::size_t k = 0; k < b.cones.size(); ++k)
        gs.push_back(add("g" + std::to_string(k + 1), GeneratorKind::cone_gamma, 1));
    for (std::size_t i = 0; i < b.boundaries.size(); ++i) {
        auto tag = std::to_string(i + 1);
        ds.push_back(add("d" + tag, GeneratorKind::boundary_delta, 1));
        rs.emplace_back();
        for (std::size_t j = 0; j <= b.boundaries[i].size(); ++j)
            rs.back().push_back(
                add("r" + tag + "_" + std::to_string(j), GeneratorKind::boundary_rho, -1));
    }

    for (std::size_t k = 0; k < gs.size(); ++k) {
        relation({{gs[k], 1}}, b.cones[k]);
        p.feature_map.push_back({"cone " + std::to_string(k + 1), {gs[k]}});
    }
    for (std::size_t i = 0; i < b.boundaries.size(); ++i) {
        const auto& r = rs[i];
        const std::size_t h = b.boundaries[i].size();
        for (int g : r) relation({{g, 1}}, 2);
        for (std::size_t j = 1; j <= h; ++j) {
            relation({{r[j - 1], 1}, {r[j], 1}}, b.boundaries[i][j - 1]);
            p.feature_map.push_back({"corner " + std::to_string(i + 1) + "." + std::to_string(j),
                                     {r[j - 1], r[j]}});
        }
        relation({{ds[i], 1}, {r[h], 1}, {ds[i], -1}, {r[0], 1}}, 1);
        std::vector<int> gens{ds[i]};
        gens.insert(gens.end(), r.begin(), r.end());
        p.feature_map.push_back({"boundary " + std::to_string(i + 1), gens});
    }
    Word global;
    for (std::size_t s = 0; s < xs.size(); ++s) {
        Word c{{xs[s], 1}, {ys[s], 1}, {xs[s], -1}, {ys[s], -1}};
        global.insert(global.end(), c.begin(), c.end());
    }
    for (int z : zs) {
        global.push_back({z, 1});
        global.push_back({z, 1});
    }
    for (int g : gs) global.push_back({g, 1});
    for (int d : ds) global.push_back({d, 1});
    relation(global, 1, "global");
    return p;
}

// ---------------------------------------------------------------- spherical

std::optional<SphericalFamily> identify_spherical(const Orbifold2Symbol& in) {
    auto b = canonical_base(in);
    if (b.handles != 0) return std::nullopt;
    const auto& c = b.cones;
    auto is = [&](std::vector<int> v) { return c == v; };
    if (b.crosscaps == 0 && b.boundaries.empty()) {
        if (c.empty()) return SphericalFamily{11, 1, "nn"};
        if (c.size() == 2 && c[0] == c[1]) return SphericalFamily{11, c[0], "nn"};
        if (is({5, 3, 2})) return SphericalFamily{1, 0, "532"};
        if (is({4, 3, 2})) return SphericalFamily{3, 0, "432"};
        if (is({3, 3, 2})) return SphericalFamily{5, 0, "332"};
        if (c.size() == 3 && c[1] == 2 && c[2] == 2) return SphericalFamily{8, c[0], "22n"};
        return std::nullopt;
    }
    if (b.crosscaps == 0 && b.boundaries.size() == 1) {
        const auto& k = b.boundaries[0];
        if (c.empty()) {
            if (k.empty()) return SphericalFamily{12, 1, "*nn"};
            if (k.size() == 2 && k[0] == k[1]) return SphericalFamily{12, k[0], "*nn"};
            if (k == std::vector<int>{5, 3, 2}) return SphericalFamily{2, 0, "*532"};
            if (k == std::vector<int>{4, 3, 2}) return SphericalFamily{4, 0, "*432"};
            if (k == std::vector<int>{3, 3, 2}) return SphericalFamily{6, 0, "*332"};
            if (k.size() == 3 && k[1] == 2 && k[2] == 2) return SphericalFamily{9, k[0], "*22n"};
            return std::nullopt;
        }
        if (c.size() == 1 && k.empty()) return SphericalFamily{13, c[0], "n*"};
        if (is({2}) && k.size() == 1) return SphericalFamily{10, k[0], "2*n"};
        if (is({3}) && k == std::vector<int>{2}) return SphericalFamily{7, 0, "3*2"};
        return std::nullopt;
    }
    if (b.crosscaps == 1 && b.boundaries.empty()) {
        if (c.empty()) return SphericalFamily{14, 1, "nx"};
        if (c.size() == 1) return SphericalFamily{14, c[0], "nx"};
    }
    return std::nullopt;
}

namespace {

std::vector<SignedPerm> cyclic(int m, int sign = 1) {
    if (m == 1) return {SignedPerm::identity(1, sign)};
    std::vector<int> cyc(m);
    for (int k = 0; k < m; ++k) cyc[k] = k;
    return {SignedPerm::from_cycles(m, {cyc}, sign)};
}

// Regular action of the dihedral group of order 2m on its own elements
// x -> eps*x + a over Z_m; returns {rotation, reflection}.
std::vector<SignedPerm> dihedral(int m, int rot_sign, int ref_sign) {
    auto idx = [m](int eps, int a) { return ((a % m) + m) % m + (eps < 0 ? m : 0); };
    SignedPerm r, s;
    r.perm.resize(2 * m);
    s.perm.resize(2 * m);
    r.sign = rot_sign;
    s.sign = ref_sign;
    for (int eps : {1, -1})
        for (int a = 0; a < m; ++a) {
            r.perm[idx(eps, a)] = static_cast<std::uint8_t>(idx(eps, a + 1));
            s.perm[idx(eps, a)] = static_cast<std::uint8_t>(idx(-eps, -a));
        }
    return {r, s};
}

std::vector<SignedPerm> with_central_flip(std::vector<SignedPerm> g) {
    g.push_back(SignedPerm::identity(static_cast<int>(g[0].perm.size()), -1));
    return g;
}

std::string num(const char* prefix, int n) { return prefix + std::to_string(n); }

}  // namespace

AmbientGroup ambient_group(const SphericalFamily& f) {
    const int n = f.n;
    auto s4 = [](int sign) {
        return std::vector<SignedPerm>{SignedPerm::from_cycles(4, {{0, 1, 2, 3}}, sign),
                                       SignedPerm::from_cycles(4, {{0, 1}}, sign)};
    };
    const std::vector<SignedPerm> a4{SignedPerm::from_cycles(4, {{0, 1, 2}}),
                                     SignedPerm::from_cycles(4, {{0, 1}, {2, 3}})};
    const std::vector<SignedPerm> a5{SignedPerm::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                     SignedPerm::from_cycles(5, {{0, 1, 2}})};
    switch (f.row) {
        case 1: return {a5, "A5", "A5"};
        case 2: return {with_central_flip(a5), "Z2xA5", "A5"};
        case 3: return {s4(1), "S4", "S4"};
        case 4: return {with_central_flip(s4(1)), "Z2xS4", "S4"};
        case 5: return {a4, "A4", "A4"};
        // sign = parity: the full tetrahedral group is S4, not Z2xA4
        case 6: return {s4(-1), "S4", "A4"};
        case 7: return {with_central_flip(a4), "Z2xA4", "A4"};
        case 8: return {dihedral(n, 1, 1), num("D", 2 * n), num("D", 2 * n)};
        case 9: return {with_central_flip(dihedral(n, 1, 1)), num("Z2xD", 2 * n), num("D", 2 * n)};
        case 10: return {dihedral(2 * n, -1, 1), num("D", 4 * n), num("D", 2 * n)};
        case 11: return {cyclic(n), num("Z", n), num("Z", n)};
        case 12: return {dihedral(n, 1, -1), num("D", 2 * n), num("Z", n)};
        case 13: return {with_central_flip(cyclic(n)), num("Z2xZ", n), num("Z", n)};
        case 14: return {cyclic(2 * n, -1), num("Z", 2 * n), num("Z", n)};
    }
    throw Error("scope", "unknown spherical family");
}

int FiniteRealization::degree() const {
    return static_cast<int>(group.element(0).perm.size());
}

std::optional<std::vector<int>> realize_in(const Presentation& pres, const FiniteGroup& G) {
    const std::size_t ng = pres.generators.size();

    auto eval = [&](const Word& w, const std::vector<int>& img) {
        int x = G.identity();
        for (const auto& l : w) x = G.mul(x, l.exponent > 0 ? img[l.generator] : G.inv(img[l.generator]));
        return x;
    };

    // candidate images per generator
    std::vector<std::vector<int>> cand(ng);
    for (std::size_t g = 0; g < ng; ++g) {
        int want_order = 0;
        for (const auto& r : pres.relations)
            if (r.base.size() == 1 && r.base[0].generator == static_cast<int>(g) && r.power > 1)
                want_order = r.power;
        for (int e = 0; e < static_cast<int>(G.order()); ++e) {
            if (G.element(e).sign != pres.generators[g].orientation) continue;
            if (want_order && G.element_order(e) != want_order) continue;
            cand[g].push_back(e);
        }
    }
    // relations become checkable once their last generator is assigned
    std::vector<std::vector<const Relation*>> due(ng);
    for (const auto& r : pres.relations) {
        int last = -1;
        for (const auto& l : r.base) last = std::max(last, l.generator);
        if (last >= 0) due[last].push_back(&r);
    }
    std::vector<int> img(ng, -1);
    std::function<bool(std::size_t)> search = [&](std::size_t g) -> bool {
        if (g == ng) return G.generated_by(img).size() == G.order();
        for (int e : cand[g]) {
            img[g] = e;
            bool ok = true;
            for (const auto* r : due[g]) {
                int x = eval(r->base, img);
                // exact order for power relations
                if (G.element_order(x) != r->power) {
                    ok = false;
                    break;
                }
            }
            if (ok && search(g + 1)) return true;
        }
        img[g] = -1;
        return false;
    };
    if (!search(0)) return std::nullopt;
    return img;
}

FiniteRealization spherical_realization(const Orbifold2Symbol& b) {
    if (geometry_class(b) != GeometryClass::spherical)
        throw Error("scope", "spherical_realization needs a spherical base, got " + print_base(b));
    auto fam = identify_spherical(b);
    if (!fam) throw Error("scope", "no realization table entry for " + print_base(b));
    auto amb = ambient_group(*fam);
    FiniteRealization out;
    out.presentation = fundamental_group_presentation(b);
    out.group = FiniteGroup::generate(amb.generators);
    out.group_name = amb.name;
    out.preserving_name = amb.preserving_name;
    auto img = realize_in(out.presentation, out.group);
    if (!img) throw Error("internal", "no realization of " + print_base(b) + " inside " + amb.name);
    out.images = *img;
    return out;
}

}  // namespace orbiseif
