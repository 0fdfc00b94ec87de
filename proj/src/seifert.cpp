#include "orbiseif/seifert.hpp"

#include "orbiseif/error.hpp"
#include "orbiseif/orbifold2.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace orbiseif {

Q invariant_total(const SeifertSymbol& s) {
    Q total = s.euler;
    for (const auto& c : s.cone_invariants) total += c.value();
    for (const auto& cyc : s.corner_invariants)
        for (const auto& c : cyc) total += c.value() / 2;
    for (int x : s.xi) {
        if (x == kUnknownXi) throw Error("semantic", "boundary invariant is unknown");
        total += Q(x, 2);
    }
    return total;
}

RelationCheck check_invariant_relation(const SeifertSymbol& s) {
    Q r = frac(invariant_total(s));
    return {r == Q(0), r};
}

SeifertSymbol normalize(const SeifertSymbol& s) {
    SeifertSymbol out;
    out.euler = s.euler;
    auto reduce = [](LocalInvariant li, Q& e, Q unit) {
        auto q = floor_q(Q(li.m, li.n));
        li.m -= q * li.n;
        e += unit * q;
        return li;
    };
    std::vector<LocalInvariant> cones;
    for (const auto& c : s.cone_invariants) {
        auto r = reduce(c, out.euler, Q(1));
        if (r.n != 1) cones.push_back(r);
    }
    std::sort(cones.begin(), cones.end(), [](const LocalInvariant& a, const LocalInvariant& b) {
        return std::tie(b.n, a.m) < std::tie(a.n, b.m);
    });
    std::vector<std::pair<std::vector<LocalInvariant>, int>> bds;
    for (std::size_t i = 0; i < s.corner_invariants.size(); ++i) {
        std::vector<LocalInvariant> cyc;
        for (const auto& c : s.corner_invariants[i]) {
            auto r = reduce(c, out.euler, Q(1, 2));
            if (r.n != 1) cyc.push_back(r);
        }
        bds.emplace_back(dihedral_min(cyc, [](const LocalInvariant& a, const LocalInvariant& b) {
                             return canonical_less(a, b);
                         }),
                         i < s.xi.size() ? s.xi[i] : kUnknownXi);
    }
    // order by corner orders first so the boundary order agrees with canonical_base
    auto key_less = [](const std::vector<LocalInvariant>& a, const std::vector<LocalInvariant>& b,
                       bool orders_only) {
        return std::lexicographical_compare(
            a.begin(), a.end(), b.begin(), b.end(),
            [orders_only](const LocalInvariant& x, const LocalInvariant& y) {
                return orders_only ? x.n > y.n : canonical_less(x, y);
            });
    };
    std::sort(bds.begin(), bds.end(), [&](const auto& a, const auto& b) {
        if (key_less(a.first, b.first, true)) return true;
        if (key_less(b.first, a.first, true)) return false;
        if (key_less(a.first, b.first, false)) return true;
        if (key_less(b.first, a.first, false)) return false;
        return a.second < b.second;
    });
    std::vector<std::vector<LocalInvariant>> corners;
    std::vector<int> xi;
    for (auto& [cyc, x] : bds) {
        corners.push_back(cyc);
        xi.push_back(x);
    }
    int handles = s.base.handles, crosscaps = s.base.crosscaps;
    if (crosscaps > 0) {
        crosscaps += 2 * handles;
        handles = 0;
    }
    return make_fibration(handles, crosscaps, std::move(cones), std::move(corners), std::move(xi),
                          out.euler);
}

FibrationGeometry geometry_of_fibration(const SeifertSymbol& s) {
    auto g = geometry_class(s.base);
    if (s.euler == Q(0)) {
        switch (g) {
            case GeometryClass::spherical: return {"S2xR", true};
            case GeometryClass::flat: return {"R3", true};
            case GeometryClass::hyperbolic: return {"H2xR", true};
            case GeometryClass::bad: return {"bad", true};
        }
    }
    switch (g) {
        case GeometryClass::spherical:
        case GeometryClass::bad: return {"S3", false};
        case GeometryClass::flat: return {"Nil", false};
        case GeometryClass::hyperbolic: return {"SL2", false};
    }
    return {"bad", true};
}

SeifertSymbol complete_boundary_invariant(const SeifertSymbol& s) {
    int unknown = -1, count = 0;
    for (std::size_t i = 0; i < s.xi.size(); ++i)
        if (s.xi[i] == kUnknownXi) {
            unknown = static_cast<int>(i);
            ++count;
        }
    if (count != 1) throw Error("semantic", "expected exactly one unknown boundary invariant");
    SeifertSymbol out = s;
    out.xi[unknown] = 0;
    Q r = frac(invariant_total(out));
    if (r == Q(0)) return out;
    if (r == Q(1, 2)) {
        out.xi[unknown] = 1;
        return out;
    }
    throw Error("inconsistent", "no consistent xi: residue " + to_string(r) +
                                    " is not a multiple of 1/2");
}

std::vector<SeifertSymbol> enumerate_fibrations(const Orbifold2Symbol& base_in) {
    auto base = canonical_base(base_in);
    if (geometry_class(base) == GeometryClass::hyperbolic)
        throw Error("scope", "enumeration over hyperbolic bases is not supported");
    // mixed radix over cone m, corner m, xi
    std::vector<int> radix;
    for (int c : base.cones) radix.push_back(c);
    for (const auto& cyc : base.boundaries)
        for (int c : cyc) radix.push_back(c);
    for (std::size_t i = 0; i < base.boundaries.size(); ++i) radix.push_back(2);

    std::map<std::string, SeifertSymbol> seen;
    std::vector<int> digit(radix.size(), 0);
    while (true) {
        std::size_t k = 0;
        std::vector<LocalInvariant> cones;
        for (int c : base.cones) cones.push_back({digit[k++], c});
        std::vector<std::vector<LocalInvariant>> corners;
        for (const auto& cyc : base.boundaries) {
            corners.emplace_back();
            for (int c : cyc) corners.back().push_back({digit[k++], c});
        }
        std::vector<int> xi;
        for (std::size_t i = 0; i < base.boundaries.size(); ++i) xi.push_back(digit[k++]);
        auto s = make_fibration(base.handles, base.crosscaps, cones, corners, xi);
        if (check_invariant_relation(s).valid) {
            auto n = normalize(s);
            seen.emplace(print_fibration(n), n);
        }
        std::size_t pos = 0;
        while (pos < radix.size() && ++digit[pos] == radix[pos]) digit[pos++] = 0;
        if (pos == radix.size()) break;
    }
    std::vector<SeifertSymbol> out;
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

}  // namespace orbiseif
