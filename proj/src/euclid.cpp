#include "orbiseif/euclid.hpp"

#include "orbiseif/error.hpp"

#include <algorithm>
#include <map>

namespace orbiseif {

AffineIsometryQ AffineIsometryQ::inverse() const {
    auto Ai = orbiseif::inverse(A);
    return {Ai, -(Ai * t)};
}

AffineIsometryQ operator*(const AffineIsometryQ& a, const AffineIsometryQ& b) {
    return {a.A * b.A, a.A * b.t + a.t};
}

std::string to_string(const AffineIsometryQ& g) { return "(" + to_string(g.A) + ", " + to_string(g.t) + ")"; }

Motion operator*(const Motion& a, const Motion& b) { return {a.g * b.g, compose(a.c, b.c)}; }

int CrystGroupQ::point_index(const MatQ& A) const {
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == A) return static_cast<int>(i);
    return -1;
}

VecQ CrystGroupQ::lattice_coords(const VecQ& v) const { return inverse(from_columns(lattice)) * v; }

bool CrystGroupQ::orientation_preserving() const {
    for (const auto& A : points)
        if (det(A) != Q(1)) return false;
    return true;
}

Motion CrystGroupQ::element(int i, const VecQ& n) const {
    VecQ shift(dim);
    Q rot(0);
    for (int k = 0; k < dim; ++k) {
        shift = shift + n[k] * lattice[k];
        rot += n[k] * lattice_shift[k];
    }
    Motion tr{AffineIsometryQ::translation(shift), CircleIsometry(rot, 1)};
    return tr * reps[i];
}

bool CrystGroupQ::contains(const AffineIsometryQ& g) const {
    int i = point_index(g.A);
    if (i < 0) return false;
    return lattice_coords(g.t - reps[i].g.t).is_integral();
}

CrystGroupQ group_closure(const std::vector<Motion>& gens, const MatQ& gram) {
    if (gens.empty()) throw Error("invalid", "no generators");
    CrystGroupQ G;
    G.dim = gens[0].g.A.n;
    G.gram = gram;
    G.generators = gens;
    for (const auto& s : gens) {
        if (s.g.A.n != G.dim || s.g.t.n != G.dim) throw Error("invalid", "generators of mixed dimension");
        if (transpose(s.g.A) * gram * s.g.A != gram)
            throw Error("invalid", "linear part " + to_string(s.g.A) + " is not orthogonal");
    }
    const std::size_t cap = 96;
    G.points.push_back(MatQ::identity(G.dim));
    G.reps.push_back({AffineIsometryQ::identity(G.dim), CircleIsometry::identity()});
    for (std::size_t i = 0; i < G.points.size(); ++i)
        for (const auto& s : gens) {
            MatQ B = G.points[i] * s.g.A;
            if (G.point_index(B) >= 0) continue;
            if (G.points.size() >= cap) throw Error("closure", "closure did not stabilize within bound");
            G.points.push_back(B);
            G.reps.push_back(G.reps[i] * s);
        }
    // kernel of the point-group map, from the Schreier generators
    std::vector<LatticeRow> rows;
    for (std::size_t i = 0; i < G.points.size(); ++i)
        for (const auto& s : gens) {
            int j = G.point_index(G.points[i] * s.g.A);
            Motion u = G.reps[i] * s * G.reps[j].inverse();
            if (u.c.sign < 0)
                throw Error("scope", "a translation reverses the fiber direction");
            rows.push_back({u.g.t, u.c.t});
        }
    auto basis = lattice_basis(rows, G.dim);
    if (static_cast<int>(basis.size()) < G.dim) throw Error("closure", "lattice rank < n");
    for (const auto& r : basis) {
        G.lattice.push_back(r.v);
        G.lattice_shift.push_back(r.payload);
    }
    // move representatives into the fundamental cell
    for (auto& r : G.reps) {
        VecQ n = floor_v(G.lattice_coords(r.g.t));
        r = G.element(0, -n) * r;
    }
    return G;
}

CrystGroupQ group_closure(const std::vector<AffineIsometryQ>& gens, const MatQ& gram) {
    std::vector<Motion> m;
    for (const auto& g : gens) m.push_back({g, CircleIsometry::identity()});
    return group_closure(m, gram);
}

CrystGroupQ group_closure(const std::vector<AffineIsometryQ>& gens) {
    if (gens.empty()) throw Error("invalid", "no generators");
    return group_closure(gens, MatQ::identity(gens[0].A.n));
}

static int matrix_order(const MatQ& A) {
    MatQ I = MatQ::identity(A.n), P = A;
    int k = 1;
    while (!(P == I)) {
        P = P * A;
        if (++k > 48) throw Error("closure", "linear part of infinite order");
    }
    return k;
}

Orbifold2Symbol point_orbifold(const CrystGroupQ& g) {
    if (g.dim != 3) throw Error("invalid", "point orbifold needs a space group");
    if (!g.orientation_preserving()) throw Error("scope", "orientation-reversing space group");
    const int order = static_cast<int>(g.points.size());
    int max_order = 1;
    for (const auto& A : g.points) max_order = std::max(max_order, matrix_order(A));
    auto name = [](int n) { return n < 10 ? std::to_string(n) : "(" + std::to_string(n) + ")"; };
    if (order == 1) return parse_base("1");
    if (max_order == order) return parse_base(name(order) + name(order));
    if (order == 24 && max_order == 4) return parse_base("432");
    if (order == 12 && max_order == 3) return parse_base("332");
    if (order == 4 && max_order == 2) return parse_base("222");
    if (2 * max_order == order) return parse_base("22" + name(max_order));
    throw Error("internal", "unrecognized point group of order " + std::to_string(order));
}

static VecQ sign_normalized(VecQ v) {
    v = primitive(v);
    for (int i = 0; i < v.n; ++i)
        if (v[i] != Q(0)) return v[i] < Q(0) ? -v : v;
    return v;
}

std::string InvariantDirections::kind() const {
    if (all) return "all";
    if (!planes.empty()) return "axis_plus_plane";
    return "finite";
}

bool InvariantDirections::contains(const VecQ& v) const {
    if (all) return true;
    auto u = sign_normalized(v);
    for (const auto& l : lines)
        if (l == u) return true;
    for (const auto& [a, b] : planes) {
        MatQ m = from_columns({a, b, v});
        if (det(m) == Q(0)) return true;
    }
    return false;
}

InvariantDirections invariant_directions(const CrystGroupQ& g) {
    InvariantDirections out;
    std::vector<MatQ> gens;
    for (const auto& s : g.generators)
        if (!(s.g.A == MatQ::identity(g.dim)) &&
            std::find(gens.begin(), gens.end(), s.g.A) == gens.end())
            gens.push_back(s.g.A);
    if (gens.empty()) {
        out.all = true;
        return out;
    }
    const MatQ I = MatQ::identity(g.dim);
    for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
        std::vector<VecQ> rows;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            MatQ M = (mask >> k & 1u) ? gens[k] + I : gens[k] - I;
            for (int r = 0; r < g.dim; ++r) {
                VecQ row(g.dim);
                for (int c = 0; c < g.dim; ++c) row[c] = M(r, c);
                rows.push_back(row);
            }
        }
        auto ker = nullspace(rows, g.dim);
        if (static_cast<int>(ker.size()) == g.dim) {
            out.all = true;
        } else if (ker.size() == 2 && g.dim == 3) {
            out.planes.push_back({ker[0], ker[1]});
        } else if (ker.size() == 1) {
            auto v = sign_normalized(ker[0]);
            if (std::find(out.lines.begin(), out.lines.end(), v) == out.lines.end()) out.lines.push_back(v);
        }
    }
    std::sort(out.lines.begin(), out.lines.end());
    return out;
}

std::optional<VecQ> translation_in_direction(const CrystGroupQ& g, const VecQ& v) {
    if (v.is_zero()) return std::nullopt;
    for (const auto& A : g.points) {
        VecQ w = A * v;
        if (!(w == v) && !(w == -v)) return std::nullopt;
    }
    // every rational ray meets a full-rank lattice
    VecQ c = primitive(g.lattice_coords(v));
    VecQ out(g.dim);
    for (int k = 0; k < g.dim; ++k) out = out + c[k] * g.lattice[k];
    return out;
}

bool has_translation_in_direction(const CrystGroupQ& g, const VecQ& v) {
    return translation_in_direction(g, v).has_value();
}

HorizontalPart horizontal_part(const CrystGroupQ& g, const VecQ& v) {
    if (g.dim != 3) throw Error("invalid", "horizontal part needs a space group");
    auto vt = translation_in_direction(g, v);
    if (!vt) throw Error("invalid", "direction " + to_string(v) + " is not invariant");
    HorizontalPart out;
    out.vertical = *vt;
    // plane orthogonal to v for the metric
    VecQ gv = g.gram * *vt;
    auto perp = nullspace({gv}, 3);
    MatQ M = from_columns({perp[0], perp[1], *vt});
    MatQ Mi = inverse(M);
    std::vector<LatticeRow> rows;
    for (const auto& b : g.lattice) {
        VecQ c = Mi * b;
        rows.push_back({VecQ{c[0], c[1]}, Q(0)});
    }
    auto hb = lattice_basis(rows, 2);
    VecQ h1 = hb[0].v[0] * perp[0] + hb[0].v[1] * perp[1];
    VecQ h2 = hb[1].v[0] * perp[0] + hb[1].v[1] * perp[1];
    if (det(from_columns({h1, h2, *vt})) < Q(0)) std::swap(h1, h2);
    out.frame = {h1, h2, *vt};
    MatQ F = from_columns(out.frame), Fi = inverse(F);
    MatQ gram2(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gram2(i, j) = dot(out.frame[i], g.gram, out.frame[j]);
    for (const auto& s : g.generators) {
        MatQ A = Fi * s.g.A * F;
        VecQ t = Fi * s.g.t;
        if (A(0, 2) != Q(0) || A(1, 2) != Q(0) || A(2, 0) != Q(0) || A(2, 1) != Q(0))
            throw Error("internal", "generator does not split along the direction");
        MatQ A2(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) A2(i, j) = A(i, j);
        int eps = A(2, 2) == Q(1) ? 1 : -1;
        out.generators.push_back({{A2, VecQ{t[0], t[1]}}, CircleIsometry(t[2], eps)});
    }
    out.group = group_closure(out.generators, gram2);
    return out;
}

}  // namespace orbiseif
