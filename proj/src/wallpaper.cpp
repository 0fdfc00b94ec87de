#include "orbiseif/error.hpp"
#include "orbiseif/euclid.hpp"
#include "orbiseif/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace orbiseif {

namespace {

// The group rewritten in coordinates of its own lattice (so translations are Z^2),
// with a positively oriented basis.
struct Lat {
    std::vector<MatQ> A;
    std::vector<VecQ> t;
    std::vector<CircleIsometry> c;
    std::array<Q, 2> beta{};

    Motion element(int i, const VecQ& n) const {
        Motion tr{AffineIsometryQ::translation(n), CircleIsometry(beta[0] * n[0] + beta[1] * n[1], 1)};
        return tr * Motion{{A[i], t[i]}, c[i]};
    }
    Motion translation(const VecQ& n) const { return element(0, n); }
    int index(const MatQ& M) const {
        for (std::size_t i = 0; i < A.size(); ++i)
            if (A[i] == M) return static_cast<int>(i);
        return -1;
    }
};

Lat to_lattice(const CrystGroupQ& g) {
    Lat L;
    std::vector<VecQ> basis = g.lattice;
    L.beta = {g.lattice_shift[0], g.lattice_shift[1]};
    if (det(from_columns(basis)) < Q(0)) {
        std::swap(basis[0], basis[1]);
        std::swap(L.beta[0], L.beta[1]);
    }
    MatQ B = from_columns(basis), Bi = inverse(B);
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        L.A.push_back(Bi * g.points[i] * B);
        L.t.push_back(Bi * g.reps[i].g.t);
        L.c.push_back(g.reps[i].c);
    }
    return L;
}

VecQ box(int i, int j) { return VecQ{Q(i), Q(j)}; }

std::vector<Motion> stabilizer(const Lat& L, const VecQ& p) {
    std::vector<Motion> out;
    for (std::size_t i = 0; i < L.A.size(); ++i) {
        VecQ d = p - L.A[i] * p - L.t[i];
        if (d.is_integral()) out.push_back(L.element(static_cast<int>(i), d));
    }
    return out;
}

int order_of(const MatQ& A) {
    MatQ P = A;
    int k = 1;
    while (!(P == MatQ::identity(2))) {
        P = P * A;
        ++k;
    }
    return k;
}

SingularPointData point_data(const Lat& L, const VecQ& p) {
    SingularPointData d;
    d.point = p;
    auto st = stabilizer(L, p);
    int k = 0;
    for (const auto& s : st)
        if (det(s.g.A) == Q(1)) ++k;
    d.order = k;
    d.rotation = st[0];
    for (const auto& s : st) {
        if (det(s.g.A) != Q(1) || order_of(s.g.A) != k) continue;
        if (k == 1 || k == 2 || det2(VecQ{Q(1), Q(0)}, s.g.A * VecQ{Q(1), Q(0)}) > Q(0)) {
            d.rotation = s;
            break;
        }
    }
    return d;
}

bool has_mirror(const Lat& L, const VecQ& p) {
    for (const auto& s : stabilizer(L, p))
        if (det(s.g.A) == Q(-1)) return true;
    return false;
}

// fixed direction of a reflection matrix, primitive integral
VecQ mirror_direction(const MatQ& A) {
    MatQ M = A - MatQ::identity(2);
    auto ker = nullspace({VecQ{M(0, 0), M(0, 1)}, VecQ{M(1, 0), M(1, 1)}}, 2);
    return ker.at(0);
}

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Mirror lines modulo translations: (point-group index, half the signed distance
// functional mod 1).
struct MirrorClasses {
    const Lat& L;
    std::map<std::pair<int, Q>, int> ids;
    std::vector<Motion> reflection;
    UnionFind uf;

    explicit MirrorClasses(const Lat& l) : L(l) {}

    std::pair<int, Q> key(const Motion& r) const {
        int j = L.index(r.g.A);
        Q lambda = frac(det2(mirror_direction(r.g.A), r.g.t) / Q(2));
        return {j, lambda};
    }
    int id(const Motion& r) {
        auto k = key(r);
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        int n = uf.add();
        ids.emplace(k, n);
        reflection.push_back(r);
        return n;
    }
};

}  // namespace

Orbifold2Symbol WallpaperAnalysis::symbol() const {
    Orbifold2Symbol b;
    b.handles = handles;
    b.crosscaps = crosscaps;
    for (const auto& c : cones) b.cones.push_back(c.order);
    for (const auto& bd : boundaries) {
        std::vector<int> k;
        for (const auto& c : bd.corners) k.push_back(c.order);
        b.boundaries.push_back(k);
    }
    return canonical_base(b);
}

WallpaperAnalysis analyze_wallpaper(const CrystGroupQ& g) {
    if (g.dim != 2) throw Error("invalid", "wallpaper analysis needs a plane group");
    const Lat L = to_lattice(g);
    const int np = static_cast<int>(L.A.size());
    const MatQ I = MatQ::identity(2);

    // rotation centres modulo the lattice
    std::vector<VecQ> centres;
    for (int i = 0; i < np; ++i) {
        if (det(L.A[i]) != Q(1) || L.A[i] == I) continue;
        MatQ Mi = inverse(I - L.A[i]);
        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b) {
                VecQ p = frac(Mi * (L.t[i] + box(a, b)));
                if (std::find(centres.begin(), centres.end(), p) == centres.end()) centres.push_back(p);
            }
    }
    std::sort(centres.begin(), centres.end());
    // orbits under the point group cosets
    std::vector<int> orbit(centres.size(), -1);
    std::vector<VecQ> orbit_rep;
    for (std::size_t c = 0; c < centres.size(); ++c) {
        if (orbit[c] >= 0) continue;
        int id = static_cast<int>(orbit_rep.size());
        orbit_rep.push_back(centres[c]);
        for (int i = 0; i < np; ++i) {
            VecQ q = frac(L.A[i] * centres[c] + L.t[i]);
            auto it = std::find(centres.begin(), centres.end(), q);
            if (it == centres.end()) throw Error("internal", "rotation centre orbit left the census");
            orbit[it - centres.begin()] = id;
        }
    }

    WallpaperAnalysis out;
    std::vector<int> corner_orbits;
    Q chi_surface(0);
    for (std::size_t o = 0; o < orbit_rep.size(); ++o) {
        auto d = point_data(L, orbit_rep[o]);
        if (has_mirror(L, orbit_rep[o])) {
            corner_orbits.push_back(static_cast<int>(o));
            chi_surface += Q(1, 2) * (Q(1) - Q(1, d.order));
        } else {
            out.cones.push_back(d);
            chi_surface += Q(1) - Q(1, d.order);
        }
    }

    // mirror classes, glued by the group action and by corners
    MirrorClasses mc(L);
    for (int j = 0; j < np; ++j) {
        if (det(L.A[j]) != Q(-1)) continue;
        for (int a = -4; a <= 4; ++a)
            for (int b = -4; b <= 4; ++b) {
                auto r = L.element(j, box(a, b));
                if ((r.g.A * r.g.t + r.g.t).is_zero()) mc.id(r);
            }
    }
    for (std::size_t k = 0; k < mc.reflection.size(); ++k)
        for (int i = 0; i < np; ++i) {
            auto h = L.element(i, VecQ(2));
            mc.uf.unite(static_cast<int>(k), mc.id(h * mc.reflection[k] * h.inverse()));
        }
    for (int o : corner_orbits) {
        int first = -1;
        for (const auto& s : stabilizer(L, orbit_rep[o])) {
            if (det(s.g.A) != Q(-1)) continue;
            int id = mc.id(s);
            if (first < 0) first = id;
            else mc.uf.unite(first, id);
        }
    }
    std::vector<int> roots;
    for (std::size_t k = 0; k < mc.reflection.size(); ++k) {
        int r = mc.uf.find(static_cast<int>(k));
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    const int b = static_cast<int>(roots.size());

    Q kq = Q(2 - b) - chi_surface;
    if (!is_integer(kq) || kq < Q(0)) throw Error("internal", "wallpaper census is inconsistent");
    int k = static_cast<int>(kq.numerator());
    bool reversing = false;
    for (const auto& A : L.A)
        if (det(A) == Q(-1)) reversing = true;
    if (k == 2 && b == 0 && out.cones.empty() && !reversing) out.handles = 1;
    else out.crosscaps = k;

    for (int root : roots) {
        WallpaperAnalysis::Boundary bd;
        // corners on this boundary
        int start_orbit = -1;
        Motion sigma;
        for (int o : corner_orbits) {
            for (const auto& s : stabilizer(L, orbit_rep[o]))
                if (det(s.g.A) == Q(-1) && mc.uf.find(mc.id(s)) == root) {
                    start_orbit = o;
                    sigma = s;
                    break;
                }
            if (start_orbit >= 0) break;
        }
        if (start_orbit < 0) {
            // corner-free: the loop is the primitive translation along the mirror
            int any = -1;
            for (std::size_t q = 0; q < mc.reflection.size(); ++q)
                if (mc.uf.find(static_cast<int>(q)) == root) {
                    any = static_cast<int>(q);
                    break;
                }
            bd.loop = L.translation(mirror_direction(mc.reflection[any].g.A));
            out.boundaries.push_back(bd);
            continue;
        }
        // walk along the boundary keeping the quotient on the left
        const VecQ p0 = orbit_rep[start_orbit];
        const VecQ d0 = mirror_direction(sigma.g.A);
        VecQ p = p0, d = d0;
        for (int step = 0;; ++step) {
            if (step > 32) throw Error("internal", "boundary walk did not close");
            auto pd = point_data(L, p);
            bd.corners.push_back(pd);
            Motion out_mirror = pd.rotation.inverse() * sigma;
            VecQ e = mirror_direction(out_mirror.g.A);
            if (det2(d, e) < Q(0)) e = -e;
            // unimodular completion of e
            std::int64_t x = 0, y = 0;
            {
                std::int64_t a0 = e[0].numerator(), b0 = e[1].numerator();
                // extended Euclid for a0*x + b0*y = 1
                std::int64_t r0 = a0, r1 = b0, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
                while (r1 != 0) {
                    std::int64_t q = r0 / r1;
                    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
                    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
                    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
                }
                if (r0 < 0) {
                    s0 = -s0;
                    t0 = -t0;
                }
                x = s0;
                y = t0;
            }
            MatQ E = from_columns({e, VecQ{Q(-y), Q(x)}});
            MatQ Ei = inverse(E);
            Q best(2);
            for (std::size_t c = 0; c < centres.size(); ++c) {
                if (std::find(corner_orbits.begin(), corner_orbits.end(), orbit[c]) == corner_orbits.end())
                    continue;
                VecQ su = Ei * (centres[c] - p);
                if (!is_integer(su[1])) continue;
                Q s = frac(su[0]);
                if (s == Q(0)) s = Q(1);
                best = std::min(best, s);
            }
            if (best > Q(1)) throw Error("internal", "mirror without a next corner");
            VecQ next = p + best * e;
            VecQ n = floor_v(next);
            auto shift = L.translation(-n);
            p = next - n;
            d = e;
            sigma = shift * out_mirror * shift.inverse();
            bool closed = false;
            for (int i = 0; i < np && !closed; ++i)
                if ((L.A[i] * p0 + L.t[i] - p).is_integral() && L.A[i] * d0 == d) closed = true;
            if (closed) break;
        }
        out.boundaries.push_back(bd);
    }
    return out;
}

Orbifold2Symbol classify_wallpaper(const CrystGroupQ& g) { return analyze_wallpaper(g).symbol(); }

SeifertSymbol induced_fibration(const CrystGroupQ& g, const VecQ& v) {
    if (!g.orientation_preserving()) throw Error("scope", "orientation-reversing space group");
    auto h = horizontal_part(g, v);
    auto w = analyze_wallpaper(h.group);
    auto local = [](const SingularPointData& d) {
        if (d.rotation.c.sign < 0) throw Error("internal", "rotation lifts to a fiber reflection");
        Q m = mod_q(-d.rotation.c.t * Q(d.order), Q(d.order));
        if (!is_integer(m)) throw Error("internal", "rotation lift is not of finite order");
        return LocalInvariant{static_cast<int>(m.numerator()), d.order};
    };
    std::vector<LocalInvariant> cones;
    for (const auto& c : w.cones) cones.push_back(local(c));
    std::vector<std::vector<LocalInvariant>> corners;
    std::vector<int> xi;
    bool unknown = false;
    for (const auto& bd : w.boundaries) {
        std::vector<LocalInvariant> k;
        for (const auto& c : bd.corners) k.push_back(local(c));
        corners.push_back(k);
        if (bd.loop) {
            Q x = mod_q(-Q(2) * bd.loop->c.t, Q(2));
            xi.push_back(static_cast<int>(x.numerator()));
        } else {
            xi.push_back(kUnknownXi);
            unknown = true;
        }
    }
    auto s = make_fibration(w.handles, w.crosscaps, cones, corners, xi, Q(0));
    if (unknown) s = complete_boundary_invariant(s);
    return normalize(s);
}

std::vector<SeifertSymbol> induced_fibrations(const CrystGroupQ& g) {
    auto d = invariant_directions(g);
    std::vector<VecQ> dirs = d.lines;
    for (const auto& [p, q] : d.planes)
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j) {
                if (i == 0 && j == 0) continue;
                VecQ v(3);
                for (int k = 0; k < 3; ++k) v[k] = Q(i) * p[k] + Q(j) * q[k];
                dirs.push_back(v);
            }
    if (d.all)
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                for (int k = -1; k <= 1; ++k)
                    if (i || j || k) dirs.push_back(VecQ{Q(i), Q(j), Q(k)});
    std::map<std::string, SeifertSymbol> seen;
    for (const auto& v : dirs) {
        if (!has_translation_in_direction(g, v)) continue;
        auto s = induced_fibration(g, v);
        seen.emplace(print_fibration(s), s);
    }
    std::vector<SeifertSymbol> out;
    for (auto& [k, s] : seen) out.push_back(s);
    return out;
}

}  // namespace orbiseif
