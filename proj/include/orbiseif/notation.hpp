#pragma once

#include "orbiseif/rational.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace orbiseif {

struct Orbifold2Symbol {
    int handles = 0;
    int crosscaps = 0;
    std::vector<int> cones;
    std::vector<std::vector<int>> boundaries;  // corner orders per boundary, cyclic

    bool is_orientable() const { return crosscaps == 0 && boundaries.empty(); }
    int corner_count() const;
};

// Equality up to the symmetries of the symbol (cone permutation, boundary
// permutation, dihedral moves of corner cycles).
bool operator==(const Orbifold2Symbol& a, const Orbifold2Symbol& b);
bool same_structure(const Orbifold2Symbol& a, const Orbifold2Symbol& b);

struct LocalInvariant {
    std::int64_t m = 0;
    std::int64_t n = 1;
    friend bool operator==(const LocalInvariant&, const LocalInvariant&) = default;
    friend auto operator<=>(const LocalInvariant& a, const LocalInvariant& b) {
        if (a.n != b.n) return a.n <=> b.n;
        return a.m <=> b.m;
    }
    Q value() const { return Q(m, n); }
};

inline constexpr int kUnknownXi = -1;

struct SeifertSymbol {
    Orbifold2Symbol base;
    std::vector<LocalInvariant> cone_invariants;
    std::vector<std::vector<LocalInvariant>> corner_invariants;
    std::vector<int> xi;  // kUnknownXi when omitted on input
    Q euler{0};

    // structural equality (order-sensitive); use normalize() before comparing fibrations
    friend bool operator==(const SeifertSymbol& a, const SeifertSymbol& b) {
        return same_structure(a.base, b.base) && a.cone_invariants == b.cone_invariants &&
               a.corner_invariants == b.corner_invariants && a.xi == b.xi && a.euler == b.euler;
    }
};

// Builds a consistent symbol from invariants (orders taken from the invariants).
SeifertSymbol make_fibration(int handles, int crosscaps, std::vector<LocalInvariant> cones,
                             std::vector<std::vector<LocalInvariant>> corners, std::vector<int> xi,
                             Q euler = Q(0));

enum class Style { conway, standard };

// Canonical ordering of a base: cones descending, each corner cycle rotated/
// reflected to lead with its largest orders, boundaries sorted,
// handles folded into crosscaps when crosscaps > 0.
Orbifold2Symbol canonical_base(const Orbifold2Symbol& b);

Orbifold2Symbol parse_base(std::string_view text);
SeifertSymbol parse_fibration(std::string_view text);
std::string print_base(const Orbifold2Symbol& b, Style style = Style::conway);
std::string print_fibration(const SeifertSymbol& s, Style style = Style::conway);

// Rotation/reflection of a cyclic sequence that is lexicographically
// smallest under the element order `less`.
template <class T, class Less>
std::vector<T> dihedral_min(const std::vector<T>& seq, Less less) {
    const std::size_t h = seq.size();
    auto seq_less = [&](const std::vector<T>& a, const std::vector<T>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), less);
    };
    std::vector<T> best = seq;
    for (int dir : {1, -1}) {
        for (std::size_t s = 0; s < h; ++s) {
            std::vector<T> cand;
            cand.reserve(h);
            for (std::size_t k = 0; k < h; ++k)
                cand.push_back(seq[dir == 1 ? (s + k) % h : (s + h - k) % h]);
            if (seq_less(cand, best)) best = std::move(cand);
        }
    }
    return best;
}

// Canonical element orders: larger index first, then smaller numerator.
inline bool canonical_less(int a, int b) { return a > b; }
inline bool canonical_less(const LocalInvariant& a, const LocalInvariant& b) {
    if (a.n != b.n) return a.n > b.n;
    return a.m < b.m;
}

}  // namespace orbiseif
