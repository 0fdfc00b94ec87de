// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline bool is_even(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

inline std::vector<Perm> symmetric(int n, bool even_only) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        if (!even_only || is_even(p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// cyclic group of order n acting on n points by shifts
inline std::vector<Perm> cyclic(int n) {
    std::vector<Perm> out;
    for (int k = 0; k < n; ++k) {
        Perm p(n);
        for (int i = 0; i < n; ++i) p[i] = (i + k) % n;
        out.push_back(p);
    }
    return out;
}

// dihedral group of order 2n: symmetries of a regular n-gon, with the
// degenerate n = 1, 2 cases realized on 2 and 4 points
inline std::vector<Perm> dihedral(int n) {
    if (n == 1) return {{0, 1}, {1, 0}};
    if (n == 2) return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    std::vector<Perm> out;
    for (int k = 0; k < n; ++k)
        for (int s : {1, -1}) {
            Perm p(n);
            for (int i = 0; i < n; ++i) p[i] = (((s * i + k) % n) + n) % n;
            out.push_back(p);
        }
    return out;
}

// direct product with Z2 (extra two points swapped)
inline std::vector<Perm> times_z2(const std::vector<Perm>& g) {
    std::vector<Perm> out;
    for (const auto& p : g)
        for (int flip : {0, 1}) {
            Perm q = p;
            int n = static_cast<int>(p.size());
            q.push_back(flip ? n + 1 : n);
            q.push_back(flip ? n : n + 1);
            out.push_back(q);
        }
    return out;
}

struct Fingerprint {
    std::size_t order = 0;
    std::map<int, int> histogram;
    bool abelian = false;
    std::size_t center = 0;
    bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const std::vector<Perm>& g) {
    Fingerprint f;
    f.order = g.size();
    Perm id(g[0].size());
    std::iota(id.begin(), id.end(), 0);
    for (const auto& p : g) {
        int k = 1;
        for (Perm q = p; q != id; q = compose(q, p)) ++k;
        ++f.histogram[k];
    }
    f.abelian = true;
    for (const auto& a : g) {
        bool central = true;
        for (const auto& b : g)
            if (compose(a, b) != compose(b, a)) central = false;
        if (central) ++f.center;
        else f.abelian = false;
    }
    return f;
}

inline Fingerprint fingerprint_by_name(const std::string& name) {
    auto num = [&](std::size_t pos) { return std::stoi(name.substr(pos)); };
    if (name == "A5") return fingerprint(symmetric(5, true));
    if (name == "S4") return fingerprint(symmetric(4, false));
    if (name == "A4") return fingerprint(symmetric(4, true));
    if (name == "Z2xA5") return fingerprint(times_z2(symmetric(5, true)));
    if (name == "Z2xS4") return fingerprint(times_z2(symmetric(4, false)));
    if (name == "Z2xA4") return fingerprint(times_z2(symmetric(4, true)));
    if (name.rfind("Z2xD", 0) == 0) return fingerprint(times_z2(dihedral(num(4) / 2)));
    if (name.rfind("Z2xZ", 0) == 0) return fingerprint(times_z2(cyclic(num(4))));
    if (name.rfind("D", 0) == 0) return fingerprint(dihedral(num(1) / 2));
    if (name.rfind("Z", 0) == 0) return fingerprint(cyclic(num(1)));
    return {};
}


inline std::vector<Perm> group_by_name(const std::string& name) {
    auto num = [&](std::size_t pos) { return std::stoi(name.substr(pos)); };
    if (name == "A5") return symmetric(5, true);
    if (name == "S4") return symmetric(4, false);
    if (name == "A4") return symmetric(4, true);
    if (name.rfind("D", 0) == 0) return dihedral(num(1) / 2);
    if (name.rfind("Z", 0) == 0) return cyclic(num(1));
    return {};
}

// Sizes of the inclusion-maximal abelian normal subgroups, by brute force over
// subgroups generated by at most two elements (enough for these groups).
inline std::vector<std::size_t> maximal_abelian_normal_sizes(const std::vector<Perm>& g) {
    auto close = [&](std::set<Perm> s) {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Perm> cur(s.begin(), s.end());
            for (const auto& a : cur)
                for (const auto& b : cur)
                    if (s.insert(compose(a, b)).second) grew = true;
        }
        return s;
    };
    auto inverse = [](const Perm& p) {
        Perm q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
        return q;
    };
    std::set<std::set<Perm>> good;
    for (const auto& a : g)
        for (const auto& b : g) {
            auto h = close({a, b});
            bool ok = true;
            for (const auto& x : h)
                for (const auto& y : h)
                    if (compose(x, y) != compose(y, x)) ok = false;
            for (const auto& x : g)
                for (const auto& y : h)
                    if (ok && !h.count(compose(compose(x, y), inverse(x)))) ok = false;
            if (ok) good.insert(h);
        }
    std::vector<std::size_t> out;
    for (const auto& h : good) {
        bool maximal = true;
        for (const auto& k : good)
            if (k.size() > h.size() && std::includes(k.begin(), k.end(), h.begin(), h.end())) maximal = false;
        if (maximal) out.push_back(h.size());
    }
    return out;
}

// gcd for test arithmetic
inline long long gcd(long long a, long long b) { return b == 0 ? (a < 0 ? -a : a) : gcd(b, a % b); }

}  // namespace oracle
