#include "orbiseif/finite_group.hpp"

#include "orbiseif/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace orbiseif {

SignedPerm SignedPerm::identity(int degree, int sign) {
    SignedPerm p;
    p.perm.resize(degree);
    std::iota(p.perm.begin(), p.perm.end(), 0);
    p.sign = sign;
    return p;
}

SignedPerm SignedPerm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles,
                                   int sign) {
    auto p = identity(degree, sign);
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k)
            p.perm[c[k]] = static_cast<std::uint8_t>(c[(k + 1) % c.size()]);
    return p;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    SignedPerm r;
    r.perm.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) r.perm[i] = perm[o.perm[i]];
    r.sign = sign * o.sign;
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r;
    r.perm.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) r.perm[perm[i]] = static_cast<std::uint8_t>(i);
    r.sign = sign;
    return r;
}

std::uint64_t FiniteGroup::hash(const SignedPerm& p) {
    std::uint64_t h = p.sign > 0 ? 1469598103934665603ull : 7809847782465536322ull;
    for (auto v : p.perm) h = (h ^ v) * 1099511628211ull;
    return h;
}

int FiniteGroup::index_of(const SignedPerm& p) const {
    auto it = lookup_.find(hash(p));
    if (it == lookup_.end()) return -1;
    for (int i : it->second)
        if (elems_[i] == p) return i;
    return -1;
}

FiniteGroup FiniteGroup::generate(const std::vector<SignedPerm>& gens, std::size_t cap) {
    FiniteGroup g;
    int degree = gens.empty() ? 1 : static_cast<int>(gens[0].perm.size());
    auto add = [&](const SignedPerm& p) {
        g.lookup_[hash(p)].push_back(static_cast<int>(g.elems_.size()));
        g.elems_.push_back(p);
    };
    add(SignedPerm::identity(degree));
    for (std::size_t i = 0; i < g.elems_.size(); ++i) {
        for (const auto& s : gens) {
            auto p = g.elems_[i] * s;
            if (g.index_of(p) < 0) {
                if (g.elems_.size() >= cap) throw Error("closure", "finite group exceeds size cap");
                add(p);
            }
        }
    }
    const std::size_t n = g.elems_.size();
    g.table_.assign(n * n, -1);
    g.inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int c = g.index_of(g.elems_[a] * g.elems_[b]);
            g.table_[a * n + b] = c;
            if (c == 0) g.inverse_[a] = static_cast<int>(b);
        }
    return g;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

std::vector<int> FiniteGroup::all() const {
    std::vector<int> v(elems_.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<int> FiniteGroup::generated_by(const std::vector<int>& gens) const {
    std::vector<char> in(elems_.size(), 0);
    std::vector<int> out{0};
    in[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int s : gens) {
            int p = mul(out[i], s);
            if (!in[p]) {
                in[p] = 1;
                out.push_back(p);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FiniteGroup::orientation_preserving() const {
    std::vector<int> v;
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i].sign > 0) v.push_back(static_cast<int>(i));
    return v;
}

Fingerprint FiniteGroup::fingerprint(const std::vector<int>& h) const {
    Fingerprint f;
    f.order = h.size();
    for (int a : h) ++f.order_histogram[element_order(a)];
    f.abelian = true;
    for (int a : h) {
        bool central = true;
        for (int b : h)
            if (mul(a, b) != mul(b, a)) {
                central = false;
                f.abelian = false;
            }
        if (central) ++f.center_order;
    }
    return f;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes(const std::vector<int>& h) const {
    std::vector<char> seen(elems_.size(), 0);
    std::vector<std::vector<int>> classes;
    for (int a : h) {
        if (seen[a]) continue;
        std::vector<int> cls;
        for (int g : h) {
            int c = mul(mul(g, a), inv(g));
            if (!seen[c]) {
                seen[c] = 1;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::vector<std::vector<int>> FiniteGroup::maximal_abelian_normal(const std::vector<int>& h) const {
    if (fingerprint(h).abelian) {
        auto s = h;
        std::sort(s.begin(), s.end());
        return {s};
    }
    auto classes = conjugacy_classes(h);
    // classes[0] contains the identity (h is sorted with 0 first)
    const std::size_t k = classes.size() - 1;
    if (k > 24) throw Error("unsupported", "too many conjugacy classes for subset enumeration");
    std::vector<std::uint32_t> found;
    std::vector<char> member(elems_.size(), 0);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::size_t size = classes[0].size();
        for (std::size_t c = 0; c < k; ++c)
            if (mask >> c & 1u) size += classes[c + 1].size();
        if (h.size() % size != 0) continue;
        std::vector<int> set = classes[0];
        for (std::size_t c = 0; c < k; ++c)
            if (mask >> c & 1u) set.insert(set.end(), classes[c + 1].begin(), classes[c + 1].end());
        for (int a : set) member[a] = 1;
        bool ok = true;
        for (std::size_t i = 0; ok && i < set.size(); ++i)
            for (std::size_t j = 0; ok && j < set.size(); ++j) {
                int p = mul(set[i], set[j]);
                if (!member[p] || p != mul(set[j], set[i])) ok = false;
            }
        for (int a : set) member[a] = 0;
        if (ok) found.push_back(mask);
    }
    std::vector<std::vector<int>> out;
    for (auto m : found) {
        bool maximal = true;
        for (auto o : found)
            if (o != m && (o & m) == m) maximal = false;
        if (!maximal) continue;
        std::vector<int> set = classes[0];
        for (std::size_t c = 0; c < k; ++c)
            if (m >> c & 1u) set.insert(set.end(), classes[c + 1].begin(), classes[c + 1].end());
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace orbiseif
