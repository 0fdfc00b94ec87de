#include "orbiseif/linalg.hpp"

#include "orbiseif/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace orbiseif {

VecQ::VecQ(std::initializer_list<Q> xs) : n(static_cast<int>(xs.size())) {
    int i = 0;
    for (const auto& x : xs) v[i++] = x;
}

bool VecQ::is_zero() const {
    for (int i = 0; i < n; ++i)
        if (v[i] != Q(0)) return false;
    return true;
}

bool VecQ::is_integral() const {
    for (int i = 0; i < n; ++i)
        if (v[i].denominator() != 1) return false;
    return true;
}

bool operator<(const VecQ& a, const VecQ& b) {
    for (int i = 0; i < a.n; ++i)
        if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
    return false;
}

VecQ operator+(const VecQ& a, const VecQ& b) {
    VecQ r(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = a[i] + b[i];
    return r;
}

VecQ operator-(const VecQ& a, const VecQ& b) {
    VecQ r(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = a[i] - b[i];
    return r;
}

VecQ operator-(const VecQ& a) {
    VecQ r(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = -a[i];
    return r;
}

VecQ operator*(const Q& s, const VecQ& a) {
    VecQ r(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = s * a[i];
    return r;
}

VecQ frac(const VecQ& a) {
    VecQ r(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = frac(a[i]);
    return r;
}

VecQ floor_v(const VecQ& a) {
    VecQ r(a.n);
    for (int i = 0; i < a.n; ++i) r[i] = Q(floor_q(a[i]));
    return r;
}

std::string to_string(const VecQ& a) {
    std::string s = "(";
    for (int i = 0; i < a.n; ++i) s += (i ? "," : "") + to_string(a[i]);
    return s + ")";
}

MatQ MatQ::identity(int dim) {
    MatQ m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Q(1);
    return m;
}

MatQ MatQ::diag(const std::vector<Q>& d) {
    MatQ m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n; ++i) m(i, i) = d[i];
    return m;
}

MatQ MatQ::rows(const std::vector<std::vector<Q>>& r) {
    MatQ m(static_cast<int>(r.size()));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m(i, j) = r[i][j];
    return m;
}

VecQ MatQ::col(int j) const {
    VecQ c(n);
    for (int i = 0; i < n; ++i) c[i] = (*this)(i, j);
    return c;
}

MatQ operator*(const MatQ& x, const MatQ& y) {
    MatQ r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            Q s(0);
            for (int k = 0; k < x.n; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

VecQ operator*(const MatQ& x, const VecQ& v) {
    VecQ r(x.n);
    for (int i = 0; i < x.n; ++i) {
        Q s(0);
        for (int k = 0; k < x.n; ++k) s += x(i, k) * v[k];
        r[i] = s;
    }
    return r;
}

MatQ operator+(const MatQ& x, const MatQ& y) {
    MatQ r(x.n);
    for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

MatQ operator-(const MatQ& x, const MatQ& y) {
    MatQ r(x.n);
    for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

MatQ transpose(const MatQ& x) {
    MatQ r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r(i, j) = x(j, i);
    return r;
}

Q det(const MatQ& m) {
    if (m.n == 1) return m(0, 0);
    if (m.n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

MatQ inverse(const MatQ& m) {
    Q d = det(m);
    if (d == Q(0)) throw Error("internal", "singular matrix");
    MatQ r(m.n);
    if (m.n == 2) {
        r(0, 0) = m(1, 1) / d;
        r(0, 1) = -m(0, 1) / d;
        r(1, 0) = -m(1, 0) / d;
        r(1, 1) = m(0, 0) / d;
        return r;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r(i, j) = (m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1)) / d;
        }
    return r;
}

MatQ from_columns(const std::vector<VecQ>& cols) {
    MatQ m(static_cast<int>(cols.size()));
    for (int j = 0; j < m.n; ++j)
        for (int i = 0; i < m.n; ++i) m(i, j) = cols[j][i];
    return m;
}

std::string to_string(const MatQ& x) {
    std::string s = "[";
    for (int i = 0; i < x.n; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < x.n; ++j) s += (j ? " " : "") + to_string(x(i, j));
    }
    return s + "]";
}

Q det2(const VecQ& a, const VecQ& b) { return a[0] * b[1] - a[1] * b[0]; }

Q dot(const VecQ& a, const MatQ& g, const VecQ& b) {
    Q s(0);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) s += a[i] * g(i, j) * b[j];
    return s;
}

std::vector<VecQ> nullspace(const std::vector<VecQ>& rows_in, int dim) {
    std::vector<VecQ> rows = rows_in;
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < dim && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == Q(0)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Q lead = rows[r][c];
        rows[r] = (Q(1) / lead) * rows[r];
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c] != Q(0)) rows[i] = rows[i] - rows[i][c] * rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<VecQ> out;
    for (int f = 0; f < dim; ++f) {
        if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
        VecQ v(dim);
        v[f] = Q(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][f];
        out.push_back(primitive(v));
    }
    return out;
}

VecQ primitive(const VecQ& v) {
    std::int64_t l = 1;
    for (int i = 0; i < v.n; ++i) l = std::lcm(l, v[i].denominator());
    std::int64_t g = 0;
    for (int i = 0; i < v.n; ++i) g = std::gcd(g, (v[i] * Q(l)).numerator());
    if (g == 0) return v;
    return Q(l, g) * v;
}

std::vector<LatticeRow> lattice_basis(const std::vector<LatticeRow>& in, int dim) {
    std::int64_t den = 1;
    for (const auto& r : in)
        for (int i = 0; i < dim; ++i) den = std::lcm(den, r.v[i].denominator());
    struct Row {
        std::array<std::int64_t, 3> x{};
        Q p{0};
    };
    std::vector<Row> rows;
    for (const auto& r : in) {
        Row w;
        for (int i = 0; i < dim; ++i) w.x[i] = (r.v[i] * Q(den)).numerator();
        w.p = frac(r.payload);
        rows.push_back(w);
    }
    std::size_t rank = 0;
    for (int c = 0; c < dim; ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = rank; i < rows.size(); ++i)
                if (rows[i].x[c] != 0 &&
                    (best == rows.size() || std::abs(rows[i].x[c]) < std::abs(rows[best].x[c])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[rank], rows[best]);
            bool done = true;
            for (std::size_t i = rank + 1; i < rows.size(); ++i) {
                if (rows[i].x[c] == 0) continue;
                std::int64_t q = rows[i].x[c] / rows[rank].x[c];
                for (int k = 0; k < dim; ++k) rows[i].x[k] -= q * rows[rank].x[k];
                rows[i].p = frac(rows[i].p - Q(q) * rows[rank].p);
                if (rows[i].x[c] != 0) done = false;
            }
            if (done) {
                if (rows[rank].x[c] < 0) {
                    for (int k = 0; k < dim; ++k) rows[rank].x[k] = -rows[rank].x[k];
                    rows[rank].p = frac(-rows[rank].p);
                }
                ++rank;
                break;
            }
        }
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i].p != Q(0))
            throw Error("inconsistent", "lattice relation carries a nonzero vertical shift " +
                                            to_string(rows[i].p));
    std::vector<LatticeRow> out;
    for (std::size_t i = 0; i < rank; ++i) {
        LatticeRow r;
        r.v = VecQ(dim);
        for (int k = 0; k < dim; ++k) r.v[k] = Q(rows[i].x[k], den);
        r.payload = rows[i].p;
        out.push_back(r);
    }
    return out;
}

}  // namespace orbiseif
