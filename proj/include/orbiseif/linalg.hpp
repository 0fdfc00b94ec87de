#pragma once

#include "orbiseif/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace orbiseif {

// Vectors and matrices of dimension 2 or 3 over Q.
struct VecQ {
    int n = 0;
    std::array<Q, 3> v{};

    VecQ() = default;
    explicit VecQ(int dim) : n(dim) {}
    VecQ(std::initializer_list<Q> xs);
    Q& operator[](int i) { return v[i]; }
    const Q& operator[](int i) const { return v[i]; }
    bool is_zero() const;
    bool is_integral() const;
    friend bool operator==(const VecQ& a, const VecQ& b) { return a.n == b.n && a.v == b.v; }
    friend bool operator<(const VecQ& a, const VecQ& b);
};

VecQ operator+(const VecQ& a, const VecQ& b);
VecQ operator-(const VecQ& a, const VecQ& b);
VecQ operator-(const VecQ& a);
VecQ operator*(const Q& s, const VecQ& a);
VecQ frac(const VecQ& a);   // coordinatewise into [0,1)
VecQ floor_v(const VecQ& a);
std::string to_string(const VecQ& a);

struct MatQ {
    int n = 0;
    std::array<Q, 9> a{};

    MatQ() = default;
    explicit MatQ(int dim) : n(dim) {}
    static MatQ identity(int dim);
    static MatQ diag(const std::vector<Q>& d);
    static MatQ rows(const std::vector<std::vector<Q>>& r);
    Q& operator()(int i, int j) { return a[i * 3 + j]; }
    const Q& operator()(int i, int j) const { return a[i * 3 + j]; }
    VecQ col(int j) const;
    friend bool operator==(const MatQ& x, const MatQ& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator<(const MatQ& x, const MatQ& y) { return x.a < y.a; }
};

MatQ operator*(const MatQ& x, const MatQ& y);
VecQ operator*(const MatQ& x, const VecQ& v);
MatQ operator+(const MatQ& x, const MatQ& y);
MatQ operator-(const MatQ& x, const MatQ& y);
MatQ transpose(const MatQ& x);
Q det(const MatQ& x);
MatQ inverse(const MatQ& x);  // throws on singular
MatQ from_columns(const std::vector<VecQ>& cols);
std::string to_string(const MatQ& x);

// 2D orientation of a pair
Q det2(const VecQ& a, const VecQ& b);
Q dot(const VecQ& a, const MatQ& gram, const VecQ& b);

// Basis of the kernel of the stacked rows (each row has length dim).
std::vector<VecQ> nullspace(const std::vector<VecQ>& rows, int dim);

// Scales to the primitive integer vector on the same ray.
VecQ primitive(const VecQ& v);

// A lattice vector together with a value in Q/Z carried along linearly.
struct LatticeRow {
    VecQ v;
    Q payload{0};
};

// Echelon basis of the Z-span of the rows. Payloads follow the integer row
// operations mod 1; a dependency whose payload is not 0 mod 1 throws
// "inconsistent".
std::vector<LatticeRow> lattice_basis(const std::vector<LatticeRow>& rows, int dim);

}  // namespace orbiseif
