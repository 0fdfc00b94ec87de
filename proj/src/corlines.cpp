#include "orbiseif/error.hpp"
#include "orbiseif/euclid.hpp"
#include "orbiseif/orbifold2.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace orbiseif {

namespace {

using Img = AffineIsometryQ;

MatQ m2(Q a, Q b, Q c, Q d) { return MatQ::rows({{a, b}, {c, d}}); }
VecQ v2(Q a, Q b) { return VecQ{a, b}; }
Img at(const MatQ& A, const VecQ& t) { return {A, t}; }
// rotation A about the point c
Img about(const MatQ& A, const VecQ& c) { return {A, c - A * c}; }

const Q h(1, 2);
const MatQ I2 = MatQ::identity(2);
const MatQ minusI = m2(-1, 0, 0, -1);
const MatQ R90 = m2(0, -1, 1, 0);
// hexagonal lattice coordinates
const MatQ hex_gram = m2(1, Q(1, 2), Q(1, 2), 1);
const MatQ R60 = m2(0, -1, 1, 1);
const MatQ R120 = m2(-1, -1, 1, 0);
const MatQ flipx = m2(-1, 0, 0, 1);  // reflection in a vertical line
const MatQ flipy = m2(1, 0, 0, -1);  // reflection in a horizontal line

struct Entry {
    MatQ gram;
    std::map<std::string, Img> images;
};

Entry table_entry(const std::string& key) {
    const VecQ zero = v2(0, 0);
    if (key == "o") return {I2, {{"x1", at(I2, v2(1, 0))}, {"y1", at(I2, v2(0, 1))}}};
    if (key == "2222")
        return {I2, {{"g1", about(minusI, zero)}, {"g2", about(minusI, v2(h, 0))},
                     {"g3", about(minusI, v2(h, h))}, {"g4", about(minusI, v2(0, h))}}};
    if (key == "333")
        return {hex_gram, {{"g1", about(R120, zero)}, {"g2", about(R120, v2(Q(2, 3), Q(-1, 3)))},
                           {"g3", about(R120, v2(Q(1, 3), Q(1, 3)))}}};
    if (key == "442")
        return {I2, {{"g1", about(R90, zero)}, {"g2", about(R90, v2(h, h))}, {"g3", about(minusI, v2(0, h))}}};
    if (key == "632")
        return {hex_gram, {{"g1", about(R60, zero)}, {"g2", about(R120, v2(Q(1, 3), Q(1, 3)))},
                           {"g3", about(minusI, v2(0, h))}}};
    if (key == "*2222") {
        auto r0 = at(flipy, zero);
        return {I2, {{"d1", Img::identity(2)}, {"r1_0", r0}, {"r1_1", at(flipx, v2(1, 0))},
                     {"r1_2", at(flipy, v2(0, 1))}, {"r1_3", at(flipx, zero)}, {"r1_4", r0}}};
    }
    if (key == "*442") {
        auto r0 = at(flipx, v2(1, 0));
        return {I2, {{"d1", Img::identity(2)}, {"r1_0", r0}, {"r1_1", at(m2(0, 1, 1, 0), zero)},
                     {"r1_2", at(flipy, zero)}, {"r1_3", r0}}};
    }
    if (key == "*632") {
        auto r0 = at(m2(1, 1, 0, -1), zero);
        return {hex_gram, {{"d1", Img::identity(2)}, {"r1_0", r0}, {"r1_1", at(m2(1, 0, -1, -1), zero)},
                           {"r1_2", at(m2(-1, -1, 0, 1), v2(1, 0))}, {"r1_3", r0}}};
    }
    if (key == "*333") {
        auto r0 = at(m2(1, 1, 0, -1), zero);
        return {hex_gram, {{"d1", Img::identity(2)}, {"r1_0", r0}, {"r1_1", at(m2(0, -1, -1, 0), v2(1, 1))},
                           {"r1_2", at(m2(-1, 0, 1, 1), zero)}, {"r1_3", r0}}};
    }
    if (key == "4*2") {
        auto g = at(R90, zero);
        auto d = g.inverse();
        auto r1 = at(flipx, v2(1, 0));
        return {I2, {{"g1", g}, {"d1", d}, {"r1_0", d * r1 * d.inverse()}, {"r1_1", r1}}};
    }
    if (key == "3*3") {
        auto g = at(R120, v2(1, 0));
        auto d = g.inverse();
        auto r1 = at(m2(0, -1, -1, 0), zero);
        return {hex_gram, {{"g1", g}, {"d1", d}, {"r1_0", d * r1 * d.inverse()}, {"r1_1", r1}}};
    }
    if (key == "22*")
        return {I2, {{"g1", at(minusI, v2(0, h))}, {"g2", at(minusI, v2(1, h))}, {"d1", at(I2, v2(1, 0))},
                     {"r1_0", at(flipy, zero)}}};
    if (key == "2*22") {
        auto g = at(minusI, v2(h, h));
        return {I2, {{"g1", g}, {"d1", g}, {"r1_0", at(flipy, zero)}, {"r1_1", at(flipx, zero)},
                     {"r1_2", at(flipy, v2(0, 1))}}};
    }
    if (key == "22x")
        return {I2, {{"z1", at(flipx, v2(h, h))}, {"g1", at(minusI, zero)}, {"g2", at(minusI, v2(0, 1))}}};
    if (key == "**")
        return {I2, {{"r1_0", at(flipx, zero)}, {"r2_0", at(flipx, v2(1, 0))}, {"d1", at(I2, v2(0, 1))}}};
    if (key == "*x")
        return {I2, {{"z1", at(flipy, v2(h, h))}, {"d1", at(I2, v2(-1, 0))}, {"r1_0", at(flipy, zero)}}};
    if (key == "xx") return {I2, {{"z1", at(flipy, v2(h, 0))}, {"z2", at(flipy, v2(-h, 1))}}};
    throw Error("scope", "no wallpaper realization for base " + key);
}

}  // namespace

FlatRealization flat_realization(const Orbifold2Symbol& base) {
    auto b = canonical_base(base);
    auto entry = table_entry(print_base(b));
    auto p = fundamental_group_presentation(b);
    FlatRealization out;
    out.gram = entry.gram;
    for (const auto& g : p.generators) {
        auto it = entry.images.find(g.name);
        if (it == entry.images.end()) throw Error("internal", "realization lacks generator " + g.name);
        out.images.push_back(it->second);
    }
    return out;
}

FibrationGroup fibration_group(const SeifertSymbol& s) {
    auto psi = build_psi(s);
    auto real = flat_realization(s.base);
    if (real.images.size() != psi.images.size()) throw Error("internal", "generator count mismatch");
    FibrationGroup out;
    out.gram = MatQ(3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.gram(i, j) = real.gram(i, j);
    out.gram(2, 2) = Q(1);
    for (std::size_t k = 0; k < real.images.size(); ++k) {
        const auto& a = real.images[k];
        const auto& c = psi.images[k];
        MatQ A(3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) A(i, j) = a.A(i, j);
        A(2, 2) = Q(c.sign);
        out.generators.push_back({A, VecQ{a.t[0], a.t[1], c.t}});
    }
    out.generators.push_back(AffineIsometryQ::translation(VecQ{Q(0), Q(0), Q(1)}));
    return out;
}

// ---------------------------------------------------------------- fixtures

static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

static std::vector<Q> numbers(const std::string& s) {
    std::istringstream in(s);
    std::vector<Q> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_q(tok));
    return out;
}

std::vector<AffineIsometryQ> parse_generators(std::string_view text) {
    std::vector<AffineIsometryQ> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto where = " on line " + std::to_string(lineno);
        auto parts = split(line, ';');
        if (parts.size() != 2) throw Error("syntax", "expected 'matrix ; translation'" + where);
        auto rows = split(parts[0], '|');
        int n = static_cast<int>(rows.size());
        if (n != 2 && n != 3) throw Error("syntax", "matrix must have 2 or 3 rows" + where);
        AffineIsometryQ g{MatQ(n), VecQ(n)};
        for (int i = 0; i < n; ++i) {
            auto r = numbers(rows[i]);
            if (static_cast<int>(r.size()) != n) throw Error("syntax", "ragged matrix row" + where);
            for (int j = 0; j < n; ++j) g.A(i, j) = r[j];
        }
        auto t = numbers(parts[1]);
        if (static_cast<int>(t.size()) != n) throw Error("syntax", "translation has wrong length" + where);
        for (int i = 0; i < n; ++i) g.t[i] = t[i];
        if (!out.empty() && out[0].A.n != n) throw Error("syntax", "mixed dimensions" + where);
        out.push_back(g);
    }
    if (out.empty()) throw Error("syntax", "no generators");
    return out;
}

std::vector<AffineIsometryQ> load_generators(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("invalid", "cannot read group file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_generators(ss.str());
}

VecQ parse_direction(std::string_view text, int dim) {
    VecQ v(dim);
    if (text.size() == 2 && text[0] == 'e' && text[1] >= '1' && text[1] < '1' + dim) {
        v[text[1] - '1'] = Q(1);
        return v;
    }
    auto parts = split(std::string(text), ',');
    if (static_cast<int>(parts.size()) != dim) throw Error("syntax", "direction needs " + std::to_string(dim) + " entries");
    for (int i = 0; i < dim; ++i) {
        auto s = parts[i];
        s.erase(0, s.find_first_not_of(' '));
        s.erase(s.find_last_not_of(' ') + 1);
        v[i] = parse_q(s);
    }
    if (v.is_zero()) throw Error("invalid", "zero direction");
    return v;
}

}  // namespace orbiseif
