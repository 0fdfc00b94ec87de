#include "orbiseif/notation.hpp"

#include "orbiseif/error.hpp"
#include "orbiseif/seifert.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <tuple>

namespace orbiseif {

int Orbifold2Symbol::corner_count() const {
    int c = 0;
    for (const auto& b : boundaries) c += static_cast<int>(b.size());
    return c;
}

Orbifold2Symbol canonical_base(const Orbifold2Symbol& in) {
    Orbifold2Symbol b;
    b.handles = in.handles;
    b.crosscaps = in.crosscaps;
    if (b.crosscaps > 0) {
        // o x = x x x
        b.crosscaps += 2 * b.handles;
        b.handles = 0;
    }
    for (int c : in.cones)
        if (c != 1) b.cones.push_back(c);
    std::sort(b.cones.begin(), b.cones.end(), std::greater<>());
    for (const auto& cyc : in.boundaries) {
        std::vector<int> kept;
        for (int c : cyc)
            if (c != 1) kept.push_back(c);
        b.boundaries.push_back(
            dihedral_min(kept, [](int x, int y) { return canonical_less(x, y); }));
    }
    std::sort(b.boundaries.begin(), b.boundaries.end(), [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                            [](int u, int v) { return canonical_less(u, v); });
    });
    return b;
}

bool same_structure(const Orbifold2Symbol& a, const Orbifold2Symbol& b) {
    return a.handles == b.handles && a.crosscaps == b.crosscaps && a.cones == b.cones &&
           a.boundaries == b.boundaries;
}

bool operator==(const Orbifold2Symbol& a, const Orbifold2Symbol& b) {
    return same_structure(canonical_base(a), canonical_base(b));
}

SeifertSymbol make_fibration(int handles, int crosscaps, std::vector<LocalInvariant> cones,
                             std::vector<std::vector<LocalInvariant>> corners, std::vector<int> xi,
                             Q euler) {
    SeifertSymbol s;
    s.base.handles = handles;
    s.base.crosscaps = crosscaps;
    for (const auto& c : cones) s.base.cones.push_back(static_cast<int>(c.n));
    for (const auto& cyc : corners) {
        std::vector<int> orders;
        for (const auto& c : cyc) orders.push_back(static_cast<int>(c.n));
        s.base.boundaries.push_back(std::move(orders));
    }
    s.cone_invariants = std::move(cones);
    s.corner_invariants = std::move(corners);
    s.xi = std::move(xi);
    s.euler = euler;
    return s;
}

// ---------------------------------------------------------------- lexing

namespace {

// Input after folding unicode / TeX aliases to ASCII. Keeps the byte offset
// of every folded character for diagnostics.
struct Folded {
    std::string text;
    std::vector<std::size_t> offset;
};

Folded fold(std::string_view in) {
    static const std::array<std::pair<std::string_view, char>, 12> aliases{{
        {"\\bar\\times", 'x'},
        {"\\bar{\\times}", 'x'},
        {"\\times", 'x'},
        {"\\ast", '*'},
        {"\\circ", 'o'},
        {"\xC3\x97\xCC\x84", 'x'},  // × + combining macron
        {"\xC3\x97", 'x'},          // ×
        {"\xE2\x88\x97", '*'},      // ∗
        {"\xE2\x88\x98", 'o'},      // ∘
        {"\xE2\x97\xA6", 'o'},      // ◦
        {"\xE2\x8B\x86", '*'},      // ⋆
        {"\\Kal", '*'},
    }};
    Folded f;
    std::size_t i = 0;
    while (i < in.size()) {
        bool hit = false;
        for (const auto& [pat, ch] : aliases) {
            if (in.substr(i, pat.size()) == pat) {
                f.text.push_back(ch);
                f.offset.push_back(i);
                i += pat.size();
                hit = true;
                break;
            }
        }
        if (hit) continue;
        f.text.push_back(in[i]);
        f.offset.push_back(i);
        ++i;
    }
    return f;
}

class Cursor {
public:
    explicit Cursor(Folded f) : f_(std::move(f)) {}

    void skip_ws() {
        while (pos_ < f_.text.size() &&
               (std::isspace(static_cast<unsigned char>(f_.text[pos_])) || f_.text[pos_] == ','))
            ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= f_.text.size();
    }
    char peek() {
        skip_ws();
        return pos_ < f_.text.size() ? f_.text[pos_] : '\0';
    }
    char peek_raw() const { return pos_ < f_.text.size() ? f_.text[pos_] : '\0'; }
    char get() {
        char c = peek();
        ++pos_;
        return c;
    }
    std::size_t offset() const {
        return pos_ < f_.offset.size() ? f_.offset[pos_]
                                       : (f_.offset.empty() ? 0 : f_.offset.back() + 1);
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("syntax", "syntax error at byte " + std::to_string(offset()) + ": " + what);
    }
    [[noreturn]] void fail_semantic(const std::string& what) const {
        throw Error("semantic", "semantic error at byte " + std::to_string(offset()) + ": " + what);
    }

    // optionally signed decimal integer, optionally wrapped in {}
    std::int64_t integer() {
        skip_ws();
        bool brace = peek_raw() == '{';
        if (brace) ++pos_;
        bool neg = false;
        if (peek_raw() == '-' || peek_raw() == '+') {
            neg = peek_raw() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek_raw()))) fail("expected integer");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
            v = v * 10 + (peek_raw() - '0');
            if (v > 1'000'000'000) fail("integer too large");
            ++pos_;
        }
        if (brace) {
            if (peek_raw() != '}') fail("expected '}'");
            ++pos_;
        }
        return neg ? -v : v;
    }

    std::string rest() const { return f_.text.substr(std::min(pos_, f_.text.size())); }
    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }
    const std::string& text() const { return f_.text; }

private:
    Folded f_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// ---------------------------------------------------------------- conway

// Index token: a single digit, or a parenthesized integer.
std::int64_t conway_index(Cursor& c) {
    char ch = c.peek();
    if (ch == '(') {
        c.get();
        auto v = c.integer();
        if (c.get() != ')') c.fail("expected ')' after index");
        return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        c.get();
        return ch - '0';
    }
    c.fail("expected index");
}

bool starts_index(char ch) { return ch == '(' || std::isdigit(static_cast<unsigned char>(ch)); }

struct ConwayItems {
    int handles = 0, crosscaps = 0;
    std::vector<LocalInvariant> cones;  // m unused for bases
    std::vector<std::vector<LocalInvariant>> corners;
    std::vector<int> xi;
};

// Shared scanner for bases (subscripts forbidden) and fibrations (required).
ConwayItems scan_conway(Cursor& c, bool fibration, char terminator) {
    ConwayItems it;
    int phase = 0;  // 0 handles, 1 cones, 2 boundaries, 3 crosscaps
    auto at_end = [&] {
        if (terminator == '\0') return c.done();
        return c.peek() == terminator;
    };
    auto sub = [&]() -> std::int64_t {
        if (c.peek() != '_') c.fail("expected '_' subscript");
        c.get();
        return c.integer();
    };
    // lone "1" names the trivial orbifold
    {
        auto save = c.pos();
        if (c.peek() == '1') {
            c.get();
            if (c.peek_raw() != '_' && at_end()) return it;
        }
        c.set_pos(save);
    }
    while (!at_end()) {
        char ch = c.peek();
        if (ch == 'o') {
            if (phase > 0) c.fail_semantic("misplaced 'o'");
            c.get();
            ++it.handles;
        } else if (ch == '*') {
            if (phase > 2) c.fail_semantic("'*' after 'x'");
            c.get();
            phase = 2;
            int xi = kUnknownXi;
            if (c.peek_raw() == '_') {
                if (!fibration) c.fail_semantic("subscript in a base symbol");
                auto v = sub();
                if (v != 0 && v != 1) c.fail_semantic("boundary invariant must be 0 or 1");
                xi = static_cast<int>(v);
            }
            it.corners.emplace_back();
            it.xi.push_back(xi);
        } else if (ch == 'x') {
            c.get();
            phase = 3;
            ++it.crosscaps;
        } else if (starts_index(ch)) {
            if (phase == 3) c.fail_semantic("digits after 'x'");
            auto n = conway_index(c);
            if (n < 1 || (!fibration && n < 2)) c.fail_semantic("index must be at least 2");
            LocalInvariant li{0, n};
            if (fibration) li.m = sub();
            else if (c.peek_raw() == '_') c.fail_semantic("subscript in a base symbol");
            if (phase == 2) {
                it.corners.back().push_back(li);
            } else {
                phase = 1;
                it.cones.push_back(li);
            }
        } else {
            c.fail(std::string("unexpected character '") + ch + "'");
        }
    }
    return it;
}

Orbifold2Symbol base_from_items(const ConwayItems& it) {
    Orbifold2Symbol b;
    b.handles = it.handles;
    b.crosscaps = it.crosscaps;
    for (const auto& li : it.cones) b.cones.push_back(static_cast<int>(li.n));
    for (const auto& cyc : it.corners) {
        std::vector<int> o;
        for (const auto& li : cyc) o.push_back(static_cast<int>(li.n));
        b.boundaries.push_back(std::move(o));
    }
    return b;
}

// ---------------------------------------------------------------- standard

struct SurfaceName {
    std::string_view name;
    int t, p, b;
};
constexpr std::array<SurfaceName, 7> kSurfaces{{
    {"S2", 0, 0, 0},
    {"T2", 1, 0, 0},
    {"RP2", 0, 1, 0},
    {"Kb", 0, 2, 0},
    {"D2", 0, 0, 1},
    {"Mb", 0, 1, 1},
    {"S1xI", 0, 0, 2},
}};

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::int64_t> int_list(const std::string& field) {
    std::vector<std::int64_t> v;
    for (auto& tok : split_top(field, ',')) {
        auto t = trim(tok);
        if (t.empty()) continue;
        v.push_back(parse_q(t).numerator());
        if (parse_q(t).denominator() != 1) throw Error("syntax", "expected integer, got '" + t + "'");
    }
    return v;
}

std::string strip_standard(std::string_view in) {
    auto f = fold(in);
    std::string out;
    for (char ch : f.text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '^' && ch != '{' && ch != '}')
            out.push_back(ch);
    return out;
}

Orbifold2Symbol parse_standard_base(const std::string& s, bool allow_one) {
    std::size_t name_end = 0;
    while (name_end < s.size() && s[name_end] != '(') {
        if (s[name_end] == '[') {
            name_end = s.find(']', name_end);
            if (name_end == std::string::npos) throw Error("syntax", "unterminated '['");
        }
        ++name_end;
    }
    std::string name = s.substr(0, name_end);
    Orbifold2Symbol b;
    int nb = 0;
    bool found = false;
    for (const auto& sn : kSurfaces) {
        if (name == sn.name) {
            b.handles = sn.t;
            b.crosscaps = sn.p;
            nb = sn.b;
            found = true;
        }
    }
    if (!found && name.rfind("F[", 0) == 0 && name.back() == ']') {
        auto v = int_list(name.substr(2, name.size() - 3));
        if (v.size() != 3 || v[0] < 0 || v[1] < 0 || v[2] < 0)
            throw Error("syntax", "expected F[t,p,b] with non-negative entries");
        b.handles = static_cast<int>(v[0]);
        b.crosscaps = static_cast<int>(v[1]);
        nb = static_cast<int>(v[2]);
        found = true;
    }
    if (!found) throw Error("syntax", "unknown surface name '" + name + "'");
    b.boundaries.assign(nb, {});
    if (name_end < s.size()) {
        if (s.back() != ')') throw Error("syntax", "expected ')' at end of base");
        auto groups = split_top(s.substr(name_end + 1, s.size() - name_end - 2), ';');
        if (static_cast<int>(groups.size()) > nb + 1)
            throw Error("semantic", "more corner groups than boundaries in '" + s + "'");
        int min_index = allow_one ? 1 : 2;
        for (auto c : int_list(groups[0])) {
            if (c < min_index) throw Error("semantic", "cone order must be at least 2");
            b.cones.push_back(static_cast<int>(c));
        }
        for (std::size_t g = 1; g < groups.size(); ++g)
            for (auto c : int_list(groups[g])) {
                if (c < min_index) throw Error("semantic", "corner order must be at least 2");
                b.boundaries[g - 1].push_back(static_cast<int>(c));
            }
    }
    return b;
}

std::vector<LocalInvariant> invariant_list(const std::string& field, const std::vector<int>& orders,
                                           const char* what) {
    std::vector<LocalInvariant> out;
    for (auto& tok : split_top(field, ',')) {
        auto t = trim(tok);
        if (t.empty()) continue;
        auto slash = t.find('/');
        if (slash == std::string::npos)
            throw Error("syntax", std::string("expected m/n for ") + what + ", got '" + t + "'");
        auto m = parse_q(t.substr(0, slash));
        auto n = parse_q(t.substr(slash + 1));
        if (m.denominator() != 1 || n.denominator() != 1 || n.numerator() < 1)
            throw Error("syntax", std::string("bad invariant '") + t + "'");
        out.push_back({m.numerator(), n.numerator()});
    }
    if (out.size() != orders.size())
        throw Error("semantic", std::string("expected ") + std::to_string(orders.size()) + " " +
                                    what + " invariants, got " + std::to_string(out.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        if (out[k].n != orders[k])
            throw Error("semantic", std::string(what) + " invariant denominator " +
                                        std::to_string(out[k].n) + " does not match order " +
                                        std::to_string(orders[k]));
    return out;
}

SeifertSymbol parse_standard_fibration(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw Error("syntax", "standard fibration must be enclosed in parentheses");
    auto fields = split_top(s.substr(1, s.size() - 2), ';');
    SeifertSymbol out;
    out.base = parse_standard_base(fields[0], true);
    const std::size_t nb = out.base.boundaries.size();
    const std::size_t full = 3 + 2 * nb;
    bool xi_omitted = false;
    if (fields.size() == 2) fields.push_back("0");  // e omitted, no boundaries
    if (fields.size() == full - 1 && nb == 1) xi_omitted = true;
    else if (fields.size() != full)
        throw Error("semantic", "expected " + std::to_string(full) + " ';'-separated fields, got " +
                                    std::to_string(fields.size()));
    out.cone_invariants = invariant_list(fields[1], out.base.cones, "cone");
    for (std::size_t i = 0; i < nb; ++i)
        out.corner_invariants.push_back(
            invariant_list(fields[2 + i], out.base.boundaries[i], "corner"));
    auto e = trim(fields[2 + nb]);
    out.euler = e.empty() ? Q(0) : parse_q(e);
    for (std::size_t i = 0; i < nb; ++i) {
        if (xi_omitted) {
            out.xi.push_back(kUnknownXi);
            continue;
        }
        auto x = trim(fields[3 + nb + i]);
        if (x != "0" && x != "1") throw Error("semantic", "boundary invariant must be 0 or 1");
        out.xi.push_back(x[0] - '0');
    }
    return out;
}

bool looks_standard(const std::string& s) {
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(') continue;
        return std::isupper(static_cast<unsigned char>(ch));
    }
    return false;
}

std::string index_token(std::int64_t n) {
    if (n >= 0 && n < 10) return std::to_string(n);
    return "(" + std::to_string(n) + ")";
}

SeifertSymbol finish_fibration(SeifertSymbol s) {
    int unknown = 0;
    for (int x : s.xi)
        if (x == kUnknownXi) ++unknown;
    if (unknown == 0) return s;
    if (s.xi.size() > 1)
        throw Error("semantic", "boundary invariant may only be omitted on a single-boundary base");
    return complete_boundary_invariant(s);
}

}  // namespace

// ---------------------------------------------------------------- public API

Orbifold2Symbol parse_base(std::string_view text) {
    auto t = trim(text);
    if (looks_standard(t)) return parse_standard_base(strip_standard(t), false);
    Cursor c(fold(t));
    auto items = scan_conway(c, false, '\0');
    return base_from_items(items);
}

SeifertSymbol parse_fibration(std::string_view text) {
    auto t = trim(text);
    if (looks_standard(t)) return finish_fibration(parse_standard_fibration(strip_standard(t)));
    Cursor c(fold(t));
    if (c.get() != '(') c.fail("fibration must start with '('");
    auto items = scan_conway(c, true, ')');
    if (c.get() != ')') c.fail("expected ')'");
    SeifertSymbol s;
    s.base = base_from_items(items);
    s.cone_invariants = items.cones;
    s.corner_invariants = items.corners;
    s.xi = items.xi;
    if (!c.done()) {
        if (c.get() != ';') c.fail("expected ';e=' suffix");
        if (c.get() != 'e') c.fail("expected 'e='");
        if (c.get() != '=') c.fail("expected '='");
        c.skip_ws();
        auto rest = trim(c.rest());
        s.euler = parse_q(rest);
    }
    return finish_fibration(s);
}

std::string print_base(const Orbifold2Symbol& b, Style style) {
    if (style == Style::conway) {
        std::string out;
        for (int i = 0; i < b.handles; ++i) out += 'o';
        for (int c : b.cones) out += index_token(c);
        for (const auto& cyc : b.boundaries) {
            out += '*';
            for (int c : cyc) out += index_token(c);
        }
        for (int i = 0; i < b.crosscaps; ++i) out += 'x';
        return out.empty() ? "1" : out;
    }
    std::string name;
    const int nb = static_cast<int>(b.boundaries.size());
    for (const auto& sn : kSurfaces)
        if (sn.t == b.handles && sn.p == b.crosscaps && sn.b == nb) name = sn.name;
    if (name.empty())
        name = "F[" + std::to_string(b.handles) + "," + std::to_string(b.crosscaps) + "," +
               std::to_string(nb) + "]";
    if (b.cones.empty() && b.corner_count() == 0) return name;
    std::string out = name + "(";
    for (std::size_t k = 0; k < b.cones.size(); ++k)
        out += (k ? "," : "") + std::to_string(b.cones[k]);
    for (const auto& cyc : b.boundaries) {
        out += ';';
        for (std::size_t k = 0; k < cyc.size(); ++k) out += (k ? "," : "") + std::to_string(cyc[k]);
    }
    return out + ")";
}

std::string print_fibration(const SeifertSymbol& s, Style style) {
    auto inv = [](const LocalInvariant& l) {
        return std::to_string(l.m) + "/" + std::to_string(l.n);
    };
    if (style == Style::standard) {
        std::string out = "(" + print_base(s.base, Style::standard) + ";";
        for (std::size_t k = 0; k < s.cone_invariants.size(); ++k)
            out += (k ? "," : "") + inv(s.cone_invariants[k]);
        for (const auto& cyc : s.corner_invariants) {
            out += ';';
            for (std::size_t k = 0; k < cyc.size(); ++k) out += (k ? "," : "") + inv(cyc[k]);
        }
        out += ";" + to_string(s.euler);
        for (int x : s.xi) out += ";" + (x == kUnknownXi ? std::string() : std::to_string(x));
        return out + ")";
    }
    std::vector<std::string> tok;
    auto sub = [](std::int64_t m) {
        return (m >= 0 && m < 10) ? std::to_string(m) : "{" + std::to_string(m) + "}";
    };
    for (int i = 0; i < s.base.handles; ++i) tok.push_back("o");
    for (const auto& c : s.cone_invariants) tok.push_back(index_token(c.n) + "_" + sub(c.m));
    for (std::size_t i = 0; i < s.corner_invariants.size(); ++i) {
        int x = i < s.xi.size() ? s.xi[i] : kUnknownXi;
        tok.push_back(x == kUnknownXi ? "*" : "*_" + std::to_string(x));
        for (const auto& c : s.corner_invariants[i]) tok.push_back(index_token(c.n) + "_" + sub(c.m));
    }
    for (int i = 0; i < s.base.crosscaps; ++i) tok.push_back("x");
    std::string out = "(";
    for (std::size_t k = 0; k < tok.size(); ++k) out += (k ? " " : "") + tok[k];
    if (tok.empty()) out += "1";
    out += ")";
    if (s.euler != Q(0)) out += ";e=" + to_string(s.euler);
    return out;
}

}  // namespace orbiseif
