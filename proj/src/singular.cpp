#include "orbiseif/singular.hpp"

#include "orbiseif/error.hpp"
#include "orbiseif/seifert.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace orbiseif {

namespace {

int index_of(const LocalInvariant& li) { return static_cast<int>(std::gcd(li.m, li.n)); }

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Strand builder with auxiliary U-turn nodes, contracted away at the end.
struct Builder {
    std::vector<std::string> names;
    std::vector<bool> aux;
    std::vector<SingularEdge> edges;
    std::vector<bool> dead;

    int node(const std::string& name, bool is_aux) {
        names.push_back(name);
        aux.push_back(is_aux);
        return static_cast<int>(names.size()) - 1;
    }
    void edge(int a, int b, int index, const std::string& kind, const std::string& label) {
        edges.push_back({a, b, index, kind, label});
        dead.push_back(false);
    }

    SingularGraph finish() {
        for (int x = 0; x < static_cast<int>(names.size()); ++x) {
            if (!aux[x]) continue;
            std::vector<std::pair<std::size_t, int>> ends;  // (edge, which end)
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (dead[e]) continue;
                if (edges[e].a == x) ends.push_back({e, 0});
                if (edges[e].b == x) ends.push_back({e, 1});
            }
            if (ends.size() != 2) throw Error("internal", "U-turn node of degree " + std::to_string(ends.size()));
            auto [e1, w1] = ends[0];
            auto [e2, w2] = ends[1];
            if (e1 == e2) {
                edges[e1].a = edges[e1].b = -1;
                edges[e1].kind = "circle";
                continue;
            }
            int p = w1 == 0 ? edges[e1].b : edges[e1].a;
            int q = w2 == 0 ? edges[e2].b : edges[e2].a;
            dead[e1] = dead[e2] = true;
            std::string label = edges[e1].label == edges[e2].label ? edges[e1].label
                                                                   : edges[e1].label + "+" + edges[e2].label;
            edge(p, q, 2, "strand", label);
        }
        SingularGraph g;
        std::vector<int> remap(names.size(), -1);
        for (std::size_t x = 0; x < names.size(); ++x)
            if (!aux[x]) {
                remap[x] = static_cast<int>(g.vertices.size());
                g.vertices.push_back(names[x]);
            }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (dead[e]) continue;
            auto ed = edges[e];
            if (!ed.is_circle()) {
                ed.a = remap[ed.a];
                ed.b = remap[ed.b];
            }
            g.edges.push_back(ed);
        }
        return g;
    }
};

}  // namespace

int SingularCensus::vertex_count() const {
    int v = 0;
    for (const auto& [k, c] : struts_by_index) v += 2 * c;
    return v;
}

SingularCensus singular_census(const SeifertSymbol& s_in) {
    auto s = normalize(s_in);
    SingularCensus c;
    for (const auto& li : s.cone_invariants)
        if (int k = index_of(li); k > 1) ++c.circles_by_index[k];
    for (const auto& cyc : s.corner_invariants)
        for (const auto& li : cyc)
            if (int k = index_of(li); k > 1) ++c.struts_by_index[k];
    return c;
}

SingularGraph singular_graph(const SeifertSymbol& s_in, int twist_segment) {
    auto s = normalize(s_in);
    Builder b;
    for (std::size_t i = 0; i < s.cone_invariants.size(); ++i)
        if (int k = index_of(s.cone_invariants[i]); k > 1)
            b.edge(-1, -1, k, "circle", "cone " + std::to_string(i + 1));

    for (std::size_t i = 0; i < s.corner_invariants.size(); ++i) {
        const auto& cyc = s.corner_invariants[i];
        const int xi = i < s.xi.size() ? s.xi[i] : kUnknownXi;
        const std::string bname = std::to_string(i + 1);
        if (xi == kUnknownXi) throw Error("semantic", "boundary " + bname + " has an unknown xi");
        const int h = static_cast<int>(cyc.size());
        if (h == 0) {
            b.edge(-1, -1, 2, "circle", "mirror " + bname);
            if (xi == 0) b.edge(-1, -1, 2, "circle", "mirror " + bname);
            continue;
        }
        // Strand ends at each corner. With gcd d and reduced m'/n', an axis
        // point at height k/(2n') lies on end A for k even, on end B for k odd;
        // incoming strands sit at heights 0, 1/2 and outgoing ones at
        // m/(2n), m/(2n) + 1/2. Ends of a gcd-1 corner are regular points.
        std::vector<std::array<int, 2>> in(h), out(h);
        for (int j = 0; j < h; ++j) {
            const auto& li = cyc[j];
            const std::string cname = "corner " + bname + "." + std::to_string(j + 1);
            const int k = index_of(li);
            const auto mr = li.m / k, nr = li.n / k;
            int A = b.node(cname + " top", k == 1);
            int B = b.node(cname + " bottom", k == 1);
            if (k > 1) b.edge(A, B, k, "strut", cname);
            auto end = [&](std::int64_t half_steps) { return half_steps % 2 == 0 ? A : B; };
            in[j] = {A, end(nr)};
            out[j] = {end(mr), end(mr + nr)};
        }
        const int twisted = xi == 1 ? (twist_segment < 0 ? h - 1 : twist_segment % h) : -1;
        for (int j = 0; j < h; ++j) {
            int nx = (j + 1) % h;
            std::string label = "mirror " + bname + "." + std::to_string(j + 1);
            int swap = j == twisted ? 1 : 0;
            b.edge(out[j][0], in[nx][swap], 2, "strand", label);
            b.edge(out[j][1], in[nx][1 - swap], 2, "strand", label);
        }
    }
    return b.finish();
}

int SingularGraph::component_count() const {
    Dsu d(vertex_count());
    int circles = 0;
    for (const auto& e : edges) {
        if (e.is_circle())
            ++circles;
        else
            d.unite(e.a, e.b);
    }
    int roots = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (d.find(v) == v) ++roots;
    return roots + circles;
}

std::map<int, int> SingularGraph::circles_by_index() const {
    std::map<int, int> out;
    for (const auto& e : edges)
        if (e.is_circle()) ++out[e.index];
    return out;
}

int SingularGraph::circle_count() const {
    int c = 0;
    for (const auto& [k, n] : circles_by_index()) c += n;
    return c;
}

int SingularGraph::index_components(int index) const {
    Dsu d(vertex_count());
    std::vector<bool> touched(vertex_count(), false);
    int circles = 0;
    for (const auto& e : edges) {
        if (e.index != index) continue;
        if (e.is_circle()) {
            ++circles;
        } else {
            d.unite(e.a, e.b);
            touched[e.a] = touched[e.b] = true;
        }
    }
    int roots = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (touched[v] && d.find(v) == v) ++roots;
    return roots + circles;
}

std::vector<int> SingularGraph::vertex_distribution() const {
    Dsu d(vertex_count());
    for (const auto& e : edges)
        if (!e.is_circle()) d.unite(e.a, e.b);
    std::map<int, int> size;
    for (int v = 0; v < vertex_count(); ++v) ++size[d.find(v)];
    std::vector<int> out;
    for (const auto& [r, n] : size) out.push_back(n);
    for (int i = 0; i < circle_count(); ++i) out.push_back(0);
    std::sort(out.begin(), out.end());
    return out;
}

bool SingularGraph::is_bridge(std::size_t edge) const {
    const auto& e = edges.at(edge);
    if (e.is_circle() || e.a == e.b) return false;
    std::vector<bool> seen(vertex_count(), false);
    std::vector<int> stack{e.a};
    seen[e.a] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (k == edge || edges[k].is_circle()) continue;
            int w = edges[k].a == v ? edges[k].b : edges[k].b == v ? edges[k].a : -1;
            if (w >= 0 && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return !seen[e.b];
}

bool SingularGraph::has_bridge() const {
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (is_bridge(k)) return true;
    return false;
}

std::vector<int> SingularGraph::degrees() const {
    std::vector<int> deg(vertex_count(), 0);
    for (const auto& e : edges)
        if (!e.is_circle()) {
            ++deg[e.a];
            ++deg[e.b];
        }
    return deg;
}

int boundary_components(const SeifertSymbol& s) { return singular_graph(s).component_count(); }

bool separable_by_point(const SeifertSymbol& s) { return singular_graph(s).has_bridge(); }

bool twist_placement_insensitive(const SeifertSymbol& s_in) {
    auto s = normalize(s_in);
    auto ref = singular_graph(s);
    int longest = 1;
    for (const auto& cyc : s.corner_invariants) longest = std::max<int>(longest, static_cast<int>(cyc.size()));
    for (int t = 0; t < longest; ++t) {
        auto g = singular_graph(s, t);
        if (g.component_count() != ref.component_count() || g.vertex_distribution() != ref.vertex_distribution() ||
            g.circles_by_index() != ref.circles_by_index() || g.has_bridge() != ref.has_bridge())
            return false;
    }
    return true;
}

SingularSignature singular_signature(const SeifertSymbol& s) {
    SingularSignature sig;
    auto g = singular_graph(s);
    sig.vertices = g.vertex_count();
    sig.components = g.component_count();
    sig.vertex_distribution = g.vertex_distribution();
    sig.circles_by_index = g.circles_by_index();
    for (const auto& e : g.edges) sig.index_components[e.index] = g.index_components(e.index);
    sig.separable = g.has_bridge();
    return sig;
}

}  // namespace orbiseif
