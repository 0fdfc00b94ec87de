#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "orbiseif/error.hpp"
#include "orbiseif/orbifold2.hpp"
#include "orbiseif/seifert.hpp"
#include "orbiseif/singular.hpp"

using namespace orbiseif;

static SeifertSymbol F(const std::string& t) { return normalize(parse_fibration(t)); }

static std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

TEST_CASE("census at fiber level") {
    auto c = singular_census(F("(3_1 3_2 2_0)"));
    CHECK(c.circles_by_index == std::map<int, int>{{2, 1}});
    CHECK(c.vertex_count() == 0);
    for (int n = 2; n <= 6; ++n) {
        auto d = singular_census(F("(*_0 2_0 2_0 " + std::to_string(n) + "_0)"));
        CHECK(d.vertex_count() == 6);
        int total = 0;
        for (auto [k, v] : d.struts_by_index) total += v;
        CHECK(total == 3);
    }
    CHECK(singular_census(F("(o)")) == SingularCensus{});
    CHECK(singular_graph(F("(o)")).edges.empty());
    // 4_2 has index 2, 6_4 index 2, 6_3 index 3
    auto e = singular_census(F("(4_2 6_4 6_3 3_0)"));
    CHECK(e.circles_by_index == std::map<int, int>{{2, 2}, {3, 2}});
}

struct Row {
    const char* symbol;
    int components;
    int vertices;
};

// flat orbifolds with point orbifold 222
TEST_CASE("components and vertices over the flat 222 bases") {
    const Row rows[] = {{"(2_0 2_0 *_0)", 4, 0},   {"(2_0 2_1 *_1)", 2, 0},       {"(2_1 2_1 *_0)", 2, 0},
                        {"(2_0 *_0 2_0 2_0)", 2, 4}, {"(*_0 2_0 2_0 2_0 2_0)", 1, 8}, {"(*_1 2_0 2_1 2_0 2_1)", 2, 4},
                        {"(2_1 *_1 2_0 2_0)", 1, 4}, {"(2_0 *_1 2_1 2_1)", 3, 0},     {"(2_1 2_1 x)", 0, 0}};
    for (const auto& r : rows) {
        auto s = F(r.symbol);
        auto g = singular_graph(s);
        CHECK_MESSAGE(g.component_count() == r.components, r.symbol);
        CHECK_MESSAGE(g.vertex_count() == r.vertices, r.symbol);
        CHECK_MESSAGE(twist_placement_insensitive(s), r.symbol);
        CHECK(boundary_components(s) == r.components);
    }
    // same counts, told apart by where the vertices sit
    CHECK(singular_graph(F("(2_0 *_0 2_0 2_0)")).vertex_distribution() == std::vector<int>{0, 4});
    CHECK(singular_graph(F("(*_1 2_0 2_1 2_0 2_1)")).vertex_distribution() == std::vector<int>{2, 2});
}

TEST_CASE("boundary without corners") {
    auto g0 = singular_graph(F("(2_0 2_0 *_0)"));
    CHECK(g0.circles_by_index() == std::map<int, int>{{2, 4}});
    CHECK(singular_graph(F("(2_0 2_1 *_1)")).circle_count() == 2);
    CHECK(singular_graph(F("(*_0)")).circle_count() == 2);
    CHECK(singular_graph(F("(*_0 *_0)")).circle_count() == 4);
    CHECK(singular_graph(F("(*_1 *_1)")).circle_count() == 2);
}

TEST_CASE("vertices and circles for the spherical families") {
    for (int n = 2; n <= 8; ++n) {
        auto N = std::to_string(n), H = std::to_string(n / 2);
        // 22n: circles 3, 1, 2
        CHECK(singular_graph(F("(2_0 2_0 " + N + "_0)")).circle_count() == 3);
        CHECK(singular_graph(F("(2_1 2_1 " + N + "_0)")).circle_count() == 1);
        if (n >= 4 && n % 2 == 0) CHECK(singular_graph(F("(2_0 2_1 " + N + "_" + H + ")")).circle_count() == 2);
        // *22n: vertices 6, 2, 4
        CHECK(singular_graph(F("(*_0 2_0 2_0 " + N + "_0)")).vertex_count() == 6);
        CHECK(singular_graph(F("(*_1 2_1 2_1 " + N + "_0)")).vertex_count() == 2);
        if (n >= 4 && n % 2 == 0) CHECK(singular_graph(F("(*_1 2_0 2_1 " + N + "_" + H + ")")).vertex_count() == 4);
        // 2*n: vertices 2, 2
        CHECK(singular_graph(F("(2_0 *_0 " + N + "_0)")).vertex_count() == 2);
        CHECK(singular_graph(F("(2_1 *_1 " + N + "_0)")).vertex_count() == 2);
        // nn: circles 2
        CHECK(singular_graph(F("(" + N + "_0 " + N + "_0)")).circle_count() == 2);
        // *nn: vertices 4, circles 0
        auto g12 = singular_graph(F("(*_0 " + N + "_0 " + N + "_0)"));
        CHECK(g12.vertex_count() == 4);
        CHECK(g12.circle_count() == 0);
        // n*: vertices 0; circles 3, and 2 for n >= 4 (the index n/2 circle vanishes at n = 2)
        auto g13 = singular_graph(F("(" + N + "_0 *_0)"));
        CHECK(g13.vertex_count() == 0);
        CHECK(g13.circle_count() == 3);
        if (n % 2 == 0) {
            auto h13 = singular_graph(F("(" + N + "_" + H + " *_1)"));
            CHECK(h13.vertex_count() == 0);
            CHECK(h13.circle_count() == (n >= 4 ? 2 : 1));
        }
    }
    // n = 1 cells
    CHECK(singular_graph(F("(1_0 1_0)")).circle_count() == 0);
    auto g = singular_graph(F("(*_0 1_0 1_0)"));
    CHECK(g.vertex_count() == 0);
    CHECK(g.circle_count() == 2);
}

TEST_CASE("cut points") {
    for (int n = 2; n <= 8; ++n) {
        auto N = std::to_string(n);
        CHECK(separable_by_point(F("(2_0 *_0 " + N + "_0)")));
        CHECK(!separable_by_point(F("(*_1 2_1 2_1 " + N + "_0)")));
    }
    CHECK(!separable_by_point(F("(2_0 2_0 *_0)")));
    auto g = singular_graph(F("(2_0 *_0 4_0)"));
    int bridges = 0;
    for (std::size_t k = 0; k < g.edges.size(); ++k)
        if (g.is_bridge(k)) {
            ++bridges;
            CHECK(g.edges[k].kind == "strut");
            CHECK(g.edges[k].index == 4);
        }
    CHECK(bridges == 1);
}

// strut corners with m != 0 and gcd-1 corners other than 1/2
TEST_CASE("general corner attachments") {
    // 6_3: both incoming strands on one strut end, both outgoing on the other
    auto a = singular_signature(F("(*_0 3_0 3_0)"));
    auto b = singular_signature(F("(*_1 6_3 6_3)"));
    CHECK(a == b);
    CHECK(a.index_components == std::map<int, int>{{2, 2}, {3, 2}});
    // 3_1 crosses, 3_2 passes straight, the twist undoes the crossing:
    // the 2_0 strut carries a loop at each end
    auto g = singular_graph(F("(*_1 3_1 3_2 2_0)"));
    CHECK(g.vertex_count() == 2);
    CHECK(g.component_count() == 1);
    int loops = 0;
    for (const auto& e : g.edges)
        if (!e.is_circle() && e.a == e.b) ++loops;
    CHECK(loops == 2);
    CHECK(g.has_bridge());
    // three crossings and the twist: an even number of swaps, two circles
    auto h = singular_graph(F("(*_1 3_1 3_1 3_1)"));
    CHECK(h.vertex_count() == 0);
    CHECK(h.circle_count() == 2);
    CHECK(singular_graph(F("(*_0 3_2 3_2 3_2)")).circle_count() == 2);
    CHECK(code_of([] { singular_graph(make_fibration(0, 0, {}, {{{0, 2}}}, {kUnknownXi})); }) == "semantic");
}

TEST_CASE("trivalence and vertex count over all spherical and flat enumerations") {
    std::vector<std::string> bases = {"o",   "2222", "333", "442",  "632", "*2222", "*333", "*442", "*632",
                                      "4*2", "3*3",  "22*", "2*22", "22x", "**",    "*x",   "xx",   "532",
                                      "*532", "432", "*432", "332", "*332", "3*2", "1", "*", "x"};
    for (int n = 2; n <= 8; ++n) {
        auto N = std::to_string(n);
        for (auto f : {"22" + N, "*22" + N, "2*" + N, N + N, "*" + N + N, N + "*", N + "x"}) bases.push_back(f);
    }
    int full = 0;
    for (const auto& b : bases)
        for (const auto& s : enumerate_fibrations(parse_base(b))) {
            auto census = singular_census(s);
            auto g = singular_graph(s);
            ++full;
            CHECK(g.vertex_count() == census.vertex_count());
            for (int d : g.degrees()) CHECK(d == 3);
            CHECK_MESSAGE(twist_placement_insensitive(s), print_fibration(s));
            // every strand edge has index 2; struts and cone circles carry the census
            std::map<int, int> struts;
            for (const auto& e : g.edges)
                if (e.kind == "strut") ++struts[e.index];
            CHECK(struts == census.struts_by_index);
        }
    CHECK(full > 150);
}
