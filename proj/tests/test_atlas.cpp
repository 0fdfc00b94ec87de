#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbiseif/atlas.hpp"
#include "orbiseif/error.hpp"
#include "orbiseif/json_io.hpp"
#include "orbiseif/orbifold2.hpp"
#include "orbiseif/seifert.hpp"

using namespace orbiseif;

TEST_CASE("bases per geometry") {
    auto flat = atlas_bases("flat", 1);
    CHECK(flat.size() == 17);
    for (const auto& b : flat) CHECK(geometry_class(b) == GeometryClass::flat);
    for (const auto& b : atlas_bases("spherical", 8)) CHECK(geometry_class(b) == GeometryClass::spherical);
    auto bad = atlas_bases("bad", 5);
    // one cone or corner per order, two unequal ones per pair
    CHECK(bad.size() == 2 * 4 + 2 * 6);
    for (const auto& b : bad) CHECK(geometry_class(b) == GeometryClass::bad);
    CHECK_THROWS_AS(atlas_bases("nil", 3), Error);
    CHECK_THROWS_AS(atlas_bases("flat", 0), Error);
}

TEST_CASE("flat atlas") {
    auto a = build_atlas("flat", 12);
    CHECK(a.bases.size() == 17);
    auto multi = a.multi_member();
    CHECK(multi.size() == 7);
    int three = 0;
    for (const auto* c : multi) three += c->members.size() == 3;
    CHECK(three == 1);
    int total = 0;
    for (const auto& c : a.classes) total += static_cast<int>(c.members.size());
    CHECK(total == a.fibration_count());
}

TEST_CASE("parallel sweep matches the serial reference") {
    for (const char* g : {"flat", "spherical", "bad"}) {
        auto p = build_atlas(g, 6, Execution::parallel);
        auto s = build_atlas(g, 6, Execution::serial);
        CHECK(atlas_json(p) == atlas_json(s));
        CHECK(atlas_json(p).dump() == atlas_json(build_atlas(g, 6)).dump());
    }
}

TEST_CASE("json shapes") {
    auto c = canonical_class(normalize(parse_fibration("(2_0 2_0 *_0)")));
    auto j = class_json(c, 12);
    CHECK(j["aliases"].size() == 2);
    CHECK(j["canonical"] == "(2_0 2_0 *_0)");
    auto f = class_json(canonical_class(normalize(parse_fibration("(4_2 4_2)"))), 3);
    CHECK(f["family"]["id"] == "sphere-two-cones");
    CHECK(f["family"]["members"].size() == 3);
    auto g = nlohmann::json(singular_graph(normalize(parse_fibration("(2_0 *_0 4_0)"))));
    CHECK(g["vertex_count"] == 2);
    CHECK(g["separable_by_point"] == true);
    CHECK(error_json("syntax", "x")["error"]["code"] == "syntax");
}
