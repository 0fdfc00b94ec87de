#include "orbiseif/json_io.hpp"

namespace orbiseif {

using nlohmann::json;

void to_json(json& j, const Orbifold2Symbol& b) {
    j = json{{"handles", b.handles},
             {"crosscaps", b.crosscaps},
             {"cones", b.cones},
             {"boundaries", b.boundaries},
             {"conway", print_base(b, Style::conway)},
             {"standard", print_base(b, Style::standard)}};
}

void to_json(json& j, const LocalInvariant& l) { j = json{{"m", l.m}, {"n", l.n}}; }

void to_json(json& j, const SeifertSymbol& s) {
    json xi = json::array();
    for (int x : s.xi) xi.push_back(x == kUnknownXi ? json(nullptr) : json(x));
    j = json{{"base", s.base},
             {"cone_invariants", s.cone_invariants},
             {"corner_invariants", s.corner_invariants},
             {"xi", xi},
             {"euler", to_string(s.euler)},
             {"conway", print_fibration(s, Style::conway)},
             {"standard", print_fibration(s, Style::standard)}};
}

void to_json(json& j, const SingularGraph& g) {
    json edges = json::array();
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const auto& e = g.edges[k];
        json je{{"kind", e.kind}, {"index", e.index}, {"label", e.label}, {"bridge", g.is_bridge(k)}};
        if (e.is_circle()) {
            je["a"] = nullptr;
            je["b"] = nullptr;
        } else {
            je["a"] = e.a;
            je["b"] = e.b;
        }
        edges.push_back(je);
    }
    json circles = json::object();
    for (auto [k, v] : g.circles_by_index()) circles[std::to_string(k)] = v;
    j = json{{"vertices", g.vertices},
             {"edges", edges},
             {"vertex_count", g.vertex_count()},
             {"component_count", g.component_count()},
             {"circle_count", g.circle_count()},
             {"circles_by_index", circles},
             {"vertex_distribution", g.vertex_distribution()},
             {"separable_by_point", g.has_bridge()}};
}

void to_json(json& j, const AbelianNormalIndex& a) {
    j = a.unique ? json{{"unique", true}, {"index", a.index}} : json{{"unique", false}};
}

json class_json(const DiffeoClass& c, int bound) {
    json j{{"geometry", c.geometry}, {"canonical", print_fibration(c.canonical)}};
    if (c.family) {
        json members = json::array();
        for (const auto& m : c.family->members(bound)) members.push_back(print_fibration(m));
        j["family"] = json{{"id", c.family->id},
                           {"params", json{{"c", c.family->c}, {"d", c.family->d}}},
                           {"bound", bound},
                           {"members", members}};
    } else {
        json al = json::array();
        for (const auto& m : c.aliases) al.push_back(print_fibration(m));
        j["aliases"] = al;
    }
    return j;
}

json atlas_json(const Atlas& a) {
    json bases = json::array();
    for (const auto& b : a.bases) {
        json fibs = json::array();
        for (std::size_t k = 0; k < b.fibrations.size(); ++k)
            fibs.push_back(json{{"symbol", print_fibration(b.fibrations[k])}, {"class", b.class_of[k]}});
        bases.push_back(json{{"base", print_base(b.base)}, {"fibrations", fibs}});
    }
    json classes = json::array();
    json multi = json::array();
    for (std::size_t k = 0; k < a.classes.size(); ++k) {
        const auto& c = a.classes[k];
        json members = json::array();
        for (const auto& m : c.members) members.push_back(print_fibration(m));
        classes.push_back(json{{"id", k},
                               {"geometry", c.cls.geometry},
                               {"canonical", print_fibration(c.cls.canonical)},
                               {"family", c.cls.family ? json(c.cls.family->id) : json(nullptr)},
                               {"members", members}});
        if (c.members.size() >= 2) multi.push_back(k);
    }
    return json{{"geometry", a.geometry},
                {"bound", a.bound},
                {"base_count", a.bases.size()},
                {"fibration_count", a.fibration_count()},
                {"bases", bases},
                {"classes", classes},
                {"multi_member_classes", multi}};
}

json error_json(const std::string& code, const std::string& message) {
    return json{{"error", json{{"code", code}, {"message", message}}}};
}

}  // namespace orbiseif
