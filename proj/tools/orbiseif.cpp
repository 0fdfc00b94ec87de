#include "CLI11.hpp"
#include "json.hpp"

#include "orbiseif/atlas.hpp"
#include "orbiseif/classify.hpp"
#include "orbiseif/error.hpp"
#include "orbiseif/euclid.hpp"
#include "orbiseif/json_io.hpp"
#include "orbiseif/orbifold2.hpp"
#include "orbiseif/seifert.hpp"
#include "orbiseif/singular.hpp"

#include <cstdlib>
#include <iostream>
#include <variant>

using namespace orbiseif;
using nlohmann::json;

namespace {

struct Options {
    std::string symbol;
    std::string style = "conway";
    bool as_json = false;
    int bound = 12;
    std::string group_file;
    std::string direction;
    std::string geometry;
};

Style style_of(const Options& o) { return o.style == "standard" ? Style::standard : Style::conway; }

// A fibration if it parses as one, otherwise a base.
std::variant<SeifertSymbol, Orbifold2Symbol> read_symbol(const std::string& text) {
    try {
        return parse_fibration(text);
    } catch (const Error& fib) {
        if (fib.code() != "syntax") throw;
        try {
            return parse_base(text);
        } catch (const Error&) {
            throw fib;
        }
    }
}

SeifertSymbol read_fibration(const std::string& text) { return parse_fibration(text); }

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string lines(const std::vector<SeifertSymbol>& v, Style st) {
    std::string out;
    for (const auto& s : v) out += print_fibration(s, st) + "\n";
    return out;
}

int cmd_parse(const Options& o) {
    auto v = read_symbol(o.symbol);
    if (auto* s = std::get_if<SeifertSymbol>(&v))
        emit(o, json{{"kind", "fibration"}, {"symbol", *s}}, print_fibration(*s, style_of(o)) + "\n");
    else {
        const auto& b = std::get<Orbifold2Symbol>(v);
        emit(o, json{{"kind", "base"}, {"symbol", b}}, print_base(b, style_of(o)) + "\n");
    }
    return 0;
}

int cmd_validate(const Options& o) {
    auto s = read_fibration(o.symbol);
    auto r = check_invariant_relation(s);
    if (!r.valid)
        throw Error("semantic", "invariant relation violated: total of the invariants is " +
                                    to_string(invariant_total(s)) + ", not an integer (residue " +
                                    to_string(r.residue) + ")");
    emit(o, json{{"valid", true}, {"total", to_string(invariant_total(s))}}, "valid\n");
    return 0;
}

int cmd_normalize(const Options& o) {
    auto s = normalize(read_fibration(o.symbol));
    emit(o, json(s), print_fibration(s, style_of(o)) + "\n");
    return 0;
}

int cmd_enumerate(const Options& o) {
    auto b = parse_base(o.symbol);
    auto v = enumerate_fibrations(b);
    json arr = json::array();
    for (const auto& s : v) arr.push_back(print_fibration(s, style_of(o)));
    emit(o, json{{"base", print_base(b)}, {"count", v.size()}, {"fibrations", arr}}, lines(v, style_of(o)));
    return 0;
}

int cmd_classify(const Options& o) {
    auto c = canonical_class(read_fibration(o.symbol));
    std::string text = "geometry: " + c.geometry + "\ncanonical: " + print_fibration(c.canonical, style_of(o)) + "\n";
    if (c.family)
        text += "family: " + c.family->id + " c=" + std::to_string(c.family->c) + " d=" + std::to_string(c.family->d) +
                " (infinitely many fibrations)\n";
    else
        text += "aliases:\n" + lines(c.aliases, style_of(o));
    emit(o, class_json(c, o.bound), text);
    return 0;
}

int cmd_aliases(const Options& o) {
    auto v = aliases(read_fibration(o.symbol), o.bound);
    json arr = json::array();
    for (const auto& s : v) arr.push_back(print_fibration(s, style_of(o)));
    emit(o, json{{"bound", o.bound}, {"aliases", arr}}, lines(v, style_of(o)));
    return 0;
}

int cmd_geometry(const Options& o) {
    auto v = read_symbol(o.symbol);
    if (auto* s = std::get_if<SeifertSymbol>(&v)) {
        auto g = geometry_of_fibration(*s);
        emit(o, json{{"geometry", g.tag}, {"in_scope", g.in_scope}}, g.tag + "\n");
    } else {
        const auto& b = std::get<Orbifold2Symbol>(v);
        auto g = geometry_class(b);
        emit(o, json{{"geometry", to_string(g)}, {"euler_characteristic", to_string(euler_characteristic(b))}},
             to_string(g) + " (chi = " + to_string(euler_characteristic(b)) + ")\n");
    }
    return 0;
}

int cmd_singular(const Options& o) {
    auto s = normalize(read_fibration(o.symbol));
    auto g = singular_graph(s);
    std::string text = "vertices: " + std::to_string(g.vertex_count()) +
                       "\ncomponents: " + std::to_string(g.component_count()) +
                       "\ncircles: " + std::to_string(g.circle_count()) +
                       "\nseparable by a point: " + (g.has_bridge() ? "yes" : "no") + "\n";
    for (const auto& e : g.edges) {
        text += "  " + e.kind + " index " + std::to_string(e.index) + " over " + e.label;
        if (!e.is_circle()) text += " : " + g.vertices[e.a] + " -- " + g.vertices[e.b];
        text += "\n";
    }
    emit(o, json(g), text);
    return 0;
}

int cmd_induce(const Options& o) {
    auto gens = load_generators(o.group_file);
    auto g = group_closure(gens);
    if (o.direction.empty()) {
        auto d = invariant_directions(g);
        json jl = json::array();
        std::string text = "invariant directions: " + d.kind() + "\n";
        for (const auto& l : d.lines) {
            std::string v;
            for (int k = 0; k < l.n; ++k) v += (k ? " " : "") + to_string(l[k]);
            jl.push_back(v);
            text += "  [" + v + "] -> " + print_fibration(induced_fibration(g, l), style_of(o)) + "\n";
        }
        emit(o, json{{"kind", d.kind()}, {"lines", jl}}, text);
        return 0;
    }
    auto v = parse_direction(o.direction, g.dim);
    auto s = normalize(induced_fibration(g, v));
    emit(o, json{{"direction", o.direction}, {"fibration", s}}, print_fibration(s, style_of(o)) + "\n");
    return 0;
}

int cmd_atlas(const Options& o) {
    auto a = build_atlas(o.geometry, o.bound);
    std::string text = "geometry " + a.geometry + ", " + std::to_string(a.bases.size()) + " bases, " +
                       std::to_string(a.fibration_count()) + " fibrations\n";
    auto multi = a.multi_member();
    text += std::to_string(multi.size()) + " classes with several fibrations:\n";
    for (const auto* c : multi) {
        text += " ";
        for (const auto& m : c->members) text += " " + print_fibration(m, style_of(o));
        text += "\n";
    }
    emit(o, atlas_json(a), text);
    return 0;
}

int default_bound() {
    const char* env = std::getenv("ORBISEIF_BOUND");
    if (!env) return 12;
    try {
        std::size_t used = 0;
        int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("ORBISEIF_BOUND", "must be a positive integer, got '" + std::string(env) + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seifert fibered 3-orbifolds: notation, enumeration and classification"};
    app.require_subcommand(1, 1);
    Options o;
    try {
        o.bound = default_bound();
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto common = [&](CLI::App* sub, bool needs_symbol) {
        if (needs_symbol) sub->add_option("symbol", o.symbol, "orbifold symbol")->required();
        sub->add_option("--style", o.style, "output notation")->check(CLI::IsMember({"conway", "standard"}));
        sub->add_flag("--json", o.as_json, "JSON output");
        sub->add_option("--bound", o.bound, "family bound (nu <= N)")->check(CLI::Range(1, 1000000));
        return sub;
    };
    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> cmds = {
        {common(app.add_subcommand("parse", "parse a base or fibration symbol"), true), cmd_parse},
        {common(app.add_subcommand("validate", "check the invariant relation"), true), cmd_validate},
        {common(app.add_subcommand("normalize", "normalize a fibration symbol"), true), cmd_normalize},
        {common(app.add_subcommand("enumerate", "all e=0 fibrations over a base"), true), cmd_enumerate},
        {common(app.add_subcommand("classify", "diffeomorphism class of a fibration"), true), cmd_classify},
        {common(app.add_subcommand("aliases", "fibrations of the same orbifold"), true), cmd_aliases},
        {common(app.add_subcommand("geometry", "geometry of a base or fibration"), true), cmd_geometry},
        {common(app.add_subcommand("singular", "singular locus graph"), true), cmd_singular},
    };
    auto* induce = common(app.add_subcommand("induce", "fibration of a space group by parallel lines"), false);
    induce->add_option("--group", o.group_file, "generator file")->required()->check(CLI::ExistingFile);
    induce->add_option("--direction", o.direction, "e1, e2, e3 or comma separated rationals");
    cmds.push_back({induce, cmd_induce});
    auto* atlas = common(app.add_subcommand("atlas", "enumerate and classify over a geometry"), false);
    atlas->add_option("--geometry", o.geometry, "flat, spherical or bad")
        ->required()
        ->check(CLI::IsMember({"flat", "spherical", "bad"}));
    cmds.push_back({atlas, cmd_atlas});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (auto [sub, fn] : cmds) {
        if (!sub->parsed()) continue;
        try {
            return fn(o);
        } catch (const Error& e) {
            if (o.as_json)
                std::cout << error_json(e.code(), e.what()).dump(2) << "\n";
            std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
            return 1;
        }
    }
    return 2;
}
