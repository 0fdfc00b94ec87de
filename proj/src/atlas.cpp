#include "orbiseif/atlas.hpp"

#include "orbiseif/error.hpp"
#include "orbiseif/orbifold2.hpp"
#include "orbiseif/seifert.hpp"

#include <map>

namespace orbiseif {

namespace {

std::string order_token(int n) { return n < 10 ? std::to_string(n) : "(" + std::to_string(n) + ")"; }

const char* kFlatBases[] = {"o",   "2222", "333", "442", "632", "*2222", "*333", "*442", "*632",
                            "4*2", "3*3",  "22*", "2*22", "22x", "**",   "*x",   "xx"};

}  // namespace

std::vector<Orbifold2Symbol> atlas_bases(const std::string& geometry, int bound) {
    if (bound < 1) throw Error("invalid", "bound must be at least 1, got " + std::to_string(bound));
    std::vector<std::string> names;
    if (geometry == "flat") {
        names.assign(std::begin(kFlatBases), std::end(kFlatBases));
    } else if (geometry == "spherical" || geometry == "S2xR") {
        names = {"532", "*532", "432", "*432", "332", "*332", "3*2", "1", "*", "x"};
        for (int n = 2; n <= bound; ++n) {
            auto N = order_token(n);
            for (auto f : {"22" + N, "*22" + N, "2*" + N, N + N, "*" + N + N, N + "*", N + "x"}) names.push_back(f);
        }
    } else if (geometry == "bad") {
        for (int n = 2; n <= bound; ++n) {
            names.push_back(order_token(n));
            names.push_back("*" + order_token(n));
        }
        for (int n = 2; n <= bound; ++n)
            for (int m = n + 1; m <= bound; ++m) {
                names.push_back(order_token(m) + order_token(n));
                names.push_back("*" + order_token(m) + order_token(n));
            }
    } else {
        throw Error("invalid", "geometry must be flat, spherical or bad, got '" + geometry + "'");
    }
    std::vector<Orbifold2Symbol> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(parse_base(n));
    return out;
}

int Atlas::fibration_count() const {
    int k = 0;
    for (const auto& b : bases) k += static_cast<int>(b.fibrations.size());
    return k;
}

std::vector<const AtlasClass*> Atlas::multi_member() const {
    std::vector<const AtlasClass*> out;
    for (const auto& c : classes)
        if (c.members.size() >= 2) out.push_back(&c);
    return out;
}

Atlas build_atlas(const std::string& geometry, int bound, Execution exec) {
    Atlas a;
    a.geometry = geometry == "S2xR" ? "spherical" : geometry;
    a.bound = bound;
    auto bases = atlas_bases(geometry, bound);
    const int nb = static_cast<int>(bases.size());
    a.bases.resize(nb);

    std::vector<std::vector<SeifertSymbol>> fib(nb);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (int i = 0; i < nb; ++i) fib[i] = enumerate_fibrations(bases[i]);

    std::vector<std::pair<int, int>> flat_index;
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < static_cast<int>(fib[i].size()); ++j) flat_index.push_back({i, j});
    const int nf = static_cast<int>(flat_index.size());
    std::vector<DiffeoClass> cls(nf);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (int k = 0; k < nf; ++k) cls[k] = canonical_class(fib[flat_index[k].first][flat_index[k].second]);

    std::map<std::string, int> seen;  // geometry + canonical print -> class slot
    for (int k = 0; k < nf; ++k) {
        auto [i, j] = flat_index[k];
        auto& entry = a.bases[i];
        if (j == 0) {
            entry.base = bases[i];
            entry.fibrations = fib[i];
        }
        auto key = cls[k].geometry + " " + print_fibration(cls[k].canonical);
        auto [it, fresh] = seen.emplace(key, static_cast<int>(a.classes.size()));
        if (fresh) a.classes.push_back({cls[k], {}});
        a.classes[it->second].members.push_back(fib[i][j]);
        entry.class_of.push_back(it->second);
    }
    for (int i = 0; i < nb; ++i)
        if (fib[i].empty()) a.bases[i].base = bases[i];
    return a;
}

}  // namespace orbiseif
