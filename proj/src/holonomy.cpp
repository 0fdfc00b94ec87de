#include "orbiseif/holonomy.hpp"

#include "orbiseif/error.hpp"
#include "orbiseif/seifert.hpp"

namespace orbiseif {

CircleIsometry CircleIsometry::inverse() const {
    if (sign < 0) return *this;
    return {-t, 1};
}

CircleIsometry compose(const CircleIsometry& a, const CircleIsometry& b) {
    if (a.sign > 0) return {a.t + b.t, b.sign};
    return {a.t - b.t, -b.sign};
}

std::string to_string(const CircleIsometry& c) {
    return to_string(c.t) + (c.sign > 0 ? "+" : "-");
}

LineIsometry compose(const LineIsometry& a, const LineIsometry& b) {
    return {Q(a.sign) * b.t + a.t, a.sign * b.sign};
}

const CircleIsometry& Psi::at(const std::string& generator) const {
    int k = presentation.find(generator);
    if (k < 0) throw Error("semantic", "unknown generator '" + generator + "'");
    return images[k];
}

Psi build_psi(const SeifertSymbol& in) {
    if (in.euler != Q(0)) throw Error("scope", "build_psi needs e = 0");
    auto s = normalize(in);
    auto g = geometry_class(s.base);
    if (g == GeometryClass::bad) throw Error("scope", "build_psi needs a good base");
    if (!check_invariant_relation(s).valid) throw Error("invalid", "invariant relation violated");
    Psi psi;
    psi.presentation = fundamental_group_presentation(s.base);
    const auto& p = psi.presentation;
    psi.images.assign(p.generators.size(), CircleIsometry{});
    for (std::size_t k = 0; k < s.cone_invariants.size(); ++k)
        psi.images[p.find("g" + std::to_string(k + 1))] =
            CircleIsometry(-s.cone_invariants[k].value(), 1);
    for (std::size_t i = 0; i < s.corner_invariants.size(); ++i) {
        auto tag = std::to_string(i + 1);
        CircleIsometry rho(Q(0), -1);
        psi.images[p.find("r" + tag + "_0")] = rho;
        Q sigma(0);
        for (std::size_t j = 0; j < s.corner_invariants[i].size(); ++j) {
            Q v = s.corner_invariants[i][j].value();
            sigma += v;
            // psi(r_{j-1} r_j) = (-v)+
            rho = compose(rho, CircleIsometry(-v, 1));
            psi.images[p.find("r" + tag + "_" + std::to_string(j + 1))] = rho;
        }
        int d = p.find("d" + tag);
        if (d >= 0) psi.images[d] = CircleIsometry(-(sigma + Q(s.xi[i])) / 2, 1);
    }
    for (std::size_t k = 0; k < p.generators.size(); ++k)
        if (p.generators[k].kind == GeneratorKind::crosscap_z) psi.images[k] = CircleIsometry(Q(0), -1);
    return psi;
}

CircleIsometry evaluate_word(const Word& w, const std::vector<CircleIsometry>& images) {
    CircleIsometry acc;
    for (const auto& l : w) {
        if (l.generator < 0 || l.generator >= static_cast<int>(images.size()))
            throw Error("semantic", "unknown generator in word");
        const auto& g = images[l.generator];
        acc = compose(acc, l.exponent > 0 ? g : g.inverse());
    }
    return acc;
}

std::optional<RelationFailure> verify_relations(const Presentation& p,
                                                const std::vector<CircleIsometry>& images) {
    for (const auto& r : p.relations) {
        auto v = evaluate_word(r.word(), images);
        if (!(v == CircleIsometry{})) return RelationFailure{r.label, v};
    }
    return std::nullopt;
}

}  // namespace orbiseif
