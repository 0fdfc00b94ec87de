#pragma once

#include "orbiseif/orbifold2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbiseif {

// x -> sign*x + t on R/Z, written t+ or t-.
struct CircleIsometry {
    Q t{0};  // in [0,1)
    int sign = 1;

    CircleIsometry() = default;
    CircleIsometry(Q t_, int sign_) : t(frac(t_)), sign(sign_) {}
    static CircleIsometry identity() { return {}; }
    CircleIsometry inverse() const;
    friend bool operator==(const CircleIsometry&, const CircleIsometry&) = default;
};
CircleIsometry compose(const CircleIsometry& a, const CircleIsometry& b);
std::string to_string(const CircleIsometry& c);

// x -> sign*x + t on R.
struct LineIsometry {
    Q t{0};
    int sign = 1;
    CircleIsometry to_circle() const { return {t, sign}; }
    LineIsometry inverse() const { return {-Q(sign) * t, sign}; }
    friend bool operator==(const LineIsometry&, const LineIsometry&) = default;
};
LineIsometry compose(const LineIsometry& a, const LineIsometry& b);

// One image per presentation generator, in presentation order.
struct Psi {
    Presentation presentation;
    std::vector<CircleIsometry> images;
    const CircleIsometry& at(const std::string& generator) const;
};

Psi build_psi(const SeifertSymbol& s);

CircleIsometry evaluate_word(const Word& w, const std::vector<CircleIsometry>& images);

struct RelationFailure {
    std::string relation;
    CircleIsometry value;
};
// nullopt means every relation evaluates to 0+
std::optional<RelationFailure> verify_relations(const Presentation& p,
                                                const std::vector<CircleIsometry>& images);

}  // namespace orbiseif
