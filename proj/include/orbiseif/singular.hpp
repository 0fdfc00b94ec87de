#pragma once

#include "orbiseif/notation.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbiseif {

// Fiber-level data: singular circles over cones, struts over corners.
struct SingularCensus {
    std::map<int, int> circles_by_index;  // cone circles, keyed by singularity index
    std::map<int, int> struts_by_index;
    int vertex_count() const;
    friend bool operator==(const SingularCensus&, const SingularCensus&) = default;
};
SingularCensus singular_census(const SeifertSymbol& s);

struct SingularEdge {
    int a = -1;  // endpoints; both -1 for a circle without vertices
    int b = -1;
    int index = 2;
    std::string kind;   // "circle", "strut", "strand"
    std::string label;  // feature it lies over
    bool is_circle() const { return a < 0; }
};

struct SingularGraph {
    std::vector<std::string> vertices;  // strut endpoints, "<corner> top|bottom"
    std::vector<SingularEdge> edges;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int component_count() const;
    // components that are a single circle, keyed by index
    std::map<int, int> circles_by_index() const;
    int circle_count() const;
    // number of connected pieces of the sublocus of the given index
    int index_components(int index) const;
    // vertex count per component, sorted
    std::vector<int> vertex_distribution() const;
    bool is_bridge(std::size_t edge) const;
    bool has_bridge() const;
    std::vector<int> degrees() const;
};

// Full graph including the mirror strands. The xi = 1 twist sits on the
// strand segment `twist_segment` of its boundary (segment k runs from corner
// k to corner k+1); -1 places it after the last corner.
// Corner attachments follow the dihedral local model: straight, crossed, or
// both incoming strands on one strut end and both outgoing on the other.
// Throws "semantic" for an unknown xi.
SingularGraph singular_graph(const SeifertSymbol& s, int twist_segment = -1);

int boundary_components(const SeifertSymbol& s);
bool separable_by_point(const SeifertSymbol& s);

// The component count, vertex distribution and circle census do not depend on
// where the twists are placed.
bool twist_placement_insensitive(const SeifertSymbol& s);

// Everything the graph knows, in comparable form.
struct SingularSignature {
    int vertices = 0;
    int components = 0;
    std::vector<int> vertex_distribution;
    std::map<int, int> circles_by_index;
    std::map<int, int> index_components;
    bool separable = false;
    friend bool operator==(const SingularSignature&, const SingularSignature&) = default;
};
SingularSignature singular_signature(const SeifertSymbol& s);

}  // namespace orbiseif
