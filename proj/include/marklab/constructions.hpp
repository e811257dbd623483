#pragma once

#include <array>
#include <string>
#include <vector>

#include "marklab/graph.hpp"

namespace marklab {

// Honeycomb vertex position: the top-left (parity 0) or top-right (parity 1)
// corner of the flat-top hexagon with axial coordinates (q, r). The two corners
// of a cell span that hexagon's top horizontal edge.
struct LatticeCoord {
    int q = 0;
    int r = 0;
    int parity = 0;

    friend auto operator<=>(const LatticeCoord&, const LatticeCoord&) = default;
};

// H_n: n concentric rings of hexagons around a central one.
struct HexPatch {
    int rings = 0;
    Graph graph;
    std::vector<LatticeCoord> coords;            // per vertex
    std::vector<char> on_boundary;               // per vertex: incident to the unbounded face
    std::vector<Edge> horizontal_edges;          // canonical, sorted
    std::vector<std::array<Vertex, 6>> hexagons; // corners in angular order, spiral order

    std::vector<Vertex> boundary() const;
};

enum class VertexClass {
    HexInterior,   // V_I
    HexBoundary,   // V_O
    Pendant,       // A
    Subdivision,   // B
    Extra,         // vertices of an attached component (e.g. a disjoint cycle)
};

std::string to_string(VertexClass c);

// G_n with its vertex classes. Hexagon vertices keep their patch ids, pendants
// follow (a_v = 6n^2 + v), then subdivision vertices in horizontal-edge order.
struct ConstructionGraph {
    int rings = 0;
    Graph graph;
    std::vector<VertexClass> class_of;     // per vertex
    std::vector<Vertex> pendant_of;        // per vertex; -1 unless a hexagon vertex
    std::vector<LatticeCoord> hex_coords;  // per hexagon vertex

    std::vector<Vertex> members(VertexClass c) const;
    std::vector<std::string> labels() const;
};

struct ClassCounts {
    long long pendants = 0;      // |A|
    long long subdivisions = 0;  // |B|
    long long interior = 0;      // |V_I|
    long long boundary = 0;      // |V_O|
    long long vertices = 0;
    long long edges = 0;

    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

HexPatch hex_patch(int rings);
ConstructionGraph lower_bound_graph(int rings);

/// Closed-form class sizes of G_n.
ClassCounts class_counts(int rings);
/// Class sizes measured on a built construction (Extra vertices excluded).
ClassCounts measure_class_counts(const ConstructionGraph& c);

/// G_n plus a disjoint k-cycle (3 <= k <= 8); the cycle's vertices are Extra.
ConstructionGraph with_cycle(int rings, int k);

/// |B| + |V_O| + 1 < |V_I| from the closed forms.
bool counting_inequality_holds(int rings);
/// Smallest ring count at which the inequality holds.
int smallest_rings_with_counting_inequality();

}  // namespace marklab
