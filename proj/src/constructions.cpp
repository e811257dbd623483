#include "marklab/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace marklab {

namespace {

// Flat-top hexagons on a doubled integer grid: hexagon (q, r) is centred at
// (3q, 2r + q) and its corners sit at the offsets below, counter-clockwise
// from the rightmost one. Corners 1-2 and 4-5 span the horizontal edges.
constexpr std::array<std::array<int, 2>, 6> kCornerOffset{
    {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}}};

constexpr std::array<std::array<int, 2>, 6> kAxialDir{
    {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

int floor_mod(int a, int m) { return ((a % m) + m) % m; }

LatticeCoord coord_of(int x, int y)
{
    LatticeCoord c;
    switch (floor_mod(x, 3)) {
    case 2:
        c.q = (x + 1) / 3;
        c.parity = 0;
        break;
    case 1:
        c.q = (x - 1) / 3;
        c.parity = 1;
        break;
    default:
        throw GraphError("not a honeycomb vertex");
    }
    if (floor_mod(y - 1 - c.q, 2) != 0)
        throw GraphError("not a honeycomb vertex");
    c.r = (y - 1 - c.q) / 2;
    return c;
}

std::vector<std::array<int, 2>> spiral_hexagons(int rings)
{
    std::vector<std::array<int, 2>> out{{0, 0}};
    for (int k = 1; k < rings; ++k) {
        int q = kAxialDir[4][0] * k, r = kAxialDir[4][1] * k;
        for (int side = 0; side < 6; ++side)
            for (int step = 0; step < k; ++step) {
                out.push_back({q, r});
                q += kAxialDir[side][0];
                r += kAxialDir[side][1];
            }
    }
    return out;
}

}  // namespace

std::string to_string(VertexClass c)
{
    switch (c) {
    case VertexClass::HexInterior:
        return "V_I";
    case VertexClass::HexBoundary:
        return "V_O";
    case VertexClass::Pendant:
        return "A";
    case VertexClass::Subdivision:
        return "B";
    case VertexClass::Extra:
        return "extra";
    }
    return "?";
}

std::vector<Vertex> HexPatch::boundary() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < graph.num_vertices(); ++v)
        if (on_boundary[v])
            out.push_back(v);
    return out;
}

HexPatch hex_patch(int rings)
{
    if (rings <= 0)
        throw GraphError("ring count must be positive, got " + std::to_string(rings));

    HexPatch patch;
    patch.rings = rings;
    std::map<std::array<int, 2>, Vertex> id_of;
    std::vector<std::array<int, 2>> position;
    std::vector<int> hexagons_at;
    std::set<Edge> edge_set;

    for (auto [q, r] : spiral_hexagons(rings)) {
        std::array<Vertex, 6> corners{};
        for (int k = 0; k < 6; ++k) {
            std::array<int, 2> p{3 * q + kCornerOffset[k][0], 2 * r + q + kCornerOffset[k][1]};
            auto [it, inserted] = id_of.try_emplace(p, static_cast<Vertex>(position.size()));
            if (inserted) {
                position.push_back(p);
                hexagons_at.push_back(0);
            }
            corners[k] = it->second;
            ++hexagons_at[it->second];
        }
        for (int k = 0; k < 6; ++k)
            edge_set.insert(Edge{corners[k], corners[(k + 1) % 6]}.canonical());
        patch.hexagons.push_back(corners);
    }

    const int n = static_cast<int>(position.size());
    std::vector<Edge> edges(edge_set.begin(), edge_set.end());
    patch.graph = build_graph(n, edges);
    for (Edge e : edges)
        if (position[e.u][1] == position[e.v][1])
            patch.horizontal_edges.push_back(e);

    patch.coords.reserve(n);
    patch.on_boundary.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        patch.coords.push_back(coord_of(position[v][0], position[v][1]));
        // Interior honeycomb vertices touch three hexagons of the patch.
        patch.on_boundary[v] = hexagons_at[v] < 3;
    }
    return patch;
}

std::vector<Vertex> ConstructionGraph::members(VertexClass c) const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < graph.num_vertices(); ++v)
        if (class_of[v] == c)
            out.push_back(v);
    return out;
}

std::vector<std::string> ConstructionGraph::labels() const
{
    std::vector<std::string> out;
    out.reserve(class_of.size());
    for (VertexClass c : class_of)
        out.push_back(to_string(c));
    return out;
}

ConstructionGraph lower_bound_graph(int rings)
{
    HexPatch patch = hex_patch(rings);
    const int hex_n = patch.graph.num_vertices();
    const int total = 2 * hex_n + static_cast<int>(patch.horizontal_edges.size());

    ConstructionGraph c;
    c.rings = rings;
    c.class_of.resize(total);
    c.pendant_of.assign(total, -1);
    c.hex_coords = patch.coords;

    std::vector<Edge> edges;
    std::set<Edge> horizontal(patch.horizontal_edges.begin(), patch.horizontal_edges.end());
    for (Edge e : patch.graph.edges())
        if (!horizontal.count(e))
            edges.push_back(e);
    for (Vertex v = 0; v < hex_n; ++v) {
        c.class_of[v] = patch.on_boundary[v] ? VertexClass::HexBoundary : VertexClass::HexInterior;
        c.pendant_of[v] = hex_n + v;
        c.class_of[hex_n + v] = VertexClass::Pendant;
        edges.push_back({v, hex_n + v});
    }
    Vertex next = 2 * hex_n;
    for (Edge e : patch.horizontal_edges) {
        c.class_of[next] = VertexClass::Subdivision;
        edges.push_back({e.u, next});
        edges.push_back({next, e.v});
        ++next;
    }
    c.graph = build_graph(total, edges);
    return c;
}

ClassCounts class_counts(int rings)
{
    if (rings <= 0)
        throw GraphError("ring count must be positive");
    const long long n = rings;
    ClassCounts k;
    k.pendants = 6 * n * n;
    k.subdivisions = 3 * n * n - n;
    k.interior = 6 * n * n - 12 * n + 6;
    k.boundary = 12 * n - 6;
    k.vertices = 15 * n * n - n;
    k.edges = 18 * n * n - 4 * n;
    return k;
}

ClassCounts measure_class_counts(const ConstructionGraph& c)
{
    ClassCounts k;
    std::vector<char> counted(c.graph.num_vertices(), 0);
    for (Vertex v = 0; v < c.graph.num_vertices(); ++v) {
        switch (c.class_of[v]) {
        case VertexClass::Pendant:
            ++k.pendants;
            break;
        case VertexClass::Subdivision:
            ++k.subdivisions;
            break;
        case VertexClass::HexInterior:
            ++k.interior;
            break;
        case VertexClass::HexBoundary:
            ++k.boundary;
            break;
        case VertexClass::Extra:
            continue;
        }
        counted[v] = 1;
        ++k.vertices;
    }
    for (Edge e : c.graph.edges())
        if (counted[e.u] && counted[e.v])
            ++k.edges;
    return k;
}

ConstructionGraph with_cycle(int rings, int k)
{
    if (k < 3 || k > 8)
        throw GraphError("cycle length must lie in [3, 8], got " + std::to_string(k));
    ConstructionGraph c = lower_bound_graph(rings);
    c.graph = disjoint_union(c.graph, cycle(k));
    c.class_of.resize(c.graph.num_vertices(), VertexClass::Extra);
    c.pendant_of.resize(c.graph.num_vertices(), -1);
    return c;
}

bool counting_inequality_holds(int rings)
{
    ClassCounts k = class_counts(rings);
    return k.subdivisions + k.boundary + 1 < k.interior;
}

int smallest_rings_with_counting_inequality()
{
    int n = 1;
    while (!counting_inequality_holds(n))
        ++n;
    return n;
}

}  // namespace marklab
