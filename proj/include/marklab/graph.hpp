#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace marklab {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    /// Same edge with the smaller endpoint first.
    Edge canonical() const { return u <= v ? Edge{u, v} : Edge{v, u}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertex ids 0..n-1. Immutable once built;
// adjacency lists are sorted and symmetric, no loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }
    bool empty() const { return adj_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges as (u < v) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(int n, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adj_;
    int m_ = 0;
};

/// Validates and builds a graph. Duplicate pairs (in either orientation)
/// collapse to one edge; loops and out-of-range ids throw GraphError.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges)
{
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Re-checks the structural invariants; returns an empty string when they hold.
std::string validate(const Graph& g);

// Shortest cycle length, or infinite for forests.
class Girth {
public:
    static Girth infinite() { return Girth(); }
    explicit Girth(int length);

    bool is_finite() const { return length_ != kInfinite; }
    int value() const;
    std::string to_string() const;

    friend auto operator<=>(const Girth&, const Girth&) = default;

    friend Girth operator*(int factor, const Girth& g)
    {
        return g.is_finite() ? Girth(factor * g.length_) : g;
    }

private:
    static constexpr int kInfinite = std::numeric_limits<int>::max();
    Girth() = default;
    int length_ = kInfinite;
};

Girth girth(const Graph& g);

/// The k-cycle 0-1-...-(k-1)-0; k >= 3.
Graph cycle(int k);

/// g2's ids are shifted by g1.num_vertices().
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Replaces each edge by a path with `times` internal vertices. New vertices
/// are numbered after the originals, edge by edge in edges() order.
Graph subdivide_each_edge(const Graph& g, int times);

/// Euler-formula necessary condition for a planar graph of girth >= assumed_girth:
/// m <= g/(g-2) * (n-2). A false result rules planarity out.
bool planar_girth_edge_bound(const Graph& g, int assumed_girth);

/// Least k such that every subgraph has a vertex of degree <= k.
int degeneracy(const Graph& g);

}  // namespace marklab
