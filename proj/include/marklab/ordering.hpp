#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "marklab/graph.hpp"

namespace marklab {

// A linear order on V(G). position(v) is v's rank; a larger position means
// greater in L. Serialized greatest-first.
class LinearOrder {
public:
    LinearOrder() = default;

    /// Throws GraphError unless `position` is a bijection onto 0..n-1.
    static LinearOrder from_positions(std::vector<int> position);
    static LinearOrder from_greatest_first(std::span<const Vertex> sequence);
    /// Vertex id order: u <_L v iff u < v.
    static LinearOrder identity(int n);

    int size() const { return static_cast<int>(position_.size()); }
    int position(Vertex v) const { return position_[v]; }
    bool less(Vertex u, Vertex v) const { return position_[u] < position_[v]; }
    Vertex at(int pos) const { return vertex_at_[pos]; }
    Vertex greatest() const { return vertex_at_.back(); }

    std::vector<Vertex> greatest_first() const;
    std::string to_string() const;
    static LinearOrder parse(std::string_view text);

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

private:
    std::vector<int> position_;
    std::vector<Vertex> vertex_at_;
};

// G_L: every edge oriented from its L-greater to its L-smaller endpoint.
// Out-neighbors are the L-smaller neighbors.
class OrientedView {
public:
    OrientedView(const Graph& g, const LinearOrder& order);

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[v].size()); }

private:
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

/// Throws GraphError on a size mismatch.
OrientedView orient(const Graph& g, const LinearOrder& order);

// How the two matchings of the rank definition may interact.
//   Permissive: M and N are separate matchings and may share targets;
//               u may be an M-source and an N-target at once.
//   Disjoint:   M ∪ N must itself be a matching.
enum class MatchingMode { Permissive, Disjoint };

std::string to_string(MatchingMode mode);
std::optional<MatchingMode> parse_matching_mode(std::string_view text);

// Certificate for m(u, L, G): Z = X ∪ Y with X matched by M into V⁺(u) and
// Y ⊆ N⁻(u) matched by N into V⁺[u]. Edges are stored (source, target).
struct MatchingWitness {
    Vertex u = -1;
    std::vector<Vertex> x;
    std::vector<Vertex> y;
    std::vector<Edge> m_edges;
    std::vector<Edge> n_edges;

    int size() const { return static_cast<int>(x.size() + y.size()); }
    std::vector<Vertex> z() const;
};

struct MValue {
    int size = 0;
    MatchingWitness witness;
};

/// Exact m(u, L, G) by maximum bipartite matching.
MValue m_value(const Graph& g, const LinearOrder& order, Vertex u,
               MatchingMode mode = MatchingMode::Permissive);

/// Empty string if `w` satisfies every witness invariant under `mode`.
std::string check_witness(const Graph& g, const LinearOrder& order, const MatchingWitness& w,
                          MatchingMode mode);

struct VertexRank {
    Vertex v = -1;
    int out_degree = 0;
    int m = 0;
    int r = 0;
    MatchingWitness witness;
};

struct RankReport {
    std::vector<VertexRank> vertices;  // indexed by vertex id
    int r_of_order = 0;
    Vertex argmax = -1;                // smallest id attaining r_of_order
};

int rank_vertex(const Graph& g, const LinearOrder& order, Vertex u,
                MatchingMode mode = MatchingMode::Permissive);
RankReport rank_order(const Graph& g, const LinearOrder& order,
                      MatchingMode mode = MatchingMode::Permissive);

struct ExactRank {
    int value = 0;
    LinearOrder order;
};

/// min over all n! orders; rejects graphs with more than `max_vertices` vertices.
ExactRank rank_graph_exact(const Graph& g, MatchingMode mode = MatchingMode::Permissive,
                           int max_vertices = 9);

struct OrderVerification {
    bool pass = false;
    int bound = 0;
    int r_of_order = 0;
    Vertex argmax = -1;
    MatchingWitness witness;
    RankReport ranks;
};

OrderVerification verify_order(const Graph& g, const LinearOrder& order, int bound,
                               MatchingMode mode = MatchingMode::Permissive);

}  // namespace marklab
