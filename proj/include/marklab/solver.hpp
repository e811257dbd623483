#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "marklab/game.hpp"
#include "marklab/graph.hpp"
#include "marklab/ordering.hpp"

namespace marklab {

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int lower, int upper, std::uint64_t nodes);
    int lower() const { return lower_; }
    int upper() const { return upper_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    int lower_;
    int upper_;
    std::uint64_t nodes_;
};

struct SolveOptions {
    std::uint64_t node_budget = 0;  // 0: unlimited
    int max_vertices = 20;
    bool memo = true;
    // Start the threshold scan at degeneracy+1, take Δ+1 as known, and cut
    // Bob nodes as soon as one move exceeds the threshold.
    bool prune = true;
    bool principal_variation = true;
    std::optional<LinearOrder> alice_hint;  // move ordering only
};

struct SolveResult {
    int value = 0;
    std::vector<Vertex> principal_variation;
    std::uint64_t nodes = 0;
    std::uint64_t table_hits = 0;
    std::uint64_t table_entries = 0;
};

/// col_g(G) by exhaustive search over marked sets. Alice minimizes the final
/// max b(v)+1, Bob maximizes. Empty graph: 0.
SolveResult game_coloring_number(const Graph& g, const SolveOptions& options = {});

/// Plain minimax without memo or pruning; n <= 8.
int brute_force_value(const Graph& g);

struct ResponseOptions {
    std::uint64_t node_budget = 0;
    int max_vertices = 24;
    bool memo = true;
};

/// Largest final score Bob can force against the fixed strategy `alice`.
int best_response_bob(const Graph& g, const Strategy& alice, const ResponseOptions& options = {});
/// Smallest final score Alice can force against the fixed strategy `bob`.
int best_response_alice(const Graph& g, const Strategy& bob, const ResponseOptions& options = {});

}  // namespace marklab
