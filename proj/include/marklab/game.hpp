#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "marklab/graph.hpp"

namespace marklab {

enum class Player { Alice, Bob };

std::string to_string(Player p);

// Position of a marking game. Alice moves first and the players alternate;
// b(v) is frozen when v is marked as the number of its neighbors marked
// strictly earlier. score() is the running max of b(v)+1.
class GameState {
public:
    explicit GameState(const Graph& g);
    GameState(Graph&&) = delete;  // the state keeps a pointer to the graph

    const Graph& graph() const { return *graph_; }
    int num_vertices() const { return graph_->num_vertices(); }

    bool is_marked(Vertex v) const { return back_degree_[v] >= 0; }
    /// b(v) for marked v, -1 otherwise.
    int back_degree(Vertex v) const { return back_degree_[v]; }
    /// Currently marked neighbors: the b(v) v would get if marked now.
    int marked_neighbors(Vertex v) const { return marked_neighbors_[v]; }

    int marked_count() const { return static_cast<int>(history_.size()); }
    bool finished() const { return marked_count() == num_vertices(); }
    Player to_move() const { return marked_count() % 2 == 0 ? Player::Alice : Player::Bob; }
    int score() const { return score_; }

    const std::vector<Vertex>& history() const { return history_; }
    std::optional<Vertex> last_move() const;
    std::vector<Vertex> unmarked() const;

    /// Throws GraphError if v is out of range or already marked.
    void mark(Vertex v);

private:
    const Graph* graph_;
    std::vector<int> back_degree_;
    std::vector<int> marked_neighbors_;
    std::vector<Vertex> history_;
    int score_ = 0;
};

// A player's policy. choose() must return an unmarked vertex of a
// non-finished state. Implementations may keep private state; fingerprint()
// must capture every part of it that, together with the marked set and the
// opponent's latest move, determines future choices. Searches that branch on
// the opponent's moves clone() the strategy at each branch.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual Vertex choose(const GameState& state) = 0;
    virtual std::unique_ptr<Strategy> clone() const = 0;
    virtual std::string name() const = 0;
    virtual std::vector<std::uint64_t> fingerprint() const { return {}; }
};

using StrategyFactory = std::function<std::unique_ptr<Strategy>()>;

struct Move {
    int index = 0;
    Player player = Player::Alice;
    Vertex vertex = -1;
    int back_degree = 0;
};

struct Transcript {
    std::vector<Move> moves;
    int score = 0;
    std::vector<int> back_degree;  // per vertex; -1 if never marked
    bool complete = false;
};

class StrategyFault : public std::runtime_error {
public:
    StrategyFault(Player who, std::string strategy, Vertex vertex, const std::string& why);
    Player who() const { return who_; }
    const std::string& strategy() const { return strategy_; }
    Vertex vertex() const { return vertex_; }

private:
    Player who_;
    std::string strategy_;
    Vertex vertex_;
};

// Thrown by a strategy to end the game early (e.g. a human quitting).
class GameAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plays to completion. A GameAborted from either strategy yields the
/// transcript so far with complete == false.
Transcript play(const Graph& g, Strategy& alice, Strategy& bob);

/// Re-applies the moves and returns the recomputed transcript.
Transcript replay(const Graph& g, const std::vector<Vertex>& moves);

/// max over v of (neighbors of v earlier in the sequence) + 1.
int score_of_sequence(const Graph& g, const std::vector<Vertex>& sequence);

struct MatchupSpec {
    std::string label;
    StrategyFactory alice;
    StrategyFactory bob;
};

/// Plays independent games, `threads` at a time; results in input order.
std::vector<Transcript> play_batch(const Graph& g, const std::vector<MatchupSpec>& matchups,
                                   int threads);

/// MARKLAB_THREADS if set and positive, otherwise hardware concurrency.
int configured_threads();

}  // namespace marklab
