#pragma once

#include <iosfwd>
#include <memory>
#include <random>

#include "marklab/constructions.hpp"
#include "marklab/game.hpp"
#include "marklab/ordering.hpp"

namespace marklab {

// Activation strategy for Alice over a fixed order L. Two tie-breaking rules:
//
// Least (default): the opening move is the L-least vertex. After Bob marks b,
// b is activated and Alice walks from x = b: y is the L-least unmarked vertex
// of N+[x] (x itself included while unmarked). An inactive y is activated and
// the walk moves to it; an active y is marked. If N+[x] has no unmarked vertex
// she marks the L-least unmarked vertex.
//
// Greatest: the opening move is the L-greatest vertex. From x = b, y is the
// L-greatest unmarked out-neighbor of x. With no such y she marks x if it is
// still unmarked, else the L-greatest unmarked vertex. Inactive y is
// activated and the walk continues; active y is marked.
//
// Every vertex Alice marks is activated first, and walks descend strictly in L.
enum class ActivationRule { Least, Greatest };

class ActivationAlice : public Strategy {
public:
    explicit ActivationAlice(LinearOrder order, ActivationRule rule = ActivationRule::Least);

    Vertex choose(const GameState& state) override;
    std::unique_ptr<Strategy> clone() const override;
    std::string name() const override
    {
        return rule_ == ActivationRule::Least ? "activation" : "activation-greatest";
    }
    std::vector<std::uint64_t> fingerprint() const override;

    bool is_active(Vertex v) const { return active_[v]; }
    /// Vertices visited by the latest walk, starting with Bob's move.
    const std::vector<Vertex>& last_walk() const { return walk_; }

private:
    Vertex greatest_unmarked(const GameState& state);
    Vertex least_unmarked(const GameState& state);
    Vertex select(Vertex v);
    Vertex walk_least(const GameState& state, Vertex b);
    Vertex walk_greatest(const GameState& state, Vertex b);

    LinearOrder order_;
    ActivationRule rule_;
    std::vector<char> active_;
    std::vector<Vertex> walk_;
    int top_ = 0;     // positions above top_ are all marked
    int bottom_ = 0;  // positions below bottom_ are all marked
};

// Bob's strategy on G_n (optionally with extra components).
//   Phase 1: lowest-id unmarked vertex of B ∪ V_O.
//   Phase 2: lowest-id unmarked pendant a_v of an unmarked V_I vertex v.
//   Phase 3: lowest-id unmarked vertex.
class Theorem3Bob : public Strategy {
public:
    explicit Theorem3Bob(const ConstructionGraph& c);

    Vertex choose(const GameState& state) override;
    std::unique_ptr<Strategy> clone() const override;
    std::string name() const override { return "theorem3"; }

    int last_phase() const { return last_phase_; }

private:
    std::vector<Vertex> phase1_;
    std::vector<std::pair<Vertex, Vertex>> interior_pendants_;  // (v, a_v), by a_v
    int last_phase_ = 0;
};

class GreedyOrder : public Strategy {
public:
    explicit GreedyOrder(LinearOrder order) : order_(std::move(order)) {}
    Vertex choose(const GameState& state) override;
    std::unique_ptr<Strategy> clone() const override;
    std::string name() const override { return "greedy"; }

private:
    LinearOrder order_;
};

class RandomStrategy : public Strategy {
public:
    explicit RandomStrategy(std::uint64_t seed) : rng_(seed) {}
    Vertex choose(const GameState& state) override;
    std::unique_ptr<Strategy> clone() const override;
    std::string name() const override { return "random"; }
    std::vector<std::uint64_t> fingerprint() const override { return {calls_}; }

private:
    std::mt19937_64 rng_;
    std::uint64_t calls_ = 0;
};

// Marks an unmarked vertex with the most marked neighbors, ties by lowest id.
class MaxMarkedNeighbors : public Strategy {
public:
    Vertex choose(const GameState& state) override;
    std::unique_ptr<Strategy> clone() const override;
    std::string name() const override { return "greedy-marked"; }
};

class LowestId : public Strategy {
public:
    Vertex choose(const GameState& state) override;
    std::unique_ptr<Strategy> clone() const override;
    std::string name() const override { return "lowest-id"; }
};

// Terminal play: prints the position, reads a vertex id. Illegal input
// re-prompts; "q", "quit" or end of input abort the game.
class InteractiveStrategy : public Strategy {
public:
    InteractiveStrategy(Player side, std::istream& in, std::ostream& out)
        : side_(side), in_(&in), out_(&out)
    {
    }
    Vertex choose(const GameState& state) override;
    std::unique_ptr<Strategy> clone() const override;
    std::string name() const override { return "human"; }

private:
    Player side_;
    std::istream* in_;
    std::ostream* out_;
};

std::unique_ptr<Strategy> activation_alice(LinearOrder order,
                                           ActivationRule rule = ActivationRule::Least);
std::unique_ptr<Strategy> theorem3_bob(const ConstructionGraph& c);
std::unique_ptr<Strategy> greedy_order(LinearOrder order);
std::unique_ptr<Strategy> random_strategy(std::uint64_t seed);
std::unique_ptr<Strategy> max_marked_neighbors_bob();
std::unique_ptr<Strategy> lowest_id();
std::unique_ptr<Strategy> interactive_strategy(Player side, std::istream& in, std::ostream& out);

}  // namespace marklab
