#include "marklab/strategies.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace marklab {

ActivationAlice::ActivationAlice(LinearOrder order, ActivationRule rule)
    : order_(std::move(order)), rule_(rule), active_(order_.size(), 0), top_(order_.size() - 1)
{
}

Vertex ActivationAlice::greatest_unmarked(const GameState& state)
{
    while (top_ >= 0 && state.is_marked(order_.at(top_)))
        --top_;
    if (top_ < 0)
        throw GraphError("no unmarked vertex left");
    return order_.at(top_);
}

Vertex ActivationAlice::least_unmarked(const GameState& state)
{
    while (bottom_ < order_.size() && state.is_marked(order_.at(bottom_)))
        ++bottom_;
    if (bottom_ == order_.size())
        throw GraphError("no unmarked vertex left");
    return order_.at(bottom_);
}

Vertex ActivationAlice::select(Vertex v)
{
    active_[v] = 1;
    return v;
}

Vertex ActivationAlice::choose(const GameState& state)
{
    if (order_.size() != state.num_vertices())
        throw GraphError("activation order does not match the game graph");
    walk_.clear();
    auto last = state.last_move();
    if (!last) {
        Vertex v = rule_ == ActivationRule::Least ? least_unmarked(state) : greatest_unmarked(state);
        walk_.push_back(v);
        return select(v);
    }
    return rule_ == ActivationRule::Least ? walk_least(state, *last) : walk_greatest(state, *last);
}

Vertex ActivationAlice::walk_least(const GameState& state, Vertex b)
{
    const Graph& g = state.graph();
    active_[b] = 1;
    walk_.push_back(b);
    Vertex x = b;
    for (;;) {
        Vertex y = state.is_marked(x) ? -1 : x;
        for (Vertex w : g.neighbors(x))
            if (order_.less(w, x) && !state.is_marked(w) && (y < 0 || order_.less(w, y)))
                y = w;
        if (y < 0)
            return select(least_unmarked(state));
        if (active_[y]) {
            if (y != x)
                walk_.push_back(y);
            return y;
        }
        active_[y] = 1;
        walk_.push_back(y);
        x = y;
    }
}

Vertex ActivationAlice::walk_greatest(const GameState& state, Vertex b)
{
    const Graph& g = state.graph();
    Vertex x = b;
    walk_.push_back(x);
    for (;;) {
        Vertex y = -1;
        for (Vertex w : g.neighbors(x))
            if (order_.less(w, x) && !state.is_marked(w) && (y < 0 || order_.less(y, w)))
                y = w;
        if (y < 0)
            return select(state.is_marked(x) ? greatest_unmarked(state) : x);
        walk_.push_back(y);
        if (active_[y])
            return y;
        active_[y] = 1;
        x = y;
    }
}

std::unique_ptr<Strategy> ActivationAlice::clone() const
{
    return std::make_unique<ActivationAlice>(*this);
}

std::vector<std::uint64_t> ActivationAlice::fingerprint() const
{
    std::vector<std::uint64_t> words((active_.size() + 63) / 64, 0);
    for (std::size_t v = 0; v < active_.size(); ++v)
        if (active_[v])
            words[v / 64] |= std::uint64_t{1} << (v % 64);
    return words;
}

Theorem3Bob::Theorem3Bob(const ConstructionGraph& c)
{
    for (Vertex v = 0; v < c.graph.num_vertices(); ++v) {
        if (c.class_of[v] == VertexClass::Subdivision || c.class_of[v] == VertexClass::HexBoundary)
            phase1_.push_back(v);
        if (c.class_of[v] == VertexClass::HexInterior)
            interior_pendants_.push_back({v, c.pendant_of[v]});
    }
    std::sort(interior_pendants_.begin(), interior_pendants_.end(),
              [](auto a, auto b) { return a.second < b.second; });
}

Vertex Theorem3Bob::choose(const GameState& state)
{
    for (Vertex v : phase1_)
        if (!state.is_marked(v)) {
            last_phase_ = 1;
            return v;
        }
    for (auto [v, pendant] : interior_pendants_)
        if (!state.is_marked(v) && !state.is_marked(pendant)) {
            last_phase_ = 2;
            return pendant;
        }
    last_phase_ = 3;
    for (Vertex v = 0; v < state.num_vertices(); ++v)
        if (!state.is_marked(v))
            return v;
    throw GraphError("no unmarked vertex left");
}

std::unique_ptr<Strategy> Theorem3Bob::clone() const { return std::make_unique<Theorem3Bob>(*this); }

Vertex GreedyOrder::choose(const GameState& state)
{
    for (int p = order_.size() - 1; p >= 0; --p)
        if (!state.is_marked(order_.at(p)))
            return order_.at(p);
    throw GraphError("no unmarked vertex left");
}

std::unique_ptr<Strategy> GreedyOrder::clone() const { return std::make_unique<GreedyOrder>(*this); }

Vertex RandomStrategy::choose(const GameState& state)
{
    auto options = state.unmarked();
    if (options.empty())
        throw GraphError("no unmarked vertex left");
    ++calls_;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    return options[pick(rng_)];
}

std::unique_ptr<Strategy> RandomStrategy::clone() const
{
    return std::make_unique<RandomStrategy>(*this);
}

Vertex MaxMarkedNeighbors::choose(const GameState& state)
{
    Vertex best = -1;
    for (Vertex v = 0; v < state.num_vertices(); ++v)
        if (!state.is_marked(v) &&
            (best < 0 || state.marked_neighbors(v) > state.marked_neighbors(best)))
            best = v;
    if (best < 0)
        throw GraphError("no unmarked vertex left");
    return best;
}

std::unique_ptr<Strategy> MaxMarkedNeighbors::clone() const
{
    return std::make_unique<MaxMarkedNeighbors>(*this);
}

Vertex LowestId::choose(const GameState& state)
{
    for (Vertex v = 0; v < state.num_vertices(); ++v)
        if (!state.is_marked(v))
            return v;
    throw GraphError("no unmarked vertex left");
}

std::unique_ptr<Strategy> LowestId::clone() const { return std::make_unique<LowestId>(*this); }

Vertex InteractiveStrategy::choose(const GameState& state)
{
    std::ostream& out = *out_;
    out << "-- " << to_string(side_) << " to move (move " << state.marked_count() + 1 << "/"
        << state.num_vertices() << ", score so far " << state.score() << ")\n";
    out << "marked:";
    for (Vertex v : state.history())
        out << ' ' << v << "(b=" << state.back_degree(v) << ")";
    out << "\nlegal:";
    for (Vertex v : state.unmarked())
        out << ' ' << v << "(b=" << state.marked_neighbors(v) << ")";
    out << '\n';

    for (;;) {
        out << "vertex> " << std::flush;
        std::string line;
        if (!std::getline(*in_, line))
            throw GameAborted("input closed");
        std::istringstream words(line);
        std::string tok;
        if (!(words >> tok))
            continue;
        if (tok == "q" || tok == "quit")
            throw GameAborted("player quit");
        Vertex v = -1;
        try {
            std::size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size())
                v = -1;
        } catch (const std::exception&) {
            v = -1;
        }
        if (v < 0 || v >= state.num_vertices()) {
            out << "'" << tok << "' is not a vertex id in [0," << state.num_vertices() << ")\n";
            continue;
        }
        if (state.is_marked(v)) {
            out << "vertex " << v << " is already marked; choose an unmarked vertex\n";
            continue;
        }
        return v;
    }
}

std::unique_ptr<Strategy> InteractiveStrategy::clone() const
{
    return std::make_unique<InteractiveStrategy>(*this);
}

std::unique_ptr<Strategy> activation_alice(LinearOrder order, ActivationRule rule)
{
    return std::make_unique<ActivationAlice>(std::move(order), rule);
}
std::unique_ptr<Strategy> theorem3_bob(const ConstructionGraph& c)
{
    return std::make_unique<Theorem3Bob>(c);
}
std::unique_ptr<Strategy> greedy_order(LinearOrder order)
{
    return std::make_unique<GreedyOrder>(std::move(order));
}
std::unique_ptr<Strategy> random_strategy(std::uint64_t seed)
{
    return std::make_unique<RandomStrategy>(seed);
}
std::unique_ptr<Strategy> max_marked_neighbors_bob() { return std::make_unique<MaxMarkedNeighbors>(); }
std::unique_ptr<Strategy> lowest_id() { return std::make_unique<LowestId>(); }
std::unique_ptr<Strategy> interactive_strategy(Player side, std::istream& in, std::ostream& out)
{
    return std::make_unique<InteractiveStrategy>(side, in, out);
}

}  // namespace marklab
