#include "marklab/game.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace marklab {

std::string to_string(Player p) { return p == Player::Alice ? "alice" : "bob"; }

GameState::GameState(const Graph& g)
    : graph_(&g), back_degree_(g.num_vertices(), -1), marked_neighbors_(g.num_vertices(), 0)
{
    history_.reserve(g.num_vertices());
}

std::optional<Vertex> GameState::last_move() const
{
    if (history_.empty())
        return std::nullopt;
    return history_.back();
}

std::vector<Vertex> GameState::unmarked() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < num_vertices(); ++v)
        if (!is_marked(v))
            out.push_back(v);
    return out;
}

void GameState::mark(Vertex v)
{
    if (v < 0 || v >= num_vertices())
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    if (is_marked(v))
        throw GraphError("vertex " + std::to_string(v) + " is already marked");
    back_degree_[v] = marked_neighbors_[v];
    score_ = std::max(score_, back_degree_[v] + 1);
    for (Vertex w : graph_->neighbors(v))
        ++marked_neighbors_[w];
    history_.push_back(v);
}

StrategyFault::StrategyFault(Player who, std::string strategy, Vertex vertex, const std::string& why)
    : std::runtime_error("strategy fault: " + to_string(who) + " (" + strategy + ") chose " +
                         std::to_string(vertex) + ": " + why),
      who_(who), strategy_(std::move(strategy)), vertex_(vertex)
{
}

namespace {

Transcript transcript_of(const GameState& state, bool complete)
{
    Transcript t;
    t.complete = complete;
    t.score = state.score();
    t.back_degree.resize(state.num_vertices());
    for (Vertex v = 0; v < state.num_vertices(); ++v)
        t.back_degree[v] = state.back_degree(v);
    for (int i = 0; i < state.marked_count(); ++i) {
        Vertex v = state.history()[i];
        t.moves.push_back({i, i % 2 == 0 ? Player::Alice : Player::Bob, v, state.back_degree(v)});
    }
    return t;
}

}  // namespace

Transcript play(const Graph& g, Strategy& alice, Strategy& bob)
{
    GameState state(g);
    while (!state.finished()) {
        const Player who = state.to_move();
        Strategy& s = who == Player::Alice ? alice : bob;
        Vertex v;
        try {
            v = s.choose(state);
        } catch (const GameAborted&) {
            return transcript_of(state, false);
        }
        if (v < 0 || v >= g.num_vertices())
            throw StrategyFault(who, s.name(), v, "vertex out of range");
        if (state.is_marked(v))
            throw StrategyFault(who, s.name(), v, "vertex already marked");
        state.mark(v);
    }
    return transcript_of(state, true);
}

Transcript replay(const Graph& g, const std::vector<Vertex>& moves)
{
    GameState state(g);
    for (Vertex v : moves)
        state.mark(v);
    return transcript_of(state, state.finished());
}

int score_of_sequence(const Graph& g, const std::vector<Vertex>& sequence)
{
    std::vector<int> when(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(sequence.size()); ++i)
        when[sequence[i]] = i;
    int score = 0;
    for (Vertex v : sequence) {
        int before = 0;
        for (Vertex w : g.neighbors(v))
            before += when[w] >= 0 && when[w] < when[v];
        score = std::max(score, before + 1);
    }
    return score;
}

std::vector<Transcript> play_batch(const Graph& g, const std::vector<MatchupSpec>& matchups,
                                   int threads)
{
    std::vector<Transcript> results(matchups.size());
    std::vector<std::exception_ptr> errors(matchups.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < matchups.size(); i = next++) {
            try {
                auto alice = matchups[i].alice();
                auto bob = matchups[i].bob();
                results[i] = play(g, *alice, *bob);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int count = std::max(1, std::min<int>(threads, static_cast<int>(matchups.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < count; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

int configured_threads()
{
    if (const char* env = std::getenv("MARKLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace marklab
