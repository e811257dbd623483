#include "marklab/solver.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace marklab {

BudgetExceeded::BudgetExceeded(int lower, int upper, std::uint64_t nodes)
    : std::runtime_error("node budget exceeded after " + std::to_string(nodes) +
                         " nodes; value in [" + std::to_string(lower) + ", " +
                         std::to_string(upper) + "]"),
      lower_(lower), upper_(upper), nodes_(nodes)
{
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g)
{
    std::vector<Mask> adj(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (Vertex w : g.neighbors(v))
            adj[v] |= bit(w);
    return adj;
}

void check_size(const Graph& g, int limit, const char* what)
{
    if (g.num_vertices() > limit)
        throw GraphError(std::string(what) + " is limited to " + std::to_string(limit) +
                         " vertices (graph has " + std::to_string(g.num_vertices()) + ")");
    if (g.num_vertices() > 64)
        throw GraphError(std::string(what) + " supports at most 64 vertices");
}

struct BudgetHit {};

// "Can Alice keep every future b(v)+1 <= s from this marked set?"
// Turn parity follows from the popcount. Per mask the table keeps the largest
// threshold known to fail and the smallest known to hold.
class DecisionSearch {
public:
    DecisionSearch(const Graph& g, const SolveOptions& options)
        : options_(options), adj_(adjacency_masks(g)), n_(g.num_vertices()),
          full_(n_ == 64 ? ~Mask{0} : bit(n_) - 1)
    {
        alice_order_.resize(n_);
        for (Vertex v = 0; v < n_; ++v)
            alice_order_[v] = v;
        if (options.alice_hint && options.alice_hint->size() == n_)
            alice_order_ = options.alice_hint->greatest_first();
    }

    bool holds(Mask mask, int s)
    {
        if (mask == full_)
            return true;
        if (options_.node_budget && nodes_ >= options_.node_budget)
            throw BudgetHit{};
        ++nodes_;

        Bounds* entry = nullptr;
        if (options_.memo) {
            auto [it, inserted] = table_.try_emplace(mask);
            entry = &it->second;
            if (!inserted) {
                if (s >= entry->holds_from) {
                    ++hits_;
                    return true;
                }
                if (s <= entry->fails_at) {
                    ++hits_;
                    return false;
                }
            }
        }

        bool result;
        if (std::popcount(mask) % 2 == 0)
            result = alice_holds(mask, s);
        else
            result = bob_fails(mask, s);

        if (entry) {
            // try_emplace may have rehashed during recursion.
            Bounds& b = table_[mask];
            if (result)
                b.holds_from = std::min(b.holds_from, s);
            else
                b.fails_at = std::max(b.fails_at, s);
        }
        return result;
    }

    int back_degree(Mask mask, Vertex v) const { return std::popcount(adj_[v] & mask); }
    const std::vector<Vertex>& alice_order() const { return alice_order_; }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t hits() const { return hits_; }
    std::uint64_t entries() const { return table_.size(); }
    Mask full() const { return full_; }
    int n() const { return n_; }

private:
    struct Bounds {
        int fails_at = -1;
        int holds_from = 1 << 20;
    };

    bool alice_holds(Mask mask, int s)
    {
        for (Vertex v : alice_order_) {
            if (mask & bit(v))
                continue;
            if (back_degree(mask, v) + 1 > s)
                continue;
            if (holds(mask | bit(v), s))
                return true;
        }
        return false;
    }

    // Returns true iff Alice still holds after every Bob reply.
    bool bob_fails(Mask mask, int s)
    {
        std::vector<std::pair<int, Vertex>> moves;
        for (Vertex v = 0; v < n_; ++v)
            if (!(mask & bit(v)))
                moves.push_back({back_degree(mask, v), v});
        if (options_.prune)
            for (auto [b, v] : moves)
                if (b + 1 > s)
                    return false;
        // Most marked neighbors first.
        std::stable_sort(moves.begin(), moves.end(),
                         [](auto a, auto b) { return a.first > b.first; });
        for (auto [b, v] : moves) {
            if (b + 1 > s)
                return false;
            if (!holds(mask | bit(v), s))
                return false;
        }
        return true;
    }

    const SolveOptions& options_;
    std::vector<Mask> adj_;
    int n_;
    Mask full_;
    std::vector<Vertex> alice_order_;
    std::unordered_map<Mask, Bounds> table_;
    std::uint64_t nodes_ = 0;
    std::uint64_t hits_ = 0;
};

std::vector<Vertex> principal_variation(DecisionSearch& search, int value)
{
    std::vector<Vertex> pv;
    Mask mask = 0;
    int running = 0;
    while (mask != search.full()) {
        Vertex pick = -1;
        if (std::popcount(mask) % 2 == 0) {
            for (Vertex v : search.alice_order())
                if (!(mask & bit(v)) && search.back_degree(mask, v) + 1 <= value &&
                    search.holds(mask | bit(v), value)) {
                    pick = v;
                    break;
                }
        } else {
            for (Vertex v = 0; v < search.n() && pick < 0; ++v) {
                if (mask & bit(v))
                    continue;
                int b = search.back_degree(mask, v);
                if (running >= value || b + 1 >= value || !search.holds(mask | bit(v), value - 1))
                    pick = v;
            }
        }
        if (pick < 0)
            throw std::logic_error("principal variation reconstruction failed");
        running = std::max(running, search.back_degree(mask, pick) + 1);
        mask |= bit(pick);
        pv.push_back(pick);
    }
    return pv;
}

int brute(const std::vector<Mask>& adj, Mask mask, Mask full)
{
    if (mask == full)
        return 0;
    const bool alice = std::popcount(mask) % 2 == 0;
    int best = alice ? std::numeric_limits<int>::max() : 0;
    for (Vertex v = 0; v < static_cast<int>(adj.size()); ++v) {
        if (mask & bit(v))
            continue;
        int value = std::max(std::popcount(adj[v] & mask) + 1, brute(adj, mask | bit(v), full));
        best = alice ? std::min(best, value) : std::max(best, value);
    }
    return best;
}

// Single-agent search: only `searcher` branches; the fixed strategy is cloned
// at every branch. Memoized on (marked set, fixed strategy fingerprint) at
// the searcher's turn.
class ResponseSearch {
public:
    ResponseSearch(const Graph& g, Player searcher, const ResponseOptions& options)
        : g_(g), searcher_(searcher), options_(options), cap_(g.max_degree() + 1)
    {
    }

    int run(const Strategy& fixed)
    {
        GameState state(g_);
        auto strategy = fixed.clone();
        return future(state, 0, *strategy);
    }

private:
    struct Key {
        Mask mask;
        std::vector<std::uint64_t> fingerprint;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const
        {
            std::size_t h = std::hash<Mask>{}(k.mask);
            for (auto w : k.fingerprint)
                h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }
    };

    void tick()
    {
        if (options_.node_budget && nodes_ >= options_.node_budget)
            throw BudgetExceeded(1, cap_, nodes_);
        ++nodes_;
    }

    // Max (or min) of b(v)+1 over the moves still to come.
    int future(GameState& state, Mask mask, Strategy& fixed)
    {
        if (state.finished())
            return 0;
        tick();
        if (state.to_move() != searcher_) {
            Vertex v = fixed.choose(state);
            if (v < 0 || v >= state.num_vertices() || state.is_marked(v))
                throw StrategyFault(state.to_move(), fixed.name(), v, "illegal move during search");
            int b = state.marked_neighbors(v);
            GameState child = state;
            child.mark(v);
            return std::max(b + 1, future(child, mask | bit(v), fixed));
        }

        Key key{mask, options_.memo ? fixed.fingerprint() : std::vector<std::uint64_t>{}};
        if (options_.memo) {
            auto it = memo_.find(key);
            if (it != memo_.end())
                return it->second;
        }

        const bool maximize = searcher_ == Player::Bob;
        int best = maximize ? 0 : std::numeric_limits<int>::max();
        std::vector<std::pair<int, Vertex>> moves;
        for (Vertex v = 0; v < state.num_vertices(); ++v)
            if (!state.is_marked(v))
                moves.push_back({state.marked_neighbors(v), v});
        std::stable_sort(moves.begin(), moves.end(), [maximize](auto a, auto b) {
            return maximize ? a.first > b.first : a.first < b.first;
        });
        for (auto [b, v] : moves) {
            if (!maximize && b + 1 >= best)
                continue;
            GameState child = state;
            child.mark(v);
            auto branch = fixed.clone();
            int value = std::max(b + 1, future(child, mask | bit(v), *branch));
            best = maximize ? std::max(best, value) : std::min(best, value);
            if (maximize && best >= cap_)
                break;
            if (!maximize && best <= 1)
                break;
        }
        if (options_.memo)
            memo_.emplace(std::move(key), best);
        return best;
    }

    const Graph& g_;
    Player searcher_;
    const ResponseOptions& options_;
    int cap_;
    std::uint64_t nodes_ = 0;
    std::unordered_map<Key, int, KeyHash> memo_;
};

}  // namespace

SolveResult game_coloring_number(const Graph& g, const SolveOptions& options)
{
    check_size(g, options.max_vertices, "exact solving");
    SolveResult result;
    if (g.empty())
        return result;

    DecisionSearch search(g, options);
    const int hi = g.max_degree() + 1;
    int s = options.prune ? degeneracy(g) + 1 : 1;
    try {
        for (; s < hi || (!options.prune && s == hi); ++s)
            if (search.holds(0, s))
                break;
    } catch (const BudgetHit&) {
        throw BudgetExceeded(s, hi, search.nodes());
    }
    result.value = std::min(s, hi);
    if (options.principal_variation)
        result.principal_variation = principal_variation(search, result.value);
    result.nodes = search.nodes();
    result.table_hits = search.hits();
    result.table_entries = search.entries();
    return result;
}

int brute_force_value(const Graph& g)
{
    check_size(g, 8, "brute-force solving");
    auto adj = adjacency_masks(g);
    Mask full = g.num_vertices() == 0 ? 0 : bit(g.num_vertices()) - 1;
    return brute(adj, 0, full);
}

int best_response_bob(const Graph& g, const Strategy& alice, const ResponseOptions& options)
{
    check_size(g, options.max_vertices, "best-response search");
    return ResponseSearch(g, Player::Bob, options).run(alice);
}

int best_response_alice(const Graph& g, const Strategy& bob, const ResponseOptions& options)
{
    check_size(g, options.max_vertices, "best-response search");
    return ResponseSearch(g, Player::Alice, options).run(bob);
}

}  // namespace marklab
