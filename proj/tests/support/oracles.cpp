#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace marklab::testing {

Girth girth_by_edge_deletion(const Graph& g)
{
    Girth best = Girth::infinite();
    const int n = g.num_vertices();
    for (Edge e : g.edges()) {
        std::vector<int> dist(n, -1);
        std::deque<Vertex> queue{e.u};
        dist[e.u] = 0;
        while (!queue.empty() && dist[e.v] < 0) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] >= 0 || (x == e.u && y == e.v))
                    continue;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if (dist[e.v] > 0)
            best = std::min(best, Girth(dist[e.v] + 1));
    }
    return best;
}

namespace {

// ok[mask]: the sources in mask satisfy Hall's condition, i.e. every subset
// S has at least |S| neighbours among the targets.
std::vector<char> hall_table(const std::vector<std::uint32_t>& nbr)
{
    const std::uint32_t full = 1u << nbr.size();
    std::vector<char> ok(full, 0);
    ok[0] = 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t reach = 0;
        bool subsets = true;
        for (std::size_t i = 0; i < nbr.size(); ++i)
            if (mask >> i & 1) {
                reach |= nbr[i];
                subsets = subsets && ok[mask ^ (1u << i)];
            }
        ok[mask] = subsets && std::popcount(reach) >= std::popcount(mask);
    }
    return ok;
}

}  // namespace

int m_by_subsets(const Graph& g, const LinearOrder& order, Vertex u, MatchingMode mode)
{
    std::vector<Vertex> targets;  // V+(u), then u itself last
    std::vector<Vertex> sources;  // N-(u), then u itself last
    for (Vertex w : g.neighbors(u))
        (order.less(w, u) ? targets : sources).push_back(w);
    const int t_out = static_cast<int>(targets.size());
    const int s_in = static_cast<int>(sources.size());
    targets.push_back(u);
    sources.push_back(u);

    auto index_of = [&](Vertex v) {
        return static_cast<int>(std::find(targets.begin(), targets.end(), v) - targets.begin());
    };
    // Neighbour masks into V+(u) (bits 0..t_out-1) and V+[u] (bit t_out = u).
    std::vector<std::uint32_t> into_open(sources.size()), into_closed(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
        for (Vertex w : g.neighbors(sources[i])) {
            int t = index_of(w);
            if (t < t_out)
                into_open[i] |= 1u << t;
            if (t <= t_out)
                into_closed[i] |= 1u << t;
        }
    }
    const std::uint32_t self = 1u << s_in;
    const std::uint32_t all = (self << 1) - 1;

    if (mode == MatchingMode::Disjoint) {
        auto ok_open = hall_table(into_open);
        auto ok_closed = hall_table(into_closed);
        int best = 0;
        for (std::uint32_t z = 0; z <= all; ++z) {
            bool fine = (z & self) ? ok_open[z] : ok_closed[z];
            if (fine)
                best = std::max(best, std::popcount(z));
        }
        return best;
    }

    // Permissive: X ⊆ N-[u] into V+(u), Y ⊆ N-(u) into V+[u], X and Y disjoint.
    auto ok_x = hall_table(into_open);
    std::vector<std::uint32_t> y_nbr(into_closed.begin(), into_closed.begin() + s_in);
    auto ok_y = hall_table(y_nbr);
    std::vector<int> best_y(std::size_t{1} << s_in, 0);
    for (std::uint32_t mask = 0; mask < best_y.size(); ++mask) {
        int b = ok_y[mask] ? std::popcount(mask) : 0;
        for (int i = 0; i < s_in; ++i)
            if (mask >> i & 1)
                b = std::max(b, best_y[mask ^ (1u << i)]);
        best_y[mask] = b;
    }
    int best = 0;
    for (std::uint32_t x = 0; x <= all; ++x)
        if (ok_x[x])
            best = std::max(best, std::popcount(x) + best_y[~x & (self - 1)]);
    return best;
}

namespace {

int sequence_minimax(const Graph& g, std::vector<int>& marked_at, int moves, int score)
{
    const int n = g.num_vertices();
    if (moves == n)
        return score;
    const bool alice = moves % 2 == 0;
    int best = alice ? n + 1 : -1;
    for (Vertex v = 0; v < n; ++v) {
        if (marked_at[v] >= 0)
            continue;
        int b = 0;
        for (Vertex w : g.neighbors(v))
            b += marked_at[w] >= 0;
        marked_at[v] = moves;
        int value = sequence_minimax(g, marked_at, moves + 1, std::max(score, b + 1));
        marked_at[v] = -1;
        best = alice ? std::min(best, value) : std::max(best, value);
    }
    return best;
}

}  // namespace

int minimax_by_sequences(const Graph& g)
{
    std::vector<int> marked_at(g.num_vertices(), -1);
    return sequence_minimax(g, marked_at, 0, 0);
}

}  // namespace marklab::testing
