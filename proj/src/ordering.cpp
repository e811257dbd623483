#include "marklab/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace marklab {

LinearOrder LinearOrder::from_positions(std::vector<int> position)
{
    const int n = static_cast<int>(position.size());
    LinearOrder order;
    order.vertex_at_.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        int p = position[v];
        if (p < 0 || p >= n || order.vertex_at_[p] != -1)
            throw GraphError("order is not a permutation of 0.." + std::to_string(n - 1));
        order.vertex_at_[p] = v;
    }
    order.position_ = std::move(position);
    return order;
}

LinearOrder LinearOrder::from_greatest_first(std::span<const Vertex> sequence)
{
    const int n = static_cast<int>(sequence.size());
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        Vertex v = sequence[i];
        if (v < 0 || v >= n || position[v] != -1)
            throw GraphError("order is not a permutation of 0.." + std::to_string(n - 1));
        position[v] = n - 1 - i;
    }
    return from_positions(std::move(position));
}

LinearOrder LinearOrder::identity(int n)
{
    std::vector<int> position(n);
    std::iota(position.begin(), position.end(), 0);
    return from_positions(std::move(position));
}

std::vector<Vertex> LinearOrder::greatest_first() const
{
    return {vertex_at_.rbegin(), vertex_at_.rend()};
}

std::string LinearOrder::to_string() const
{
    std::ostringstream out;
    auto seq = greatest_first();
    for (std::size_t i = 0; i < seq.size(); ++i)
        out << (i ? " " : "") << seq[i];
    return out.str();
}

LinearOrder LinearOrder::parse(std::string_view text)
{
    std::vector<Vertex> seq;
    std::istringstream lines{std::string(text)};
    std::string line, tok;
    while (std::getline(lines, line)) {
        std::istringstream in(line);
        if (!(in >> tok) || tok.front() == '#')
            continue;
        do {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                seq.push_back(v);
            } catch (const std::exception&) {
                throw GraphError("order file: expected a vertex id, got '" + tok + "'");
            }
        } while (in >> tok);
    }
    return from_greatest_first(seq);
}

OrientedView::OrientedView(const Graph& g, const LinearOrder& order)
{
    if (order.size() != g.num_vertices())
        throw GraphError("order has " + std::to_string(order.size()) + " vertices, graph has " +
                         std::to_string(g.num_vertices()));
    out_.resize(g.num_vertices());
    in_.resize(g.num_vertices());
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        for (Vertex w : g.neighbors(u))
            (order.less(w, u) ? out_[u] : in_[u]).push_back(w);
}

OrientedView orient(const Graph& g, const LinearOrder& order) { return OrientedView(g, order); }

std::string to_string(MatchingMode mode)
{
    return mode == MatchingMode::Permissive ? "permissive" : "disjoint";
}

std::optional<MatchingMode> parse_matching_mode(std::string_view text)
{
    if (text == "permissive")
        return MatchingMode::Permissive;
    if (text == "disjoint")
        return MatchingMode::Disjoint;
    return std::nullopt;
}

std::vector<Vertex> MatchingWitness::z() const
{
    std::vector<Vertex> out = x;
    out.insert(out.end(), y.begin(), y.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Kuhn's augmenting-path matching on a small bipartite graph.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::vector<std::vector<int>> left_adj, int right_size)
        : adj_(std::move(left_adj)), match_right_(right_size, -1), match_left_(adj_.size(), -1)
    {
    }

    int solve()
    {
        int size = 0;
        for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
            seen_.assign(match_right_.size(), 0);
            if (augment(l))
                ++size;
        }
        return size;
    }

    int partner_of_left(int l) const { return match_left_[l]; }

private:
    bool augment(int l)
    {
        for (int r : adj_[l]) {
            if (seen_[r])
                continue;
            seen_[r] = 1;
            if (match_right_[r] == -1 || augment(match_right_[r])) {
                match_right_[r] = l;
                match_left_[l] = r;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> match_right_;
    std::vector<int> match_left_;
    std::vector<char> seen_;
};

void sort_witness(MatchingWitness& w)
{
    std::sort(w.x.begin(), w.x.end());
    std::sort(w.y.begin(), w.y.end());
    std::sort(w.m_edges.begin(), w.m_edges.end());
    std::sort(w.n_edges.begin(), w.n_edges.end());
}

MValue permissive_m(const Graph& g, const LinearOrder& order, Vertex u)
{
    // Right side: target t as an M-target (2t) or as an N-target (2t+1).
    std::vector<Vertex> sources{u};
    for (Vertex w : g.neighbors(u))
        if (order.less(u, w))
            sources.push_back(w);

    std::vector<std::vector<int>> adj(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) {
        Vertex s = sources[i];
        for (Vertex t : g.neighbors(s)) {
            if (order.less(t, u) && g.has_edge(u, t)) {
                adj[i].push_back(2 * t);
                if (s != u)
                    adj[i].push_back(2 * t + 1);
            } else if (t == u) {
                adj[i].push_back(2 * t + 1);
            }
        }
    }
    BipartiteMatcher matcher(std::move(adj), 2 * g.num_vertices());
    MValue result;
    result.size = matcher.solve();
    result.witness.u = u;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        int r = matcher.partner_of_left(static_cast<int>(i));
        if (r < 0)
            continue;
        Vertex t = r / 2;
        if (r % 2 == 0) {
            result.witness.x.push_back(sources[i]);
            result.witness.m_edges.push_back({sources[i], t});
        } else {
            result.witness.y.push_back(sources[i]);
            result.witness.n_edges.push_back({sources[i], t});
        }
    }
    sort_witness(result.witness);
    return result;
}

// M ∪ N a single matching into V⁺[u]. u cannot be both a source and a
// target, so solve once without u as a source and once without u as a target.
MValue disjoint_m(const Graph& g, const LinearOrder& order, Vertex u)
{
    auto run = [&](bool u_is_source) {
        std::vector<Vertex> sources;
        if (u_is_source)
            sources.push_back(u);
        for (Vertex w : g.neighbors(u))
            if (order.less(u, w))
                sources.push_back(w);
        std::vector<std::vector<int>> adj(sources.size());
        for (std::size_t i = 0; i < sources.size(); ++i)
            for (Vertex t : g.neighbors(sources[i]))
                if ((order.less(t, u) && g.has_edge(u, t)) || (t == u && !u_is_source))
                    adj[i].push_back(t);
        BipartiteMatcher matcher(std::move(adj), g.num_vertices());
        MValue result;
        result.size = matcher.solve();
        result.witness.u = u;
        for (std::size_t i = 0; i < sources.size(); ++i) {
            int t = matcher.partner_of_left(static_cast<int>(i));
            if (t < 0)
                continue;
            if (t == u) {
                result.witness.y.push_back(sources[i]);
                result.witness.n_edges.push_back({sources[i], t});
            } else {
                result.witness.x.push_back(sources[i]);
                result.witness.m_edges.push_back({sources[i], t});
            }
        }
        sort_witness(result.witness);
        return result;
    };
    MValue without_source = run(false);
    MValue with_source = run(true);
    return with_source.size > without_source.size ? with_source : without_source;
}

}  // namespace

MValue m_value(const Graph& g, const LinearOrder& order, Vertex u, MatchingMode mode)
{
    if (order.size() != g.num_vertices())
        throw GraphError("order size does not match graph");
    if (u < 0 || u >= g.num_vertices())
        throw GraphError("vertex out of range");
    return mode == MatchingMode::Permissive ? permissive_m(g, order, u) : disjoint_m(g, order, u);
}

std::string check_witness(const Graph& g, const LinearOrder& order, const MatchingWitness& w,
                          MatchingMode mode)
{
    const Vertex u = w.u;
    auto in_closed_up = [&](Vertex v) { return v == u || (g.has_edge(u, v) && order.less(u, v)); };
    auto in_open_up = [&](Vertex v) { return v != u && in_closed_up(v); };

    std::set<Vertex> xs(w.x.begin(), w.x.end()), ys(w.y.begin(), w.y.end());
    if (xs.size() != w.x.size() || ys.size() != w.y.size())
        return "repeated vertex in X or Y";
    for (Vertex v : w.x)
        if (ys.count(v))
            return "X and Y intersect at " + std::to_string(v);
    for (Vertex v : w.x)
        if (!in_closed_up(v))
            return "X vertex " + std::to_string(v) + " not in N-[u]";
    for (Vertex v : w.y)
        if (!in_open_up(v))
            return "Y vertex " + std::to_string(v) + " not in N-(u)";

    auto check_side = [&](const std::vector<Edge>& edges, const std::set<Vertex>& side, bool closed,
                          const char* label) -> std::string {
        if (edges.size() != side.size())
            return std::string(label) + " does not cover its sources exactly once";
        std::set<Vertex> sources, targets;
        for (Edge e : edges) {
            if (!side.count(e.u))
                return std::string(label) + " edge starts outside its source set";
            if (!g.has_edge(e.u, e.v))
                return std::string(label) + " edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " is not in G";
            bool target_ok = (order.less(e.v, u) && g.has_edge(u, e.v)) || (closed && e.v == u);
            if (!target_ok || side.count(e.v))
                return std::string(label) + " target " + std::to_string(e.v) + " out of range";
            if (!sources.insert(e.u).second || !targets.insert(e.v).second)
                return std::string(label) + " is not a matching";
        }
        return {};
    };
    if (auto err = check_side(w.m_edges, xs, false, "M"); !err.empty())
        return err;
    if (auto err = check_side(w.n_edges, ys, true, "N"); !err.empty())
        return err;

    if (mode == MatchingMode::Disjoint) {
        std::set<Vertex> used;
        for (const auto* side : {&w.m_edges, &w.n_edges})
            for (Edge e : *side)
                if (!used.insert(e.u).second || !used.insert(e.v).second)
                    return "M and N share vertex in disjoint mode";
    }
    return {};
}

int rank_vertex(const Graph& g, const LinearOrder& order, Vertex u, MatchingMode mode)
{
    int out_degree = 0;
    for (Vertex w : g.neighbors(u))
        out_degree += order.less(w, u);
    return out_degree + m_value(g, order, u, mode).size;
}

RankReport rank_order(const Graph& g, const LinearOrder& order, MatchingMode mode)
{
    OrientedView view(g, order);
    RankReport report;
    report.vertices.resize(g.num_vertices());
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        VertexRank& vr = report.vertices[u];
        MValue mv = m_value(g, order, u, mode);
        vr.v = u;
        vr.out_degree = view.out_degree(u);
        vr.m = mv.size;
        vr.r = vr.out_degree + vr.m;
        vr.witness = std::move(mv.witness);
        if (report.argmax < 0 || vr.r > report.r_of_order) {
            report.r_of_order = vr.r;
            report.argmax = u;
        }
    }
    return report;
}

ExactRank rank_graph_exact(const Graph& g, MatchingMode mode, int max_vertices)
{
    const int n = g.num_vertices();
    if (n > max_vertices)
        throw GraphError("exact rank enumerates n! orders and is capped at " +
                         std::to_string(max_vertices) + " vertices (graph has " +
                         std::to_string(n) + "); use construct_order_girth7 for larger inputs");
    std::vector<int> position(n);
    std::iota(position.begin(), position.end(), 0);
    ExactRank best;
    best.value = std::numeric_limits<int>::max();
    do {
        LinearOrder order = LinearOrder::from_positions(position);
        int r = 0;
        for (Vertex u = 0; u < n && r < best.value; ++u)
            r = std::max(r, rank_vertex(g, order, u, mode));
        if (r < best.value) {
            best.value = r;
            best.order = order;
        }
    } while (std::next_permutation(position.begin(), position.end()));
    if (n == 0)
        best = {0, LinearOrder::identity(0)};
    return best;
}

OrderVerification verify_order(const Graph& g, const LinearOrder& order, int bound,
                               MatchingMode mode)
{
    OrderVerification v;
    v.ranks = rank_order(g, order, mode);
    v.bound = bound;
    v.r_of_order = v.ranks.r_of_order;
    v.argmax = v.ranks.argmax;
    if (v.argmax >= 0)
        v.witness = v.ranks.vertices[v.argmax].witness;
    v.pass = v.r_of_order <= bound;
    return v;
}

}  // namespace marklab
