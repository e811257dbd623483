#include "marklab/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace marklab {

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& nb : adj_)
        d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::min_degree() const
{
    if (adj_.empty())
        return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& nb : adj_)
        d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

Graph build_graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw GraphError("vertex id out of range in edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") for n=" + std::to_string(n));
        if (e.u == e.v)
            throw GraphError("self-loop at vertex " + std::to_string(e.u));
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    long long degree_sum = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        degree_sum += static_cast<long long>(nb.size());
    }
    g.m_ = static_cast<int>(degree_sum / 2);
    return g;
}

std::string validate(const Graph& g)
{
    long long degree_sum = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        auto nb = g.neighbors(u);
        degree_sum += static_cast<long long>(nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] == u)
                return "self-loop at " + std::to_string(u);
            if (nb[i] < 0 || nb[i] >= g.num_vertices())
                return "neighbor out of range at " + std::to_string(u);
            if (i > 0 && nb[i - 1] >= nb[i])
                return "adjacency of " + std::to_string(u) + " not strictly sorted";
            if (!g.has_edge(nb[i], u))
                return "asymmetric edge " + std::to_string(u) + "-" + std::to_string(nb[i]);
        }
    }
    if (degree_sum != 2LL * g.num_edges())
        return "edge count does not match degree sum";
    return {};
}

Girth::Girth(int length) : length_(length)
{
    if (length < 3)
        throw GraphError("girth must be at least 3");
}

int Girth::value() const
{
    if (!is_finite())
        throw GraphError("girth is infinite");
    return length_;
}

std::string Girth::to_string() const
{
    return is_finite() ? std::to_string(length_) : "inf";
}

Girth girth(const Graph& g)
{
    const int n = g.num_vertices();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<Vertex> q;
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        q = {};
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            // Nothing shorter can be closed from this depth onward.
            if (2 * dist[v] + 1 >= best)
                break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? Girth::infinite() : Girth(best);
}

Graph cycle(int k)
{
    if (k < 3)
        throw GraphError("cycle length must be at least 3, got " + std::to_string(k));
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back({i, (i + 1) % k});
    return build_graph(k, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2)
{
    const int shift = g1.num_vertices();
    auto edges = g1.edges();
    for (Edge e : g2.edges())
        edges.push_back({e.u + shift, e.v + shift});
    return build_graph(shift + g2.num_vertices(), edges);
}

Graph subdivide_each_edge(const Graph& g, int times)
{
    if (times < 0)
        throw GraphError("subdivision count must be non-negative");
    if (times == 0)
        return g;
    int next = g.num_vertices();
    std::vector<Edge> edges;
    for (Edge e : g.edges()) {
        Vertex prev = e.u;
        for (int i = 0; i < times; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, e.v});
    }
    return build_graph(next, edges);
}

bool planar_girth_edge_bound(const Graph& g, int assumed_girth)
{
    if (assumed_girth < 3)
        throw GraphError("assumed girth must be at least 3");
    const long long n = g.num_vertices();
    const long long m = g.num_edges();
    if (n < 3)
        return true;
    // m <= k/(k-2) * (n-2), kept in integers.
    return m * (assumed_girth - 2) <= static_cast<long long>(assumed_girth) * (n - 2);
}

int degeneracy(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.insert({deg[v], v});
    }
    std::vector<char> removed(n, 0);
    int k = 0;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        k = std::max(k, d);
        removed[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (removed[w])
                continue;
            queue.erase({deg[w], w});
            queue.insert({--deg[w], w});
        }
    }
    return k;
}

}  // namespace marklab
