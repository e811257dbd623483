#include "marklab/families.hpp"

#include <random>
#include <set>

namespace marklab::families {

Graph path(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return build_graph(n, edges);
}

Graph star(int leaves)
{
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return build_graph(leaves + 1, edges);
}

Graph complete(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return build_graph(n, edges);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({i, a + j});
    return build_graph(a + b, edges);
}

Graph grid(int rows, int cols)
{
    std::vector<Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows)
                edges.push_back({id(r, c), id(r + 1, c)});
        }
    return build_graph(rows * cols, edges);
}

Graph prism(int k)
{
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.push_back({i, (i + 1) % k});
        edges.push_back({k + i, k + (i + 1) % k});
        edges.push_back({i, k + i});
    }
    return build_graph(2 * k, edges);
}

Graph wheel(int spokes)
{
    std::vector<Edge> edges;
    for (int i = 0; i < spokes; ++i) {
        edges.push_back({0, 1 + i});
        edges.push_back({1 + i, 1 + (i + 1) % spokes});
    }
    return build_graph(spokes + 1, edges);
}

Graph cube()
{
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit) {
            int w = v ^ (1 << bit);
            if (v < w)
                edges.push_back({v, w});
        }
    return build_graph(8, edges);
}

Graph dodecahedron()
{
    // Outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19.
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, 5 + 2 * i});
        edges.push_back({15 + i, 15 + (i + 1) % 5});
        edges.push_back({15 + i, 5 + 2 * i + 1});
    }
    for (int i = 0; i < 10; ++i)
        edges.push_back({5 + i, 5 + (i + 1) % 10});
    return build_graph(20, edges);
}

Graph random_tree(int n, std::uint64_t seed)
{
    if (n <= 1)
        return build_graph(std::max(n, 0), {});
    if (n == 2)
        return build_graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    for (int& c : code)
        c = pick(rng);
    std::vector<int> count(n, 0);
    for (int c : code)
        ++count[c];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (count[v] == 0)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, c});
        if (--count[c] == 0)
            leaves.insert(c);
    }
    auto it = leaves.begin();
    int a = *it++;
    edges.push_back({a, *it});
    return build_graph(n, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.push_back({i, j});
    return build_graph(n, edges);
}

}  // namespace marklab::families
