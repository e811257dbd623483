#include "marklab/constructor.hpp"

#include <algorithm>
#include <set>

namespace marklab {

namespace {

struct AuxGraph {
    std::set<Edge> surgery;  // canonical edges added by the surgery rules
    int conflicts = 0;
};

AuxGraph surgery_edges(const Graph& g, const std::vector<char>& chosen,
                       const std::vector<int>& unchosen_nbrs)
{
    AuxGraph aux;
    std::vector<Vertex> open;
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (!chosen[x] || unchosen_nbrs[x] < 2 || unchosen_nbrs[x] > 3)
            continue;
        open.clear();
        for (Vertex w : g.neighbors(x))
            if (!chosen[w])
                open.push_back(w);
        // Two neighbors: one edge. Three: the path lowest-middle-highest.
        for (std::size_t i = 0; i + 1 < open.size(); ++i) {
            Edge e = Edge{open[i], open[i + 1]}.canonical();
            if (g.has_edge(e.u, e.v) || !aux.surgery.insert(e).second)
                ++aux.conflicts;
        }
    }
    return aux;
}

Graph materialize(const Graph& g, const std::vector<char>& chosen,
                  const std::vector<int>& unchosen_nbrs, const AuxGraph& aux)
{
    auto alive = [&](Vertex v) { return !chosen[v] || unchosen_nbrs[v] >= 4; };
    std::vector<Edge> edges;
    for (Edge e : g.edges())
        if (!(chosen[e.u] && chosen[e.v]) && alive(e.u) && alive(e.v))
            edges.push_back(e);
    edges.insert(edges.end(), aux.surgery.begin(), aux.surgery.end());
    return build_graph(g.num_vertices(), edges);
}

}  // namespace

ConstructResult construct_order_girth7(const Graph& g, const ConstructOptions& options)
{
    const int n = g.num_vertices();
    ConstructResult result;

    Girth gg = girth(g);
    if (gg < Girth(7) && n >= 3)
        result.warnings.push_back("input girth " + gg.to_string() +
                                  " is below 7; the degree-3 choice is not guaranteed");
    if (n >= 3 && gg.is_finite() && !planar_girth_edge_bound(g, gg.value()))
        result.warnings.push_back("edge count exceeds the Euler bound for girth " +
                                  gg.to_string() + "; input is not planar");

    std::vector<char> chosen(n, 0);
    std::vector<int> unchosen_nbrs(n);
    for (Vertex v = 0; v < n; ++v)
        unchosen_nbrs[v] = g.degree(v);
    std::vector<int> position(n, -1);

    for (int step = 0; step < n; ++step) {
        AuxGraph aux = surgery_edges(g, chosen, unchosen_nbrs);
        result.trace.surgery_conflicts += aux.conflicts;

        std::vector<int> surgery_degree(n, 0);
        for (Edge e : aux.surgery) {
            ++surgery_degree[e.u];
            ++surgery_degree[e.v];
        }

        Vertex best = -1;
        int best_degree = std::numeric_limits<int>::max();
        for (Vertex v = 0; v < n; ++v) {
            if (chosen[v])
                continue;
            int d = unchosen_nbrs[v] + surgery_degree[v];
            for (Vertex w : g.neighbors(v))
                d += chosen[w] && unchosen_nbrs[w] >= 4;
            if (d < best_degree) {
                best_degree = d;
                best = v;
            }
        }

        for (Vertex x = 0; x < n; ++x)
            if (chosen[x] && unchosen_nbrs[x] >= 4 &&
                (result.trace.min_surviving_chosen_degree < 0 ||
                 unchosen_nbrs[x] < result.trace.min_surviving_chosen_degree))
                result.trace.min_surviving_chosen_degree = unchosen_nbrs[x];

        ConstructorStep st;
        st.u = best;
        st.aux_degree = best_degree;
        for (Vertex w : g.neighbors(best)) {
            if (!chosen[w])
                st.s.push_back(w);
            else if (unchosen_nbrs[w] >= 4)
                st.a.push_back(w);
            else
                st.low_chosen.push_back(w);
        }
        for (Edge e : aux.surgery) {
            if (e.u == best)
                st.s_prime.push_back(e.v);
            else if (e.v == best)
                st.s_prime.push_back(e.u);
        }
        std::sort(st.s_prime.begin(), st.s_prime.end());
        if (options.record_aux_girth)
            st.aux_girth = girth(materialize(g, chosen, unchosen_nbrs, aux));
        result.trace.steps.push_back(std::move(st));

        if (best_degree > 3) {
            result.status = ConstructStatus::Stuck;
            result.warnings.push_back("stuck after " + std::to_string(step) +
                                      " choices: every unchosen vertex has d_H >= 4");
            return result;
        }

        chosen[best] = 1;
        position[best] = n - 1 - step;
        for (Vertex w : g.neighbors(best))
            --unchosen_nbrs[w];
    }
    if (result.trace.surgery_conflicts > 0)
        result.warnings.push_back(std::to_string(result.trace.surgery_conflicts) +
                                  " surgery edges duplicated existing edges and were merged");
    result.order = LinearOrder::from_positions(std::move(position));
    return result;
}

std::vector<StepAudit> audit_trace(const Graph& g, const ConstructResult& result, MatchingMode mode)
{
    std::vector<StepAudit> out;
    if (!result.ok())
        return out;
    for (const ConstructorStep& st : result.trace.steps) {
        StepAudit a;
        a.u = st.u;
        a.sigma = st.sigma();
        a.sigma_prime = st.sigma_prime();
        a.alpha = st.alpha();
        for (Vertex w : g.neighbors(st.u))
            a.out_degree += result.order.less(w, st.u);
        MValue mv = m_value(g, result.order, st.u, mode);
        a.m = mv.size;
        std::set<Vertex> in_a(st.a.begin(), st.a.end());
        std::set<Vertex> low(st.low_chosen.begin(), st.low_chosen.end());
        for (Vertex z : mv.witness.z()) {
            a.z_in_a += in_a.count(z);
            a.z_low += low.count(z);
            a.z_self += z == st.u;
        }
        for (Edge e : mv.witness.n_edges)
            a.z_to_u += e.v == st.u;
        out.push_back(a);
    }
    return out;
}

}  // namespace marklab
