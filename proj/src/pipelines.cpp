#include "marklab/pipelines.hpp"

#include <algorithm>
#include <limits>

#include "marklab/strategies.hpp"

namespace marklab {

UpperBoundReport verify_upper_bound(const Graph& g, int bound, MatchingMode mode)
{
    UpperBoundReport report;
    report.girth = girth(g);
    report.girth_ok = !(report.girth < Girth(7));
    report.euler_ok = !report.girth.is_finite() || g.num_vertices() < 3 ||
                      planar_girth_edge_bound(g, report.girth.value());
    report.construction = construct_order_girth7(g);
    if (!report.construction.ok()) {
        report.exit_code = kInputError;
        return report;
    }
    report.verification = verify_order(g, report.construction.order, bound, mode);
    if (!report.girth_ok)
        report.exit_code = kInputError;
    else
        report.exit_code = report.verification->pass ? kVerified : kRefuted;
    return report;
}

int interior_unmarked_after_phase1(const ConstructionGraph& c, const Transcript& t)
{
    int phase1_left = 0, interior_left = 0;
    for (VertexClass k : c.class_of) {
        phase1_left += k == VertexClass::Subdivision || k == VertexClass::HexBoundary;
        interior_left += k == VertexClass::HexInterior;
    }
    if (interior_left == 0)
        return -1;
    if (phase1_left == 0)
        return interior_left;
    for (const Move& m : t.moves) {
        VertexClass k = c.class_of[m.vertex];
        if (k == VertexClass::HexInterior)
            --interior_left;
        if (k == VertexClass::Subdivision || k == VertexClass::HexBoundary)
            if (--phase1_left == 0)
                return interior_left;
    }
    return interior_left;
}

LowerBoundReport verify_lower_bound(int rings, std::optional<int> cycle_length,
                                    const LowerBoundOptions& options)
{
    LowerBoundReport report;
    report.rings = rings;
    report.cycle_length = cycle_length;
    ConstructionGraph c = cycle_length ? with_cycle(rings, *cycle_length) : lower_bound_graph(rings);

    report.expected = class_counts(rings);
    report.measured = measure_class_counts(c);
    report.counts_ok = report.expected == report.measured;
    report.girth = girth(c.graph);
    report.expected_girth = cycle_length ? std::min(8, *cycle_length) : 8;
    report.girth_ok = report.girth == Girth(report.expected_girth);
    report.max_degree = c.graph.max_degree();
    report.max_degree_ok = rings == 1 ? report.max_degree == 3 : report.max_degree == 4;
    report.counting_inequality = counting_inequality_holds(rings);
    report.smallest_rings_for_inequality = smallest_rings_with_counting_inequality();
    if (rings < 9)
        report.warnings.push_back("n = " + std::to_string(rings) +
                                  " is below 9; Bob's counting argument is not guaranteed");

    ConstructResult built = construct_order_girth7(c.graph);
    report.order_ok = built.ok();
    LinearOrder order = built.ok() ? built.order : LinearOrder::identity(c.graph.num_vertices());
    if (!built.ok())
        report.warnings.push_back("ordering constructor got stuck; using the identity order");

    std::vector<MatchupSpec> matchups;
    auto bob = [&c] { return theorem3_bob(c); };
    matchups.push_back({"greedy", [order] { return greedy_order(order); }, bob});
    matchups.push_back({"activation", [order] { return activation_alice(order); }, bob});
    for (int i = 0; i < options.random_seeds; ++i) {
        std::uint64_t seed = options.first_seed + static_cast<std::uint64_t>(i);
        matchups.push_back({"random", [seed] { return random_strategy(seed); }, bob});
    }
    auto transcripts = play_batch(c.graph, matchups, options.threads);

    report.min_score = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < matchups.size(); ++i) {
        PlayoutRecord rec;
        rec.alice = matchups[i].label;
        if (i >= 2)
            rec.seed = options.first_seed + (i - 2);
        rec.transcript = std::move(transcripts[i]);
        rec.interior_unmarked_after_phase1 = interior_unmarked_after_phase1(c, rec.transcript);
        report.min_score = std::min(report.min_score, rec.transcript.score);
        report.max_score = std::max(report.max_score, rec.transcript.score);
        report.playouts.push_back(std::move(rec));
    }
    const bool all_five = report.min_score == 5 && report.max_score == 5;
    report.pass = report.counts_ok && report.girth_ok && report.max_degree_ok && all_five;
    return report;
}

}  // namespace marklab
