#include "marklab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>

#include "marklab/constructions.hpp"
#include "marklab/constructor.hpp"
#include "marklab/game.hpp"
#include "marklab/io.hpp"
#include "marklab/ordering.hpp"
#include "marklab/pipelines.hpp"
#include "marklab/solver.hpp"
#include "marklab/strategies.hpp"

namespace marklab {

namespace {

using json = nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 20240601;

struct CommandConfig {
    std::string input;
    std::string output;
    std::string sidecar;
    std::string dot;
    std::string order_file;
    std::string mode = "permissive";
    std::string alice = "activation";
    std::string bob = "theorem3";
    int n = 0;
    int k = 0;
    int union_cycle = 0;
    int bound = 4;
    int seeds = 100;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t budget = 0;
    int max_vertices = 20;
    bool emit_trace = false;
    bool pv = false;
    bool json_output = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

MatchingMode mode_of(const CommandConfig& cfg)
{
    auto m = parse_matching_mode(cfg.mode);
    if (!m)
        throw UsageError("unknown matching mode '" + cfg.mode + "' (permissive|disjoint)");
    return *m;
}

Graph load_graph(const std::string& path)
{
    if (path.empty())
        throw UsageError("--input is required");
    return parse_edge_list(read_text_file(path));
}

json edges_json(const std::vector<Edge>& edges)
{
    json out = json::array();
    for (Edge e : edges)
        out.push_back({e.u, e.v});
    return out;
}

json witness_json(const MatchingWitness& w)
{
    return {{"X", w.x}, {"Y", w.y}, {"M", edges_json(w.m_edges)}, {"N", edges_json(w.n_edges)}};
}

json construction_sidecar(const ConstructionGraph& c, std::optional<int> union_cycle)
{
    json coords = json::array();
    for (Vertex v = 0; v < c.graph.num_vertices(); ++v) {
        if (v < static_cast<int>(c.hex_coords.size())) {
            const LatticeCoord& p = c.hex_coords[v];
            coords.push_back({p.q, p.r, p.parity});
        } else {
            coords.push_back(nullptr);
        }
    }
    json j = {{"kind", "lower"},
              {"rings", c.rings},
              {"num_vertices", c.graph.num_vertices()},
              {"classes", c.labels()},
              {"pendant_of", c.pendant_of},
              {"coords", coords}};
    j["union_cycle"] = union_cycle ? json(*union_cycle) : json(nullptr);
    return j;
}

json hex_sidecar(const HexPatch& p)
{
    json coords = json::array();
    std::vector<std::string> classes;
    for (Vertex v = 0; v < p.graph.num_vertices(); ++v) {
        coords.push_back({p.coords[v].q, p.coords[v].r, p.coords[v].parity});
        classes.push_back(p.on_boundary[v] ? "V_O" : "V_I");
    }
    return {{"kind", "hex"},
            {"rings", p.rings},
            {"num_vertices", p.graph.num_vertices()},
            {"classes", classes},
            {"coords", coords},
            {"horizontal_edges", edges_json(p.horizontal_edges)}};
}

// Rebuilds the construction described by a sidecar and checks it against g.
ConstructionGraph construction_from_sidecar(const std::string& path, const Graph& g)
{
    json j = json::parse(read_text_file(path));
    if (j.value("kind", "") != "lower")
        throw UsageError("sidecar " + path + " does not describe a lower-bound construction");
    int rings = j.at("rings").get<int>();
    ConstructionGraph c = j.at("union_cycle").is_null()
                              ? lower_bound_graph(rings)
                              : with_cycle(rings, j.at("union_cycle").get<int>());
    if (!(c.graph == g))
        throw UsageError("input graph does not match the construction in " + path);
    return c;
}

void write_generated(const CommandConfig& cfg, const Graph& g, const json& sidecar,
                     const std::vector<std::string>& labels, std::ostream& out)
{
    std::string text = emit_edge_list(g);
    if (cfg.output.empty())
        out << text;
    else
        write_text_file(cfg.output, text);
    std::string sidecar_path = cfg.sidecar;
    if (sidecar_path.empty() && !cfg.output.empty())
        sidecar_path = cfg.output + ".json";
    if (!sidecar_path.empty())
        write_text_file(sidecar_path, sidecar.dump(2) + "\n");
    if (!cfg.dot.empty())
        write_text_file(cfg.dot, emit_dot(g, labels));
}

int cmd_gen_hex(const CommandConfig& cfg, std::ostream& out)
{
    HexPatch p = hex_patch(cfg.n);
    std::vector<std::string> labels;
    for (char b : p.on_boundary)
        labels.push_back(b ? "V_O" : "V_I");
    write_generated(cfg, p.graph, hex_sidecar(p), labels, out);
    return 0;
}

int cmd_gen_lower(const CommandConfig& cfg, std::ostream& out)
{
    std::optional<int> k;
    if (cfg.union_cycle)
        k = cfg.union_cycle;
    ConstructionGraph c = k ? with_cycle(cfg.n, *k) : lower_bound_graph(cfg.n);
    write_generated(cfg, c.graph, construction_sidecar(c, k), c.labels(), out);
    return 0;
}

int cmd_gen_cycle(const CommandConfig& cfg, std::ostream& out)
{
    Graph g = cycle(cfg.k);
    write_generated(cfg, g, json{{"kind", "cycle"}, {"k", cfg.k}}, {}, out);
    return 0;
}

json step_json(int index, const ConstructorStep& st)
{
    json j = {{"step", index},    {"u", st.u},
              {"d_H", st.aux_degree}, {"S", st.s},
              {"S_prime", st.s_prime}, {"A", st.a},
              {"sigma", st.sigma()}, {"sigma_prime", st.sigma_prime()},
              {"alpha", st.alpha()}};
    return j;
}

int cmd_order(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(cfg.input);
    ConstructResult res = construct_order_girth7(g);
    for (const auto& w : res.warnings)
        err << "warning: " << w << '\n';
    if (res.ok()) {
        if (cfg.output.empty())
            out << res.order.to_string() << '\n';
        else
            write_text_file(cfg.output, res.order.to_string() + "\n");
    }
    if (cfg.emit_trace)
        for (std::size_t i = 0; i < res.trace.steps.size(); ++i)
            out << step_json(static_cast<int>(i), res.trace.steps[i]).dump() << '\n';
    if (!res.ok()) {
        err << "error: ordering constructor is stuck (input violates the girth/planarity "
               "precondition)\n";
        return kInputError;
    }
    return 0;
}

int cmd_rank(const CommandConfig& cfg, std::ostream& out)
{
    Graph g = load_graph(cfg.input);
    if (cfg.order_file.empty())
        throw UsageError("--order is required");
    LinearOrder order = LinearOrder::parse(read_text_file(cfg.order_file));
    MatchingMode mode = mode_of(cfg);
    RankReport report = rank_order(g, order, mode);
    for (const VertexRank& vr : report.vertices) {
        json j = {{"vertex", vr.v}, {"d_plus", vr.out_degree}, {"m", vr.m}, {"r", vr.r}};
        j["witness"] = witness_json(vr.witness);
        out << j.dump() << '\n';
    }
    out << json{{"r_of_order", report.r_of_order}, {"argmax", report.argmax},
                {"mode", to_string(mode)}}
               .dump()
        << '\n';
    return 0;
}

int cmd_verify_upper(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(cfg.input);
    UpperBoundReport rep = verify_upper_bound(g, cfg.bound, mode_of(cfg));
    if (!rep.girth_ok)
        err << "warning: girth " << rep.girth.to_string()
            << " is below 7; the upper-bound argument does not apply\n";
    if (!rep.euler_ok)
        err << "warning: edge count exceeds the Euler bound; input is not planar\n";
    for (const auto& w : rep.construction.warnings)
        err << "warning: " << w << '\n';

    if (cfg.json_output) {
        json j = {{"girth", rep.girth.to_string()},
                  {"girth_ok", rep.girth_ok},
                  {"euler_ok", rep.euler_ok},
                  {"constructed", rep.construction.ok()},
                  {"bound", cfg.bound},
                  {"exit_code", rep.exit_code}};
        if (rep.verification) {
            j["r_of_order"] = rep.verification->r_of_order;
            j["argmax"] = rep.verification->argmax;
            j["witness"] = witness_json(rep.verification->witness);
            j["pass"] = rep.verification->pass;
            j["order"] = rep.construction.order.greatest_first();
        }
        out << j.dump() << '\n';
    } else if (!rep.construction.ok()) {
        out << "ordering constructor stuck after " << rep.construction.trace.steps.size() - 1
            << " choices\n";
    } else {
        const auto& v = *rep.verification;
        out << "r(L,G) = " << v.r_of_order << " (bound " << cfg.bound << ", vertex " << v.argmax
            << ")\n";
        if (rep.exit_code == kVerified)
            out << "col_g ≤ " << cfg.bound + 1 << " certified by ordering\n";
        else if (v.pass)
            out << "order meets the bound, but the input is outside the girth >= 7 class\n";
        else
            out << "bound refuted by vertex " << v.argmax << "\n";
    }
    return rep.exit_code;
}

json transcript_summary(const Transcript& t)
{
    return {{"score", t.score}, {"complete", t.complete}, {"moves", static_cast<int>(t.moves.size())}};
}

void print_transcript_lines(const Transcript& t, std::ostream& out)
{
    for (const Move& m : t.moves)
        out << json{{"move", m.index}, {"player", to_string(m.player)}, {"vertex", m.vertex},
                    {"b", m.back_degree}}
                   .dump()
            << '\n';
}

int cmd_verify_lower(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n <= 0)
        throw UsageError("--n must be positive");
    std::optional<int> k;
    if (cfg.union_cycle)
        k = cfg.union_cycle;
    LowerBoundOptions opts;
    opts.random_seeds = cfg.seeds;
    opts.first_seed = 1;
    opts.threads = configured_threads();
    LowerBoundReport rep = verify_lower_bound(cfg.n, k, opts);
    for (const auto& w : rep.warnings)
        err << "warning: " << w << '\n';

    if (cfg.json_output) {
        json j = {{"rings", rep.rings},
                  {"counts_ok", rep.counts_ok},
                  {"B", rep.measured.subdivisions},
                  {"V_I", rep.measured.interior},
                  {"V_O", rep.measured.boundary},
                  {"A", rep.measured.pendants},
                  {"girth", rep.girth.to_string()},
                  {"max_degree", rep.max_degree},
                  {"counting_inequality", rep.counting_inequality},
                  {"smallest_n_for_inequality", rep.smallest_rings_for_inequality},
                  {"playouts", static_cast<int>(rep.playouts.size())},
                  {"min_score", rep.min_score},
                  {"max_score", rep.max_score},
                  {"pass", rep.pass}};
        j["union_cycle"] = k ? json(*k) : json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << "G_" << rep.rings << (k ? " + C_" + std::to_string(*k) : "") << ": |A|="
            << rep.measured.pendants << " |B|=" << rep.measured.subdivisions
            << " |V_I|=" << rep.measured.interior << " |V_O|=" << rep.measured.boundary
            << (rep.counts_ok ? " (formulas match)" : " (FORMULA MISMATCH)") << '\n';
        out << "girth " << rep.girth.to_string() << ", max degree " << rep.max_degree << '\n';
        out << "|B|+|V_O|+1 < |V_I|: " << (rep.counting_inequality ? "yes" : "no")
            << " (first holds at n=" << rep.smallest_rings_for_inequality << ")\n";
        out << rep.playouts.size() << " playouts against the two-phase Bob: scores in ["
            << rep.min_score << ", " << rep.max_score << "]\n";
        if (rep.pass) {
            out << "col_g(G) = 5 certified within the strategy suite (Delta+1 = 5)";
            if (rep.counting_inequality && rep.girth.value() >= 7)
                out << "; with the girth-7 upper bound, col_g(P_k) = 5 for k = 7, 8";
            out << '\n';
        }
    }
    if (!rep.pass) {
        for (const PlayoutRecord& p : rep.playouts)
            if (p.transcript.score != 5) {
                err << "playout below 5: alice=" << p.alice
                    << (p.seed ? " seed=" + std::to_string(*p.seed) : "") << '\n';
                print_transcript_lines(p.transcript, err);
                break;
            }
        return kRefuted;
    }
    return kVerified;
}

LinearOrder order_for_play(const CommandConfig& cfg, const Graph& g)
{
    if (!cfg.order_file.empty())
        return LinearOrder::parse(read_text_file(cfg.order_file));
    ConstructResult res = construct_order_girth7(g);
    if (!res.ok())
        throw UsageError("no --order given and the ordering constructor is stuck on this graph");
    return res.order;
}

int cmd_play(const CommandConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(cfg.input);
    if (g.empty())
        throw UsageError("the game needs a nonempty graph");
    std::ostream& prompt = cfg.json_output ? err : out;

    auto make = [&](const std::string& name, Player side) -> std::unique_ptr<Strategy> {
        std::uint64_t seed = cfg.seed + (side == Player::Bob ? 1 : 0);
        if (name == "activation")
            return activation_alice(order_for_play(cfg, g));
        if (name == "activation-greatest")
            return activation_alice(order_for_play(cfg, g), ActivationRule::Greatest);
        if (name == "greedy")
            return greedy_order(order_for_play(cfg, g));
        if (name == "random")
            return random_strategy(seed);
        if (name == "human")
            return interactive_strategy(side, in, prompt);
        if (name == "greedy-marked")
            return max_marked_neighbors_bob();
        if (name == "theorem3") {
            if (cfg.sidecar.empty())
                throw UsageError("--bob theorem3 needs --sidecar with the construction metadata");
            return theorem3_bob(construction_from_sidecar(cfg.sidecar, g));
        }
        throw UsageError("unknown strategy '" + name + "'");
    };
    auto alice = make(cfg.alice, Player::Alice);
    auto bob = make(cfg.bob, Player::Bob);
    Transcript t = play(g, *alice, *bob);

    if (cfg.json_output) {
        print_transcript_lines(t, out);
        out << transcript_summary(t).dump() << '\n';
    } else {
        for (const Move& m : t.moves)
            out << m.index << ' ' << to_string(m.player) << " marks " << m.vertex
                << " (b=" << m.back_degree << ")\n";
        out << (t.complete ? "final score " : "INCOMPLETE, score so far ") << t.score << '\n';
    }
    return 0;
}

int cmd_solve(const CommandConfig& cfg, std::ostream& out)
{
    Graph g = load_graph(cfg.input);
    SolveOptions opts;
    opts.node_budget = cfg.budget;
    opts.max_vertices = cfg.max_vertices;
    opts.principal_variation = cfg.pv;
    try {
        SolveResult r = game_coloring_number(g, opts);
        json j = {{"value", r.value},
                  {"nodes", r.nodes},
                  {"table_hits", r.table_hits},
                  {"table_entries", r.table_entries}};
        if (cfg.pv)
            j["pv"] = r.principal_variation;
        out << j.dump() << '\n';
        return 0;
    } catch (const BudgetExceeded& e) {
        out << json{{"error", "BUDGET_EXCEEDED"},
                    {"lower", e.lower()},
                    {"upper", e.upper()},
                    {"nodes", e.nodes()}}
                   .dump()
            << '\n';
        return kRefuted;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err)
{
    CommandConfig cfg;
    CLI::App app{"marklab: the graph marking game, its orderings and constructions", "marklab"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate graphs");
    gen->require_subcommand(1);
    auto add_gen_outputs = [&](CLI::App* sub) {
        sub->add_option("--output,-o", cfg.output, "edge-list path (default: stdout)");
        sub->add_option("--sidecar", cfg.sidecar, "JSON metadata path (default: OUTPUT.json)");
        sub->add_option("--dot", cfg.dot, "also write Graphviz DOT here");
    };
    auto* gen_hex = gen->add_subcommand("hex", "hexagonal patch H_n");
    gen_hex->add_option("--n", cfg.n, "ring count")->required()->check(CLI::PositiveNumber);
    add_gen_outputs(gen_hex);
    auto* gen_lower = gen->add_subcommand("lower", "lower-bound graph G_n");
    gen_lower->add_option("--n", cfg.n, "ring count")->required()->check(CLI::PositiveNumber);
    gen_lower->add_option("--union-cycle", cfg.union_cycle, "add a disjoint k-cycle (3..8)")
        ->check(CLI::Range(3, 8));
    add_gen_outputs(gen_lower);
    auto* gen_cycle = gen->add_subcommand("cycle", "cycle C_k");
    gen_cycle->add_option("--k", cfg.k, "length")->required()->check(CLI::Range(3, 1 << 20));
    add_gen_outputs(gen_cycle);

    auto* order = app.add_subcommand("order", "build the girth-7 elimination ordering");
    order->add_option("--input,-i", cfg.input)->required();
    order->add_option("--output,-o", cfg.output, "write the order here instead of stdout");
    order->add_flag("--emit-trace", cfg.emit_trace, "print constructor steps as JSON lines");

    auto* rank = app.add_subcommand("rank", "rank report of an order");
    rank->add_option("--input,-i", cfg.input)->required();
    rank->add_option("--order", cfg.order_file)->required();
    rank->add_option("--mode", cfg.mode, "permissive|disjoint");

    auto* verify = app.add_subcommand("verify", "certify bounds");
    verify->require_subcommand(1);
    auto* upper = verify->add_subcommand("upper", "r(L,G) <= bound via the girth-7 ordering");
    upper->add_option("--input,-i", cfg.input)->required();
    upper->add_option("--bound", cfg.bound);
    upper->add_option("--mode", cfg.mode, "permissive|disjoint");
    upper->add_flag("--json", cfg.json_output);
    auto* lower = verify->add_subcommand("lower", "G_n against the two-phase Bob");
    lower->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
    lower->add_option("--union-cycle", cfg.union_cycle)->check(CLI::Range(3, 8));
    lower->add_option("--seeds", cfg.seeds, "random Alice playouts")->check(CLI::NonNegativeNumber);
    lower->add_flag("--json", cfg.json_output);

    auto* playc = app.add_subcommand("play", "play one marking game");
    playc->add_option("--input,-i", cfg.input)->required();
    playc->add_option("--alice", cfg.alice, "activation|activation-greatest|greedy|random|human");
    playc->add_option("--bob", cfg.bob, "theorem3|random|greedy-marked|human");
    playc->add_option("--order", cfg.order_file, "order file for activation/greedy");
    playc->add_option("--sidecar", cfg.sidecar, "construction metadata for theorem3");
    playc->add_option("--seed", cfg.seed);
    playc->add_flag("--json", cfg.json_output);

    auto* solve = app.add_subcommand("solve", "exact game coloring number");
    solve->add_option("--input,-i", cfg.input)->required();
    solve->add_option("--budget", cfg.budget, "node budget (0: unlimited)");
    solve->add_option("--max-vertices", cfg.max_vertices);
    solve->add_flag("--pv", cfg.pv, "include a principal variation");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (gen_hex->parsed())
            return cmd_gen_hex(cfg, out);
        if (gen_lower->parsed())
            return cmd_gen_lower(cfg, out);
        if (gen_cycle->parsed())
            return cmd_gen_cycle(cfg, out);
        if (order->parsed())
            return cmd_order(cfg, out, err);
        if (rank->parsed())
            return cmd_rank(cfg, out);
        if (upper->parsed())
            return cmd_verify_upper(cfg, out, err);
        if (lower->parsed())
            return cmd_verify_lower(cfg, out, err);
        if (playc->parsed())
            return cmd_play(cfg, in, out, err);
        if (solve->parsed())
            return cmd_solve(cfg, out);
    } catch (const StrategyFault& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace marklab
