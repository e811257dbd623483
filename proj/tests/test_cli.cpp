#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "marklab/cli.hpp"
#include "marklab/constructions.hpp"
#include "marklab/families.hpp"
#include "marklab/io.hpp"

using namespace marklab;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text)
{
    std::vector<json> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty())
            rows.push_back(json::parse(line));
    return rows;
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("marklab-cli-" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const Graph& g) const
    {
        write_text_file(path(name), emit_edge_list(g));
        return path(name);
    }

private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("gen lower writes the graph and a class sidecar")
{
    Scratch s;
    Run r = cli({"gen", "lower", "--n", "2", "--output", s.path("g2.txt"), "--dot", s.path("g2.dot")});
    REQUIRE(r.code == 0);
    Graph g = parse_edge_list(read_text_file(s.path("g2.txt")));
    CHECK(g.num_vertices() == 58);
    json side = json::parse(read_text_file(s.path("g2.txt.json")));
    CHECK(side["rings"] == 2);
    CHECK(side["classes"].size() == 58);
    CHECK(std::count(side["classes"].begin(), side["classes"].end(), "A") == 24);
    CHECK(std::count(side["classes"].begin(), side["classes"].end(), "B") == 10);
    CHECK(read_text_file(s.path("g2.dot")).find("class=\"V_I\"") != std::string::npos);

    Run to_stdout = cli({"gen", "lower", "--n", "2"});
    CHECK(to_stdout.out.rfind("58 64\n", 0) == 0);
    CHECK(cli({"gen", "hex", "--n", "3"}).out.rfind("54 ", 0) == 0);
    CHECK(cli({"gen", "cycle", "--k", "7"}).out == emit_edge_list(cycle(7)));
}

TEST_CASE("verify upper")
{
    Scratch s;
    Run c7 = cli({"verify", "upper", "--input", s.write("c7.txt", cycle(7))});
    CHECK(c7.code == 0);
    CHECK(c7.out.find("col_g ≤ 5 certified by ordering") != std::string::npos);

    Run g3 = cli({"verify", "upper", "--input", s.write("g3.txt", lower_bound_graph(3).graph),
                  "--json"});
    CHECK(g3.code == 0);
    json rep = json::parse(g3.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["r_of_order"].get<int>() <= 4);

    Run k4 = cli({"verify", "upper", "--input", s.write("k4.txt", families::complete(4))});
    CHECK(k4.code != 0);
    CHECK(k4.err.find("girth") != std::string::npos);

    Run stuck = cli({"verify", "upper", "--input", s.write("k6.txt", families::complete(6))});
    CHECK(stuck.code == 2);

    Run refuted = cli({"verify", "upper", "--input", s.path("c7.txt"), "--bound", "2"});
    CHECK(refuted.code == 1);
}

TEST_CASE("input errors exit 2")
{
    Scratch s;
    write_text_file(s.path("bad.txt"), "2 2\n0 1\n0 1\n");
    Run bad = cli({"verify", "upper", "--input", s.path("bad.txt")});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 3") != std::string::npos);
    CHECK(cli({"verify", "upper", "--input", s.path("missing.txt")}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"gen", "lower"}).code == 2);
    CHECK(cli({"gen", "lower", "--n", "2", "--union-cycle", "9"}).code == 2);
    CHECK(cli({"rank", "--input", s.write("c5.txt", cycle(5)), "--order", s.path("missing")}).code == 2);
    CHECK(cli({"rank", "--input", s.path("c5.txt"), "--order", s.path("c5.txt"), "--mode", "x"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("verify lower")
{
    Run g9 = cli({"verify", "lower", "--n", "9", "--json"});
    CHECK(g9.code == 0);
    json rep = json::parse(g9.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["min_score"] == 5);
    CHECK(rep["playouts"] == 102);

    Run with7 = cli({"verify", "lower", "--n", "9", "--union-cycle", "7", "--json", "--seeds", "10"});
    CHECK(with7.code == 0);
    CHECK(json::parse(with7.out)["girth"] == "7");

    Run g2 = cli({"verify", "lower", "--n", "2", "--seeds", "3"});
    CHECK(g2.err.find("warning") != std::string::npos);
    CHECK(g2.out.find("G_2") != std::string::npos);

    Run human = cli({"verify", "lower", "--n", "9", "--seeds", "0"});
    CHECK(human.out.find("col_g(P_k) = 5 for k = 7, 8") != std::string::npos);
}

TEST_CASE("order and rank")
{
    Scratch s;
    std::string g = s.write("g2.txt", lower_bound_graph(2).graph);
    Run order = cli({"order", "--input", g, "--output", s.path("g2.order"), "--emit-trace"});
    REQUIRE(order.code == 0);
    auto steps = json_lines(order.out);
    CHECK(steps.size() == 58);
    CHECK(steps.front().contains("d_H"));

    Run rank = cli({"rank", "--input", g, "--order", s.path("g2.order")});
    REQUIRE(rank.code == 0);
    auto rows = json_lines(rank.out);
    REQUIRE(rows.size() == 59);
    CHECK(rows.back()["r_of_order"].get<int>() <= 4);
    CHECK(rows.back()["mode"] == "permissive");

    Run disjoint = cli({"rank", "--input", g, "--order", s.path("g2.order"), "--mode", "disjoint"});
    CHECK(json_lines(disjoint.out).back()["mode"] == "disjoint");

    Run stuck = cli({"order", "--input", s.write("k6.txt", families::complete(6))});
    CHECK(stuck.code == 2);
}

TEST_CASE("play")
{
    Scratch s;
    REQUIRE(cli({"gen", "lower", "--n", "2", "-o", s.path("g2.txt")}).code == 0);
    Run t3 = cli({"play", "--input", s.path("g2.txt"), "--alice", "greedy", "--bob", "theorem3",
                  "--sidecar", s.path("g2.txt.json"), "--json"});
    REQUIRE(t3.code == 0);
    auto rows = json_lines(t3.out);
    CHECK(rows.size() == 59);
    CHECK(rows.back()["complete"] == true);

    CHECK(cli({"play", "--input", s.path("g2.txt"), "--bob", "theorem3"}).code == 2);
    CHECK(cli({"play", "--input", s.path("g2.txt"), "--alice", "nobody"}).code == 2);

    std::string p3 = s.write("p3.txt", families::path(3));
    Run human = cli({"play", "--input", p3, "--alice", "greedy", "--bob", "human", "--json"},
                    "1\n0\n");
    CHECK(human.code == 0);
    CHECK(human.err.find("vertex>") != std::string::npos);
    auto moves = json_lines(human.out);
    CHECK(moves.back()["complete"] == true);

    Run quit = cli({"play", "--input", p3, "--alice", "human", "--bob", "random"}, "quit\n");
    CHECK(quit.code == 0);
    CHECK(quit.out.find("INCOMPLETE") != std::string::npos);
}

TEST_CASE("solve")
{
    Scratch s;
    Run c6 = cli({"solve", "--input", s.write("c6.txt", cycle(6)), "--pv"});
    REQUIRE(c6.code == 0);
    json j = json::parse(c6.out);
    CHECK(j["value"] == 3);
    CHECK(j["pv"].size() == 6);

    Run budget = cli({"solve", "--input", s.write("r.txt", families::random_graph(14, 0.3, 2)),
                      "--budget", "3"});
    CHECK(budget.code == 1);
    CHECK(json::parse(budget.out)["error"] == "BUDGET_EXCEEDED");
}

TEST_CASE("identical invocations give identical bytes")
{
    Scratch s;
    std::string g = s.write("g2.txt", lower_bound_graph(2).graph);
    std::vector<std::vector<std::string>> runs = {
        {"verify", "upper", "--input", g, "--json"},
        {"verify", "lower", "--n", "3", "--json", "--seeds", "20"},
        {"play", "--input", g, "--alice", "random", "--bob", "random", "--seed", "9", "--json"},
        {"play", "--input", g, "--alice", "activation", "--bob", "greedy-marked", "--json"},
        {"order", "--input", g, "--emit-trace"},
        {"solve", "--input", s.write("c8.txt", cycle(8)), "--pv"},
    };
    for (const auto& args : runs) {
        Run a = cli(args), b = cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}
