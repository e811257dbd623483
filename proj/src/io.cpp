#include "marklab/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace marklab {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, int line)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#')
            continue;
        if (toks.size() != 2)
            throw ParseError(line_no, "expected two integers, got " + std::to_string(toks.size()) +
                                          " fields");
        long long a = parse_int(toks[0], line_no);
        long long b = parse_int(toks[1], line_no);
        if (!have_header) {
            if (a < 0 || b < 0)
                throw ParseError(line_no, "negative count in header");
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) >= m)
            throw ParseError(line_no, "more edge lines than the declared count " +
                                          std::to_string(m));
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError(line_no, "vertex id out of range [0," + std::to_string(n) + ")");
        if (a == b)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        Edge e = Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)}.canonical();
        if (!seen.insert(e).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " +
                                          std::to_string(e.v) + " (declared count " +
                                          std::to_string(m) + " counts it twice)");
        edges.push_back(e);
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    return build_graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (Edge e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string emit_dot(const Graph& g, const std::vector<std::string>& labels, std::string_view name)
{
    if (!labels.empty() && static_cast<int>(labels.size()) != g.num_vertices())
        throw GraphError("label count does not match vertex count");
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v;
        if (!labels.empty())
            out << " [class=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (Edge e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace marklab
