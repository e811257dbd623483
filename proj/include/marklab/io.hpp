#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "marklab/graph.hpp"

namespace marklab {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// Edge-list text: first line "n m", then m lines "u v", 0-indexed.
/// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

/// Canonical form: edges as u < v, sorted.
std::string emit_edge_list(const Graph& g);

/// Graphviz export. `labels`, when non-empty, must have one entry per vertex
/// and is written as a `class` node attribute.
std::string emit_dot(const Graph& g, const std::vector<std::string>& labels = {},
                     std::string_view name = "G");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace marklab
