#pragma once

#include <cstdint>

#include "marklab/graph.hpp"

// Small named graph families used for corpora, fixtures and CLI demos.
namespace marklab::families {

Graph path(int n);
Graph star(int leaves);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph grid(int rows, int cols);
Graph prism(int k);        // C_k x K_2
Graph wheel(int spokes);   // hub 0 plus a rim cycle
Graph cube();              // Q_3
Graph dodecahedron();

/// Uniform labelled tree on n vertices (random Pruefer sequence).
Graph random_tree(int n, std::uint64_t seed);
/// G(n, p).
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace marklab::families
