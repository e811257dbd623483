#pragma once

#include <optional>
#include <string>
#include <vector>

#include "marklab/graph.hpp"
#include "marklab/ordering.hpp"

namespace marklab {

// One selection of the girth-7 ordering constructor. At selection time the
// vertices split into chosen (C) and unchosen (U); the auxiliary graph H is
// G with C-C edges removed, every x in C with at most 3 unchosen neighbors
// deleted, and those deleted x with 2 or 3 unchosen neighbors replaced by an
// edge or a path on them.
struct ConstructorStep {
    Vertex u = -1;
    int aux_degree = 0;                // d_H(u)
    std::vector<Vertex> s;             // unchosen G-neighbors of u
    std::vector<Vertex> s_prime;       // unchosen H-neighbors joined by a surgery edge
    std::vector<Vertex> a;             // chosen H-neighbors (all have d_H >= 4)
    std::vector<Vertex> low_chosen;    // chosen G-neighbors of u deleted from H
    std::optional<Girth> aux_girth;    // girth of H, when requested

    int sigma() const { return static_cast<int>(s.size()); }
    int sigma_prime() const { return static_cast<int>(s_prime.size()); }
    int alpha() const { return static_cast<int>(a.size()); }
};

struct ConstructorTrace {
    std::vector<ConstructorStep> steps;
    int surgery_conflicts = 0;
    int min_surviving_chosen_degree = -1;  // min d_H(x) over surviving chosen x, all steps
};

enum class ConstructStatus { Ok, Stuck };

struct ConstructResult {
    ConstructStatus status = ConstructStatus::Ok;
    LinearOrder order;  // meaningful only when status == Ok
    ConstructorTrace trace;
    std::vector<std::string> warnings;

    bool ok() const { return status == ConstructStatus::Ok; }
};

struct ConstructOptions {
    bool record_aux_girth = false;
};

/// Builds an order by repeatedly choosing an unchosen vertex of minimum
/// d_H (ties by id, must be <= 3). The first chosen vertex is L-greatest.
/// Returns Stuck with a partial trace when every unchosen vertex has d_H >= 4.
ConstructResult construct_order_girth7(const Graph& g, const ConstructOptions& options = {});

// Per-step comparison of an order's rank certificate with the constructor's
// bookkeeping: Z split into chosen H-neighbors, deleted chosen neighbors and u.
struct StepAudit {
    Vertex u = -1;
    int out_degree = 0;
    int m = 0;
    int z_in_a = 0;
    int z_low = 0;
    int z_self = 0;
    int z_to_u = 0;  // Y-vertices matched onto u itself
    int sigma = 0;
    int sigma_prime = 0;
    int alpha = 0;
};

std::vector<StepAudit> audit_trace(const Graph& g, const ConstructResult& result,
                                   MatchingMode mode = MatchingMode::Permissive);

}  // namespace marklab
