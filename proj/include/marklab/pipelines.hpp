#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "marklab/constructions.hpp"
#include "marklab/constructor.hpp"
#include "marklab/game.hpp"
#include "marklab/ordering.hpp"

namespace marklab {

// Exit-code contract shared by the verify commands.
enum ExitCode : int { kVerified = 0, kRefuted = 1, kInputError = 2 };

// Upper bound: build the girth-7 ordering and check r(L,G) <= bound.
struct UpperBoundReport {
    Girth girth = Girth::infinite();
    bool girth_ok = false;    // girth >= 7
    bool euler_ok = false;
    ConstructResult construction;
    std::optional<OrderVerification> verification;
    int exit_code = kInputError;
};

UpperBoundReport verify_upper_bound(const Graph& g, int bound = 4,
                                    MatchingMode mode = MatchingMode::Permissive);

struct PlayoutRecord {
    std::string alice;
    std::optional<std::uint64_t> seed;
    Transcript transcript;
    int interior_unmarked_after_phase1 = -1;  // -1 if V_I is empty
};

// Lower bound: G_n (optionally with a disjoint k-cycle) against Bob's
// two-phase strategy and a suite of Alice strategies.
struct LowerBoundReport {
    int rings = 0;
    std::optional<int> cycle_length;
    ClassCounts expected;
    ClassCounts measured;
    bool counts_ok = false;
    Girth girth = Girth::infinite();
    int expected_girth = 8;
    bool girth_ok = false;
    int max_degree = 0;
    bool max_degree_ok = false;
    bool counting_inequality = false;
    int smallest_rings_for_inequality = 0;
    bool order_ok = false;
    std::vector<PlayoutRecord> playouts;
    int min_score = 0;
    int max_score = 0;
    std::vector<std::string> warnings;
    bool pass = false;
};

struct LowerBoundOptions {
    int random_seeds = 100;
    std::uint64_t first_seed = 1;
    int threads = 1;
};

LowerBoundReport verify_lower_bound(int rings, std::optional<int> cycle_length,
                                    const LowerBoundOptions& options = {});

/// V_I vertices still unmarked at the first moment every B ∪ V_O vertex is marked.
int interior_unmarked_after_phase1(const ConstructionGraph& c, const Transcript& t);

}  // namespace marklab
