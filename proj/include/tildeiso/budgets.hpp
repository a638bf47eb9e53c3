#pragma once

#include <cstdint>

namespace tildeiso {

// Work limits for the search and enumeration entry points. The defaults
// keep every desk-scale sweep comfortably in memory; `work_limit` is the
// knob the CLI exposes through TILDE_ISO_BUDGET.
struct Budgets {
    // Longest word the BFS distance oracle accepts.
    int oracle_max_len = 16;
    // Largest state space the oracle will allocate (|alphabet|^len).
    std::uint64_t oracle_max_states = std::uint64_t{1} << 26;
    // Largest distance for which full order enumeration is attempted.
    int enum_max_distance = 6;
    // Largest distance for the subset-lattice existence search.
    int search_max_distance = 20;
    // Longest word length brute-force isometry sweeps accept.
    int brute_max_len = 16;
    // Longest word length the subgraph distance audit accepts.
    int subgraph_max_len = 14;
    // Generic cap on materialized results (transformations, BFS states).
    std::uint64_t work_limit = 1'000'000;

    static Budgets defaults() { return {}; }
};

}  // namespace tildeiso
