#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tildeiso/budgets.hpp"
#include "tildeiso/overlap.hpp"
#include "tildeiso/transform.hpp"
#include "tildeiso/witness.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso {

enum class TildeStatus { NonIsometric, IsometricUpTo, Unknown };

// "isometric-up-to-M" renders with M substituted; the sweeps cannot certify
// unbounded lengths.
std::string status_string(TildeStatus s, int max_len);

struct ExhaustionCertificate {
    int max_len = 0;
    std::uint64_t pairs_checked = 0;
};

struct BruteForceResult {
    std::optional<std::pair<Word, Word>> witness;
    std::optional<WitnessVerdict> verdict;
    ExhaustionCertificate certificate;  // meaningful when no witness was found
};

// Sweeps every f-free pair of each length |f|+1..max_len for one with no
// f-free minimal transformation. Pairs are unordered, iterated by increasing
// length then lexicographic words, and reduced by the transforms that fix f
// (reverse for palindromes, reverse-complement for antipalindromes); the
// first surviving pair in that order is returned.
BruteForceResult brute_force_isometric(const Word& f, int max_len, int jobs = 1,
                                       const Budgets& budgets = Budgets::defaults());

struct ClassificationReport {
    Word f;
    bool ham_isometric = false;
    TildeStatus tilde_status = TildeStatus::Unknown;
    int max_len = 0;
    std::optional<Construction> construction;
    std::optional<std::pair<Word, Word>> brute_pair;
    std::optional<WitnessVerdict> brute_verdict;
    std::optional<ExhaustionCertificate> certificate;
    std::vector<ErrorOverlap> overlaps;
    // A non-isometric verdict with no swap-type or distance-2 overlap on f
    // would contradict the overlap necessary condition.
    bool prop2_consistent = true;

    std::string ham_status_string() const { return ham_isometric ? "isometric" : "non-isometric"; }
    std::string tilde_status_string() const { return status_string(tilde_status, max_len); }
};

// Overlap filter, then verified constructions, then brute force. max_len 0
// defaults to |f| + 4; Unknown only when the brute-force budget blocks the
// final step.
ClassificationReport classify(const Word& f, int max_len = 0, int jobs = 1,
                              const Budgets& budgets = Budgets::defaults());

// Words of length `len` that brute-force classification finds non-isometric
// even though they have neither a swap-type 1-error overlap nor a
// distance-2 overlap. Expected empty.
std::vector<Word> audit_prop2(int len, int max_len = 0, int jobs = 1,
                              const Budgets& budgets = Budgets::defaults());

struct SubgraphCounterexample {
    Word u;
    Word v;
    int graph_distance = -1;  // -1 when unreachable within the f-free subgraph
    int tilde = 0;
};

// Compares shortest paths inside the f-free restriction of the single-edit
// graph on {0,1}^len against the unrestricted tilde distance, for every
// f-free pair. Paths here may revisit positions, so this is an empirical
// companion check, not the isometry definition itself.
std::vector<SubgraphCounterexample> audit_subgraph_distances(
    const Word& f, int len, const Budgets& budgets = Budgets::defaults());

}  // namespace tildeiso
