#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tildeiso/overlap.hpp"
#include "tildeiso/transform.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso {

enum class ConstructionKind {
    SwapOverlapPair,   // from a 1-error overlap of type S
    TwoErrorSplit,     // prefix + one of the two error ops applied to f
    ThreeErrorSplit,   // the split extended by a half-shift tail and a third op
    AnchoredRewrite,   // block rewrite for f = x 1001 z = y x 011
    BoundaryRewrite,   // block rewrite for f starting 110 and ending 100
};

enum class Variant { Identity, Reverse, Complement, ReverseComplement };

std::string to_string(ConstructionKind k);
std::string to_string(Variant v);

Word apply_variant(const Word& w, Variant v);

// A candidate witness pair, the overlap it was built from, and the verdict
// that certifies it. `variant` names the transform of f the construction was
// found on; the pair and verdict are always mapped back to f itself.
struct Construction {
    ConstructionKind kind = ConstructionKind::TwoErrorSplit;
    Variant variant = Variant::Identity;
    int shift = 0;
    OverlapType overlap_type = OverlapType::None;
    std::vector<int> error_indices;       // 0-based, on the variant word
    std::optional<int> third_op_index;    // ThreeErrorSplit only, 0-based
    bool reconstructed_third = false;     // third position found by search
    Word first;
    Word second;
    WitnessVerdict verdict;
};

// pre_r(f) . R_i(f) against pre_r(f) . R_{i+1}(f) for a swap-type 1-error
// overlap at index i. Throws PreconditionError on any other overlap.
std::pair<Word, Word> swap_overlap_pair(const Word& f, const ErrorOverlap& overlap);

// The raw formula behind swap_overlap_pair, without the overlap-type gate.
std::pair<Word, Word> swap_overlap_formula(const Word& f, int shift, int error_index);

// pre_r(f) . O_i(f) against pre_r(f) . O_j(f) for one realization of a
// distance-2 overlap.
std::pair<Word, Word> split_pair(const Word& f, int shift, const OverlapRealization& realization);

// The three-error pair for a realization satisfying the overlap condition:
// pre_r(f) . O_i(f) . suf_{r/2}(f) against pre_r(f) . O_j(O_t(f)) . suf_{r/2}(f).
std::pair<Word, Word> extended_split_pair(const Word& f, int shift,
                                          const OverlapRealization& realization, int third_index);

// Candidate third-op indices for extended_split_pair, the analytically
// expected j + r/2 first, then the remaining applicable positions.
std::vector<int> extended_split_candidates(const Word& f, int shift,
                                           const OverlapRealization& realization);

struct RewriteCandidate {
    Word first;
    Word second;
    int shift = 0;
    int error_index = 0;  // 0-based start of the rewritten block in f
};

// All decompositions f = x 1001 z = y x 011 with the corresponding
// (y x 0101 z, y x 1010 z) pairs.
std::vector<RewriteCandidate> anchored_rewrite_candidates(const Word& f);

// The (w2 1010 w1, w2 0101 w1) pair when f = 110 w1 = w2 100.
std::optional<RewriteCandidate> boundary_rewrite_candidate(const Word& f);

// Tries every construction on f, reverse(f), complement(f) and
// reverse(complement(f)), verifying each candidate with is_witness_pair and
// mapping verified pairs back to f. Returns the first construction whose
// verdict passes, or nothing. A missing result does not certify isometry.
std::optional<Construction> construct_witnesses(const Word& f,
                                                const Budgets& budgets = Budgets::defaults());

}  // namespace tildeiso
