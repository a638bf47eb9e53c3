#pragma once

#include <string>
#include <vector>

#include "tildeiso/distance.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso {

enum class OverlapType { None, R, S, RR, SR, RS, SS, Higher };

std::string to_string(OverlapType t);

// One minimal op set realizing an error overlap, with the taxonomy tag it
// induces. Error indices are the op positions within the prefix window,
// 0-based (the window is a prefix of f, so they index f as well).
struct OverlapRealization {
    OpSet op_set;
    OverlapType type = OverlapType::None;
    std::vector<int> error_indices;
    bool adjacent = false;  // RR/RS: j == i+1; SR/SS: j == i+2
};

// The comparison of pre_l(f) against suf_l(f) for one shift r = |f| - l.
// A distance-2 overlap may admit several realizations (and hence several
// types); all of them are kept. Distances above 2 are carried for
// reporting only, without realizations.
struct ErrorOverlap {
    int shift = 0;
    int length = 0;
    int distance = 0;
    std::vector<OverlapRealization> realizations;

    OverlapType primary_type() const {
        return realizations.empty() ? (distance == 0 ? OverlapType::None : OverlapType::Higher)
                                    : realizations.front().type;
    }
};

// One classified overlap per shift r = 1..|f|-1. Binary words only; words
// shorter than 2 symbols have no overlaps.
std::vector<ErrorOverlap> error_overlaps(const Word& f);

// True iff the realization is of type RR or SS and its error positions i, j
// satisfy: r even, j - i = r/2, and f[i..i+r/2-1] = f[j..j+r/2-1]. Exactly
// the overlaps whose second split word fails to avoid f.
bool condition_tilde(const Word& f, int shift, const OverlapRealization& realization);

// Whether any realization of a distance-2 overlap satisfies the condition.
// Requires distance == 2.
bool condition_tilde(const Word& f, const ErrorOverlap& overlap);

// Per-shift mismatch counts between pre_l(f) and suf_l(f), r = 1..|f|-1.
std::vector<int> ham_error_overlaps(const Word& f);

// A binary word is Hamming-isometric iff no shift has exactly two
// mismatches between its prefix and suffix windows.
bool ham_isometric(const Word& f);

}  // namespace tildeiso
