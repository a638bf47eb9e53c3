#pragma once

#include <bit>
#include <cstdint>

#include "tildeiso/word.hpp"

// Packed binary words for the hot enumeration paths. A word of length n
// lives in the low n bits with the FIRST symbol at bit n-1, so that for a
// fixed length, numeric order equals lexicographic order.
namespace tildeiso::packed {

inline std::uint64_t mask(int len) {
    return len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
}

// Bit index of symbol position idx (0-based from the left).
inline int bitpos(int len, int idx) { return len - 1 - idx; }

inline int symbol(std::uint64_t w, int len, int idx) {
    return static_cast<int>((w >> bitpos(len, idx)) & 1u);
}

inline std::uint64_t set_symbol(std::uint64_t w, int len, int idx, int value) {
    std::uint64_t bit = std::uint64_t{1} << bitpos(len, idx);
    return value ? (w | bit) : (w & ~bit);
}

inline std::uint64_t prefix_bits(std::uint64_t w, int len, int l) {
    return l == 0 ? 0 : w >> (len - l);
}

inline std::uint64_t suffix_bits(std::uint64_t w, int /*len*/, int l) {
    return w & mask(l);
}

inline std::uint64_t complement_bits(std::uint64_t w, int len) {
    return ~w & mask(len);
}

inline std::uint64_t reverse_bits(std::uint64_t w, int len) {
    std::uint64_t r = 0;
    for (int i = 0; i < len; ++i) {
        r = (r << 1) | (w & 1u);
        w >>= 1;
    }
    return r;
}

// True iff f (flen > 0) occurs as a contiguous factor of w.
inline bool contains_factor(std::uint64_t w, int wlen, std::uint64_t f, int flen) {
    if (flen == 0) return true;
    if (flen > wlen) return false;
    const std::uint64_t m = mask(flen);
    for (int sh = wlen - flen; sh >= 0; --sh) {
        if (((w >> sh) & m) == f) return true;
    }
    return false;
}

// 0-based position of the first occurrence of f in w, or -1.
inline int find_factor(std::uint64_t w, int wlen, std::uint64_t f, int flen) {
    if (flen == 0) return 0;
    if (flen > wlen) return -1;
    const std::uint64_t m = mask(flen);
    for (int idx = 0; idx <= wlen - flen; ++idx) {
        if (((w >> (wlen - flen - idx)) & m) == f) return idx;
    }
    return -1;
}

// Concatenation: a (alen symbols) followed by b (blen symbols).
inline std::uint64_t concat(std::uint64_t a, int /*alen*/, std::uint64_t b, int blen) {
    return (a << blen) | b;
}

struct PackedWord {
    std::uint64_t bits = 0;
    int len = 0;
};

inline PackedWord pack(const Word& w) { return {w.bits(), w.size()}; }
inline Word unpack(PackedWord p) { return Word::from_bits(p.bits, p.len); }

}  // namespace tildeiso::packed
