#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "tildeiso/error.hpp"

namespace tildeiso {

// Hard cap on word length; packed binary words must fit in 64 bits.
inline constexpr int kMaxWordLength = 64;

// A small ordered set of single-character symbols. The default is {0,1};
// anything else (e.g. "012") is for the BFS oracle path only.
class Alphabet {
public:
    Alphabet() : symbols_("01") {}
    explicit Alphabet(std::string symbols);

    static const Alphabet& binary();

    int size() const { return static_cast<int>(symbols_.size()); }
    bool is_binary() const { return symbols_ == "01"; }
    char symbol(int idx) const { return symbols_.at(static_cast<size_t>(idx)); }
    // -1 when the character is not part of the alphabet.
    int index_of(char c) const;
    bool contains(char c) const { return index_of(c) >= 0; }
    const std::string& symbols() const { return symbols_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

// An immutable word over a declared alphabet. Indexing is 0-based throughout
// the library; 1-based positions appear only in formatted output.
class Word {
public:
    Word() = default;
    explicit Word(const Alphabet& alphabet) : alphabet_(alphabet) {}

    // Parses plain text like "11000"; rejects characters outside the
    // alphabet, naming the offending position (1-based) in the message.
    static Word parse(std::string_view text, const Alphabet& alphabet = Alphabet::binary());

    // Builds a binary word of length `len` from its packed form. Bit
    // (len-1) of `bits` is the first symbol, bit 0 the last, so numeric
    // order on equal-length packed words is lexicographic order.
    static Word from_bits(std::uint64_t bits, int len);

    int size() const { return static_cast<int>(text_.size()); }
    bool empty() const { return text_.empty(); }
    char at(int idx) const;
    // Symbol index within the alphabet at position idx.
    int code_at(int idx) const;

    const std::string& str() const { return text_; }
    const Alphabet& alphabet() const { return alphabet_; }
    bool is_binary() const { return alphabet_.is_binary(); }

    // Packed form; requires a binary alphabet (length is already <= 64).
    std::uint64_t bits() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.text_ == b.text_ && a.alphabet_ == b.alphabet_;
    }
    // Lexicographic on the symbol text; used for deterministic sweeps.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        return a.text_ <=> b.text_;
    }

private:
    Word(std::string text, Alphabet alphabet)
        : text_(std::move(text)), alphabet_(std::move(alphabet)) {}

    std::string text_;
    Alphabet alphabet_;
};

// Basic word algebra.

Word reverse(const Word& w);

// Flips every bit; binary alphabets only.
Word complement(const Word& w);

// True iff f occurs contiguously in w; the empty word is a factor of
// every word.
bool is_factor(const Word& f, const Word& w);
inline bool is_f_free(const Word& f, const Word& w) { return !is_factor(f, w); }

// 0-based position of the first occurrence of f in w, or -1.
int find_factor(const Word& f, const Word& w);

// Contiguous prefix/suffix of length len, 0 <= len <= |w|.
Word prefix(const Word& w, int len);
Word suffix(const Word& w, int len);

}  // namespace tildeiso
