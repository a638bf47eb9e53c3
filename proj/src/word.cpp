#include "tildeiso/word.hpp"

#include <algorithm>

namespace tildeiso {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw AlphabetError("alphabet must contain at least one symbol");
    }
    for (size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_.find(symbols_[i], i + 1) != std::string::npos) {
            throw AlphabetError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        }
    }
}

const Alphabet& Alphabet::binary() {
    static const Alphabet a;
    return a;
}

int Alphabet::index_of(char c) const {
    auto pos = symbols_.find(c);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
    if (text.size() > static_cast<size_t>(kMaxWordLength)) {
        throw ParseError("word longer than " + std::to_string(kMaxWordLength) + " symbols");
    }
    for (size_t i = 0; i < text.size(); ++i) {
        if (!alphabet.contains(text[i])) {
            throw ParseError(std::string("invalid character '") + text[i] + "' at position " +
                             std::to_string(i + 1) + " (alphabet \"" + alphabet.symbols() + "\")");
        }
    }
    return Word(std::string(text), alphabet);
}

Word Word::from_bits(std::uint64_t bits, int len) {
    if (len < 0 || len > kMaxWordLength) {
        throw BoundsError("packed word length out of range: " + std::to_string(len));
    }
    std::string text(static_cast<size_t>(len), '0');
    for (int i = 0; i < len; ++i) {
        if ((bits >> (len - 1 - i)) & 1u) text[static_cast<size_t>(i)] = '1';
    }
    return Word(std::move(text), Alphabet::binary());
}

char Word::at(int idx) const {
    if (idx < 0 || idx >= size()) {
        throw BoundsError("index " + std::to_string(idx) + " out of range for word of length " +
                          std::to_string(size()));
    }
    return text_[static_cast<size_t>(idx)];
}

int Word::code_at(int idx) const {
    return alphabet_.index_of(at(idx));
}

std::uint64_t Word::bits() const {
    if (!is_binary()) {
        throw AlphabetError("packed form requires the binary alphabet");
    }
    std::uint64_t b = 0;
    for (char c : text_) b = (b << 1) | static_cast<std::uint64_t>(c == '1');
    return b;
}

Word reverse(const Word& w) {
    std::string text(w.str());
    std::reverse(text.begin(), text.end());
    return Word::parse(text, w.alphabet());
}

Word complement(const Word& w) {
    if (!w.is_binary()) {
        throw AlphabetError("complement requires the binary alphabet");
    }
    std::string text(w.str());
    for (char& c : text) c = (c == '0') ? '1' : '0';
    return Word::parse(text, w.alphabet());
}

int find_factor(const Word& f, const Word& w) {
    if (f.size() > w.size()) return -1;
    auto pos = w.str().find(f.str());
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

bool is_factor(const Word& f, const Word& w) {
    return find_factor(f, w) >= 0;
}

Word prefix(const Word& w, int len) {
    if (len < 0 || len > w.size()) {
        throw BoundsError("prefix length " + std::to_string(len) + " out of range for word of length " +
                          std::to_string(w.size()));
    }
    return Word::parse(std::string_view(w.str()).substr(0, static_cast<size_t>(len)), w.alphabet());
}

Word suffix(const Word& w, int len) {
    if (len < 0 || len > w.size()) {
        throw BoundsError("suffix length " + std::to_string(len) + " out of range for word of length " +
                          std::to_string(w.size()));
    }
    return Word::parse(std::string_view(w.str()).substr(static_cast<size_t>(w.size() - len)),
                       w.alphabet());
}

}  // namespace tildeiso
