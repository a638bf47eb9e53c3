#pragma once

#include <string>
#include <vector>

#include "tildeiso/budgets.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso {

enum class OpKind { Replace, Swap };

// A single edit: replacing the symbol at `index` or swapping the two
// distinct adjacent symbols at `index` and `index + 1`. Indices are
// 0-based in memory; to_string() renders the 1-based form ("R4", "S2").
struct EditOp {
    OpKind kind = OpKind::Replace;
    int index = 0;
    char to = '\0';  // replacement symbol; unused for swaps

    static EditOp replace(int index, char to) { return {OpKind::Replace, index, to}; }
    static EditOp swap(int index) { return {OpKind::Swap, index, '\0'}; }

    int position() const { return index + 1; }
    // Positions touched: {index} for a replacement, {index, index+1} for a swap.
    int span() const { return kind == OpKind::Swap ? 2 : 1; }

    std::string to_string(bool binary_alphabet = true) const;

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

// Compares by position first, swaps before replacements on ties.
bool op_less(const EditOp& a, const EditOp& b);

// A set of edits with pairwise-disjoint touched positions, kept sorted by
// position. Disjointness makes the ops commute, so any application order
// reaches the same word.
struct OpSet {
    std::vector<EditOp> ops;

    int size() const { return static_cast<int>(ops.size()); }
    friend bool operator==(const OpSet&, const OpSet&) = default;
};

std::string to_string(const OpSet& s, bool binary_alphabet = true);

// Applies one edit; throws InapplicableOpError / BoundsError / AlphabetError
// when the op does not apply to w.
Word apply_op(const Word& w, const EditOp& op);

// Applies every op of a disjoint set (ascending position).
Word apply_ops(const Word& w, const OpSet& s);

// Number of mismatch positions; requires equal lengths.
int hamming_distance(const Word& u, const Word& v);

// Exact swap-and-mismatch distance on equal-length binary words: mismatch
// count minus a maximum set of disjoint adjacent mismatch pairs that a
// single swap fixes.
int tilde_distance(const Word& u, const Word& v);

// Ground-truth distance for any alphabet: breadth-first search over the
// graph of single edits on |alphabet|^len, with no restriction on how
// often a position changes.
int tilde_distance_oracle(const Word& u, const Word& v,
                          const Budgets& budgets = Budgets::defaults());

// All op sets of cardinality tilde_distance(u, v) that turn u into v while
// touching each position at most once, in deterministic order (sorted op
// lists compared by position, swap before replacement). Binary only.
std::vector<OpSet> minimal_op_sets(const Word& u, const Word& v);

namespace packed_ops {

// Packed-word counterparts used by the exhaustive sweeps.
int tilde_distance_bits(std::uint64_t u, std::uint64_t v, int len);
std::vector<OpSet> minimal_op_sets_bits(std::uint64_t u, std::uint64_t v, int len);
// XOR mask an op applies to a packed word of this length.
std::uint64_t op_mask(const EditOp& op, int len);

}  // namespace packed_ops

}  // namespace tildeiso
