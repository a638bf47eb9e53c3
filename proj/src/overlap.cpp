#include "tildeiso/overlap.hpp"

#include "tildeiso/packed.hpp"

namespace tildeiso {

std::string to_string(OverlapType t) {
    switch (t) {
        case OverlapType::None: return "none";
        case OverlapType::R: return "R";
        case OverlapType::S: return "S";
        case OverlapType::RR: return "RR";
        case OverlapType::SR: return "SR";
        case OverlapType::RS: return "RS";
        case OverlapType::SS: return "SS";
        case OverlapType::Higher: return "higher";
    }
    return "?";
}

namespace {

OverlapRealization classify_op_set(const OpSet& set) {
    OverlapRealization real;
    real.op_set = set;
    for (const EditOp& op : set.ops) real.error_indices.push_back(op.index);
    if (set.ops.size() == 1) {
        real.type = set.ops[0].kind == OpKind::Swap ? OverlapType::S : OverlapType::R;
        return real;
    }
    const EditOp& a = set.ops[0];
    const EditOp& b = set.ops[1];
    const bool a_swap = a.kind == OpKind::Swap;
    const bool b_swap = b.kind == OpKind::Swap;
    real.type = a_swap ? (b_swap ? OverlapType::SS : OverlapType::SR)
                       : (b_swap ? OverlapType::RS : OverlapType::RR);
    real.adjacent = b.index == a.index + a.span();
    return real;
}

}  // namespace

std::vector<ErrorOverlap> error_overlaps(const Word& f) {
    if (!f.is_binary()) {
        throw AlphabetError("error overlaps only support the binary alphabet");
    }
    const int n = f.size();
    std::vector<ErrorOverlap> out;
    if (n < 2) return out;
    const std::uint64_t bits = f.bits();
    out.reserve(static_cast<size_t>(n - 1));
    for (int r = 1; r < n; ++r) {
        const int l = n - r;
        const std::uint64_t pre = packed::prefix_bits(bits, n, l);
        const std::uint64_t suf = packed::suffix_bits(bits, n, l);
        ErrorOverlap eo;
        eo.shift = r;
        eo.length = l;
        eo.distance = packed_ops::tilde_distance_bits(pre, suf, l);
        if (eo.distance == 1 || eo.distance == 2) {
            for (const OpSet& set : packed_ops::minimal_op_sets_bits(pre, suf, l)) {
                eo.realizations.push_back(classify_op_set(set));
            }
        }
        out.push_back(std::move(eo));
    }
    return out;
}

bool condition_tilde(const Word& f, int shift, const OverlapRealization& realization) {
    if (realization.type != OverlapType::RR && realization.type != OverlapType::SS) return false;
    if (shift % 2 != 0) return false;
    const int half = shift / 2;
    const int i = realization.error_indices[0];
    const int j = realization.error_indices[1];
    if (j - i != half) return false;
    return f.str().compare(static_cast<size_t>(i), static_cast<size_t>(half), f.str(),
                           static_cast<size_t>(j), static_cast<size_t>(half)) == 0;
}

bool condition_tilde(const Word& f, const ErrorOverlap& overlap) {
    if (overlap.distance != 2) {
        throw PreconditionError("the overlap condition applies to distance-2 overlaps only (got " +
                                std::to_string(overlap.distance) + ")");
    }
    for (const OverlapRealization& real : overlap.realizations) {
        if (condition_tilde(f, overlap.shift, real)) return true;
    }
    return false;
}

std::vector<int> ham_error_overlaps(const Word& f) {
    if (!f.is_binary()) {
        throw AlphabetError("hamming overlaps only support the binary alphabet");
    }
    const int n = f.size();
    std::vector<int> counts;
    if (n < 2) return counts;
    const std::uint64_t bits = f.bits();
    counts.reserve(static_cast<size_t>(n - 1));
    for (int r = 1; r < n; ++r) {
        const int l = n - r;
        const std::uint64_t diff =
            packed::prefix_bits(bits, n, l) ^ packed::suffix_bits(bits, n, l);
        counts.push_back(std::popcount(diff));
    }
    return counts;
}

bool ham_isometric(const Word& f) {
    for (int c : ham_error_overlaps(f)) {
        if (c == 2) return false;
    }
    return true;
}

}  // namespace tildeiso
