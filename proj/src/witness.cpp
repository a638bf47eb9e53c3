#include "tildeiso/witness.hpp"

#include <algorithm>

namespace tildeiso {

std::string to_string(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::SwapOverlapPair: return "swap-overlap";
        case ConstructionKind::TwoErrorSplit: return "two-error-split";
        case ConstructionKind::ThreeErrorSplit: return "three-error-split";
        case ConstructionKind::AnchoredRewrite: return "anchored-rewrite";
        case ConstructionKind::BoundaryRewrite: return "boundary-rewrite";
    }
    return "?";
}

std::string to_string(Variant v) {
    switch (v) {
        case Variant::Identity: return "identity";
        case Variant::Reverse: return "reverse";
        case Variant::Complement: return "complement";
        case Variant::ReverseComplement: return "reverse-complement";
    }
    return "?";
}

Word apply_variant(const Word& w, Variant v) {
    switch (v) {
        case Variant::Identity: return w;
        case Variant::Reverse: return reverse(w);
        case Variant::Complement: return complement(w);
        case Variant::ReverseComplement: return complement(reverse(w));
    }
    return w;
}

namespace {

Word cat(const Word& f, std::initializer_list<std::string_view> parts) {
    std::string text;
    for (auto p : parts) text += p;
    return Word::parse(text, f.alphabet());
}

}  // namespace

std::pair<Word, Word> swap_overlap_formula(const Word& f, int shift, int error_index) {
    const Word pre = prefix(f, shift);
    const Word left = apply_op(f, EditOp::replace(error_index, f.at(error_index) == '0' ? '1' : '0'));
    const Word right =
        apply_op(f, EditOp::replace(error_index + 1, f.at(error_index + 1) == '0' ? '1' : '0'));
    return {cat(f, {pre.str(), left.str()}), cat(f, {pre.str(), right.str()})};
}

std::pair<Word, Word> swap_overlap_pair(const Word& f, const ErrorOverlap& overlap) {
    if (overlap.distance != 1 || overlap.realizations.empty() ||
        overlap.realizations.front().type != OverlapType::S) {
        throw PreconditionError("swap overlap pair needs a 1-error overlap of type S");
    }
    return swap_overlap_formula(f, overlap.shift, overlap.realizations.front().error_indices[0]);
}

std::pair<Word, Word> split_pair(const Word& f, int shift, const OverlapRealization& realization) {
    if (realization.op_set.size() != 2) {
        throw PreconditionError("split pair needs a distance-2 overlap realization");
    }
    const Word pre = prefix(f, shift);
    const Word left = apply_op(f, realization.op_set.ops[0]);
    const Word right = apply_op(f, realization.op_set.ops[1]);
    return {cat(f, {pre.str(), left.str()}), cat(f, {pre.str(), right.str()})};
}

std::pair<Word, Word> extended_split_pair(const Word& f, int shift,
                                          const OverlapRealization& realization, int third_index) {
    if (realization.op_set.size() != 2 ||
        (realization.type != OverlapType::RR && realization.type != OverlapType::SS)) {
        throw PreconditionError("extended split needs an RR or SS realization");
    }
    if (!condition_tilde(f, shift, realization)) {
        throw PreconditionError("extended split needs a realization satisfying the overlap condition");
    }
    const Word pre = prefix(f, shift);
    const Word tail = suffix(f, shift / 2);
    const Word left = apply_op(f, realization.op_set.ops[0]);

    EditOp third = realization.type == OverlapType::SS
                       ? EditOp::swap(third_index)
                       : EditOp::replace(third_index, f.at(third_index) == '0' ? '1' : '0');
    const Word with_third = apply_op(f, third);
    // Re-derive the second op against the already-modified word; for a swap
    // the stored op carries no target, for a replacement it flips a bit the
    // third op cannot have touched (distinct positions).
    const Word right = apply_op(with_third, realization.op_set.ops[1]);
    return {cat(f, {pre.str(), left.str(), tail.str()}),
            cat(f, {pre.str(), right.str(), tail.str()})};
}

std::vector<int> extended_split_candidates(const Word& f, int shift,
                                           const OverlapRealization& realization) {
    const int n = f.size();
    const int j = realization.error_indices[1];
    const bool swaps = realization.type == OverlapType::SS;
    const int limit = swaps ? n - 1 : n;
    std::vector<int> out;
    auto usable = [&](int t) {
        if (t < 0 || t >= limit || t == j) return false;
        if (swaps && f.at(t) == f.at(t + 1)) return false;
        return true;
    };
    const int expected = j + shift / 2;
    if (usable(expected)) out.push_back(expected);
    for (int t = 0; t < limit; ++t) {
        if (t != expected && usable(t)) out.push_back(t);
    }
    return out;
}

std::vector<RewriteCandidate> anchored_rewrite_candidates(const Word& f) {
    std::vector<RewriteCandidate> out;
    const std::string& s = f.str();
    const int n = f.size();
    for (int p = 0; p + 4 <= n; ++p) {
        if (s.compare(static_cast<size_t>(p), 4, "1001") != 0) continue;
        const std::string x = s.substr(0, static_cast<size_t>(p));
        const std::string z = s.substr(static_cast<size_t>(p) + 4);
        const std::string tail = x + "011";
        const int r = n - static_cast<int>(tail.size());
        if (r < 1) continue;
        if (s.compare(static_cast<size_t>(r), tail.size(), tail) != 0) continue;
        const std::string y = s.substr(0, static_cast<size_t>(r));
        if (static_cast<int>(y.size() + x.size() + 4 + z.size()) > kMaxWordLength) continue;
        RewriteCandidate cand;
        cand.first = cat(f, {y, x, "0101", z});
        cand.second = cat(f, {y, x, "1010", z});
        cand.shift = r;
        cand.error_index = p;
        out.push_back(std::move(cand));
    }
    return out;
}

std::optional<RewriteCandidate> boundary_rewrite_candidate(const Word& f) {
    const std::string& s = f.str();
    const int n = f.size();
    if (n < 4) return std::nullopt;
    if (s.compare(0, 3, "110") != 0) return std::nullopt;
    if (s.compare(static_cast<size_t>(n - 3), 3, "100") != 0) return std::nullopt;
    const std::string head = s.substr(3);
    const std::string body = s.substr(0, static_cast<size_t>(n - 3));
    if (static_cast<int>(body.size() + 4 + head.size()) > kMaxWordLength) return std::nullopt;
    RewriteCandidate cand;
    cand.first = cat(f, {body, "1010", head});
    cand.second = cat(f, {body, "0101", head});
    cand.shift = n - 2;
    cand.error_index = 0;
    return cand;
}

namespace {

struct CandidateContext {
    const Word& f;
    Variant variant;
    const Word& g;  // variant word
    const Budgets& budgets;

    std::optional<Construction> verify(ConstructionKind kind, int shift, OverlapType type,
                                       std::vector<int> error_indices, std::optional<int> third,
                                       bool reconstructed, const std::pair<Word, Word>& pair) const {
        WitnessVerdict on_variant = is_witness_pair(g, pair.first, pair.second, budgets);
        if (!on_variant.passed) return std::nullopt;
        const Word first = apply_variant(pair.first, variant);
        const Word second = apply_variant(pair.second, variant);
        WitnessVerdict on_f = is_witness_pair(f, first, second, budgets);
        if (!on_f.passed) return std::nullopt;
        Construction c;
        c.kind = kind;
        c.variant = variant;
        c.shift = shift;
        c.overlap_type = type;
        c.error_indices = std::move(error_indices);
        c.third_op_index = third;
        c.reconstructed_third = reconstructed;
        c.first = first;
        c.second = second;
        c.verdict = std::move(on_f);
        return c;
    }
};

}  // namespace

std::optional<Construction> construct_witnesses(const Word& f, const Budgets& budgets) {
    if (!f.is_binary()) {
        throw AlphabetError("witness constructions only support the binary alphabet");
    }
    if (f.size() < 2) return std::nullopt;

    constexpr Variant kVariants[] = {Variant::Identity, Variant::Reverse, Variant::Complement,
                                     Variant::ReverseComplement};
    for (Variant variant : kVariants) {
        const Word g = apply_variant(f, variant);
        CandidateContext ctx{f, variant, g, budgets};

        for (const ErrorOverlap& eo : error_overlaps(g)) {
            if (eo.distance == 1 && eo.primary_type() == OverlapType::S) {
                const int i = eo.realizations.front().error_indices[0];
                try {
                    auto pair = swap_overlap_formula(g, eo.shift, i);
                    if (auto c = ctx.verify(ConstructionKind::SwapOverlapPair, eo.shift,
                                            OverlapType::S, {i}, std::nullopt, false, pair)) {
                        return c;
                    }
                } catch (const Error&) {
                }
            }
            if (eo.distance != 2) continue;
            for (const OverlapRealization& real : eo.realizations) {
                if (condition_tilde(g, eo.shift, real)) {
                    for (int t : extended_split_candidates(g, eo.shift, real)) {
                        try {
                            auto pair = extended_split_pair(g, eo.shift, real, t);
                            const bool pinned = real.type == OverlapType::SS &&
                                                t == real.error_indices[1] + 2;
                            if (auto c = ctx.verify(ConstructionKind::ThreeErrorSplit, eo.shift,
                                                    real.type, real.error_indices, t, !pinned,
                                                    pair)) {
                                return c;
                            }
                        } catch (const Error&) {
                        }
                    }
                } else {
                    try {
                        auto pair = split_pair(g, eo.shift, real);
                        if (auto c = ctx.verify(ConstructionKind::TwoErrorSplit, eo.shift,
                                                real.type, real.error_indices, std::nullopt, false,
                                                pair)) {
                            return c;
                        }
                    } catch (const Error&) {
                    }
                }
            }
        }

        for (const RewriteCandidate& cand : anchored_rewrite_candidates(g)) {
            if (auto c = ctx.verify(ConstructionKind::AnchoredRewrite, cand.shift, OverlapType::SR,
                                    {cand.error_index}, std::nullopt, false,
                                    {cand.first, cand.second})) {
                return c;
            }
        }
        if (auto cand = boundary_rewrite_candidate(g)) {
            if (auto c = ctx.verify(ConstructionKind::BoundaryRewrite, cand->shift, OverlapType::RR,
                                    {cand->error_index}, std::nullopt, false,
                                    {cand->first, cand->second})) {
                return c;
            }
        }
    }
    return std::nullopt;
}

}  // namespace tildeiso
