#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "tildeiso/witness.hpp"

using namespace tildeiso;
using testsup::W;

namespace {

const ErrorOverlap& at_shift(const std::vector<ErrorOverlap>& overlaps, int r) {
    return overlaps.at(static_cast<size_t>(r - 1));
}

std::set<std::string> as_set(const std::pair<Word, Word>& p) {
    return {p.first.str(), p.second.str()};
}

}  // namespace

TEST_CASE("swap overlap pair") {
    const auto overlaps = error_overlaps(W("101"));
    const auto pair = swap_overlap_pair(W("101"), at_shift(overlaps, 1));
    CHECK(pair.first == W("1001"));
    CHECK(pair.second == W("1111"));
    CHECK(is_witness_pair(W("101"), pair.first, pair.second).passed);

    // Palindrome: the reversed word yields the same pair.
    const auto rev_pair = swap_overlap_pair(reverse(W("101")), at_shift(overlaps, 1));
    CHECK(as_set(rev_pair) == as_set(pair));

    CHECK_THROWS_AS(swap_overlap_pair(W("1010"), at_shift(error_overlaps(W("1010")), 1)),
                    PreconditionError);
}

TEST_CASE("the raw swap formula can produce unusable pairs, which verification rejects") {
    const auto pair = swap_overlap_formula(W("01"), 1, 0);
    CHECK(as_set(pair) == std::set<std::string>{"000", "011"});
    CHECK_FALSE(is_witness_pair(W("01"), pair.first, pair.second).passed);  // 011 contains 01
}

TEST_CASE("split pair fixtures") {
    // Error block 101 against 010 admits both mixed realizations.
    const auto block = error_overlaps(W("1010"));
    const auto& sr = at_shift(block, 1).realizations[0];
    const auto sr_pair = split_pair(W("1010"), 1, sr);
    CHECK(sr_pair.first == W("10110"));
    CHECK(sr_pair.second == W("11000"));
    CHECK(is_witness_pair(W("1010"), sr_pair.first, sr_pair.second).passed);

    const auto ss = error_overlaps(W("10010110"));
    const auto& r4 = at_shift(ss, 4).realizations[0];
    const auto ss_pair = split_pair(W("10010110"), 4, r4);
    CHECK(ss_pair.first == W("100101010110"));
    CHECK(ss_pair.second == W("100110100110"));
    CHECK(is_witness_pair(W("10010110"), ss_pair.first, ss_pair.second).passed);

    // The first word with one swap applied shows the block the pair forces.
    const Word blocked = apply_op(ss_pair.first, EditOp::swap(4));
    CHECK(blocked == W("100110010110"));
    CHECK(is_factor(W("10010110"), blocked));
}

TEST_CASE("second split word contains f exactly under the overlap condition") {
    // Condition holds: shift-2 RR overlap of 0011.
    const auto cond = error_overlaps(W("0011"));
    const auto& rr = at_shift(cond, 2).realizations[0];
    REQUIRE(rr.type == OverlapType::RR);
    CHECK(condition_tilde(W("0011"), 2, rr));
    const auto pair = split_pair(W("0011"), 2, rr);
    CHECK(pair.first == W("001011"));
    CHECK(pair.second == W("000111"));
    CHECK(is_f_free(W("0011"), pair.first));
    CHECK(is_factor(W("0011"), pair.second));
}

TEST_CASE("split words behave per the overlap condition, exhaustively to length 10") {
    for (int n = 3; n <= 10; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const Word f = Word::from_bits(bits, n);
            for (const ErrorOverlap& eo : error_overlaps(f)) {
                if (eo.distance != 2) continue;
                for (const OverlapRealization& real : eo.realizations) {
                    const auto [first, second] = split_pair(f, eo.shift, real);
                    CAPTURE(f.str());
                    CAPTURE(eo.shift);
                    CHECK(is_f_free(f, first));
                    CHECK(is_factor(f, second) == condition_tilde(f, eo.shift, real));
                }
            }
        }
    }
}

TEST_CASE("extended split pair") {
    // Smallest word with a condition-satisfying SS overlap, by scan.
    std::string smallest;
    for (int n = 2; n <= 14 && smallest.empty(); ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n) && smallest.empty(); ++bits) {
            const Word f = Word::from_bits(bits, n);
            for (const ErrorOverlap& eo : error_overlaps(f)) {
                if (eo.distance != 2) continue;
                for (const OverlapRealization& real : eo.realizations) {
                    if (real.type == OverlapType::SS && condition_tilde(f, eo.shift, real)) {
                        smallest = f.str();
                    }
                }
            }
        }
    }
    REQUIRE(smallest == "01011010");

    const Word f = W(smallest);
    const auto overlaps = error_overlaps(f);
    const auto& eo = at_shift(overlaps, 4);
    const auto& real = eo.realizations[0];
    const int expected_t = real.error_indices[1] + 2;
    const auto pair = extended_split_pair(f, 4, real, expected_t);
    const WitnessVerdict verdict = is_witness_pair(f, pair.first, pair.second);
    CHECK(verdict.passed);
    CHECK(verdict.distance == 3);
    CHECK(extended_split_candidates(f, 4, real).front() == expected_t);

    // No condition, no extended pair.
    const auto ex5 = error_overlaps(W("10010110"));
    CHECK_THROWS_AS(extended_split_pair(W("10010110"), 4, at_shift(ex5, 4).realizations[0], 4),
                    PreconditionError);
}

TEST_CASE("anchored rewrite") {
    CHECK(anchored_rewrite_candidates(W("1001")).empty());
    CHECK(anchored_rewrite_candidates(W("11000")).empty());

    // Smallest match by scan.
    std::string smallest;
    for (int n = 4; n <= 12 && smallest.empty(); ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n) && smallest.empty(); ++bits) {
            const Word f = Word::from_bits(bits, n);
            if (!anchored_rewrite_candidates(f).empty()) smallest = f.str();
        }
    }
    REQUIRE(smallest == "10011");

    const auto cands = anchored_rewrite_candidates(W("10011"));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].first == W("1001011"));
    CHECK(cands[0].second == W("1010101"));
    CHECK(cands[0].shift == 2);
    CHECK(is_witness_pair(W("10011"), cands[0].first, cands[0].second).passed);
}

TEST_CASE("boundary rewrite") {
    CHECK_FALSE(boundary_rewrite_candidate(W("1011")));
    CHECK_FALSE(boundary_rewrite_candidate(W("110")));

    std::string smallest;
    for (int n = 4; n <= 12 && smallest.empty(); ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n) && smallest.empty(); ++bits) {
            const Word f = Word::from_bits(bits, n);
            if (boundary_rewrite_candidate(f)) smallest = f.str();
        }
    }
    REQUIRE(smallest == "1100");

    const auto cand = boundary_rewrite_candidate(W("1100"));
    REQUIRE(cand.has_value());
    CHECK(cand->first == W("110100"));
    CHECK(cand->second == W("101010"));
    CHECK(is_witness_pair(W("1100"), cand->first, cand->second).passed);

    // The plain split pair is useless here: its two words are one swap apart.
    const auto overlaps = error_overlaps(W("1100"));
    const auto split = split_pair(W("1100"), 2, at_shift(overlaps, 2).realizations[0]);
    CHECK(tilde_distance(split.first, split.second) == 1);
}

TEST_CASE("construct_witnesses fixtures") {
    const auto ex3 = construct_witnesses(W("1010"));
    REQUIRE(ex3.has_value());
    CHECK(ex3->kind == ConstructionKind::TwoErrorSplit);
    CHECK(ex3->variant == Variant::Identity);
    CHECK(as_set({ex3->first, ex3->second}) == std::set<std::string>{"10110", "11000"});
    CHECK(ex3->verdict.passed);

    CHECK_FALSE(construct_witnesses(W("111000")).has_value());

    const auto ex5 = construct_witnesses(W("10010110"));
    REQUIRE(ex5.has_value());
    CHECK(ex5->kind == ConstructionKind::TwoErrorSplit);
    CHECK(ex5->overlap_type == OverlapType::SS);
    CHECK(ex5->verdict.passed);

    const auto ex4 = construct_witnesses(W("101"));
    REQUIRE(ex4.has_value());
    CHECK(ex4->kind == ConstructionKind::SwapOverlapPair);
    CHECK(as_set({ex4->first, ex4->second}) == std::set<std::string>{"1001", "1111"});
}

TEST_CASE("constructions found on a variant map back through it") {
    // 0100 has no useful overlap of its own orientation beyond what its
    // reverse-complement provides; whatever is returned must verify against f.
    for (const std::string text : {"0011", "0100", "0010", "1100"}) {
        const auto c = construct_witnesses(W(text));
        if (!c) continue;
        CHECK(c->verdict.passed);
        CHECK(c->verdict.f == W(text));
        CHECK(is_f_free(W(text), c->first));
        CHECK(is_f_free(W(text), c->second));
    }
}

TEST_CASE("construction success is closed under reverse and complement, to length 8") {
    for (int n = 2; n <= 8; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const Word f = Word::from_bits(bits, n);
            const bool found = construct_witnesses(f).has_value();
            CHECK(found == construct_witnesses(reverse(f)).has_value());
            CHECK(found == construct_witnesses(complement(f)).has_value());
        }
    }
}

TEST_CASE("every returned construction is verified, to length 9") {
    for (int n = 2; n <= 9; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const Word f = Word::from_bits(bits, n);
            if (const auto c = construct_witnesses(f)) {
                CHECK(c->verdict.passed);
                CHECK(c->verdict.distance >= 2);
            }
        }
    }
}
