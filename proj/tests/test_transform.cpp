#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "tildeiso/transform.hpp"

using namespace tildeiso;
using testsup::W;

namespace {

std::vector<std::string> chain(const Transformation& t) {
    std::vector<std::string> out;
    for (const Word& w : t.intermediates) out.push_back(w.str());
    return out;
}

}  // namespace

TEST_CASE("enumerating minimal transformations") {
    const auto taus = enumerate_minimal_transformations(W("1011"), W("0110"));
    REQUIRE(taus.size() == 2);  // one op set {S1, R4}, two orders
    CHECK(chain(taus[0]) == std::vector<std::string>{"1011", "0111", "0110"});
    CHECK(taus[0].ops == std::vector<EditOp>{EditOp::swap(0), EditOp::replace(3, '0')});
    CHECK(chain(taus[1]) == std::vector<std::string>{"1011", "1010", "0110"});

    const auto identity = enumerate_minimal_transformations(W("0110"), W("0110"));
    REQUIRE(identity.size() == 1);
    CHECK(identity[0].ops.empty());
    CHECK(chain(identity[0]) == std::vector<std::string>{"0110"});

    const auto example3 = enumerate_minimal_transformations(W("11000"), W("10110"));
    REQUIRE(example3.size() == 2);
    CHECK(chain(example3[0]) == std::vector<std::string>{"11000", "10100", "10110"});
    CHECK(chain(example3[1]) == std::vector<std::string>{"11000", "11010", "10110"});
}

TEST_CASE("enumeration budgets") {
    CHECK_THROWS_AS(
        enumerate_minimal_transformations(W("0000000"), W("1111111")),
        BudgetExceededError);  // distance 7 exceeds the order-enumeration default
    CHECK_THROWS_AS(enumerate_minimal_transformations(W("010"), W("101"), 3),
                    BudgetExceededError);  // 2 op sets x 2! = 4 orders > 3
    CHECK(enumerate_minimal_transformations(W("010"), W("101"), 4).size() == 4);
}

TEST_CASE("replaying a transformation reproduces its intermediates") {
    for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{
             {"1011", "0110"}, {"11000", "10110"}, {"010", "101"}, {"100", "001"}}) {
        for (const Transformation& t : enumerate_minimal_transformations(W(u), W(v))) {
            Word w = t.source;
            for (size_t k = 0; k < t.ops.size(); ++k) {
                w = apply_op(w, t.ops[k]);
                CHECK(w == t.intermediates[k + 1]);
            }
            CHECK(w == W(v));
        }
    }
}

TEST_CASE("f-free search fixtures") {
    CHECK_FALSE(exists_f_free_minimal_transformation(W("11000"), W("10110"), W("1010")));
    CHECK_FALSE(exists_f_free_minimal_transformation(W("1001"), W("1111"), W("101")));

    const auto any = exists_f_free_minimal_transformation(W("1011"), W("0110"), W("0000"));
    REQUIRE(any.has_value());
    CHECK(any->length() == 2);
    CHECK(any->target() == W("0110"));

    // Endpoints count as intermediates.
    CHECK_FALSE(exists_f_free_minimal_transformation(W("1010"), W("0010"), W("1010")));
    const auto empty = exists_f_free_minimal_transformation(W("0110"), W("0110"), W("1010"));
    REQUIRE(empty.has_value());
    CHECK(empty->length() == 0);

    CHECK_THROWS_AS(exists_f_free_minimal_transformation(W(std::string(30, '0')),
                                                         W(std::string(30, '1')), W("101")),
                    BudgetExceededError);
}

namespace {

void cross_check_pair(const Word& u, const Word& v, const std::vector<std::string>& factors) {
    const auto taus = enumerate_minimal_transformations(u, v);
    for (const auto& f : factors) {
        const bool by_orders = std::any_of(taus.begin(), taus.end(), [&](const auto& t) {
            return std::all_of(t.intermediates.begin(), t.intermediates.end(),
                               [&](const Word& w) { return is_f_free(W(f), w); });
        });
        const auto found = exists_f_free_minimal_transformation(u, v, W(f));
        CAPTURE(u.str());
        CAPTURE(v.str());
        CAPTURE(f);
        CHECK(by_orders == found.has_value());
        if (found) {
            for (const Word& w : found->intermediates) CHECK(is_f_free(W(f), w));
        }
    }
}

}  // namespace

TEST_CASE("subset search agrees with filtering the full order enumeration") {
    const std::vector<std::string> factors{"00", "11", "01", "101", "010", "110", "1010"};
    for (int m = 2; m <= 6; ++m) {
        const auto words = testsup::all_words(m);
        for (const auto& u : words) {
            for (const auto& v : words) {
                if (tilde_distance(W(u), W(v)) > 4) continue;
                cross_check_pair(W(u), W(v), factors);
            }
        }
    }

    // Longer words: deterministic samples built by flipping few positions,
    // so every pair stays within distance 4.
    for (int m : {10, 12}) {
        const std::uint64_t deltas[] = {0b1, 0b11, 0b101, 0b1011, 0b110011};
        const std::uint64_t stride = (std::uint64_t{1} << m) / 10;
        int taken = 0;
        for (std::uint64_t ub = 1; ub < (std::uint64_t{1} << m); ub += stride) {
            for (int shift : {0, m / 2 - 2, m - 6}) {
                for (std::uint64_t pattern : deltas) {
                    const std::uint64_t vb = ub ^ (pattern << shift);
                    if (vb >= (std::uint64_t{1} << m) || vb == ub) continue;
                    const Word u = Word::from_bits(ub, m);
                    const Word v = Word::from_bits(vb, m);
                    if (tilde_distance(u, v) > 4) continue;
                    ++taken;
                    cross_check_pair(u, v, factors);
                }
            }
        }
        CHECK(taken > 100);
    }
}

TEST_CASE("witness verdicts") {
    const WitnessVerdict ex3 = is_witness_pair(W("1010"), W("11000"), W("10110"));
    CHECK(ex3.passed);
    CHECK(ex3.u_free);
    CHECK(ex3.v_free);
    CHECK(ex3.distance == 2);
    CHECK(ex3.no_free_transformation);
    CHECK(ex3.op_sets_examined == 1);
    REQUIRE(ex3.blocking_evidence.size() == 2);
    CHECK(ex3.blocking_evidence[0].intermediate == W("10100"));
    CHECK(ex3.blocking_evidence[0].f_index == 0);
    CHECK(ex3.blocking_evidence[1].intermediate == W("11010"));
    CHECK(ex3.blocking_evidence[1].f_index == 1);

    CHECK(is_witness_pair(W("101"), W("1001"), W("1111")).passed);

    // Clause failures.
    const WitnessVerdict contains = is_witness_pair(W("1010"), W("10100"), W("00000"));
    CHECK_FALSE(contains.passed);
    CHECK_FALSE(contains.u_free);
    const WitnessVerdict close = is_witness_pair(W("1010"), W("11000"), W("10100"));
    CHECK_FALSE(close.passed);  // distance 1 and v even contains f
    const WitnessVerdict free_path = is_witness_pair(W("0000"), W("1011"), W("0110"));
    CHECK_FALSE(free_path.passed);
    CHECK_FALSE(free_path.no_free_transformation);
}

TEST_CASE("a passing verdict means every order of every op set is blocked") {
    const auto taus = enumerate_minimal_transformations(W("11000"), W("10110"));
    for (const Transformation& t : taus) {
        const bool free_chain = std::all_of(t.intermediates.begin(), t.intermediates.end(),
                                            [&](const Word& w) { return is_f_free(W("1010"), w); });
        CHECK_FALSE(free_chain);
    }
}
