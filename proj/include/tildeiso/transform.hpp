#pragma once

#include <optional>
#include <vector>

#include "tildeiso/budgets.hpp"
#include "tildeiso/distance.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso {

// A chain of words one edit apart, together with the ops that produce it.
// It is minimal when its length equals tilde_distance(source, target) and
// no position is touched twice.
struct Transformation {
    Word source;
    std::vector<EditOp> ops;
    std::vector<Word> intermediates;  // w_0 = source .. w_h = target

    const Word& target() const { return intermediates.back(); }
    int length() const { return static_cast<int>(ops.size()); }
};

// Builds the chain for a given op order, validating applicability step by step.
Transformation make_transformation(const Word& source, const std::vector<EditOp>& ops);

// Every ordering of every minimal op set, as full transformations. Throws
// BudgetExceededError when d exceeds the enumeration budget or the order
// count exceeds `limit` (0 means budgets.work_limit).
std::vector<Transformation> enumerate_minimal_transformations(
    const Word& u, const Word& v, std::uint64_t limit = 0,
    const Budgets& budgets = Budgets::defaults());

// Searches for a minimal transformation from u to v whose every word avoids
// f. Disjoint ops commute, so the search runs over the lattice of applied-op
// subsets per minimal op set instead of over the d! orders.
std::optional<Transformation> exists_f_free_minimal_transformation(
    const Word& u, const Word& v, const Word& f,
    const Budgets& budgets = Budgets::defaults());

// Existence-only variant of the search above: the op order of some f-free
// minimal transformation, without materializing the word chain.
std::optional<std::vector<EditOp>> f_free_minimal_order(
    const Word& u, const Word& v, const Word& f,
    const Budgets& budgets = Budgets::defaults());

// One pruned branch of the f-free search: applying `applied` to u yields
// `intermediate`, which contains f at `f_index` (0-based).
struct BlockedBranch {
    std::vector<EditOp> applied;
    Word intermediate;
    int f_index = 0;
};

// Machine-checkable outcome of the tilde-witness test for (u, v) against f:
// the pair passes iff u and v avoid f, their distance is at least 2, and no
// minimal transformation between them stays f-free.
struct WitnessVerdict {
    Word f;
    Word u;
    Word v;
    bool u_free = false;
    bool v_free = false;
    int distance = 0;
    bool no_free_transformation = false;
    bool passed = false;
    int op_sets_examined = 0;
    std::vector<BlockedBranch> blocking_evidence;
};

WitnessVerdict is_witness_pair(const Word& f, const Word& u, const Word& v,
                               const Budgets& budgets = Budgets::defaults());

}  // namespace tildeiso
