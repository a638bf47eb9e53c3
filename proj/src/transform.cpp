#include "tildeiso/transform.hpp"

#include <algorithm>

#include "tildeiso/packed.hpp"

namespace tildeiso {

Transformation make_transformation(const Word& source, const std::vector<EditOp>& ops) {
    Transformation t;
    t.source = source;
    t.ops = ops;
    t.intermediates.reserve(ops.size() + 1);
    t.intermediates.push_back(source);
    for (const EditOp& op : ops) {
        t.intermediates.push_back(apply_op(t.intermediates.back(), op));
    }
    return t;
}

std::vector<Transformation> enumerate_minimal_transformations(const Word& u, const Word& v,
                                                              std::uint64_t limit,
                                                              const Budgets& budgets) {
    if (limit == 0) limit = budgets.work_limit;
    const int d = tilde_distance(u, v);
    if (d > budgets.enum_max_distance) {
        throw BudgetExceededError("order enumeration budget exceeded: distance " + std::to_string(d) +
                                  " > " + std::to_string(budgets.enum_max_distance));
    }
    std::vector<OpSet> sets = minimal_op_sets(u, v);
    std::uint64_t factorial = 1;
    for (int i = 2; i <= d; ++i) factorial *= static_cast<std::uint64_t>(i);
    if (factorial * sets.size() > limit) {
        throw BudgetExceededError("order enumeration budget exceeded: " +
                                  std::to_string(factorial * sets.size()) + " orders > " +
                                  std::to_string(limit));
    }

    std::vector<Transformation> out;
    out.reserve(factorial * sets.size());
    for (const OpSet& set : sets) {
        std::vector<EditOp> order = set.ops;  // already sorted
        do {
            out.push_back(make_transformation(u, order));
        } while (std::next_permutation(order.begin(), order.end(), op_less));
    }
    return out;
}

namespace {

// Depth-first search over applied-op subsets of one minimal op set,
// pruning every subset whose word contains f.
struct SubsetSearch {
    std::uint64_t u_bits;
    int len;
    std::uint64_t f_bits;
    int f_len;
    const std::vector<EditOp>* ops;
    std::vector<std::uint64_t> masks;
    std::vector<char> visited;  // indexed by subset mask
    std::vector<int> path;
    std::vector<BlockedBranch>* blocked;  // nullptr when evidence is not wanted
    size_t evidence_cap = 256;

    void record_blocked(std::uint32_t subset, int extra, std::uint64_t word) {
        if (!blocked || blocked->size() >= evidence_cap) return;
        BlockedBranch b;
        for (int idx : path) b.applied.push_back((*ops)[static_cast<size_t>(idx)]);
        b.applied.push_back((*ops)[static_cast<size_t>(extra)]);
        b.intermediate = Word::from_bits(word, len);
        b.f_index = packed::find_factor(word, len, f_bits, f_len);
        blocked->push_back(std::move(b));
        (void)subset;
    }

    bool dfs(std::uint32_t subset, std::uint64_t word) {
        if (subset == (std::uint32_t{1} << ops->size()) - 1) return true;
        for (size_t i = 0; i < ops->size(); ++i) {
            const std::uint32_t bit = std::uint32_t{1} << i;
            if (subset & bit) continue;
            const std::uint32_t next = subset | bit;
            if (visited[next]) continue;
            visited[next] = 1;
            const std::uint64_t next_word = word ^ masks[i];
            if (packed::contains_factor(next_word, len, f_bits, f_len)) {
                record_blocked(next, static_cast<int>(i), next_word);
                continue;
            }
            path.push_back(static_cast<int>(i));
            if (dfs(next, next_word)) return true;
            path.pop_back();
        }
        return false;
    }
};

struct SearchOutcome {
    std::optional<std::vector<EditOp>> order;
    std::vector<BlockedBranch> blocked;
    int op_sets_examined = 0;
};

SearchOutcome search_f_free(const Word& u, const Word& v, const Word& f, const Budgets& budgets,
                            bool collect_evidence) {
    SearchOutcome outcome;
    const std::uint64_t ub = u.bits();
    const std::uint64_t fb = f.bits();
    const int len = u.size();
    const int flen = f.size();

    if (packed::contains_factor(ub, len, fb, flen)) {
        if (collect_evidence) outcome.blocked.push_back(BlockedBranch{
            {}, u, packed::find_factor(ub, len, fb, flen)});
        return outcome;
    }
    if (u == v) {
        outcome.order.emplace();
        return outcome;
    }
    if (packed::contains_factor(v.bits(), len, fb, flen)) {
        if (collect_evidence) outcome.blocked.push_back(BlockedBranch{
            {}, v, packed::find_factor(v.bits(), len, fb, flen)});
        return outcome;
    }

    const int d = tilde_distance(u, v);
    if (d > budgets.search_max_distance) {
        throw BudgetExceededError("subset search budget exceeded: distance " + std::to_string(d) +
                                  " > " + std::to_string(budgets.search_max_distance));
    }
    for (const OpSet& set : minimal_op_sets(u, v)) {
        ++outcome.op_sets_examined;
        SubsetSearch search;
        search.u_bits = ub;
        search.len = len;
        search.f_bits = fb;
        search.f_len = flen;
        search.ops = &set.ops;
        search.masks.reserve(set.ops.size());
        for (const EditOp& op : set.ops) search.masks.push_back(packed_ops::op_mask(op, len));
        search.visited.assign(size_t{1} << set.ops.size(), 0);
        search.blocked = collect_evidence ? &outcome.blocked : nullptr;
        if (search.dfs(0, ub)) {
            std::vector<EditOp> order;
            order.reserve(set.ops.size());
            for (int idx : search.path) order.push_back(set.ops[static_cast<size_t>(idx)]);
            outcome.order = std::move(order);
            return outcome;
        }
    }
    return outcome;
}

}  // namespace

std::optional<Transformation> exists_f_free_minimal_transformation(const Word& u, const Word& v,
                                                                   const Word& f,
                                                                   const Budgets& budgets) {
    SearchOutcome outcome = search_f_free(u, v, f, budgets, false);
    if (!outcome.order) return std::nullopt;
    return make_transformation(u, *outcome.order);
}

std::optional<std::vector<EditOp>> f_free_minimal_order(const Word& u, const Word& v, const Word& f,
                                                        const Budgets& budgets) {
    return search_f_free(u, v, f, budgets, false).order;
}

WitnessVerdict is_witness_pair(const Word& f, const Word& u, const Word& v,
                               const Budgets& budgets) {
    WitnessVerdict verdict;
    verdict.f = f;
    verdict.u = u;
    verdict.v = v;
    verdict.u_free = is_f_free(f, u);
    verdict.v_free = is_f_free(f, v);
    verdict.distance = tilde_distance(u, v);

    SearchOutcome outcome = search_f_free(u, v, f, budgets, true);
    verdict.no_free_transformation = !outcome.order.has_value();
    verdict.op_sets_examined = outcome.op_sets_examined;
    verdict.blocking_evidence = std::move(outcome.blocked);
    verdict.passed = verdict.u_free && verdict.v_free && verdict.distance >= 2 &&
                     verdict.no_free_transformation;
    return verdict;
}

}  // namespace tildeiso
