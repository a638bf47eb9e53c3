#include "tildeiso/distance.hpp"

#include <algorithm>
#include <queue>

#include "tildeiso/packed.hpp"

namespace tildeiso {

std::string EditOp::to_string(bool binary_alphabet) const {
    std::string s(kind == OpKind::Swap ? "S" : "R");
    s += std::to_string(position());
    if (kind == OpKind::Replace && !binary_alphabet) {
        s += ':';
        s += to;
    }
    return s;
}

bool op_less(const EditOp& a, const EditOp& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.kind != b.kind) return a.kind == OpKind::Swap;
    return a.to < b.to;
}

std::string to_string(const OpSet& s, bool binary_alphabet) {
    std::string out;
    for (const EditOp& op : s.ops) {
        if (!out.empty()) out += ' ';
        out += op.to_string(binary_alphabet);
    }
    return out;
}

Word apply_op(const Word& w, const EditOp& op) {
    const int n = w.size();
    if (op.kind == OpKind::Replace) {
        if (op.index < 0 || op.index >= n) {
            throw BoundsError("replacement position " + std::to_string(op.position()) +
                              " out of range for word of length " + std::to_string(n));
        }
        if (!w.alphabet().contains(op.to)) {
            throw AlphabetError(std::string("replacement symbol '") + op.to +
                                "' not in alphabet \"" + w.alphabet().symbols() + "\"");
        }
        if (w.at(op.index) == op.to) {
            throw InapplicableOpError("replacement at position " + std::to_string(op.position()) +
                                      " does not change the symbol");
        }
        std::string text(w.str());
        text[static_cast<size_t>(op.index)] = op.to;
        return Word::parse(text, w.alphabet());
    }
    if (op.index < 0 || op.index + 1 >= n) {
        throw BoundsError("swap position " + std::to_string(op.position()) +
                          " out of range for word of length " + std::to_string(n));
    }
    if (w.at(op.index) == w.at(op.index + 1)) {
        throw InapplicableOpError("swap at position " + std::to_string(op.position()) +
                                  " needs two distinct adjacent symbols");
    }
    std::string text(w.str());
    std::swap(text[static_cast<size_t>(op.index)], text[static_cast<size_t>(op.index) + 1]);
    return Word::parse(text, w.alphabet());
}

Word apply_ops(const Word& w, const OpSet& s) {
    Word out = w;
    for (const EditOp& op : s.ops) out = apply_op(out, op);
    return out;
}

int hamming_distance(const Word& u, const Word& v) {
    if (u.size() != v.size()) {
        throw LengthMismatchError("hamming distance needs equal lengths (" +
                                  std::to_string(u.size()) + " vs " + std::to_string(v.size()) + ")");
    }
    int d = 0;
    for (int i = 0; i < u.size(); ++i) d += u.at(i) != v.at(i);
    return d;
}

namespace packed_ops {

int tilde_distance_bits(std::uint64_t u, std::uint64_t v, int len) {
    const std::uint64_t diff = u ^ v;
    int mismatches = 0;
    int swaps = 0;
    bool open = false;  // previous position is a mismatch not yet paired
    for (int idx = 0; idx < len; ++idx) {
        if ((diff >> packed::bitpos(len, idx)) & 1u) {
            ++mismatches;
            // Adjacent mismatches with distinct symbols in u are one swap.
            // Pairing greedily left to right is optimal on a path.
            if (open && packed::symbol(u, len, idx - 1) != packed::symbol(u, len, idx)) {
                ++swaps;
                open = false;
            } else {
                open = true;
            }
        } else {
            open = false;
        }
    }
    return mismatches - swaps;
}

std::uint64_t op_mask(const EditOp& op, int len) {
    if (op.kind == OpKind::Replace) {
        return std::uint64_t{1} << packed::bitpos(len, op.index);
    }
    return std::uint64_t{3} << packed::bitpos(len, op.index + 1);
}

namespace {

// Enumerates every maximum pairing of adjacent swappable mismatches; the
// leftovers become replacements targeting v.
struct OpSetEnum {
    const std::vector<int>& pos;  // mismatch positions, ascending
    std::uint64_t u;
    std::uint64_t v;
    int len;
    std::vector<int> best_from;  // max pairs achievable from pos[i..]
    std::vector<EditOp> current;
    std::vector<OpSet> out;

    bool edge(size_t i) const {
        return i + 1 < pos.size() && pos[i + 1] == pos[i] + 1 &&
               packed::symbol(u, len, pos[i]) != packed::symbol(u, len, pos[i] + 1);
    }

    void compute_best() {
        best_from.assign(pos.size() + 2, 0);
        for (size_t i = pos.size(); i-- > 0;) {
            int take = edge(i) ? 1 + best_from[i + 2] : 0;
            best_from[i] = std::max(best_from[i + 1], take);
        }
    }

    char target(int p) const { return packed::symbol(v, len, p) ? '1' : '0'; }

    void walk(size_t i, int pairs) {
        if (i >= pos.size()) {
            if (pairs == best_from[0]) out.push_back(OpSet{current});
            return;
        }
        if (edge(i) && pairs + 1 + best_from[i + 2] >= best_from[0]) {
            current.push_back(EditOp::swap(pos[i]));
            walk(i + 2, pairs + 1);
            current.pop_back();
        }
        if (pairs + best_from[i + 1] >= best_from[0]) {
            current.push_back(EditOp::replace(pos[i], target(pos[i])));
            walk(i + 1, pairs);
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<OpSet> minimal_op_sets_bits(std::uint64_t u, std::uint64_t v, int len) {
    std::vector<int> pos;
    const std::uint64_t diff = u ^ v;
    for (int idx = 0; idx < len; ++idx) {
        if ((diff >> packed::bitpos(len, idx)) & 1u) pos.push_back(idx);
    }
    OpSetEnum en{pos, u, v, len, {}, {}, {}};
    en.compute_best();
    en.walk(0, 0);
    std::sort(en.out.begin(), en.out.end(), [](const OpSet& a, const OpSet& b) {
        return std::lexicographical_compare(a.ops.begin(), a.ops.end(), b.ops.begin(), b.ops.end(),
                                            op_less);
    });
    return en.out;
}

}  // namespace packed_ops

namespace {

void require_same_shape(const Word& u, const Word& v, const char* what) {
    if (u.size() != v.size()) {
        throw LengthMismatchError(std::string(what) + " needs equal lengths (" +
                                  std::to_string(u.size()) + " vs " + std::to_string(v.size()) + ")");
    }
    if (!(u.alphabet() == v.alphabet())) {
        throw AlphabetError(std::string(what) + " needs a common alphabet");
    }
}

}  // namespace

int tilde_distance(const Word& u, const Word& v) {
    require_same_shape(u, v, "tilde distance");
    if (!u.is_binary()) {
        throw AlphabetError("fast tilde distance only supports the binary alphabet; use the oracle");
    }
    return packed_ops::tilde_distance_bits(u.bits(), v.bits(), u.size());
}

std::vector<OpSet> minimal_op_sets(const Word& u, const Word& v) {
    require_same_shape(u, v, "minimal op sets");
    if (!u.is_binary()) {
        throw AlphabetError("minimal op sets only support the binary alphabet");
    }
    return packed_ops::minimal_op_sets_bits(u.bits(), v.bits(), u.size());
}

int tilde_distance_oracle(const Word& u, const Word& v, const Budgets& budgets) {
    require_same_shape(u, v, "oracle distance");
    const int n = u.size();
    if (n > budgets.oracle_max_len) {
        throw BudgetExceededError("oracle length budget exceeded: " + std::to_string(n) + " > " +
                                  std::to_string(budgets.oracle_max_len));
    }
    if (u == v) return 0;

    const int k = u.alphabet().size();
    std::uint64_t states = 1;
    for (int i = 0; i < n; ++i) {
        states *= static_cast<std::uint64_t>(k);
        if (states > budgets.oracle_max_states) {
            throw BudgetExceededError("oracle state budget exceeded: |alphabet|^len > " +
                                      std::to_string(budgets.oracle_max_states));
        }
    }

    // Position i contributes code * k^i to the state index.
    std::vector<std::uint64_t> weight(static_cast<size_t>(n));
    std::uint64_t w = 1;
    for (int i = 0; i < n; ++i, w *= static_cast<std::uint64_t>(k)) weight[static_cast<size_t>(i)] = w;

    auto encode = [&](const Word& word) {
        std::uint64_t s = 0;
        for (int i = 0; i < n; ++i) s += weight[static_cast<size_t>(i)] * static_cast<std::uint64_t>(word.code_at(i));
        return s;
    };
    const std::uint64_t start = encode(u);
    const std::uint64_t goal = encode(v);

    std::vector<std::uint8_t> seen(states, 0);
    std::vector<int> code(static_cast<size_t>(n));
    std::queue<std::pair<std::uint64_t, int>> frontier;
    seen[start] = 1;
    frontier.emplace(start, 0);
    while (!frontier.empty()) {
        auto [state, dist] = frontier.front();
        frontier.pop();
        std::uint64_t rest = state;
        for (int i = 0; i < n; ++i) {
            code[static_cast<size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(k));
            rest /= static_cast<std::uint64_t>(k);
        }
        auto visit = [&](std::uint64_t next) {
            if (next == goal) return true;
            if (!seen[next]) {
                seen[next] = 1;
                frontier.emplace(next, dist + 1);
            }
            return false;
        };
        for (int i = 0; i < n; ++i) {
            const auto ci = static_cast<std::uint64_t>(code[static_cast<size_t>(i)]);
            for (int x = 0; x < k; ++x) {
                if (x == code[static_cast<size_t>(i)]) continue;
                if (visit(state + (static_cast<std::uint64_t>(x) - ci) * weight[static_cast<size_t>(i)]))
                    return dist + 1;
            }
            if (i + 1 < n && code[static_cast<size_t>(i)] != code[static_cast<size_t>(i + 1)]) {
                const auto cj = static_cast<std::uint64_t>(code[static_cast<size_t>(i + 1)]);
                const std::uint64_t next = state + (cj - ci) * weight[static_cast<size_t>(i)] +
                                           (ci - cj) * weight[static_cast<size_t>(i + 1)];
                if (visit(next)) return dist + 1;
            }
        }
    }
    throw Error("oracle search exhausted without reaching the target");  // unreachable
}

}  // namespace tildeiso
