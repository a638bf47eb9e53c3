#include "tildeiso/isometry.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "tildeiso/packed.hpp"

namespace tildeiso {

std::string status_string(TildeStatus s, int max_len) {
    switch (s) {
        case TildeStatus::NonIsometric: return "non-isometric";
        case TildeStatus::IsometricUpTo: return "isometric-up-to-" + std::to_string(max_len);
        case TildeStatus::Unknown: return "unknown";
    }
    return "?";
}

namespace {

std::vector<std::uint64_t> f_free_masks(std::uint64_t fbits, int flen, int m) {
    std::vector<std::uint64_t> out;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t w = 0; w < total; ++w) {
        if (!packed::contains_factor(w, m, fbits, flen)) out.push_back(w);
    }
    return out;
}

// Transforms of the pair space that preserve witness-ness for this f:
// reversal when f is a palindrome, reverse-complement when f equals its
// reverse-complement (plain complement can never fix a binary word).
struct PairSymmetry {
    bool use_reverse = false;
    bool use_revcomp = false;
    int len = 0;

    static PairSymmetry for_word(const Word& f, int m) {
        PairSymmetry sym;
        sym.len = m;
        sym.use_reverse = reverse(f) == f;
        sym.use_revcomp = complement(reverse(f)) == f;
        return sym;
    }

    // True iff (u, v) is the smallest pair in its orbit (u < v assumed).
    bool canonical(std::uint64_t u, std::uint64_t v) const {
        auto beats = [&](std::uint64_t a, std::uint64_t b) {
            if (a > b) std::swap(a, b);
            return a < u || (a == u && b < v);
        };
        if (use_reverse &&
            beats(packed::reverse_bits(u, len), packed::reverse_bits(v, len))) {
            return false;
        }
        if (use_revcomp &&
            beats(packed::complement_bits(packed::reverse_bits(u, len), len),
                  packed::complement_bits(packed::reverse_bits(v, len), len))) {
            return false;
        }
        return true;
    }
};

struct SweepResult {
    bool found = false;
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    std::uint64_t pairs_checked = 0;
};

// One length; returns the first (by u then v) witness among canonical pairs.
SweepResult sweep_length(const Word& f, int m, int jobs, const Budgets& budgets) {
    const std::uint64_t fbits = f.bits();
    const int flen = f.size();
    const std::vector<std::uint64_t> free = f_free_masks(fbits, flen, m);
    std::vector<Word> words;
    words.reserve(free.size());
    for (std::uint64_t w : free) words.push_back(Word::from_bits(w, m));
    const PairSymmetry sym = PairSymmetry::for_word(f, m);

    const size_t count = free.size();
    SweepResult result;
    if (jobs <= 1) {
        for (size_t ui = 0; ui < count; ++ui) {
            for (size_t vi = ui + 1; vi < count; ++vi) {
                if (!sym.canonical(free[ui], free[vi])) continue;
                if (packed_ops::tilde_distance_bits(free[ui], free[vi], m) < 2) continue;
                ++result.pairs_checked;
                if (!f_free_minimal_order(words[ui], words[vi], f, budgets)) {
                    result.found = true;
                    result.u = free[ui];
                    result.v = free[vi];
                    return result;
                }
            }
        }
        return result;
    }

    std::atomic<size_t> next_u{0};
    std::atomic<std::uint64_t> best_key{~std::uint64_t{0}};
    std::atomic<std::uint64_t> checked{0};
    std::mutex best_mutex;
    auto worker = [&] {
        std::uint64_t local_checked = 0;
        for (;;) {
            const size_t ui = next_u.fetch_add(1);
            if (ui >= count) break;
            if ((static_cast<std::uint64_t>(ui) << 32) >= best_key.load()) break;
            for (size_t vi = ui + 1; vi < count; ++vi) {
                if (!sym.canonical(free[ui], free[vi])) continue;
                if (packed_ops::tilde_distance_bits(free[ui], free[vi], m) < 2) continue;
                ++local_checked;
                if (!f_free_minimal_order(words[ui], words[vi], f, budgets)) {
                    const std::uint64_t key = (static_cast<std::uint64_t>(ui) << 32) | vi;
                    std::scoped_lock lock(best_mutex);
                    if (key < best_key.load()) {
                        best_key.store(key);
                        result.u = free[ui];
                        result.v = free[vi];
                    }
                    break;
                }
            }
        }
        checked.fetch_add(local_checked);
    };
    std::vector<std::thread> threads;
    const int thread_count = std::min<int>(jobs, static_cast<int>(count) + 1);
    threads.reserve(static_cast<size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    result.found = best_key.load() != ~std::uint64_t{0};
    result.pairs_checked = checked.load();
    return result;
}

}  // namespace

BruteForceResult brute_force_isometric(const Word& f, int max_len, int jobs,
                                       const Budgets& budgets) {
    if (!f.is_binary()) {
        throw AlphabetError("brute-force isometry sweeps only support the binary alphabet");
    }
    if (max_len > budgets.brute_max_len) {
        throw BudgetExceededError("brute-force length budget exceeded: " + std::to_string(max_len) +
                                  " > " + std::to_string(budgets.brute_max_len));
    }
    BruteForceResult out;
    out.certificate.max_len = max_len;
    for (int m = f.size() + 1; m <= max_len; ++m) {
        SweepResult sweep = sweep_length(f, m, jobs, budgets);
        out.certificate.pairs_checked += sweep.pairs_checked;
        if (sweep.found) {
            Word u = Word::from_bits(sweep.u, m);
            Word v = Word::from_bits(sweep.v, m);
            out.verdict = is_witness_pair(f, u, v, budgets);
            out.witness = std::make_pair(std::move(u), std::move(v));
            return out;
        }
    }
    return out;
}

ClassificationReport classify(const Word& f, int max_len, int jobs, const Budgets& budgets) {
    if (!f.is_binary()) {
        throw AlphabetError("classification only supports the binary alphabet");
    }
    ClassificationReport report;
    report.f = f;
    report.max_len = max_len > 0 ? max_len : f.size() + 4;
    report.ham_isometric = f.size() < 2 ? true : ham_isometric(f);
    report.overlaps = error_overlaps(f);

    bool qualifying = false;
    for (const ErrorOverlap& eo : report.overlaps) {
        if (eo.distance == 2 || (eo.distance == 1 && eo.primary_type() == OverlapType::S)) {
            qualifying = true;
            break;
        }
    }

    if (qualifying) {
        if (auto c = construct_witnesses(f, budgets)) {
            report.tilde_status = TildeStatus::NonIsometric;
            report.construction = std::move(c);
            report.prop2_consistent = true;
            return report;
        }
    }

    if (report.max_len > budgets.brute_max_len) {
        report.tilde_status = TildeStatus::Unknown;
        return report;
    }
    BruteForceResult brute = brute_force_isometric(f, report.max_len, jobs, budgets);
    if (brute.witness) {
        report.tilde_status = TildeStatus::NonIsometric;
        report.brute_pair = brute.witness;
        report.brute_verdict = brute.verdict;
        report.prop2_consistent = qualifying;
    } else {
        report.tilde_status = TildeStatus::IsometricUpTo;
        report.certificate = brute.certificate;
        report.prop2_consistent = true;
    }
    return report;
}

std::vector<Word> audit_prop2(int len, int max_len, int jobs, const Budgets& budgets) {
    if (len < 1 || len > 16) {
        throw BoundsError("prop2 audit supports lengths 1..16");
    }
    if (max_len <= 0) max_len = len + 4;
    std::vector<Word> violators;
    const std::uint64_t total = std::uint64_t{1} << len;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Word f = Word::from_bits(bits, len);
        BruteForceResult brute = brute_force_isometric(f, max_len, jobs, budgets);
        if (!brute.witness) continue;
        bool qualifying = false;
        for (const ErrorOverlap& eo : error_overlaps(f)) {
            if (eo.distance == 2 || (eo.distance == 1 && eo.primary_type() == OverlapType::S)) {
                qualifying = true;
                break;
            }
        }
        if (!qualifying) violators.push_back(std::move(f));
    }
    return violators;
}

std::vector<SubgraphCounterexample> audit_subgraph_distances(const Word& f, int len,
                                                             const Budgets& budgets) {
    if (!f.is_binary()) {
        throw AlphabetError("subgraph audit only supports the binary alphabet");
    }
    if (len > budgets.subgraph_max_len) {
        throw BudgetExceededError("subgraph audit length budget exceeded: " + std::to_string(len) +
                                  " > " + std::to_string(budgets.subgraph_max_len));
    }
    const std::uint64_t fbits = f.bits();
    const int flen = f.size();
    const std::uint64_t total = std::uint64_t{1} << len;

    std::vector<std::int32_t> index(total, -1);
    std::vector<std::uint64_t> free;
    for (std::uint64_t w = 0; w < total; ++w) {
        if (!packed::contains_factor(w, len, fbits, flen)) {
            index[w] = static_cast<std::int32_t>(free.size());
            free.push_back(w);
        }
    }

    std::vector<SubgraphCounterexample> out;
    std::vector<std::int32_t> dist(free.size());
    std::vector<std::uint64_t> queue;
    queue.reserve(free.size());
    for (size_t si = 0; si < free.size(); ++si) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[si] = 0;
        queue.clear();
        queue.push_back(free[si]);
        for (size_t head = 0; head < queue.size(); ++head) {
            const std::uint64_t w = queue[head];
            const std::int32_t dw = dist[static_cast<size_t>(index[w])];
            auto visit = [&](std::uint64_t nb) {
                const std::int32_t ni = index[nb];
                if (ni < 0 || dist[static_cast<size_t>(ni)] >= 0) return;
                dist[static_cast<size_t>(ni)] = dw + 1;
                queue.push_back(nb);
            };
            for (int idx = 0; idx < len; ++idx) {
                visit(w ^ (std::uint64_t{1} << packed::bitpos(len, idx)));
            }
            for (int idx = 0; idx + 1 < len; ++idx) {
                if (packed::symbol(w, len, idx) != packed::symbol(w, len, idx + 1)) {
                    visit(w ^ (std::uint64_t{3} << packed::bitpos(len, idx + 1)));
                }
            }
        }
        for (size_t ti = si + 1; ti < free.size(); ++ti) {
            const int graph = dist[ti];
            const int tilde = packed_ops::tilde_distance_bits(free[si], free[ti], len);
            if (graph != tilde) {
                out.push_back(SubgraphCounterexample{Word::from_bits(free[si], len),
                                                     Word::from_bits(free[ti], len), graph, tilde});
            }
        }
    }
    return out;
}

}  // namespace tildeiso
