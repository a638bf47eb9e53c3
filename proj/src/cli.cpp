#include "tildeiso/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tildeiso/serialize.hpp"
#include "tildeiso/survey.hpp"

namespace tildeiso::cli {
namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kNoWitness = 3;
constexpr int kBudgetExceeded = 4;

Budgets budgets_from_env() {
    Budgets budgets;
    if (const char* raw = std::getenv("TILDE_ISO_BUDGET")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || value == 0) {
            throw ParseError(std::string("TILDE_ISO_BUDGET must be a positive integer, got \"") +
                             raw + "\"");
        }
        budgets.work_limit = value;
    }
    return budgets;
}

std::string chain_string(const Transformation& t) {
    std::string out = t.source.str();
    for (size_t k = 0; k < t.ops.size(); ++k) {
        out += " -" + t.ops[k].to_string() + "-> " + t.intermediates[k + 1].str();
    }
    return out;
}

void print_overlap_table(std::ostream& os, const Word& f) {
    os << "r\tl\tq\ttype(s)\tpositions\tadjacent\tcondition\n";
    for (const ErrorOverlap& eo : error_overlaps(f)) {
        std::string types, positions, adjacent, condition;
        for (size_t k = 0; k < eo.realizations.size(); ++k) {
            const OverlapRealization& real = eo.realizations[k];
            if (k > 0) {
                types += '/';
                positions += '/';
                adjacent += '/';
                condition += '/';
            }
            types += to_string(real.type);
            for (size_t p = 0; p < real.error_indices.size(); ++p) {
                if (p > 0) positions += ',';
                positions += std::to_string(real.error_indices[p] + 1);
            }
            if (eo.distance == 2) {
                adjacent += real.adjacent ? 'y' : 'n';
                condition += condition_tilde(f, eo.shift, real) ? 'y' : 'n';
            } else {
                adjacent += '-';
                condition += '-';
            }
        }
        if (eo.realizations.empty()) {
            types = eo.distance == 0 ? "none" : "higher";
            positions = adjacent = condition = "-";
        }
        os << eo.shift << '\t' << eo.length << '\t' << eo.distance << '\t' << types << '\t'
           << positions << '\t' << adjacent << '\t' << condition << '\n';
    }
}

void print_construction(std::ostream& os, const Construction& c) {
    os << "kind: " << to_string(c.kind) << '\n';
    os << "variant: " << to_string(c.variant) << '\n';
    os << "shift: " << c.shift << '\n';
    std::string positions;
    for (size_t p = 0; p < c.error_indices.size(); ++p) {
        if (p > 0) positions += ',';
        positions += std::to_string(c.error_indices[p] + 1);
    }
    os << "overlap: " << to_string(c.overlap_type) << " at " << positions << '\n';
    if (c.third_op_index) {
        os << "third op: position " << *c.third_op_index + 1
           << (c.reconstructed_third ? " (reconstructed)" : "") << '\n';
    }
    os << "pair: " << c.first.str() << ' ' << c.second.str() << '\n';
    os << "verified: distance " << c.verdict.distance << ", " << c.verdict.op_sets_examined
       << " op set(s), " << c.verdict.blocking_evidence.size() << " blocked branch(es)\n";
}

struct Args {
    std::string u, v, f, alphabet = "01", out = "tsv";
    bool oracle = false, explain = false, all = false, json = false;
    int max_len = 0, len = 0, jobs = 1;
};

int dispatch(CLI::App& app, const Args& a) {
    const Budgets budgets = budgets_from_env();

    if (auto* cmd = app.get_subcommand("dist"); cmd->parsed()) {
        const Alphabet alphabet{a.alphabet};
        const Word u = Word::parse(a.u, alphabet);
        const Word v = Word::parse(a.v, alphabet);
        const int d = a.oracle ? tilde_distance_oracle(u, v, budgets) : tilde_distance(u, v);
        std::cout << d << '\n';
        if (a.explain) {
            const auto sets = minimal_op_sets(u, v);
            std::cout << (sets.empty() ? "" : to_string(sets.front())) << '\n';
        }
        return kOk;
    }

    if (auto* cmd = app.get_subcommand("transform"); cmd->parsed()) {
        const Word u = Word::parse(a.u);
        const Word v = Word::parse(a.v);
        if (!a.f.empty()) {
            const Word f = Word::parse(a.f);
            auto t = exists_f_free_minimal_transformation(u, v, f, budgets);
            if (!t) {
                std::cout << "none\n";
                return kOk;
            }
            std::cout << chain_string(*t) << '\n';
            return kOk;
        }
        if (a.all) {
            for (const Transformation& t : enumerate_minimal_transformations(u, v, 0, budgets)) {
                std::cout << chain_string(t) << '\n';
            }
            return kOk;
        }
        const auto sets = minimal_op_sets(u, v);
        std::cout << chain_string(make_transformation(u, sets.front().ops)) << '\n';
        return kOk;
    }

    if (auto* cmd = app.get_subcommand("witness-check"); cmd->parsed()) {
        const Word f = Word::parse(a.f);
        const Word u = Word::parse(a.u);
        const Word v = Word::parse(a.v);
        std::cout << to_json(is_witness_pair(f, u, v, budgets)).dump(2) << '\n';
        return kOk;
    }

    if (auto* cmd = app.get_subcommand("overlaps"); cmd->parsed()) {
        const Word f = Word::parse(a.f);
        if (a.json) {
            Json arr = Json::array();
            for (const ErrorOverlap& eo : error_overlaps(f)) arr.push_back(to_json(eo, f));
            std::cout << arr.dump(2) << '\n';
        } else {
            print_overlap_table(std::cout, f);
        }
        return kOk;
    }

    if (auto* cmd = app.get_subcommand("witness"); cmd->parsed()) {
        const Word f = Word::parse(a.f);
        auto c = construct_witnesses(f, budgets);
        if (!c) {
            std::cout << "no verified witness construction found\n";
            return kNoWitness;
        }
        if (a.json) {
            std::cout << to_json(*c).dump(2) << '\n';
        } else {
            print_construction(std::cout, *c);
        }
        return kOk;
    }

    if (auto* cmd = app.get_subcommand("classify"); cmd->parsed()) {
        const Word f = Word::parse(a.f);
        ClassificationReport report = classify(f, a.max_len, a.jobs, budgets);
        if (a.json) {
            std::cout << to_json(report).dump(2) << '\n';
        } else {
            std::cout << "word: " << report.f.str() << '\n';
            std::cout << "ham: " << report.ham_status_string() << '\n';
            std::cout << "tilde: " << report.tilde_status_string() << '\n';
            if (report.construction) {
                std::cout << "evidence: construction " << to_string(report.construction->kind)
                          << " pair " << report.construction->first.str() << '|'
                          << report.construction->second.str() << '\n';
            } else if (report.brute_pair) {
                std::cout << "evidence: brute-force pair " << report.brute_pair->first.str() << '|'
                          << report.brute_pair->second.str() << '\n';
            } else if (report.certificate) {
                std::cout << "evidence: exhaustion up to length " << report.certificate->max_len
                          << " (" << report.certificate->pairs_checked << " pairs checked)\n";
            }
            std::cout << "overlaps: " << overlap_digest(report.overlaps) << '\n';
        }
        return kOk;
    }

    if (auto* cmd = app.get_subcommand("survey"); cmd->parsed()) {
        const auto rows = run_survey(a.len, a.max_len, a.jobs, budgets);
        std::cout << (a.out == "json" ? survey_to_json(rows) : survey_to_tsv(rows));
        return kOk;
    }

    if (auto* audit = app.get_subcommand("audit"); audit->parsed()) {
        if (auto* cmd = audit->get_subcommand("prop2"); cmd->parsed()) {
            const auto violators = audit_prop2(a.len, a.max_len, a.jobs, budgets);
            for (const Word& w : violators) std::cout << w.str() << '\n';
            std::cout << "prop2 audit: length " << a.len << ", " << violators.size()
                      << " violation(s)\n";
            return kOk;
        }
        if (auto* cmd = audit->get_subcommand("subgraph"); cmd->parsed()) {
            const Word f = Word::parse(a.f);
            const auto mismatches = audit_subgraph_distances(f, a.len, budgets);
            for (const auto& cex : mismatches) {
                std::cout << cex.u.str() << ' ' << cex.v.str() << " graph=";
                if (cex.graph_distance < 0) {
                    std::cout << "unreachable";
                } else {
                    std::cout << cex.graph_distance;
                }
                std::cout << " tilde=" << cex.tilde << '\n';
            }
            std::cout << "subgraph audit: " << mismatches.size() << " mismatching pair(s)\n";
            return kOk;
        }
    }

    std::cerr << app.help();
    return kInvalidInput;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"swap-and-mismatch (tilde) edit distance and isometric-word toolkit"};
    app.require_subcommand(0, 1);
    Args a;

    auto* dist = app.add_subcommand("dist", "tilde distance between two equal-length words");
    dist->add_option("u", a.u, "first word")->required();
    dist->add_option("v", a.v, "second word")->required();
    dist->add_flag("--oracle", a.oracle, "use the BFS oracle (any alphabet)");
    dist->add_flag("--explain", a.explain, "also print one minimal op set");
    dist->add_option("--alphabet", a.alphabet, "alphabet symbols (default 01)");

    auto* transform = app.add_subcommand("transform", "minimal tilde-transformations");
    transform->add_option("u", a.u, "source word")->required();
    transform->add_option("v", a.v, "target word")->required();
    transform->add_option("--avoid", a.f, "print an f-free transformation for this factor");
    transform->add_flag("--all", a.all, "print every minimal transformation");

    auto* check = app.add_subcommand("witness-check", "verify a candidate witness pair");
    check->add_option("f", a.f, "factor word")->required();
    check->add_option("u", a.u, "first word")->required();
    check->add_option("v", a.v, "second word")->required();

    auto* overlaps = app.add_subcommand("overlaps", "per-shift error overlaps of a word");
    overlaps->add_option("f", a.f, "word")->required();
    overlaps->add_flag("--json", a.json, "JSON output");

    auto* witness = app.add_subcommand("witness", "construct a verified witness pair");
    witness->add_option("f", a.f, "word")->required();
    witness->add_flag("--json", a.json, "JSON output");

    auto* classify = app.add_subcommand("classify", "full isometry classification of a word");
    classify->add_option("f", a.f, "word")->required();
    classify->add_option("--max-len", a.max_len, "brute-force length bound (default |f|+4)");
    classify->add_option("--jobs", a.jobs, "worker threads");
    classify->add_flag("--json", a.json, "JSON output");

    auto* survey = app.add_subcommand("survey", "classify every word of one length");
    survey->add_option("--len", a.len, "word length")->required();
    survey->add_option("--max-len", a.max_len, "brute-force length bound (default len+4)");
    survey->add_option("--jobs", a.jobs, "worker threads");
    survey->add_option("--out", a.out, "output format: tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    auto* audit = app.add_subcommand("audit", "exhaustive cross-checks");
    audit->require_subcommand(1);
    auto* prop2 = audit->add_subcommand("prop2", "overlap necessary-condition audit");
    prop2->add_option("--len", a.len, "word length")->required();
    prop2->add_option("--max-len", a.max_len, "brute-force length bound (default len+4)");
    prop2->add_option("--jobs", a.jobs, "worker threads");
    auto* subgraph = audit->add_subcommand("subgraph", "f-free subgraph distance audit");
    subgraph->add_option("f", a.f, "word")->required();
    subgraph->add_option("--len", a.len, "graph word length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e);
        }
        std::cerr << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        return dispatch(app, a);
    } catch (const BudgetExceededError& e) {
        std::cerr << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace tildeiso::cli
