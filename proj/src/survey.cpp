#include "tildeiso/survey.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "tildeiso/serialize.hpp"

namespace tildeiso {

SurveyRow make_survey_row(const ClassificationReport& report, std::int64_t runtime_ms) {
    SurveyRow row;
    row.word = report.f.str();
    row.length = report.f.size();
    row.ham_status = report.ham_status_string();
    row.tilde_status = report.tilde_status_string();
    if (report.construction) {
        row.witness_kind = to_string(report.construction->kind);
        row.witness_pair =
            report.construction->first.str() + "|" + report.construction->second.str();
    } else if (report.brute_pair) {
        row.witness_kind = "brute-force";
        row.witness_pair = report.brute_pair->first.str() + "|" + report.brute_pair->second.str();
    }
    row.overlap_digest = overlap_digest(report.overlaps);
    row.max_len = report.max_len;
    row.runtime_ms = runtime_ms;
    return row;
}

std::vector<SurveyRow> run_survey(int len, int max_len, int jobs, const Budgets& budgets) {
    if (len < 1 || len > 16) {
        throw BoundsError("survey supports word lengths 1..16");
    }
    const std::uint64_t total = std::uint64_t{1} << len;
    std::vector<SurveyRow> rows(total);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t bits = next.fetch_add(1);
            if (bits >= total) break;
            const auto start = std::chrono::steady_clock::now();
            ClassificationReport report = classify(Word::from_bits(bits, len), max_len, 1, budgets);
            const auto elapsed = std::chrono::steady_clock::now() - start;
            rows[bits] = make_survey_row(
                report, std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return rows;  // index order is lexicographic word order
}

namespace {

constexpr char kHeader[] =
    "word\tlength\tham_status\ttilde_status\twitness_kind\twitness_pair\toverlap_digest\tmax_len\truntime_ms";

Json row_to_json(const SurveyRow& row) {
    Json j;
    j["word"] = row.word;
    j["length"] = row.length;
    j["ham_status"] = row.ham_status;
    j["tilde_status"] = row.tilde_status;
    j["witness_kind"] = row.witness_kind;
    j["witness_pair"] = row.witness_pair;
    j["overlap_digest"] = row.overlap_digest;
    j["max_len"] = row.max_len;
    j["runtime_ms"] = row.runtime_ms;
    return j;
}

SurveyRow row_from_json(const Json& j) {
    SurveyRow row;
    row.word = j.at("word").get<std::string>();
    row.length = j.at("length").get<int>();
    row.ham_status = j.at("ham_status").get<std::string>();
    row.tilde_status = j.at("tilde_status").get<std::string>();
    row.witness_kind = j.at("witness_kind").get<std::string>();
    row.witness_pair = j.at("witness_pair").get<std::string>();
    row.overlap_digest = j.at("overlap_digest").get<std::string>();
    row.max_len = j.at("max_len").get<int>();
    row.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    return row;
}

}  // namespace

std::string survey_to_tsv(const std::vector<SurveyRow>& rows) {
    std::ostringstream out;
    out << kHeader << '\n';
    for (const SurveyRow& row : rows) {
        out << row.word << '\t' << row.length << '\t' << row.ham_status << '\t' << row.tilde_status
            << '\t' << row.witness_kind << '\t' << row.witness_pair << '\t' << row.overlap_digest
            << '\t' << row.max_len << '\t' << row.runtime_ms << '\n';
    }
    return out.str();
}

std::string survey_to_json(const std::vector<SurveyRow>& rows) {
    Json arr = Json::array();
    for (const SurveyRow& row : rows) arr.push_back(row_to_json(row));
    return arr.dump(2) + "\n";
}

std::vector<SurveyRow> survey_from_tsv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<SurveyRow> rows;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            if (line != kHeader) throw ParseError("unexpected survey TSV header: " + line);
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        size_t start = 0;
        for (;;) {
            const size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 9) {
            throw ParseError("survey TSV row has " + std::to_string(fields.size()) +
                             " fields, expected 9");
        }
        SurveyRow row;
        row.word = fields[0];
        row.length = std::stoi(fields[1]);
        row.ham_status = fields[2];
        row.tilde_status = fields[3];
        row.witness_kind = fields[4];
        row.witness_pair = fields[5];
        row.overlap_digest = fields[6];
        row.max_len = std::stoi(fields[7]);
        row.runtime_ms = std::stoll(fields[8]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SurveyRow> survey_from_json(const std::string& text) {
    Json arr = Json::parse(text);
    std::vector<SurveyRow> rows;
    rows.reserve(arr.size());
    for (const Json& j : arr) rows.push_back(row_from_json(j));
    return rows;
}

}  // namespace tildeiso
