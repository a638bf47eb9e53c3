#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tildeiso/isometry.hpp"

namespace tildeiso {

// One word's classification flattened for batch output. The same row data
// serializes to TSV and JSON without loss.
struct SurveyRow {
    std::string word;
    int length = 0;
    std::string ham_status;
    std::string tilde_status;
    std::string witness_kind;  // construction kind, "brute-force", or empty
    std::string witness_pair;  // "u|v" or empty
    std::string overlap_digest;
    int max_len = 0;
    std::int64_t runtime_ms = 0;

    friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

SurveyRow make_survey_row(const ClassificationReport& report, std::int64_t runtime_ms);

// Classifies every word of length `len`, fanning words out to `jobs`
// workers; rows come back in lexicographic word order regardless of
// completion order. max_len 0 defaults to len + 4.
std::vector<SurveyRow> run_survey(int len, int max_len = 0, int jobs = 1,
                                  const Budgets& budgets = Budgets::defaults());

std::string survey_to_tsv(const std::vector<SurveyRow>& rows);
std::string survey_to_json(const std::vector<SurveyRow>& rows);

std::vector<SurveyRow> survey_from_tsv(const std::string& text);
std::vector<SurveyRow> survey_from_json(const std::string& text);

}  // namespace tildeiso
