#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "jk/constructions.hpp"
#include "jk/interlacing.hpp"

namespace jk {

struct BadConfig : Error {
    using Error::Error;
};

struct SearchConfig {
    int n_min = 3, n_max = 3;
    int rank_min = 1, rank_max = 1;
    bool skew = false;
    int trials = 1;
    uint64_t seed = 0;
    std::vector<std::string> properties = {"weak", "interlacing", "strong"};
    double tol_factor = 1e-8;
    bool conjecture_mode = false;  // positive definite pairs only
    int threads = 1;

    void validate() const;
};

struct TrialRecord {
    int trial_index = 0;
    int n = 0, rank = 0;
    bool skew = false;
    bool conjecture = false;
    uint64_t seed = 0;  // fork seed replays the generator
    bool weak_holds = true, interlacing_holds = true, strong_holds = true;
    std::string min_parity, max_parity;
    double margin_min = 0;  // min odd − min even
    double margin_max = 0;  // max even − max odd
    bool violation = false;  // any requested property failed, confirmed at tol/10
    bool conjecture_violation = false;  // min parity odd on a PD pair
    double wall_ms = 0;  // excluded from determinism comparisons

    nlohmann::json to_json() const;
};

struct SearchSummary {
    int trials = 0;
    int weak_violations = 0, interlacing_violations = 0, strong_violations = 0;
    int conjecture_violations = 0;

    nlohmann::json to_json(const SearchConfig& cfg) const;
};

struct SearchResult {
    std::vector<TrialRecord> records;  // sorted by trial_index
    SearchSummary summary;
};

/// Regenerates the pair a TrialRecord describes (trial parameters + fork seed).
MatrixPair replay_trial(const TrialRecord& rec);

SearchResult run_search(const SearchConfig& cfg);

std::string records_to_jsonl(const std::vector<TrialRecord>& records);

}  // namespace jk
