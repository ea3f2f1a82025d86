#pragma once

#include <string>
#include <vector>

#include "invga/config.hpp"
#include "invga/engine.hpp"

namespace invga {

/// Everything one optimization run produced, as stored in the result file.
struct RunResult {
    GaConfig config;
    std::vector<std::string> members;
    long long n_total = 0;
    long long rejected = 0;
    Individual best; // occurrence and fitness set
    StopReason stop_reason = StopReason::BudgetExhausted;
    long long evaluations = 0;
    long long iterations = 0;
};

/// JSON with deterministically ordered keys; byte-stable for identical runs.
std::string result_to_json(const RunResult& result);
RunResult result_from_json(const std::string& json_text);

/// CSV `iteration,best_fitness,best_count`, one row per completed iteration.
std::string trace_to_csv(const std::vector<TraceRow>& trace);

} // namespace invga
