#include "invga/result_io.hpp"

#include <sstream>

#include <json.hpp>

#include "invga/error.hpp"
#include "invga/io_util.hpp"

namespace invga {

std::string result_to_json(const RunResult& result) {
    if (!result.best.occurrence || !result.best.fitness) {
        throw Error("cannot serialize a result whose best individual is unevaluated");
    }

    nlohmann::json doc;
    doc["best"]["genes"] = result.best.genes;
    doc["best"]["product_id"] = result.best.product_id;
    doc["best"]["occurrence"] = *result.best.occurrence;
    if (result.best.fitness->is_minus_infinity()) {
        doc["best"]["fitness"] = "-inf";
    } else {
        doc["best"]["fitness"] = result.best.fitness->value();
    }
    doc["config"]["crossover_rate"] = result.config.crossover_rate;
    doc["config"]["generation_policy"] = policy_to_string(result.config.generation_policy);
    doc["config"]["max_iterations"] = result.config.max_iterations;
    doc["config"]["mutation_points"] = result.config.mutation_points;
    doc["config"]["population_size"] = result.config.population_size;
    doc["config"]["seed"] = result.config.seed;
    doc["config"]["stabilization_window"] = result.config.stabilization_window;
    doc["config"]["swap_probability"] = result.config.swap_probability;
    doc["data"]["members"] = result.members;
    doc["data"]["n_total"] = result.n_total;
    doc["data"]["rejected"] = result.rejected;
    doc["evaluations"] = result.evaluations;
    doc["iterations"] = result.iterations;
    doc["probability"] =
        static_cast<double>(*result.best.occurrence) / static_cast<double>(result.n_total);
    doc["stop_reason"] = to_string(result.stop_reason);
    return doc.dump(2) + "\n";
}

RunResult result_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("result file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error("result file must be a JSON object");
    }

    RunResult result;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "best") {
                result.best.genes = value.at("genes").get<std::vector<long long>>();
                result.best.product_id = value.at("product_id").get<long long>();
                result.best.occurrence = value.at("occurrence").get<long long>();
            } else if (key == "config") {
                for (const auto& [ckey, cvalue] : value.items()) {
                    if (ckey == "crossover_rate") {
                        result.config.crossover_rate = cvalue.get<double>();
                    } else if (ckey == "generation_policy") {
                        result.config.generation_policy =
                            policy_from_string(cvalue.get<std::string>());
                    } else if (ckey == "max_iterations") {
                        result.config.max_iterations = cvalue.get<int>();
                    } else if (ckey == "mutation_points") {
                        result.config.mutation_points = cvalue.get<int>();
                    } else if (ckey == "population_size") {
                        result.config.population_size = cvalue.get<int>();
                    } else if (ckey == "seed") {
                        result.config.seed = cvalue.get<std::uint64_t>();
                    } else if (ckey == "stabilization_window") {
                        result.config.stabilization_window = cvalue.get<int>();
                    } else if (ckey == "swap_probability") {
                        result.config.swap_probability = cvalue.get<double>();
                    } else {
                        throw Error("unknown key in result config: '" + ckey + "'");
                    }
                }
            } else if (key == "data") {
                result.members = value.at("members").get<std::vector<std::string>>();
                result.n_total = value.at("n_total").get<long long>();
                result.rejected = value.at("rejected").get<long long>();
            } else if (key == "evaluations") {
                result.evaluations = value.get<long long>();
            } else if (key == "iterations") {
                result.iterations = value.get<long long>();
            } else if (key == "probability" || key == "stop_reason") {
                // probability is derived; stop_reason parsed below once known
            } else {
                throw Error("unknown key in result file: '" + key + "'");
            }
        }
        if (doc.contains("stop_reason")) {
            const auto reason = doc["stop_reason"].get<std::string>();
            if (reason == "budget-exhausted") {
                result.stop_reason = StopReason::BudgetExhausted;
            } else if (reason == "stabilized") {
                result.stop_reason = StopReason::Stabilized;
            } else {
                throw Error("unknown stop_reason: '" + reason + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("result file field missing or mistyped: ") + e.what());
    }

    if (result.best.genes.empty() || result.n_total < 1 || !result.best.occurrence) {
        throw Error("result file is missing the best pattern or the dataset totals");
    }
    result.best.fitness = Fitness::from_counts(*result.best.occurrence, result.n_total);
    return result;
}

std::string trace_to_csv(const std::vector<TraceRow>& trace) {
    std::ostringstream out;
    out << "iteration,best_fitness,best_count\n";
    for (const auto& row : trace) {
        out << row.iteration << ',' << to_string(row.best_fitness) << ',' << row.best_count
            << '\n';
    }
    return out.str();
}

} // namespace invga
