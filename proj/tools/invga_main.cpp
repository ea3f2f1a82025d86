#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "invga/config.hpp"
#include "invga/dataset.hpp"
#include "invga/engine.hpp"
#include "invga/error.hpp"
#include "invga/io_util.hpp"
#include "invga/oracle.hpp"
#include "invga/report.hpp"
#include "invga/result_io.hpp"
#include "invga/synth.hpp"

namespace {

std::string describe_pattern(const invga::InventoryRecord& rec) {
    std::string out = "product " + std::to_string(rec.product_id) + " |";
    for (const long long d : rec.deviations) {
        out += ' ' + std::to_string(d);
    }
    return out;
}

int run_optimize(const std::string& data_path, const std::optional<std::string>& config_path,
                 const std::optional<std::uint64_t>& seed,
                 const std::optional<std::string>& trace_path,
                 const std::optional<std::string>& result_path) {
    invga::GaConfig config;
    if (config_path) {
        config = invga::parse_ga_config(invga::read_text_file(*config_path));
    }
    if (seed) {
        config.seed = *seed;
    }
    config.validate();

    const auto dataset = invga::parse_dataset_file(data_path);
    const auto outcome = invga::evolve(dataset, config);

    invga::RunResult run;
    run.config = config;
    run.members = dataset.members();
    run.n_total = static_cast<long long>(dataset.total_records());
    run.rejected = dataset.rejected_count();
    run.best = outcome.best;
    run.stop_reason = outcome.stop_reason;
    run.evaluations = outcome.evaluations;
    run.iterations = static_cast<long long>(outcome.trace.size());

    const auto report = invga::recommend(outcome.best, dataset.members());
    std::cout << "best " << describe_pattern(outcome.best.as_record()) << "\n";
    std::cout << invga::render_report(report, run.n_total);
    std::cout << "iterations: " << run.iterations << " (" << to_string(run.stop_reason)
              << "), evaluations: " << run.evaluations << "\n";

    if (trace_path) {
        invga::write_text_file_atomic(*trace_path, invga::trace_to_csv(outcome.trace));
    }
    if (result_path) {
        invga::write_text_file_atomic(*result_path, invga::result_to_json(run));
    }
    return 0;
}

int run_oracle(const std::string& data_path) {
    const auto dataset = invga::parse_dataset_file(data_path);
    const auto mode = invga::brute_force_mode(dataset);

    std::cout << "mode " << describe_pattern(mode.record) << "\n";
    std::cout << "count: " << mode.count << " of " << mode.total << " records\n";
    std::cout << "fitness: " << to_string(mode.fitness) << "\n";

    const auto top = invga::top_patterns(dataset, 10);
    std::cout << "top patterns:\n";
    for (std::size_t i = 0; i < top.size(); ++i) {
        std::cout << "  " << (i + 1) << ". count " << top[i].count << "  "
                  << describe_pattern(top[i].record) << "\n";
    }
    return 0;
}

int run_gen(const std::string& spec_path, const std::string& out_path) {
    const auto spec = invga::parse_synth_spec(invga::read_text_file(spec_path));
    const auto dataset = invga::generate(spec);
    invga::write_text_file_atomic(out_path, dataset.to_csv());
    invga::write_text_file_atomic(out_path + ".manifest.json",
                                  invga::manifest_json(spec, dataset));
    std::cout << "wrote " << dataset.total_records() << " records x "
              << dataset.member_count() << " members to " << out_path << "\n";
    std::cout << "manifest: " << out_path << ".manifest.json\n";
    return 0;
}

int run_validate(const std::string& data_path) {
    const auto dataset = invga::parse_dataset_file(data_path);
    std::cout << "members: " << dataset.member_count() << "\n";
    std::cout << "records: " << dataset.total_records() << "\n";
    std::cout << "rejected: " << dataset.rejected_count() << "\n";
    std::cout << "distinct patterns: " << dataset.frequency_index().size() << "\n";
    return 0;
}

int run_report(const std::string& result_path) {
    const auto run = invga::result_from_json(invga::read_text_file(result_path));
    const auto report = invga::recommend(run.best, run.members);
    std::cout << invga::render_report(report, run.n_total);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Most-probable excess/shortage pattern finder for serial supply chains"};
    app.require_subcommand(1);

    std::string data_path;
    std::string spec_path;
    std::string out_path;
    std::string result_in_path;
    std::optional<std::string> config_path;
    std::optional<std::string> trace_path;
    std::optional<std::string> result_path;
    std::optional<std::uint64_t> seed;

    auto* optimize = app.add_subcommand("optimize", "Search for the most probable pattern");
    optimize->add_option("--data", data_path, "Historical records CSV")->required();
    optimize->add_option("--config", config_path, "key = value settings file");
    optimize->add_option("--seed", seed, "Random seed (overrides the config file)");
    optimize->add_option("--trace", trace_path, "Write per-iteration fitness CSV here");
    optimize->add_option("--result", result_path, "Write machine-readable result JSON here");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive mode search (ground truth)");
    oracle->add_option("--data", data_path, "Historical records CSV")->required();

    auto* gen = app.add_subcommand("gen", "Generate a synthetic dataset");
    gen->add_option("--spec", spec_path, "Generator spec JSON")->required();
    gen->add_option("--out", out_path, "Output CSV path")->required();

    auto* validate = app.add_subcommand("validate", "Parse a dataset and report totals");
    validate->add_option("--data", data_path, "Historical records CSV")->required();

    auto* report = app.add_subcommand("report", "Re-render recommendations from a result file");
    report->add_option("--result", result_in_path, "Result JSON from optimize")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(optimize)) {
            return run_optimize(data_path, config_path, seed, trace_path, result_path);
        }
        if (app.got_subcommand(oracle)) {
            return run_oracle(data_path);
        }
        if (app.got_subcommand(gen)) {
            return run_gen(spec_path, out_path);
        }
        if (app.got_subcommand(validate)) {
            return run_validate(data_path);
        }
        if (app.got_subcommand(report)) {
            return run_report(result_in_path);
        }
    } catch (const invga::Error& e) {
        std::cerr << "invga: error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "invga: unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
