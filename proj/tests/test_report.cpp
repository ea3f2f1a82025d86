#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invga/dataset.hpp"
#include "invga/engine.hpp"
#include "invga/error.hpp"
#include "invga/io_util.hpp"
#include "invga/report.hpp"
#include "invga/result_io.hpp"
#include "testutil.hpp"

using invga::Direction;
using invga::Error;
using invga::Fitness;
using invga::Individual;
using testutil::rec;

namespace {

Individual reference_best() {
    Individual best;
    best.product_id = 6;
    best.genes = {1800, -300, 800, 350, 650, 700, -800, -200, 100, 225};
    best.occurrence = 1;
    best.fitness = Fitness::from_counts(1, 20);
    return best;
}

const std::vector<std::string> kChainMembers{"F1", "DC1", "DC2", "DC3", "A1",
                                             "A2", "A3",  "A4",  "A5", "A6"};

} // namespace

TEST_CASE("sign-to-direction mapping for the ten-member reference pattern") {
    const auto report = invga::recommend(reference_best(), kChainMembers);
    CHECK(report.product_id == 6);
    REQUIRE(report.lines.size() == 10);

    const std::vector<std::pair<Direction, long long>> expected{
        {Direction::Decrease, 1800}, {Direction::Increase, 300},
        {Direction::Decrease, 800},  {Direction::Decrease, 350},
        {Direction::Decrease, 650},  {Direction::Decrease, 700},
        {Direction::Increase, 800},  {Direction::Increase, 200},
        {Direction::Decrease, 100},  {Direction::Decrease, 225},
    };
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(report.lines[i].member == kChainMembers[i]);
        CHECK(report.lines[i].direction == expected[i].first);
        CHECK(report.lines[i].magnitude == expected[i].second);
    }
}

TEST_CASE("action table matches the golden file byte for byte") {
    const auto report = invga::recommend(reference_best(), kChainMembers);
    const auto golden = invga::read_text_file(testutil::data_path("product6_report.golden"));
    CHECK(invga::render_action_table(report) == golden);
}

TEST_CASE("zero genes emit no lines") {
    Individual best;
    best.product_id = 1;
    best.genes = {0, 0, 0};
    const auto report = invga::recommend(best, std::vector<std::string>{"M1", "M2", "M3"});
    CHECK(report.lines.empty());
    const auto rendered = invga::render_report(report, 10);
    CHECK(rendered.find("every member is on target") != std::string::npos);
}

TEST_CASE("a single negative gene becomes one increase line") {
    Individual best;
    best.product_id = 2;
    best.genes = {0, 0, 0, 0, 0, 0, 0, 0, 0, -1};
    const auto report = invga::recommend(best, kChainMembers);
    REQUIRE(report.lines.size() == 1);
    CHECK(report.lines[0].member == "A6");
    CHECK(report.lines[0].direction == Direction::Increase);
    CHECK(report.lines[0].magnitude == 1);
    CHECK(invga::render_action_table(report) == "A6: increase 1 units\n");
}

TEST_CASE("recommend rejects a member list of the wrong length") {
    CHECK_THROWS_AS(invga::recommend(reference_best(),
                                     std::vector<std::string>{"M1", "M2"}),
                    Error);
}

TEST_CASE("full report carries both fitness forms") {
    const auto report = invga::recommend(reference_best(), kChainMembers);
    const auto rendered = invga::render_report(report, 20);
    CHECK(rendered.find("product 6") != std::string::npos);
    CHECK(rendered.find("occurrence: 1 of 20 records") != std::string::npos);
    CHECK(rendered.find("-0.0512932943875505") != std::string::npos); // ln form
    CHECK(rendered.find("0.05") != std::string::npos);                // probability form
    CHECK(rendered.find("F1: decrease 1800 units") != std::string::npos);
}

TEST_CASE("trace CSV format") {
    std::vector<invga::TraceRow> trace{
        {0, Fitness::from_counts(1, 20), 1},
        {1, Fitness::from_counts(2, 20), 2},
        {2, Fitness::from_counts(20, 20), 20},
    };
    const auto csv = invga::trace_to_csv(trace);
    CHECK(csv.find("iteration,best_fitness,best_count\n") == 0);
    CHECK(csv.find("\n0,-0.051293294387550") != std::string::npos);
    CHECK(csv.find("\n2,-inf,20\n") != std::string::npos);

    CHECK(invga::trace_to_csv({}) == "iteration,best_fitness,best_count\n");
}

TEST_CASE("result files round-trip through JSON") {
    const auto ds = invga::parse_dataset_file(testutil::data_path("chain10_sample.csv"));
    invga::GaConfig config;
    config.seed = 7;
    const auto outcome = invga::evolve(ds, config);

    invga::RunResult run;
    run.config = config;
    run.members = ds.members();
    run.n_total = static_cast<long long>(ds.total_records());
    run.rejected = ds.rejected_count();
    run.best = outcome.best;
    run.stop_reason = outcome.stop_reason;
    run.evaluations = outcome.evaluations;
    run.iterations = static_cast<long long>(outcome.trace.size());

    const auto text = invga::result_to_json(run);
    CHECK(text.find("\"stop_reason\": \"stabilized\"") != std::string::npos);
    CHECK(text.find("\"probability\": 0.05") != std::string::npos);

    const auto back = invga::result_from_json(text);
    CHECK(back.best.product_id == run.best.product_id);
    CHECK(back.best.genes == run.best.genes);
    CHECK(back.best.occurrence == run.best.occurrence);
    CHECK(back.best.fitness == run.best.fitness);
    CHECK(back.members == run.members);
    CHECK(back.n_total == run.n_total);
    CHECK(back.evaluations == run.evaluations);
    CHECK(back.iterations == run.iterations);
    CHECK(back.stop_reason == run.stop_reason);
    CHECK(back.config.seed == 7);

    // Identical runs serialize identically.
    CHECK(invga::result_to_json(run) == text);
}

TEST_CASE("the fitness floor serializes as a string sentinel") {
    invga::RunResult run;
    run.members = {"M1", "M2"};
    run.n_total = 6;
    run.best.product_id = 1;
    run.best.genes = {3, -4};
    run.best.occurrence = 6;
    run.best.fitness = Fitness::from_counts(6, 6);
    run.evaluations = 2;
    run.iterations = 1;
    const auto text = invga::result_to_json(run);
    CHECK(text.find("\"fitness\": \"-inf\"") != std::string::npos);

    const auto back = invga::result_from_json(text);
    CHECK(back.best.fitness->is_minus_infinity());
}

TEST_CASE("result parsing rejects malformed documents") {
    CHECK_THROWS_AS(invga::result_from_json("not json"), Error);
    CHECK_THROWS_AS(invga::result_from_json("[]"), Error);
    CHECK_THROWS_AS(invga::result_from_json("{}"), Error);
    CHECK_THROWS_WITH_AS(invga::result_from_json(R"({"surprise": 1})"),
                         doctest::Contains("unknown key"), Error);
    CHECK_THROWS_AS(invga::result_from_json(R"({"stop_reason": "gave-up"})"), Error);
}

TEST_CASE("unevaluated best patterns cannot be serialized") {
    invga::RunResult run;
    run.members = {"M1"};
    run.n_total = 1;
    run.best.product_id = 1;
    run.best.genes = {1};
    CHECK_THROWS_AS(invga::result_to_json(run), Error);
}
