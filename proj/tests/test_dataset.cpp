#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "invga/dataset.hpp"
#include "invga/error.hpp"
#include "properties.hpp"
#include "testutil.hpp"

using invga::Dataset;
using invga::Error;
using invga::InventoryRecord;
using invga::parse_dataset;
using invga::parse_dataset_file;
using testutil::rec;

namespace {

Dataset parse_text(const std::string& text, std::ostringstream* diag = nullptr) {
    std::istringstream in(text);
    std::ostringstream local;
    return parse_dataset(in, std::nullopt, diag ? diag : &local);
}

} // namespace

TEST_CASE("bundled 20-row sample parses cleanly") {
    std::ostringstream diag;
    const auto ds = parse_dataset_file(testutil::data_path("chain10_sample.csv"),
                                       std::nullopt, &diag);
    CHECK(ds.member_count() == 10);
    CHECK(ds.total_records() == 20);
    CHECK(ds.rejected_count() == 0);
    CHECK(diag.str().empty());
    CHECK(ds.members() == std::vector<std::string>{"F1", "DC1", "DC2", "DC3", "A1", "A2", "A3",
                                                   "A4", "A5", "A6"});

    // Sum of the index counts must cover every record.
    long long total = 0;
    for (const auto& [record, stats] : ds.frequency_index()) {
        total += stats.count;
    }
    CHECK(total == 20);
    for (const auto& r : ds.records()) {
        CHECK(ds.count_occurrences(r) >= 1);
    }
}

TEST_CASE("exact counting on the sample") {
    const auto ds = parse_dataset_file(testutil::data_path("chain10_sample.csv"));
    const auto first_row = rec(7, {-371, -736, -299, 634, 448, 756, 340, -736, -778, 863});
    CHECK(ds.count_occurrences(first_row) == 1);
    CHECK(testutil::naive_count(ds.records(), first_row) == 1);

    auto absent_product = first_row;
    absent_product.product_id = 99;
    CHECK(ds.count_occurrences(absent_product) == 0);

    CHECK_THROWS_AS(ds.count_occurrences(rec(7, {1, 2, 3})), Error);
}

TEST_CASE("value pools") {
    const auto ds = parse_dataset_file(testutil::data_path("chain10_sample.csv"));
    CHECK(ds.value_pool(7, 0) == std::vector<long long>{-371});
    CHECK(ds.value_pool(99, 0).empty());
    CHECK_THROWS_AS(ds.value_pool(7, 10), Error);

    // Repeating one record gives singleton pools at every position.
    std::vector<InventoryRecord> rows(5, rec(3, {4, -6}));
    const auto repeated = Dataset::build({"M1", "M2"}, rows);
    CHECK(repeated.value_pool(3, 0) == std::vector<long long>{4});
    CHECK(repeated.value_pool(3, 1) == std::vector<long long>{-6});
}

TEST_CASE("pools are sorted distinct values from matching records only") {
    const auto ds = Dataset::build({"M1", "M2"},
                                   {rec(1, {5, -2}), rec(1, {-3, -2}), rec(1, {5, 7}),
                                    rec(2, {9, 9})});
    CHECK(ds.value_pool(1, 0) == std::vector<long long>{-3, 5});
    CHECK(ds.value_pool(1, 1) == std::vector<long long>{-2, 7});
    CHECK(ds.value_pool(2, 0) == std::vector<long long>{9});
    CHECK(ds.product_ids() == std::vector<long long>{1, 2});
}

TEST_CASE("planted duplicates are counted by the index") {
    std::vector<InventoryRecord> rows;
    const auto planted = rec(2, {1, 1});
    for (int i = 0; i < 50; ++i) {
        rows.push_back(planted);
    }
    // 950 distinct filler rows: unique gene pairs from a wide alphabet.
    long long a = 2;
    long long b = 2;
    for (int i = 0; i < 950; ++i) {
        rows.push_back(rec(1, {a, b}));
        if (++b > 40) {
            b = 2;
            ++a;
        }
    }
    const auto ds = Dataset::build({"M1", "M2"}, std::move(rows));
    CHECK(ds.total_records() == 1000);
    CHECK(ds.count_occurrences(planted) == 50);
    CHECK(testutil::naive_count(ds.records(), planted) == 50);
}

TEST_CASE("rows with nil fields are rejected with row numbers") {
    std::ostringstream diag;
    const auto ds = parse_text("PI,M1,M2\n"
                               "1,5,-3\n"
                               "2,,4\n"     // empty field
                               "3,0,4\n"    // zero deviation
                               "4,1\n"      // missing field
                               "0,1,2\n"    // non-positive product id
                               "-2,1,2\n"   // negative product id
                               "5,6,7\n",
                               &diag);
    CHECK(ds.total_records() == 2);
    CHECK(ds.rejected_count() == 5);
    const auto text = diag.str();
    CHECK(text.find("row 3") != std::string::npos);
    CHECK(text.find("row 4") != std::string::npos);
    CHECK(text.find("row 5") != std::string::npos);
    CHECK(text.find("row 6") != std::string::npos);
    CHECK(text.find("row 7") != std::string::npos);
    CHECK(text.find("M1") != std::string::npos);
}

TEST_CASE("a lone invalid row leaves no valid records") {
    std::ostringstream diag;
    CHECK_THROWS_WITH_AS(parse_text("PI,M1,M2,DC2\n1,4,,9\n", &diag), // empty DC2-like field
                         doctest::Contains("no valid records"), Error);
    CHECK(diag.str().find("row 2") != std::string::npos);
}

TEST_CASE("non-integer tokens are hard errors naming row and column") {
    CHECK_THROWS_WITH_AS(parse_text("PI,M1,M2\n1,5,x7\n"), doctest::Contains("column 3"), Error);
    CHECK_THROWS_WITH_AS(parse_text("PI,M1,M2\n1,5,x7\n"), doctest::Contains("M2"), Error);
    CHECK_THROWS_WITH_AS(parse_text("PI,M1,M2\nQ,5,7\n"), doctest::Contains("PI"), Error);
    CHECK_THROWS_WITH_AS(parse_text("PI,M1,M2\n1,5,1.5\n"), doctest::Contains("row 2"), Error);
}

TEST_CASE("malformed headers are hard errors") {
    CHECK_THROWS_WITH_AS(parse_text(""), doctest::Contains("header"), Error);
    CHECK_THROWS_WITH_AS(parse_text("ID,M1,M2\n1,2,3\n"), doctest::Contains("PI"), Error);
    CHECK_THROWS_WITH_AS(parse_text("PI\n1\n"), doctest::Contains("member"), Error);
    CHECK_THROWS_WITH_AS(parse_text("PI,M1,,M3\n1,2,3,4\n"), doctest::Contains("unnamed"),
                         Error);
}

TEST_CASE("expected member list is enforced") {
    std::istringstream in("PI,M1,M2\n1,2,3\n");
    const std::vector<std::string> wanted{"A", "B"};
    std::ostringstream diag;
    CHECK_THROWS_AS(parse_dataset(in, wanted, &diag), Error);

    std::istringstream again("PI,A,B\n1,2,3\n");
    const auto ds = parse_dataset(again, wanted, &diag);
    CHECK(ds.members() == wanted);
}

TEST_CASE("whitespace, blank lines, and CRLF are tolerated") {
    std::ostringstream diag;
    const auto ds = parse_text("PI, M1 , M2\r\n"
                               "\n"
                               " 1 , 5 , -3 \r\n"
                               "\n",
                               &diag);
    CHECK(ds.total_records() == 1);
    CHECK(ds.members() == std::vector<std::string>{"M1", "M2"});
    CHECK(ds.records()[0] == rec(1, {5, -3}));
    CHECK(diag.str().empty());
}

TEST_CASE("construction rejects invalid records outright") {
    CHECK_THROWS_AS(Dataset::build({"M1"}, {rec(1, {0})}), Error);
    CHECK_THROWS_AS(Dataset::build({"M1"}, {rec(0, {5})}), Error);
    CHECK_THROWS_AS(Dataset::build({"M1"}, {rec(1, {5, 6})}), Error);
    CHECK_THROWS_AS(Dataset::build({}, {rec(1, {5})}), Error);
    CHECK_THROWS_WITH_AS(Dataset::build({"M1"}, {}), doctest::Contains("no valid records"),
                         Error);
}

TEST_CASE("serialize and reparse preserves the dataset") {
    const auto ds = parse_dataset_file(testutil::data_path("chain10_sample.csv"));
    std::istringstream in(ds.to_csv());
    std::ostringstream diag;
    const auto back = parse_dataset(in, ds.members(), &diag);
    CHECK(back == ds);
    CHECK(back.rejected_count() == 0);
}

TEST_CASE("default member names") {
    CHECK(invga::default_member_names(10) ==
          std::vector<std::string>{"F1", "DC1", "DC2", "DC3", "A1", "A2", "A3", "A4", "A5",
                                   "A6"});
    CHECK(invga::default_member_names(3) == std::vector<std::string>{"M1", "M2", "M3"});
}

TEST_CASE("property: count agreement with a naive scan") {
    const auto outcome = props::count_agreement(1000, 0xC0117E57);
    INFO(outcome.detail);
    CHECK(outcome.ok);
}

TEST_CASE("property: serialize/parse round-trip") {
    const auto outcome = props::roundtrip(1000, 0x207D1271);
    INFO(outcome.detail);
    CHECK(outcome.ok);
}
