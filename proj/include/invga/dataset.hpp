#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "invga/record.hpp"

namespace invga {

/// Occurrence count of one distinct record plus where it first appeared
/// (0-based index into records()), which settles ties deterministically.
struct RecordStats {
    long long count = 0;
    std::size_t first_row = 0;
};

using FrequencyIndex = std::unordered_map<InventoryRecord, RecordStats, RecordHash, RecordEq>;

/// Validated, indexed collection of historical inventory records.
///
/// Immutable after construction; every read accessor is safe to call
/// concurrently from multiple threads.
class Dataset {
  public:
    /// Index a batch of already-validated records. Throws if any record has
    /// the wrong arity, a zero deviation, or a non-positive product id, or
    /// if the batch is empty.
    static Dataset build(std::vector<std::string> members, std::vector<InventoryRecord> records,
                         long long rejected_count = 0);

    std::size_t member_count() const { return members_.size(); }
    const std::vector<std::string>& members() const { return members_; }
    const std::vector<InventoryRecord>& records() const { return records_; }

    /// N_t: number of validated records (duplicates included).
    long long total_records() const { return static_cast<long long>(records_.size()); }
    long long rejected_count() const { return rejected_count_; }

    const FrequencyIndex& frequency_index() const { return index_; }

    /// Distinct product ids present, ascending.
    const std::vector<long long>& product_ids() const { return product_ids_; }

    /// Exact-match occurrence count of a candidate pattern (0..N_t).
    long long count_occurrences(const InventoryRecord& candidate) const;
    long long count_occurrences(long long product_id, std::span<const long long> deviations) const;

    /// Distinct deviation values observed at `position` among records of
    /// `product_id`, ascending; empty when the product never occurs.
    const std::vector<long long>& value_pool(long long product_id, std::size_t position) const;

    void write_csv(std::ostream& out) const;
    std::string to_csv() const;

    /// Content equality: same member names, same records in the same order.
    /// The index is derived from the records, so it is covered implicitly.
    friend bool operator==(const Dataset& a, const Dataset& b) {
        return a.members_ == b.members_ && a.records_ == b.records_;
    }

  private:
    Dataset() = default;

    std::vector<std::string> members_;
    std::vector<InventoryRecord> records_;
    long long rejected_count_ = 0;
    FrequencyIndex index_;
    std::vector<long long> product_ids_;
    // product id -> one sorted distinct value pool per member position
    std::unordered_map<long long, std::vector<std::vector<long long>>> pools_;
};

/// Parse the delimiter-separated dataset format: header `PI,<member...>`,
/// one record per row, integer fields.
///
/// Rows with missing/empty/zero fields or a non-positive product id are
/// counted in rejected_count and diagnosed with their 1-based row number on
/// `diagnostics` (standard error when null). Malformed headers and
/// non-integer tokens throw, as does an input with no valid records at all.
Dataset parse_dataset(std::istream& source,
                      const std::optional<std::vector<std::string>>& expected_members = std::nullopt,
                      std::ostream* diagnostics = nullptr);

Dataset parse_dataset_file(const std::filesystem::path& path,
                           const std::optional<std::vector<std::string>>& expected_members = std::nullopt,
                           std::ostream* diagnostics = nullptr);

/// F1,DC1..DC3,A1..A6 for the ten-member chain this tool is usually run on;
/// M1..Mn otherwise.
std::vector<std::string> default_member_names(std::size_t n);

} // namespace invga
