#include "invga/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "invga/error.hpp"
#include "invga/io_util.hpp"

namespace invga {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

} // namespace

Dataset Dataset::build(std::vector<std::string> members, std::vector<InventoryRecord> records,
                       long long rejected_count) {
    if (members.empty()) {
        throw Error("dataset needs at least one member column");
    }
    if (records.empty()) {
        throw Error("no valid records (" + std::to_string(rejected_count) + " rows rejected)");
    }
    const std::size_t n = members.size();

    Dataset ds;
    ds.members_ = std::move(members);
    ds.records_ = std::move(records);
    ds.rejected_count_ = rejected_count;

    std::unordered_map<long long, std::vector<std::vector<long long>>> raw_pools;
    for (std::size_t row = 0; row < ds.records_.size(); ++row) {
        const InventoryRecord& rec = ds.records_[row];
        if (rec.deviations.size() != n) {
            throw Error("record " + std::to_string(row + 1) + " has " +
                        std::to_string(rec.deviations.size()) + " deviations, expected " +
                        std::to_string(n));
        }
        if (rec.product_id <= 0) {
            throw Error("record " + std::to_string(row + 1) + " has non-positive product id");
        }
        for (const long long d : rec.deviations) {
            if (d == 0) {
                throw Error("record " + std::to_string(row + 1) + " contains a zero deviation");
            }
        }

        auto [it, inserted] = ds.index_.try_emplace(rec, RecordStats{0, row});
        it->second.count += 1;

        auto& per_product = raw_pools[rec.product_id];
        if (per_product.empty()) {
            per_product.resize(n);
        }
        for (std::size_t pos = 0; pos < n; ++pos) {
            per_product[pos].push_back(rec.deviations[pos]);
        }
    }

    for (auto& [pid, per_pos] : raw_pools) {
        for (auto& values : per_pos) {
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
        }
        ds.product_ids_.push_back(pid);
        ds.pools_.emplace(pid, std::move(per_pos));
    }
    std::sort(ds.product_ids_.begin(), ds.product_ids_.end());

    return ds;
}

long long Dataset::count_occurrences(const InventoryRecord& candidate) const {
    return count_occurrences(candidate.product_id, candidate.deviations);
}

long long Dataset::count_occurrences(long long product_id,
                                     std::span<const long long> deviations) const {
    if (deviations.size() != member_count()) {
        throw Error("candidate has " + std::to_string(deviations.size()) +
                    " genes, dataset has " + std::to_string(member_count()) + " members");
    }
    const auto it = index_.find(RecordView{product_id, deviations});
    return it == index_.end() ? 0 : it->second.count;
}

const std::vector<long long>& Dataset::value_pool(long long product_id,
                                                  std::size_t position) const {
    if (position >= member_count()) {
        throw Error("position " + std::to_string(position) + " out of range (n = " +
                    std::to_string(member_count()) + ")");
    }
    static const std::vector<long long> empty;
    const auto it = pools_.find(product_id);
    if (it == pools_.end()) {
        return empty;
    }
    return it->second[position];
}

void Dataset::write_csv(std::ostream& out) const {
    out << "PI";
    for (const auto& name : members_) {
        out << ',' << name;
    }
    out << '\n';
    for (const auto& rec : records_) {
        out << rec.product_id;
        for (const long long d : rec.deviations) {
            out << ',' << d;
        }
        out << '\n';
    }
}

std::string Dataset::to_csv() const {
    std::ostringstream out;
    write_csv(out);
    return out.str();
}

Dataset parse_dataset(std::istream& source,
                      const std::optional<std::vector<std::string>>& expected_members,
                      std::ostream* diagnostics) {
    std::ostream& diag = diagnostics ? *diagnostics : std::cerr;

    std::string line;
    if (!std::getline(source, line)) {
        throw Error("malformed header: input is empty");
    }
    auto header = split_fields(trim(line));
    if (header.empty() || trim(header[0]) != "PI") {
        throw Error("malformed header: first column must be PI");
    }
    if (header.size() < 2) {
        throw Error("malformed header: no member columns after PI");
    }
    std::vector<std::string> members;
    members.reserve(header.size() - 1);
    for (std::size_t i = 1; i < header.size(); ++i) {
        const auto name = trim(header[i]);
        if (name.empty()) {
            throw Error("malformed header: member column " + std::to_string(i) + " is unnamed");
        }
        members.emplace_back(name);
    }
    if (expected_members && members != *expected_members) {
        throw Error("header members do not match the expected member list");
    }
    const std::size_t n = members.size();

    std::vector<InventoryRecord> records;
    long long rejected = 0;
    std::size_t row_number = 1; // header was row 1

    while (std::getline(source, line)) {
        ++row_number;
        const std::string_view stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const auto fields = split_fields(stripped);

        const auto reject = [&](const std::string& why) {
            ++rejected;
            diag << "row " << row_number << " rejected: " << why << '\n';
        };

        if (fields.size() != n + 1) {
            reject("expected " + std::to_string(n + 1) + " fields, got " +
                   std::to_string(fields.size()));
            continue;
        }

        InventoryRecord rec;
        rec.deviations.reserve(n);
        bool valid = true;

        const auto pi_token = trim(fields[0]);
        if (pi_token.empty()) {
            reject("empty product id");
            continue;
        }
        const auto pid = parse_int64(pi_token);
        if (!pid) {
            throw Error("row " + std::to_string(row_number) +
                        ", column 1 (PI): not an integer: '" + std::string(pi_token) + "'");
        }
        if (*pid <= 0) {
            reject("non-positive product id " + std::to_string(*pid));
            continue;
        }
        rec.product_id = *pid;

        for (std::size_t i = 0; i < n && valid; ++i) {
            const auto token = trim(fields[i + 1]);
            if (token.empty()) {
                reject("empty field in column " + std::to_string(i + 2) + " (" + members[i] + ")");
                valid = false;
                break;
            }
            const auto value = parse_int64(token);
            if (!value) {
                throw Error("row " + std::to_string(row_number) + ", column " +
                            std::to_string(i + 2) + " (" + members[i] +
                            "): not an integer: '" + std::string(token) + "'");
            }
            if (*value == 0) {
                reject("zero stock deviation in column " + std::to_string(i + 2) + " (" +
                       members[i] + ")");
                valid = false;
                break;
            }
            rec.deviations.push_back(*value);
        }
        if (!valid) {
            continue;
        }
        records.push_back(std::move(rec));
    }

    return Dataset::build(std::move(members), std::move(records), rejected);
}

Dataset parse_dataset_file(const std::filesystem::path& path,
                           const std::optional<std::vector<std::string>>& expected_members,
                           std::ostream* diagnostics) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read file: " + path.string());
    }
    return parse_dataset(in, expected_members, diagnostics);
}

std::vector<std::string> default_member_names(std::size_t n) {
    if (n == 10) {
        return {"F1", "DC1", "DC2", "DC3", "A1", "A2", "A3", "A4", "A5", "A6"};
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("M" + std::to_string(i));
    }
    return names;
}

} // namespace invga
