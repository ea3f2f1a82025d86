#include "invga/oracle.hpp"

#include <algorithm>

#include "invga/error.hpp"

namespace invga {

ModeResult brute_force_mode(const Dataset& dataset) {
    const auto& index = dataset.frequency_index();
    if (index.empty()) {
        throw Error("cannot take the mode of an empty dataset");
    }

    const InventoryRecord* best_record = nullptr;
    RecordStats best_stats{0, 0};
    for (const auto& [record, stats] : index) {
        if (best_record == nullptr || stats.count > best_stats.count ||
            (stats.count == best_stats.count && stats.first_row < best_stats.first_row)) {
            best_record = &record;
            best_stats = stats;
        }
    }

    ModeResult out;
    out.record = *best_record;
    out.count = best_stats.count;
    out.total = static_cast<long long>(dataset.total_records());
    out.fitness = Fitness::from_counts(out.count, out.total);
    out.first_row = best_stats.first_row;
    return out;
}

std::vector<FitnessEntry> exhaustive_fitness(const Dataset& dataset) {
    const auto& index = dataset.frequency_index();
    const long long total = static_cast<long long>(dataset.total_records());

    std::vector<FitnessEntry> entries;
    entries.reserve(index.size());
    for (const auto& [record, stats] : index) {
        entries.push_back(FitnessEntry{record, stats.count,
                                       Fitness::from_counts(stats.count, total),
                                       stats.first_row});
    }
    std::sort(entries.begin(), entries.end(),
              [](const FitnessEntry& a, const FitnessEntry& b) {
                  return a.first_row < b.first_row;
              });
    return entries;
}

std::vector<FitnessEntry> top_patterns(const Dataset& dataset, std::size_t k) {
    auto entries = exhaustive_fitness(dataset);
    std::sort(entries.begin(), entries.end(),
              [](const FitnessEntry& a, const FitnessEntry& b) {
                  if (a.count != b.count) {
                      return a.count > b.count;
                  }
                  return a.first_row < b.first_row;
              });
    if (entries.size() > k) {
        entries.resize(k);
    }
    return entries;
}

} // namespace invga
