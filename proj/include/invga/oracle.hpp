#pragma once

#include <cstddef>
#include <vector>

#include "invga/dataset.hpp"
#include "invga/fitness.hpp"

namespace invga {

/// The exact mode: no other distinct record occurs strictly more often.
struct ModeResult {
    InventoryRecord record;
    long long count = 0;
    long long total = 0;
    Fitness fitness;
    std::size_t first_row = 0;
};

struct FitnessEntry {
    InventoryRecord record;
    long long count = 0;
    Fitness fitness;
    std::size_t first_row = 0;
};

/// Exhaustive scan of the frequency index; ties go to the record that
/// appears first in the file, matching the engine's stable ordering.
ModeResult brute_force_mode(const Dataset& dataset);

/// One entry per distinct record, in first-occurrence order.
std::vector<FitnessEntry> exhaustive_fitness(const Dataset& dataset);

/// The k most frequent distinct records, count descending, first
/// occurrence breaking ties.
std::vector<FitnessEntry> top_patterns(const Dataset& dataset, std::size_t k);

} // namespace invga
