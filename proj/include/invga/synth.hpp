#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invga/dataset.hpp"

namespace invga {

struct PlantedPattern {
    InventoryRecord record;
    long long count = 0;
};

/// Recipe for a deterministic synthetic dataset: each planted record appears
/// exactly `count` times, the rest is noise with nonzero fields drawn from
/// noise_lower..noise_upper, never colliding with a planted record and (by
/// default) pairwise distinct, all shuffled by the seed.
struct SynthSpec {
    std::size_t n_members = 10;
    std::vector<long long> products;
    long long total_records = 0;
    std::vector<PlantedPattern> planted;
    long long noise_lower = -999;
    long long noise_upper = 999;
    std::uint64_t seed = 42;
    bool guarantee_noise_distinct = true;
    std::optional<std::vector<std::string>> members;

    void validate() const;
};

Dataset generate(const SynthSpec& spec);

/// Spec files are JSON; see the README for the schema. Unknown keys error.
SynthSpec parse_synth_spec(const std::string& json_text);

/// Sidecar manifest recording what was planted where.
std::string manifest_json(const SynthSpec& spec, const Dataset& dataset);

} // namespace invga
