#pragma once

#include <cstdint>
#include <string>

#include "invga/error.hpp"

namespace invga {

/// How fresh candidate individuals get their values.
///
/// record-seeded draws a whole validated record (the default: under
/// exact-match counting an unconstrained random gene vector almost never
/// matches anything, so the search would see a flat landscape).
/// pool-sampled draws each gene from the values observed for that product
/// at that position. uniform-bounds draws each gene uniformly from
/// [lower, upper] excluding 0.
struct GenerationPolicy {
    enum class Kind { RecordSeeded, PoolSampled, UniformBounds };

    Kind kind = Kind::RecordSeeded;
    long long lower = -999; // UniformBounds only
    long long upper = 999;

    static GenerationPolicy record_seeded() { return {}; }
    static GenerationPolicy pool_sampled() { return {Kind::PoolSampled, 0, 0}; }
    static GenerationPolicy uniform_bounds(long long lower, long long upper) {
        return {Kind::UniformBounds, lower, upper};
    }

    friend bool operator==(const GenerationPolicy&, const GenerationPolicy&) = default;
};

/// All engine tunables. Defaults follow the reference protocol: a budget of
/// 200 iterations, two initial chromosomes with one random injection per
/// iteration, 50% per-gene swap chance, four mutation points.
struct GaConfig {
    int max_iterations = 200;
    int stabilization_window = 50; // 0 disables the early-stop check
    double crossover_rate = 0.8;
    double swap_probability = 0.5;
    int mutation_points = 4;
    GenerationPolicy generation_policy;
    int population_size = 2;
    std::uint64_t seed = 42;

    /// Dataset-independent checks; mutation_points <= member count is
    /// enforced by evolve() once the dataset arity is known.
    void validate() const;
};

/// Parse the flat `key = value` config format. Blank lines and lines
/// starting with '#' are ignored; unknown keys are errors.
GaConfig parse_ga_config(const std::string& text);

std::string policy_to_string(const GenerationPolicy& policy);
GenerationPolicy policy_from_string(const std::string& text);

} // namespace invga
