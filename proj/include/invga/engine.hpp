#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invga/config.hpp"
#include "invga/dataset.hpp"
#include "invga/fitness.hpp"
#include "invga/rng.hpp"

namespace invga {

/// A candidate solution: one gene (signed stock deviation) per chain member,
/// labeled with the product it describes. occurrence/fitness are caches
/// filled in by evaluate() and cleared by any operator that edits genes.
struct Individual {
    long long product_id = 0;
    std::vector<long long> genes;
    std::optional<long long> occurrence;
    std::optional<Fitness> fitness;

    InventoryRecord as_record() const { return {product_id, genes}; }
};

struct TraceRow {
    int iteration = 0;
    Fitness best_fitness;
    long long best_count = 0;
};

enum class StopReason { BudgetExhausted, Stabilized };

std::string to_string(StopReason reason);

struct OptimizationResult {
    Individual best;
    std::vector<TraceRow> trace; // one row per completed iteration
    long long evaluations = 0;   // chromosomes scored during the run
    StopReason stop_reason = StopReason::BudgetExhausted;
};

/// Draw one fresh candidate per the generation policy.
Individual random_individual(const Dataset& dataset, const GenerationPolicy& policy, Rng& rng);

/// Score a candidate: counts its exact occurrences and caches
/// ln(1 - N_rep/N_t) on the individual.
Fitness evaluate(Individual& individual, const Dataset& dataset);

/// The two lowest-fitness individuals, best first. Ties keep the earlier
/// position in `population` (creation order), so results are stable.
std::pair<Individual, Individual> select(std::span<const Individual> population);

/// Per-gene exchange: a fresh binary mask, each entry set with
/// swap_probability. Offspring 1 takes parent A's gene where the mask is
/// set and parent B's where it is clear; offspring 2 uses the inverse mask.
/// Product labels stay with their lineage parent and are never exchanged.
std::pair<Individual, Individual> uniform_crossover(const Individual& parent_a,
                                                    const Individual& parent_b,
                                                    double swap_probability, Rng& rng);

struct MutationOutcome {
    Individual individual;
    int changed = 0; // positions whose value differs from the input
    int skipped = 0; // chosen positions with no alternative value to draw
};

/// Replace the genes at k distinct random positions with fresh draws
/// (from the product's per-position value pool, or from the bounds when the
/// policy is uniform-bounds), re-drawing until the value actually changes.
/// Positions whose candidate value set has fewer than two elements are left
/// unchanged and reported in `skipped`. The input is not modified.
MutationOutcome mutate(const Individual& individual, int mutation_points, const Dataset& dataset,
                       const GenerationPolicy& policy, Rng& rng);

/// Run the full loop: seed population_size random individuals, then per
/// iteration inject one fresh random individual, breed the two best
/// (uniform crossover with probability crossover_rate, cloning otherwise),
/// mutate both offspring, and keep the population_size best of everything
/// seen this iteration. Stops on the iteration budget or once the best
/// fitness has not strictly improved for stabilization_window consecutive
/// iterations. Deterministic for a given (dataset, config) including seed.
OptimizationResult evolve(const Dataset& dataset, const GaConfig& config);

} // namespace invga
