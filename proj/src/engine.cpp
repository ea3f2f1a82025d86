#include "invga/engine.hpp"

#include <algorithm>
#include <numeric>

#include "invga/error.hpp"
#include "invga/io_util.hpp"

namespace invga {

std::string to_string(Fitness f) {
    if (f.is_minus_infinity()) {
        return "-inf";
    }
    return format_g17(f.value());
}

std::string to_string(StopReason reason) {
    switch (reason) {
    case StopReason::BudgetExhausted:
        return "budget-exhausted";
    case StopReason::Stabilized:
        return "stabilized";
    }
    throw Error("unreachable stop reason");
}

namespace {

/// Distinct values a mutated gene may take at (product, position);
/// [lower, upper] minus {0} for bounds policies, the observed pool otherwise.
long long candidate_count(const Dataset& dataset, long long product_id, std::size_t position,
                          const GenerationPolicy& policy) {
    if (policy.kind == GenerationPolicy::Kind::UniformBounds) {
        long long count = policy.upper - policy.lower + 1;
        if (policy.lower <= 0 && 0 <= policy.upper) {
            --count;
        }
        return count;
    }
    return static_cast<long long>(dataset.value_pool(product_id, position).size());
}

long long draw_bounded_nonzero(const GenerationPolicy& policy, Rng& rng) {
    while (true) {
        const long long value = rng.uniform_int(policy.lower, policy.upper);
        if (value != 0) {
            return value;
        }
    }
}

} // namespace

Individual random_individual(const Dataset& dataset, const GenerationPolicy& policy, Rng& rng) {
    if (dataset.total_records() == 0) {
        throw Error("cannot generate individuals from an empty dataset");
    }

    Individual out;
    switch (policy.kind) {
    case GenerationPolicy::Kind::RecordSeeded: {
        const auto& rec = dataset.records()[rng.uniform_index(dataset.records().size())];
        out.product_id = rec.product_id;
        out.genes = rec.deviations;
        return out;
    }
    case GenerationPolicy::Kind::PoolSampled: {
        const auto& products = dataset.product_ids();
        out.product_id = products[rng.uniform_index(products.size())];
        out.genes.reserve(dataset.member_count());
        for (std::size_t pos = 0; pos < dataset.member_count(); ++pos) {
            const auto& pool = dataset.value_pool(out.product_id, pos);
            if (pool.empty()) {
                throw Error("empty value pool for product " + std::to_string(out.product_id) +
                            " at position " + std::to_string(pos));
            }
            out.genes.push_back(pool[rng.uniform_index(pool.size())]);
        }
        return out;
    }
    case GenerationPolicy::Kind::UniformBounds: {
        const auto& products = dataset.product_ids();
        out.product_id = products[rng.uniform_index(products.size())];
        out.genes.reserve(dataset.member_count());
        for (std::size_t pos = 0; pos < dataset.member_count(); ++pos) {
            out.genes.push_back(draw_bounded_nonzero(policy, rng));
        }
        return out;
    }
    }
    throw Error("unreachable generation policy kind");
}

Fitness evaluate(Individual& individual, const Dataset& dataset) {
    const long long count = dataset.count_occurrences(individual.product_id, individual.genes);
    const Fitness f = Fitness::from_counts(count, static_cast<long long>(dataset.total_records()));
    individual.occurrence = count;
    individual.fitness = f;
    return f;
}

std::pair<Individual, Individual> select(std::span<const Individual> population) {
    if (population.size() < 2) {
        throw Error("selection needs a population of at least 2");
    }
    for (const auto& ind : population) {
        if (!ind.fitness) {
            throw Error("selection requires every individual to be evaluated");
        }
    }

    std::size_t first = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
        if (*population[i].fitness < *population[first].fitness) {
            first = i;
        }
    }
    std::size_t second = first == 0 ? 1 : 0;
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (i == first) {
            continue;
        }
        if (*population[i].fitness < *population[second].fitness) {
            second = i;
        }
    }
    return {population[first], population[second]};
}

std::pair<Individual, Individual> uniform_crossover(const Individual& parent_a,
                                                    const Individual& parent_b,
                                                    double swap_probability, Rng& rng) {
    if (parent_a.genes.size() != parent_b.genes.size()) {
        throw Error("crossover parents have different gene counts");
    }
    const std::size_t n = parent_a.genes.size();

    Individual child_a;
    Individual child_b;
    child_a.product_id = parent_a.product_id;
    child_b.product_id = parent_b.product_id;
    child_a.genes.reserve(n);
    child_b.genes.reserve(n);

    for (std::size_t i = 0; i < n; ++i) {
        const bool mask = rng.bernoulli(swap_probability);
        child_a.genes.push_back(mask ? parent_a.genes[i] : parent_b.genes[i]);
        child_b.genes.push_back(mask ? parent_b.genes[i] : parent_a.genes[i]);
    }
    return {std::move(child_a), std::move(child_b)};
}

MutationOutcome mutate(const Individual& individual, int mutation_points, const Dataset& dataset,
                       const GenerationPolicy& policy, Rng& rng) {
    const std::size_t n = individual.genes.size();
    if (mutation_points < 0) {
        throw Error("mutation point count must be >= 0");
    }
    if (static_cast<std::size_t>(mutation_points) > n) {
        throw Error("mutation point count " + std::to_string(mutation_points) +
                    " exceeds gene count " + std::to_string(n));
    }

    MutationOutcome out;
    out.individual.product_id = individual.product_id;
    out.individual.genes = individual.genes;

    const auto positions = rng.sample_distinct(static_cast<std::size_t>(mutation_points), n);
    for (const std::size_t pos : positions) {
        if (candidate_count(dataset, individual.product_id, pos, policy) < 2) {
            ++out.skipped;
            continue;
        }
        const long long old_value = individual.genes[pos];
        long long fresh = old_value;
        if (policy.kind == GenerationPolicy::Kind::UniformBounds) {
            while (fresh == old_value) {
                fresh = draw_bounded_nonzero(policy, rng);
            }
        } else {
            const auto& pool = dataset.value_pool(individual.product_id, pos);
            while (fresh == old_value) {
                fresh = pool[rng.uniform_index(pool.size())];
            }
        }
        out.individual.genes[pos] = fresh;
        ++out.changed;
    }
    return out;
}

OptimizationResult evolve(const Dataset& dataset, const GaConfig& config) {
    config.validate();
    if (static_cast<std::size_t>(config.mutation_points) > dataset.member_count()) {
        throw Error("mutation_points " + std::to_string(config.mutation_points) +
                    " exceeds the member count " + std::to_string(dataset.member_count()));
    }

    Rng rng(config.seed);

    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(config.population_size) + 3);
    for (int i = 0; i < config.population_size; ++i) {
        population.push_back(random_individual(dataset, config.generation_policy, rng));
        evaluate(population.back(), dataset);
    }
    long long evaluations = config.population_size;

    const auto best_index = [](const std::vector<Individual>& pool) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pool.size(); ++i) {
            if (*pool[i].fitness < *pool[best].fitness) {
                best = i;
            }
        }
        return best;
    };

    OptimizationResult result;
    result.best = population[best_index(population)];
    result.trace.push_back(TraceRow{0, *result.best.fitness, *result.best.occurrence});

    int stale_iterations = 0;
    StopReason reason = StopReason::BudgetExhausted;

    for (int iteration = 1; iteration < config.max_iterations; ++iteration) {
        population.push_back(random_individual(dataset, config.generation_policy, rng));
        evaluate(population.back(), dataset);
        ++evaluations;

        auto [parent_a, parent_b] = select(std::span<const Individual>(population));

        std::pair<Individual, Individual> bred;
        if (rng.bernoulli(config.crossover_rate)) {
            bred = uniform_crossover(parent_a, parent_b, config.swap_probability, rng);
        } else {
            bred = {parent_a, parent_b}; // cloning
        }

        auto mutated_a =
            mutate(bred.first, config.mutation_points, dataset, config.generation_policy, rng);
        auto mutated_b =
            mutate(bred.second, config.mutation_points, dataset, config.generation_policy, rng);
        population.push_back(std::move(mutated_a.individual));
        evaluate(population.back(), dataset);
        population.push_back(std::move(mutated_b.individual));
        evaluate(population.back(), dataset);
        evaluations += 2;

        // Truncation elitism: keep the population_size best, stable in
        // creation order so ties never reshuffle survivors.
        std::vector<std::size_t> order(population.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return *population[a].fitness < *population[b].fitness;
        });
        order.resize(static_cast<std::size_t>(config.population_size));
        std::sort(order.begin(), order.end());
        std::vector<Individual> survivors;
        survivors.reserve(population.capacity());
        for (const std::size_t idx : order) {
            survivors.push_back(std::move(population[idx]));
        }
        population = std::move(survivors);

        const Individual& champion = population[best_index(population)];
        if (*champion.fitness < *result.best.fitness) {
            result.best = champion;
            stale_iterations = 0;
        } else {
            ++stale_iterations;
        }
        result.trace.push_back(
            TraceRow{iteration, *result.best.fitness, *result.best.occurrence});

        if (config.stabilization_window > 0 && stale_iterations >= config.stabilization_window) {
            reason = StopReason::Stabilized;
            break;
        }
    }

    result.evaluations = evaluations;
    result.stop_reason = reason;
    return result;
}

} // namespace invga
