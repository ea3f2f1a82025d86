#include "invga/config.hpp"

#include <charconv>
#include <sstream>

#include "invga/io_util.hpp"

namespace invga {

void GaConfig::validate() const {
    if (max_iterations < 1) {
        throw Error("max_iterations must be >= 1");
    }
    if (stabilization_window < 0) {
        throw Error("stabilization_window must be >= 0");
    }
    if (crossover_rate < 0.0 || crossover_rate > 1.0) {
        throw Error("crossover_rate must be in [0, 1]");
    }
    if (swap_probability < 0.0 || swap_probability > 1.0) {
        throw Error("swap_probability must be in [0, 1]");
    }
    if (mutation_points < 0) {
        throw Error("mutation_points must be >= 0");
    }
    if (population_size < 2) {
        throw Error("population_size must be >= 2");
    }
    if (generation_policy.kind == GenerationPolicy::Kind::UniformBounds) {
        const auto lo = generation_policy.lower;
        const auto hi = generation_policy.upper;
        if (lo >= hi) {
            throw Error("generation bounds require lower < upper");
        }
    }
}

std::string policy_to_string(const GenerationPolicy& policy) {
    switch (policy.kind) {
    case GenerationPolicy::Kind::RecordSeeded:
        return "record-seeded";
    case GenerationPolicy::Kind::PoolSampled:
        return "pool-sampled";
    case GenerationPolicy::Kind::UniformBounds: {
        std::ostringstream out;
        out << "uniform-bounds(" << policy.lower << ',' << policy.upper << ')';
        return out.str();
    }
    }
    throw Error("unreachable generation policy kind");
}

GenerationPolicy policy_from_string(const std::string& text) {
    const std::string_view s = trim(text);
    if (s == "record-seeded") {
        return GenerationPolicy::record_seeded();
    }
    if (s == "pool-sampled") {
        return GenerationPolicy::pool_sampled();
    }
    const std::string_view prefix = "uniform-bounds(";
    if (s.substr(0, prefix.size()) == prefix && !s.empty() && s.back() == ')') {
        const auto body = s.substr(prefix.size(), s.size() - prefix.size() - 1);
        const auto comma = body.find(',');
        if (comma != std::string_view::npos) {
            const auto lo = parse_int64(trim(body.substr(0, comma)));
            const auto hi = parse_int64(trim(body.substr(comma + 1)));
            if (lo && hi) {
                return GenerationPolicy::uniform_bounds(*lo, *hi);
            }
        }
    }
    throw Error("unknown generation policy: '" + std::string(s) +
                "' (expected record-seeded, pool-sampled, or uniform-bounds(lo,hi))");
}

GaConfig parse_ga_config(const std::string& text) {
    GaConfig config;
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;

    const auto parse_error = [&](const std::string& why) {
        return Error("config line " + std::to_string(line_number) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++line_number;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw parse_error("expected key = value");
        }
        const std::string key(trim(stripped.substr(0, eq)));
        const std::string value(trim(stripped.substr(eq + 1)));
        if (key.empty()) {
            throw parse_error("empty key");
        }
        if (value.empty()) {
            throw parse_error("empty value for key '" + key + "'");
        }

        const auto as_int = [&](int lo_ok) {
            const auto v = parse_int64(value);
            if (!v) {
                throw parse_error("'" + key + "' must be an integer, got '" + value + "'");
            }
            if (*v < lo_ok) {
                throw parse_error("'" + key + "' must be >= " + std::to_string(lo_ok));
            }
            return static_cast<int>(*v);
        };
        const auto as_double = [&]() {
            const auto v = parse_double(value);
            if (!v) {
                throw parse_error("'" + key + "' must be a number, got '" + value + "'");
            }
            return *v;
        };

        if (key == "max_iterations") {
            config.max_iterations = as_int(1);
        } else if (key == "stabilization_window") {
            config.stabilization_window = as_int(0);
        } else if (key == "crossover_rate") {
            config.crossover_rate = as_double();
        } else if (key == "swap_probability") {
            config.swap_probability = as_double();
        } else if (key == "mutation_points") {
            config.mutation_points = as_int(0);
        } else if (key == "generation_policy") {
            config.generation_policy = policy_from_string(value);
        } else if (key == "population_size") {
            config.population_size = as_int(2);
        } else if (key == "seed") {
            std::uint64_t v = 0;
            const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || end != value.data() + value.size()) {
                throw parse_error("'seed' must be a non-negative integer, got '" + value + "'");
            }
            config.seed = v;
        } else {
            throw parse_error("unknown key '" + key + "'");
        }
    }

    config.validate();
    return config;
}

} // namespace invga
