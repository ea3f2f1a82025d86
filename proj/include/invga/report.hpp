#pragma once

#include <span>
#include <string>
#include <vector>

#include "invga/engine.hpp"

namespace invga {

enum class Direction { Decrease, Increase };

struct RecommendationLine {
    std::string member;
    Direction direction = Direction::Decrease;
    long long magnitude = 0; // always positive
};

/// Per-member stock adjustments derived from the best pattern: a positive
/// gene is predicted excess (decrease by that amount), a negative gene is
/// predicted shortage (increase by its absolute value). Zero genes emit no
/// line. Line order follows member order.
struct RecommendationReport {
    long long product_id = 0;
    std::vector<RecommendationLine> lines;
    Individual source;
};

RecommendationReport recommend(const Individual& best, std::span<const std::string> members);

/// Just the action lines, one per nonzero gene:
/// "<member>: <decrease|increase> <magnitude> units".
std::string render_action_table(const RecommendationReport& report);

/// Full human-readable report (pattern, occurrence stats, action table).
std::string render_report(const RecommendationReport& report, long long n_total);

} // namespace invga
