#include "invga/report.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "invga/error.hpp"
#include "invga/io_util.hpp"

namespace invga {

RecommendationReport recommend(const Individual& best, std::span<const std::string> members) {
    if (best.genes.size() != members.size()) {
        throw Error("pattern has " + std::to_string(best.genes.size()) + " genes but " +
                    std::to_string(members.size()) + " member names were given");
    }

    RecommendationReport report;
    report.product_id = best.product_id;
    report.source = best;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const long long gene = best.genes[i];
        if (gene == 0) {
            continue;
        }
        report.lines.push_back(RecommendationLine{
            members[i],
            gene > 0 ? Direction::Decrease : Direction::Increase,
            std::llabs(gene),
        });
    }
    return report;
}

std::string render_action_table(const RecommendationReport& report) {
    std::ostringstream out;
    for (const auto& line : report.lines) {
        out << line.member << ": "
            << (line.direction == Direction::Decrease ? "decrease" : "increase") << ' '
            << line.magnitude << " units\n";
    }
    return out.str();
}

std::string render_report(const RecommendationReport& report, long long n_total) {
    std::ostringstream out;
    out << "product " << report.product_id << "\n";
    out << "pattern:";
    for (const long long gene : report.source.genes) {
        out << ' ' << gene;
    }
    out << "\n";
    if (report.source.occurrence && report.source.fitness) {
        const double probability =
            static_cast<double>(*report.source.occurrence) / static_cast<double>(n_total);
        out << "occurrence: " << *report.source.occurrence << " of " << n_total << " records\n";
        out << "fitness: " << to_string(*report.source.fitness)
            << " (pattern probability " << format_g17(probability) << ")\n";
    }
    if (report.lines.empty()) {
        out << "no adjustments: every member is on target\n";
    } else {
        out << "recommended adjustments:\n";
        for (const auto& line : report.lines) {
            out << "  " << line.member << ": "
                << (line.direction == Direction::Decrease ? "decrease" : "increase") << ' '
                << line.magnitude << " units\n";
        }
    }
    return out.str();
}

} // namespace invga
