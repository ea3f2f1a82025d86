#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "invga/error.hpp"

namespace invga {

/// Fitness of a candidate pattern: ln(1 - occurrences/total).
///
/// The value is 0 for a pattern never observed, strictly negative otherwise,
/// and -infinity when the pattern accounts for every record. Lower is
/// better; -infinity orders below every finite value. Never NaN.
class Fitness {
  public:
    Fitness() = default;

    static Fitness from_counts(long long occurrences, long long total) {
        if (total < 1) {
            throw Error("fitness: total record count must be >= 1");
        }
        if (occurrences < 0 || occurrences > total) {
            throw Error("fitness: occurrence count out of range 0..total");
        }
        if (occurrences == 0) {
            return Fitness{0.0};
        }
        if (occurrences == total) {
            return minus_infinity();
        }
        const double ratio = static_cast<double>(occurrences) / static_cast<double>(total);
        return Fitness{std::log1p(-ratio)};
    }

    static Fitness minus_infinity() {
        return Fitness{-std::numeric_limits<double>::infinity()};
    }

    double value() const { return value_; }
    bool is_minus_infinity() const { return std::isinf(value_); }

    friend auto operator<=>(const Fitness&, const Fitness&) = default;

  private:
    explicit Fitness(double value) : value_(value) {}
    double value_ = 0.0;
};

/// "-inf" for the sentinel, otherwise %.17g (shortest exact round-trip
/// is not needed; 17 significant digits are).
std::string to_string(Fitness f);

} // namespace invga
