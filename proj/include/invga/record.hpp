#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace invga {

/// One historical observation: a product id plus the signed stock deviation
/// seen at each chain member (positive = excess units, negative = shortage).
struct InventoryRecord {
    long long product_id = 0;
    std::vector<long long> deviations;

    friend bool operator==(const InventoryRecord&, const InventoryRecord&) = default;
};

/// Borrowed view of a record's content, used for hash lookups without
/// materializing an InventoryRecord.
struct RecordView {
    long long product_id = 0;
    std::span<const long long> deviations;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::size_t hash_record(long long product_id, std::span<const long long> deviations) {
    std::uint64_t h = mix64(static_cast<std::uint64_t>(product_id));
    for (const long long d : deviations) {
        h = mix64(h ^ mix64(static_cast<std::uint64_t>(d)));
    }
    return static_cast<std::size_t>(h);
}

inline bool record_eq(long long pid_a, std::span<const long long> dev_a, long long pid_b,
                      std::span<const long long> dev_b) {
    if (pid_a != pid_b || dev_a.size() != dev_b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < dev_a.size(); ++i) {
        if (dev_a[i] != dev_b[i]) {
            return false;
        }
    }
    return true;
}

} // namespace detail

struct RecordHash {
    using is_transparent = void;
    std::size_t operator()(const InventoryRecord& r) const {
        return detail::hash_record(r.product_id, r.deviations);
    }
    std::size_t operator()(const RecordView& r) const {
        return detail::hash_record(r.product_id, r.deviations);
    }
};

struct RecordEq {
    using is_transparent = void;
    bool operator()(const InventoryRecord& a, const InventoryRecord& b) const {
        return detail::record_eq(a.product_id, a.deviations, b.product_id, b.deviations);
    }
    bool operator()(const RecordView& a, const InventoryRecord& b) const {
        return detail::record_eq(a.product_id, a.deviations, b.product_id, b.deviations);
    }
    bool operator()(const InventoryRecord& a, const RecordView& b) const {
        return detail::record_eq(a.product_id, a.deviations, b.product_id, b.deviations);
    }
};

} // namespace invga
