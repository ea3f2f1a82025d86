#include "invga/synth.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include <json.hpp>

#include "invga/error.hpp"
#include "invga/record.hpp"
#include "invga/rng.hpp"

namespace invga {

namespace {

using RecordSet = std::unordered_set<InventoryRecord, RecordHash, RecordEq>;

bool range_contains_zero(long long lo, long long hi) { return lo <= 0 && 0 <= hi; }

/// Distinct nonzero values one field can take.
long long field_domain_size(const SynthSpec& spec) {
    long long size = spec.noise_upper - spec.noise_lower + 1;
    if (range_contains_zero(spec.noise_lower, spec.noise_upper)) {
        --size;
    }
    return size;
}

constexpr long long kCapacityCeiling = std::numeric_limits<long long>::max() / 4;

/// |products| * V^n, saturating well below overflow.
long long row_domain_size(const SynthSpec& spec) {
    const long long v = field_domain_size(spec);
    long long capacity = 1;
    for (std::size_t i = 0; i < spec.n_members; ++i) {
        if (capacity > kCapacityCeiling / v) {
            return kCapacityCeiling;
        }
        capacity *= v;
    }
    const auto n_products = static_cast<long long>(spec.products.size());
    if (capacity > kCapacityCeiling / n_products) {
        return kCapacityCeiling;
    }
    return capacity * n_products;
}

bool in_noise_domain(const SynthSpec& spec, const InventoryRecord& rec) {
    if (std::find(spec.products.begin(), spec.products.end(), rec.product_id) ==
        spec.products.end()) {
        return false;
    }
    for (const long long d : rec.deviations) {
        if (d == 0 || d < spec.noise_lower || d > spec.noise_upper) {
            return false;
        }
    }
    return true;
}

long long draw_nonzero_field(const SynthSpec& spec, Rng& rng) {
    while (true) {
        const long long v = rng.uniform_int(spec.noise_lower, spec.noise_upper);
        if (v != 0) {
            return v;
        }
    }
}

InventoryRecord draw_noise_row(const SynthSpec& spec, Rng& rng) {
    InventoryRecord rec;
    rec.product_id = spec.products[rng.uniform_index(spec.products.size())];
    rec.deviations.reserve(spec.n_members);
    for (std::size_t i = 0; i < spec.n_members; ++i) {
        rec.deviations.push_back(draw_nonzero_field(spec, rng));
    }
    return rec;
}

/// Every row of the noise domain in a fixed order: products as listed,
/// genes in mixed-radix ascending order over the nonzero values.
std::vector<InventoryRecord> enumerate_noise_domain(const SynthSpec& spec,
                                                    const RecordSet& excluded) {
    std::vector<long long> values;
    values.reserve(static_cast<std::size_t>(field_domain_size(spec)));
    for (long long v = spec.noise_lower; v <= spec.noise_upper; ++v) {
        if (v != 0) {
            values.push_back(v);
        }
    }

    std::vector<InventoryRecord> rows;
    for (const long long product : spec.products) {
        std::vector<std::size_t> digits(spec.n_members, 0);
        bool exhausted = false;
        while (!exhausted) {
            InventoryRecord rec;
            rec.product_id = product;
            rec.deviations.reserve(spec.n_members);
            for (const std::size_t d : digits) {
                rec.deviations.push_back(values[d]);
            }
            if (!excluded.contains(rec)) {
                rows.push_back(std::move(rec));
            }

            std::size_t pos = spec.n_members;
            while (true) {
                if (pos == 0) {
                    exhausted = true; // carried out of the leading digit
                    break;
                }
                --pos;
                if (++digits[pos] < values.size()) {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
    return rows;
}

} // namespace

void SynthSpec::validate() const {
    if (n_members < 1) {
        throw Error("n_members must be >= 1");
    }
    if (products.empty()) {
        throw Error("products must be nonempty");
    }
    for (const long long p : products) {
        if (p <= 0) {
            throw Error("product ids must be positive");
        }
    }
    if (total_records < 1) {
        throw Error("total_records must be >= 1");
    }
    if (noise_lower > noise_upper) {
        throw Error("noise range is empty: lower > upper");
    }
    if (field_domain_size(*this) < 1) {
        throw Error("noise range admits no nonzero value");
    }
    if (members && members->size() != n_members) {
        throw Error("members list length must equal n_members");
    }

    long long planted_total = 0;
    for (std::size_t i = 0; i < planted.size(); ++i) {
        const auto& p = planted[i];
        if (p.count < 1) {
            throw Error("planted counts must be >= 1");
        }
        if (p.record.product_id <= 0) {
            throw Error("planted records must carry a positive product id");
        }
        if (p.record.deviations.size() != n_members) {
            throw Error("planted record arity must equal n_members");
        }
        for (const long long d : p.record.deviations) {
            if (d == 0) {
                throw Error("planted records must not contain zero deviations");
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (planted[j].record == p.record) {
                throw Error("planted records must be pairwise distinct");
            }
        }
        planted_total += p.count;
    }
    if (planted_total > total_records) {
        throw Error("planted counts exceed total_records");
    }
}

Dataset generate(const SynthSpec& spec) {
    spec.validate();

    long long planted_total = 0;
    RecordSet planted_set;
    for (const auto& p : spec.planted) {
        planted_total += p.count;
        planted_set.insert(p.record);
    }
    const long long noise_needed = spec.total_records - planted_total;

    Rng rng(spec.seed);
    std::vector<InventoryRecord> rows;
    rows.reserve(static_cast<std::size_t>(spec.total_records));
    for (const auto& p : spec.planted) {
        for (long long c = 0; c < p.count; ++c) {
            rows.push_back(p.record);
        }
    }

    if (noise_needed > 0) {
        long long planted_in_domain = 0;
        for (const auto& p : spec.planted) {
            if (in_noise_domain(spec, p.record)) {
                ++planted_in_domain;
            }
        }
        const long long domain = row_domain_size(spec);
        const long long available = domain - planted_in_domain;
        const long long distinct_needed = spec.guarantee_noise_distinct ? noise_needed : 1;
        if (available < distinct_needed) {
            throw Error("noise range too small: " + std::to_string(available) +
                        " distinct rows available, " + std::to_string(distinct_needed) +
                        " needed");
        }

        if (spec.guarantee_noise_distinct && domain <= 200000) {
            auto domain_rows = enumerate_noise_domain(spec, planted_set);
            rng.shuffle(domain_rows);
            rows.insert(rows.end(), domain_rows.begin(),
                        domain_rows.begin() + static_cast<std::ptrdiff_t>(noise_needed));
        } else {
            RecordSet used;
            long long attempts_left = 100 * noise_needed + 10000;
            for (long long i = 0; i < noise_needed;) {
                if (attempts_left-- == 0) {
                    throw Error("noise sampling stalled: range too tight for the requested "
                                "number of distinct rows");
                }
                InventoryRecord rec = draw_noise_row(spec, rng);
                if (planted_set.contains(rec)) {
                    continue;
                }
                if (spec.guarantee_noise_distinct) {
                    if (used.contains(rec)) {
                        continue;
                    }
                    used.insert(rec);
                }
                rows.push_back(std::move(rec));
                ++i;
            }
        }
    }

    rng.shuffle(rows);

    auto members = spec.members ? *spec.members : default_member_names(spec.n_members);
    return Dataset::build(std::move(members), std::move(rows), 0);
}

SynthSpec parse_synth_spec(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("spec file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error("spec file must be a JSON object");
    }

    SynthSpec spec;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "n_members") {
                spec.n_members = value.get<std::size_t>();
            } else if (key == "products") {
                spec.products = value.get<std::vector<long long>>();
            } else if (key == "total_records") {
                spec.total_records = value.get<long long>();
            } else if (key == "planted") {
                for (const auto& item : value) {
                    PlantedPattern p;
                    for (const auto& [pkey, pvalue] : item.items()) {
                        if (pkey == "product_id") {
                            p.record.product_id = pvalue.get<long long>();
                        } else if (pkey == "deviations") {
                            p.record.deviations = pvalue.get<std::vector<long long>>();
                        } else if (pkey == "count") {
                            p.count = pvalue.get<long long>();
                        } else {
                            throw Error("unknown key in planted entry: '" + pkey + "'");
                        }
                    }
                    spec.planted.push_back(std::move(p));
                }
            } else if (key == "noise") {
                for (const auto& [nkey, nvalue] : value.items()) {
                    if (nkey == "lower") {
                        spec.noise_lower = nvalue.get<long long>();
                    } else if (nkey == "upper") {
                        spec.noise_upper = nvalue.get<long long>();
                    } else if (nkey == "distinct") {
                        spec.guarantee_noise_distinct = nvalue.get<bool>();
                    } else {
                        throw Error("unknown key in noise block: '" + nkey + "'");
                    }
                }
            } else if (key == "seed") {
                spec.seed = value.get<std::uint64_t>();
            } else if (key == "members") {
                spec.members = value.get<std::vector<std::string>>();
            } else {
                throw Error("unknown key in spec file: '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("spec file field has the wrong type: ") + e.what());
    }

    spec.validate();
    return spec;
}

std::string manifest_json(const SynthSpec& spec, const Dataset& dataset) {
    nlohmann::json doc;
    doc["members"] = dataset.members();
    doc["n_members"] = spec.n_members;
    doc["noise"] = {{"distinct", spec.guarantee_noise_distinct},
                    {"lower", spec.noise_lower},
                    {"upper", spec.noise_upper}};
    doc["planted"] = nlohmann::json::array();
    for (const auto& p : spec.planted) {
        doc["planted"].push_back({{"count", p.count},
                                  {"deviations", p.record.deviations},
                                  {"product_id", p.record.product_id}});
    }
    doc["products"] = spec.products;
    doc["seed"] = spec.seed;
    doc["total_records"] = spec.total_records;
    return doc.dump(2) + "\n";
}

} // namespace invga
