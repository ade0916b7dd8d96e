#pragma once

#include "shapovalov/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shapovalov {

struct SweepConfig {
    std::vector<std::string> types;
    int m_max = 3;
    int samples = 5;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    bool universal = true;
    bool oracle = true;
};

struct SweepRow {
    std::string type;
    Root beta;
    std::optional<int> alpha;  // 0-based
    int m = 0;
    int sample = 0;
    std::optional<Weight> lambda;
    /// "ok", "fail", "skipped: inadmissible", "sampling exhausted"
    std::string status;
    bool extremal = false;
    bool oracle_match = false;
    std::size_t kernel_dim = 0;
    std::optional<bool> universal_match;
    std::optional<bool> plain_power_match;
    std::size_t terms = 0;
    std::string note;

    bool passed() const { return status == "ok" || status == "skipped: inadmissible"; }
};

struct SweepReport {
    SweepConfig config;
    std::vector<SweepRow> rows;

    bool all_passed() const;
    std::size_t count(const std::string& status) const;
};

/// Every compound positive root × admissible α × m ≤ m_max × samples. Rows come
/// out in canonical order (type, root order, α, m, sample) whatever `jobs` is.
SweepReport run_sweep(const SweepConfig& config);

Json to_json(const SweepRow& row);
Json to_json(const SweepReport& report);

}  // namespace shapovalov
