#pragma once

// Criteria reports for a spec file: each entry is a key and a value, shown
// either as readable lines or as key=value lines for machines.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibtc/specfile.hpp"

namespace fibtc {

struct CriteriaOptions {
    std::optional<int> k_max;
    std::optional<CoefficientRing> coefficients;
};

struct ReportEntry {
    std::string key;
    std::string value;
    /// Readable form; empty for entries that only appear in machine output.
    std::string text;
};

struct CriteriaReport {
    std::vector<ReportEntry> entries;
    /// An internal cross-check disagreed.
    bool check_failed = false;

    std::string human() const;
    std::string machine() const;
    /// First value under the key, if any.
    std::optional<std::string> value(std::string_view key) const;
};

CriteriaReport run_criteria(const SpecFile& spec, const CriteriaOptions& options);

/// The completed presentation named by `which` (proj, qtilde, grassmann,
/// feder) as text.
std::string dump_ring(const SpecFile& spec, std::string_view which,
                      std::optional<CoefficientRing> coefficients = std::nullopt);

}  // namespace fibtc
