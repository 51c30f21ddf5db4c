#pragma once

#include "poramsey/ramsey.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace poramsey::cli {

struct ClaimResult {
    std::string theorem;
    std::string claim;
    bool pass = false;
    double elapsed_ms = 0.0;
    nlohmann::json detail;
};

struct SuiteOptions {
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<std::int64_t> k;
    EnumerationOptions enumeration;
};

/// Canonical selector names, in the order `all` runs them.
const std::vector<std::string> & theorem_ids();

/// Maps aliases to canonical ids; throws UnknownTheoremId.
std::string canonical_theorem_id(const std::string & selector);

/// Runs every claim of the selected group (or all groups), handing each
/// result to emit as soon as it is known. Returns true when all passed.
bool run_suite(const std::string & selector, const SuiteOptions & options, const std::function<void(const ClaimResult &)> & emit);

nlohmann::json to_json(const ClaimResult & r);

} // namespace poramsey::cli
