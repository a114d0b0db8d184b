#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "golay486/constructions.hpp"

// One-shot verification of every claim about the 486-vertex graphs, with a versioned JSON form.
namespace golay486::report {

using constructions::Claim;
using constructions::Verdict;

inline constexpr int kSchemaVersion = 1;

struct StageTiming {
    std::string stage;
    double seconds = 0.0;

    bool operator==(const StageTiming&) const = default;
};

struct VerificationReport {
    int schema_version = kSchemaVersion;
    std::vector<Claim> claims;
    std::vector<StageTiming> timings;
    bool overall = false;

    /// True when no claim failed. Skipped claims do not count against it.
    bool all_passed() const noexcept;
    /// Id of the first failing claim, if any.
    std::optional<std::string> first_failure() const;
    std::size_t count(Verdict v) const noexcept;
};

struct VerifyOptions {
    /// Generator file to load instead of the bundled asset.
    std::optional<std::string> generator_path;
    std::uint64_t seed = permaction::kDefaultSeed;
    /// Claim groups to skip; a group is the id prefix before the first '.'.
    std::set<std::string> skip;
    graph::IsomorphismOptions isomorphism;
};

/// Claim group names accepted by VerifyOptions::skip.
const std::vector<std::string>& claim_groups();

/// Runs the full pipeline. Throws DataError or ParseError when the generator file is
/// missing or unreadable; claim failures are recorded in the report instead.
VerificationReport verify_all(const VerifyOptions& options = {});

std::string to_json(const VerificationReport& report, int indent = 2);
/// Throws ParseError on malformed input or an unknown schema version.
VerificationReport from_json(std::string_view text);

/// Fixed-width table, one claim per line, then the overall verdict.
std::string to_text(const VerificationReport& report);

}  // namespace golay486::report
