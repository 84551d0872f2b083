#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopforge/loop.hpp"

namespace loopforge {

/// What a verification run ranges over.
struct ScanScope {
    int min_order = 1;
    int max_order = 5;
    int threads = 1;
};

enum class VerifyStatus {
    confirmed_exhaustive,  // every instance in scope checked, none violated
    confirmed_sampled,     // no violation, but part of the space was sampled/truncated
    counterexample,        // at least one hypothesis-satisfying instance violated
    vacuous,               // the hypothesis never held in scope; NOT a confirmation
};

std::string to_string(VerifyStatus s);

/// Result of scanning one registered claim. Counterexample witnesses carry
/// full reproduction data and re-verify through recheck_witness().
struct VerificationReport {
    std::string claim;
    std::string description;
    std::string scope_text;
    VerifyStatus status = VerifyStatus::vacuous;
    long instances_seen = 0;     // instances visited
    long instances_checked = 0;  // hypothesis-satisfying instances evaluated
    long vacuous_instances = 0;  // instances whose hypothesis failed
    long violations = 0;
    std::vector<std::pair<std::string, long>> stages;  // hypothesis-survival pipeline
    std::vector<nlohmann::json> witnesses;             // at most a handful, first ones
    nlohmann::json details;

    nlohmann::json to_json() const;
    std::string to_table() const;  // human-readable block
};

struct ClaimInfo {
    std::string id;
    std::string description;
};

/// Stable ids of every registered claim, in catalogue order.
std::vector<ClaimInfo> registered_claims();

bool is_registered_claim(const std::string& id);

/// Exhaustively evaluates the claim over every instance in scope.
/// Throws UnknownClaim for unregistered ids.
VerificationReport verify(const std::string& claim, const ScanScope& scope);

/// Random search for a violating instance beyond the exhaustive caps.
/// Deterministic per (claim, budget, seed); `budget` counts sampled instances,
/// hypothesis-satisfying or not. Returns the first witness found, if any.
std::optional<nlohmann::json> find_counterexample(const std::string& claim, long budget,
                                                  std::uint64_t seed);

/// Re-evaluates a witness bundle: true iff its hypothesis holds and its
/// conclusion still fails (i.e. the witness reproduces).
bool recheck_witness(const std::string& claim, const nlohmann::json& witness);

}  // namespace loopforge
