#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stop_token>
#include <string>
#include <vector>

#include <json.hpp>

namespace treepack::tools {

struct SuiteOptions {
    std::uint64_t oracle_budget = 200'000'000;
    std::stop_token stop;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    int passed = 0;
    std::vector<std::string> failures;  // first kMaxFailures descriptions
    nlohmann::json details = nlohmann::json::object();
    double seconds = 0;

    static constexpr std::size_t kMaxFailures = 20;

    bool ok() const { return cases > 0 && passed == cases; }
    void record(bool pass, const std::string& what);
    // Timings are left out unless asked for, so equal seeds give equal bytes.
    std::string to_json(bool with_timing = false) const;
    std::string to_human() const;
};

using SuiteFn = std::function<SuiteReport(std::uint64_t seed, const SuiteOptions&)>;

struct SuiteInfo {
    std::string name;
    std::string description;
    SuiteFn run;
};

const std::vector<SuiteInfo>& registered_suites();

// Runs a registered suite and fills in name, seed and wall time. Throws
// InputError for unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, const SuiteOptions& options = {});

// Pinned parameters shared by the suites and the acceptance binary.
namespace pinned {
inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr int kCliqueGraphs = 200;
inline constexpr int kHpackSmallGraphs = 100;
inline constexpr int kHpackTreeGraphs = 50;
inline constexpr int kJoinPairs = 1000;
// H-DP witnesses are rebuilt only when all tables together hold at most this
// many entries.
inline constexpr std::size_t kHpackWitnessEntries = 2'000'000;
inline constexpr int kMultiSingleGraphs = 50;
inline constexpr int kCspInstances = 20;
// Bag-size law for the CSP reduction: |bag| <= ell * (p + 1) + kCspGadgetConstant.
inline constexpr int kCspGadgetConstant = 64;
// Width law for the permutation reduction with H = C_4: width <= alpha * k.
inline constexpr int kPermAlpha = 24;
inline constexpr double kGadgetSecondsLimit = 300.0;
}  // namespace pinned

}  // namespace treepack::tools
