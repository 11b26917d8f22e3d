// Runs the seeded suites behind acceptance criteria 1-9 and prints one
// PASS/FAIL line per criterion. Optional arguments select criteria by number.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "suites.hpp"
#include "treepack/errors.hpp"

using namespace treepack;
using namespace treepack::tools;

namespace {

// Wall-clock limits in seconds; zero means none.
struct Criterion {
    int id;
    const char* title;
    const char* suite;
    double seconds_limit;
};

constexpr Criterion kCriteria[] = {
    {1, "clique DP equals oracle", "oracle-vs-clique-dp", 600},
    {2, "H-DP equals oracle", "oracle-vs-hpack", 1200},
    {3, "state-space laws", "state-space", 0},
    {4, "naive and convolution joins agree", "join-fidelity", 0},
    {5, "gadget relations realized", "gadget-relations", 0},
    {6, "multi to single equivalence", "multi-to-single", 0},
    {7, "CSP reduction structure", "csp-reduction", 0},
    {8, "permutation reduction structure", "permiset-reduction", 0},
};

void line(int id, bool pass, const std::string& title, const std::string& detail) {
    std::printf("criterion %d: %s  %s  (%s)\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    auto selected = [&](int id) { return wanted.empty() || wanted.count(id) != 0; };

    SuiteOptions opt;
    if (const char* env = std::getenv("TREEPACK_BUDGET")) opt.oracle_budget = std::strtoull(env, nullptr, 10);

    int failed = 0;
    long long partition_checks = 0, partition_mismatches = 0;
    int partition_sources = 0;
    for (const auto& c : kCriteria) {
        bool feeds_nine = c.id <= 2 && selected(9);
        if (!selected(c.id) && !feeds_nine) continue;
        SuiteReport rep;
        std::string error;
        try {
            rep = run_suite(c.suite, pinned::kDefaultSeed, opt);
        } catch (const std::exception& e) {
            error = e.what();
        }
        bool in_time = c.seconds_limit == 0 || rep.seconds < c.seconds_limit;
        bool pass = error.empty() && rep.ok() && in_time;
        if (c.id <= 2 && error.empty()) {
            partition_checks += rep.details.value("partition_checks", 0LL);
            partition_mismatches += rep.details.value("partition_mismatches", 0LL);
            ++partition_sources;
        }
        if (!selected(c.id)) continue;
        std::string detail = error.empty() ? std::to_string(rep.passed) + "/" + std::to_string(rep.cases) + " cases, " +
                                                 std::to_string(rep.seconds) + " s"
                                           : "error: " + error;
        if (!in_time) detail += ", over the " + std::to_string(c.seconds_limit) + " s limit";
        line(c.id, pass, c.title, detail);
        if (!pass) {
            ++failed;
            for (const auto& f : rep.failures) std::cout << "    " << f << "\n";
        }
        if (!rep.details.empty()) std::cout << "    details " << rep.details.dump() << "\n";
    }
    if (selected(9)) {
        bool pass = partition_sources == 2 && partition_checks > 0 && partition_mismatches == 0;
        line(9, pass, "partition equals packing at c*n/|H|",
             std::to_string(partition_checks - partition_mismatches) + "/" + std::to_string(partition_checks) +
                 " checks over criteria 1 and 2");
        failed += !pass;
    }
    return failed == 0 ? 0 : 1;
}
