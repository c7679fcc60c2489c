#pragma once

// Machine checks for every finitely-verifiable statement the library rests
// on.  The CLI `verify` subcommand and the acceptance suite both run these;
// report lines carry no timing data so output is byte-stable across runs.

#include <string>
#include <vector>

#include "stratalab/config.hpp"

namespace stratalab {

struct CheckResult {
    std::string name;
    std::string scope; // type label + rank, or "-" for global checks
    bool pass = false;
    std::string detail;

    std::string line() const {
        return std::string(pass ? "[PASS] " : "[FAIL] ") + name + " " + scope +
               (detail.empty() ? "" : ": " + detail);
    }
};

// Checks taking a group: kostant, graded-involutions, lemma-involutions,
// t-m-decomposition, bruhat-antiiso, wc-partition, mcninch-bound.
// Global checks: codim-induction, d4-counterexample, sln-counterexample.
bool check_needs_group(const std::string& name);
std::vector<std::string> known_checks();

CheckResult run_group_check(const std::string& name, char label, int rank, const Config& cfg);
CheckResult run_global_check(const std::string& name, const Config& cfg);

// The default support matrix per check, as (label, rank) pairs.
std::vector<std::pair<char, int>> default_scope(const std::string& name);

// Deterministic full report; returns all results in order.
std::vector<CheckResult> run_all_checks(const Config& cfg);

} // namespace stratalab
