#pragma once

namespace stratalab {

// Budgets for the exhaustive scans.  Defaults let every supported group run
// (largest is W(D7), 322560 elements) while anything bigger fails loudly.
struct Config {
    long long scan_budget = 1'000'000; // max |W| for whole-group enumeration
    int rigidity_bound = 14;           // max natural-module dimension for rigidity searches
    int poset_bound = 12;              // max n for the sl_n sheet poset
};

} // namespace stratalab
