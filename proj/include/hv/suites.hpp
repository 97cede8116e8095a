#pragma once

#include "hv/config.hpp"

namespace hv {

struct SuiteResult {
    std::string name;
    bool pass = true;
    int samples = 0;
    long long millis = 0;
    Json counterexample;  // null when passing; otherwise inputs + seed + index
};

struct Report {
    uint64_t seed = 0;
    Json group;
    std::vector<SuiteResult> suites;

    bool all_pass() const {
        for (const auto& s : suites)
            if (!s.pass) return false;
        return true;
    }
    Json to_json() const;
};

const std::vector<std::string>& all_suite_names();

// Runs the selected suites (all when cfg.suites is absent); deterministic for
// a fixed (config, seed) apart from the timing fields.
Report run_suites(const RunConfig& cfg);

}  // namespace hv
