#pragma once

#include <string>
#include <vector>

namespace anst {

enum class SelfTestLevel { Quick, Full };

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> samples;   // first few failure descriptions
};

struct SelfTestReport {
    std::string level;
    std::vector<SuiteResult> suites;

    bool ok() const;
};

// quick: exhaustive up to n = 5. full: up to n = 7, with KL sampled beyond S_5.
// inject_fault corrupts one cached KL polynomial first; the KL suite must then fail.
SelfTestReport run_selftest(SelfTestLevel level, bool inject_fault = false);

} // namespace anst
