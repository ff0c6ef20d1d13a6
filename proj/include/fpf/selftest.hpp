#ifndef FPF_SELFTEST_HPP
#define FPF_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpf/linkage.hpp"
#include "fpf/testkit.hpp"

// Property suites runnable from the command line: the duality, satellite,
// defect and linkage laws on seeded random instances over one ring.
// A failed sound check is a failure; Unknown isomorphism decisions count as
// skips, never as failures.

namespace fpf {

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    int skipped = 0;
    std::vector<std::string> failure_notes;
};

struct SelftestReport {
    RingSpec ring;
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool ok() const {
        for (const auto& s : suites)
            if (s.failures > 0) return false;
        return true;
    }
};

SelftestReport selftest(const RingSpec& ring, std::uint64_t seed,
                        const IsoBudget& budget);

}  // namespace fpf

#endif
