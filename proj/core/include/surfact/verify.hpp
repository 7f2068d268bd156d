#pragma once

#include <string>
#include <vector>

#include "surfact/classify.hpp"

namespace surfact {

struct VerifyOptions {
    int q_lo = 7;
    int q_hi = 61;
    int q_ceiling = 101; // BoundExceeded above this
    ClassifyOptions classify;
};

struct VerifyResult {
    std::vector<int> primes;
    std::vector<std::string> failures; // hard assertion failures
    std::vector<std::string> flags;    // reported deviations that do not fail
    int reports = 0;

    bool ok() const { return failures.empty(); }
};

/**
 * Re-derives the classification for every prime q in range and asserts the
 * predicted orbit counts, extension verdicts, admissibility equalities and
 * decomposition dimension sums for lambda in {3,5,6}.
 */
VerifyResult run_verify(const VerifyOptions& opts = {});

std::string verify_summary(const VerifyResult& result);

} // namespace surfact
