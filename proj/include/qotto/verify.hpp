#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qotto/spin_algebra.hpp"

namespace qotto {

struct SuiteResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // largest residual observed
    double tolerance = 0.0;  // bound it was held to
    std::string detail;
};

using LevelsProvider = std::function<std::vector<double>(SpinKind, double, double)>;

struct VerifyOptions {
    std::uint64_t seed = 42;
    /// Analytic energies checked against the brute-force eigensolver.
    /// Replaceable so that a corrupted spectrum can be shown to be caught.
    LevelsProvider levels;
};

/// Runs every invariant suite in a fixed order. Random draws come from a
/// std::mt19937_64 seeded with options.seed.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

/// Prints one line per suite and returns 0 when all pass, 1 otherwise.
int verify_all(std::uint64_t seed, std::ostream& out);

}  // namespace qotto
