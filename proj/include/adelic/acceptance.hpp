#pragma once

// The acceptance grid: ten criteria, each reduced to a pass/fail verdict with
// a worst-case error and a short detail line. Shared by `adelic suite` and
// the acceptance test binary.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adelic/bruhat.hpp"
#include "adelic/report.hpp"

namespace adelic {

/// Seeded samplers, also used by the property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi);
    double uniformReal(double lo, double hi);
    /// num/den with 1 <= |num|, den <= bound.
    Rational nonzeroRational(long bound = 1'000'000);
    Rational rational(long bound = 1'000'000);
    /// 1-4 character-modulated balls with exact coefficients.
    PAdicTestFunction padicTestFunction(Prime p);
    /// Plain balls only.
    PAdicTestFunction plainTestFunction(Prime p);
    /// Gaussian real factor with a random coefficient and random factors at a
    /// random subset of `primes`.
    ElementaryFunction elementary(const std::vector<Prime>& primes, bool plain = false);

private:
    Cyclotomic coefficient(Prime p);
    std::mt19937_64 rng_;
};

struct SuiteConfig {
    std::uint64_t seed = 0x5eed'ade1'1c00ULL;
    /// Groups to run; empty means all. Groups: qcore, gauss, bruhat, meltate,
    /// oscillator, distrib.
    std::set<std::string> only;
    bool timing = false;
};

struct CriterionResult {
    int id = 0;
    std::string group;
    std::string title;
    bool pass = false;
    std::string detail;
    CheckReport report;
};

std::vector<std::string> criterionGroups();
std::string groupOf(int criterion);

CriterionResult runCriterion(int id, const SuiteConfig& cfg);
std::vector<CriterionResult> runAcceptance(const SuiteConfig& cfg);

}  // namespace adelic
