#pragma once

// Data-parallel inner loops. Each parallel kernel has a serial reference kept
// for tests and benchmarks; the parallel versions reduce in a fixed block
// order so floating results do not depend on the thread count.

#include <cstdint>
#include <functional>
#include <vector>

#include "adelic/cyclotomic.hpp"
#include "adelic/qcore.hpp"

namespace adelic::kernels {

/// The phase numerator N(r) = (a r^2 + b r + c) mod p^level of a quadratic
/// character evaluated at the residues r of a ball.
struct QuadraticPhase {
    Prime p;
    int level;
    std::int64_t a, b, c;

    std::int64_t operator()(std::int64_t r) const;
};

/// Histogram of N(r) over r in [0, count). count must be a power of p; N is
/// periodic with period p^level, which bounds the work.
std::vector<std::int64_t> phaseHistogram(const QuadraticPhase& q, std::int64_t count);
std::vector<std::int64_t> phaseHistogramSerial(const QuadraticPhase& q, std::int64_t count);

/// p^-level sum_{r < p^(level-k)} chi_p(a x_r^2 + b x_r), x_r = center + p^k r,
/// evaluated point by point in exact rational arithmetic. Brute force, no
/// periodicity shortcut: the independent reference for the integer kernel.
Cyclotomic residueSumReference(Prime p, const Rational& center, long k, long level, const Rational& a,
                               const Rational& b);

/// Trapezoid rule with `intervals` panels on [lo, hi].
Complex trapezoid(const std::function<Complex(double)>& f, double lo, double hi, std::int64_t intervals);
Complex trapezoidSerial(const std::function<Complex(double)>& f, double lo, double hi, std::int64_t intervals);

/// Grid evaluation f(x_i) for many points, used by sup-norm checks.
std::vector<Complex> evaluateGrid(const std::function<Complex(double)>& f, const std::vector<double>& xs);

int maxThreads();

}  // namespace adelic::kernels
