#include "adelic/kernels.hpp"

#include <map>

#include <omp.h>

#include "adelic/characters.hpp"

namespace adelic::kernels {

namespace {

constexpr std::int64_t kBlock = 4096;

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(x) * y) % m);
}

std::int64_t periodOf(const QuadraticPhase& q, std::int64_t count, std::int64_t& repeats) {
    const std::int64_t period = conductor(q.p, q.level);
    if (count <= period) {
        repeats = 1;
        return count;
    }
    if (count % period != 0) throw ArgumentError("residue count is not a multiple of the phase period");
    repeats = count / period;
    return period;
}

}  // namespace

std::int64_t QuadraticPhase::operator()(std::int64_t r) const {
    const std::int64_t m = conductor(p, level);
    std::int64_t rr = r % m;
    std::int64_t v = (mulmod(mulmod(rr, rr, m), a, m) + mulmod(rr, b, m) + c) % m;
    return v < 0 ? v + m : v;
}

std::vector<std::int64_t> phaseHistogramSerial(const QuadraticPhase& q, std::int64_t count) {
    std::int64_t repeats = 1;
    const std::int64_t span = periodOf(q, count, repeats);
    std::vector<std::int64_t> hist(static_cast<std::size_t>(conductor(q.p, q.level)), 0);
    for (std::int64_t r = 0; r < span; ++r) hist[static_cast<std::size_t>(q(r))] += repeats;
    return hist;
}

std::vector<std::int64_t> phaseHistogram(const QuadraticPhase& q, std::int64_t count) {
    std::int64_t repeats = 1;
    const std::int64_t span = periodOf(q, count, repeats);
    const std::size_t bins = static_cast<std::size_t>(conductor(q.p, q.level));
    if (span < 4 * kBlock) return phaseHistogramSerial(q, count);

    std::vector<std::int64_t> hist(bins, 0);
#pragma omp parallel
    {
        std::vector<std::int64_t> local(bins, 0);
#pragma omp for schedule(static)
        for (std::int64_t r = 0; r < span; ++r) local[static_cast<std::size_t>(q(r))] += repeats;
        // Integer counts: the merge order does not affect the result.
#pragma omp critical
        for (std::size_t i = 0; i < bins; ++i) hist[i] += local[i];
    }
    return hist;
}

Cyclotomic residueSumReference(Prime p, const Rational& center, long k, long level, const Rational& a,
                               const Rational& b) {
    if (level < k) throw ArgumentError("refinement level below ball level");
    const std::int64_t count = conductor(p, static_cast<int>(level - k));
    const Rational step = primePower(p, k);
    std::map<Rational, std::int64_t> phases;
    for (std::int64_t r = 0; r < count; ++r) {
        Rational x = center + step * Rational(static_cast<long>(r));
        phases[fracPart(a * x * x + b * x, p)] += 1;
    }
    Cyclotomic sum;
    for (const auto& [phase, n] : phases) sum += Cyclotomic::rootOfUnity(phase, Rational(static_cast<long>(n)));
    return sum * Cyclotomic(primePower(p, -level));
}

Complex trapezoidSerial(const std::function<Complex(double)>& f, double lo, double hi, std::int64_t intervals) {
    if (intervals < 1) throw ArgumentError("trapezoid needs at least one interval");
    const double h = (hi - lo) / static_cast<double>(intervals);
    Complex sum = 0.5 * (f(lo) + f(hi));
    for (std::int64_t i = 1; i < intervals; ++i) sum += f(lo + h * static_cast<double>(i));
    return sum * h;
}

Complex trapezoid(const std::function<Complex(double)>& f, double lo, double hi, std::int64_t intervals) {
    if (intervals < 1) throw ArgumentError("trapezoid needs at least one interval");
    const double h = (hi - lo) / static_cast<double>(intervals);
    const std::int64_t blocks = (intervals - 1 + kBlock - 1) / kBlock;
    std::vector<Complex> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
        const std::int64_t first = 1 + blk * kBlock;
        const std::int64_t last = std::min(intervals, first + kBlock);
        Complex s = 0;
        for (std::int64_t i = first; i < last; ++i) s += f(lo + h * static_cast<double>(i));
        partial[static_cast<std::size_t>(blk)] = s;
    }
    Complex sum = 0.5 * (f(lo) + f(hi));
    for (const Complex& s : partial) sum += s;
    return sum * h;
}

std::vector<Complex> evaluateGrid(const std::function<Complex(double)>& f, const std::vector<double>& xs) {
    std::vector<Complex> out(xs.size());
    const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
    return out;
}

int maxThreads() { return omp_get_max_threads(); }

}  // namespace adelic::kernels
