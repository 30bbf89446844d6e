#include "adelic/integrate.hpp"

#include <cmath>

#include "adelic/kernels.hpp"

namespace adelic {

namespace {

constexpr std::int64_t kMaxHistogram = 50'000'000;

long negativePart(const Valuation& v) { return v.isFinite() && v.value() < 0 ? -v.value() : 0; }

}  // namespace

Cyclotomic residueSum(const Ball& ball, const Rational& a, const Rational& b, long level, bool reference) {
    const Prime p = ball.prime();
    const long k = ball.radiusExp();
    if (level < k) throw ArgumentError("refinement level below ball level");
    const Rational& c = ball.center();
    if (reference) return kernels::residueSumReference(p, c, k, level, a, b);

    // x_r = c + p^k r:  a x_r^2 + b x_r = A r^2 + B r + C.
    const Rational step = primePower(p, k);
    const Rational A = a * step * step;
    const Rational B = (2 * a * c + b) * step;
    const Rational C = a * c * c + b * c;
    const long e = std::max({negativePart(valuation(A, p)), negativePart(valuation(B, p)), negativePart(valuation(C, p))});
    const Rational scale = primePower(p, e);
    auto residue = [&](const Rational& x) { return residueModPower(x * scale, p, e).get_si(); };
    if (conductor(p, static_cast<int>(e)) > kMaxHistogram) throw ArgumentError("phase conductor too large for residue sum");
    kernels::QuadraticPhase phase{p, static_cast<int>(e), residue(A), residue(B), residue(C)};
    auto hist = kernels::phaseHistogram(phase, conductor(p, static_cast<int>(level - k)));
    return Cyclotomic::fromHistogram(p, static_cast<int>(e), hist, primePower(p, -level));
}

BallIntegral integrateBallCharacter(const Ball& ball, const Rational& a, const Rational& b,
                                    const StabilizationPolicy& policy) {
    const long k = ball.radiusExp();
    Cyclotomic prev = residueSum(ball, a, b, k, policy.reference);
    int agree = 0;
    for (long m = k + 1; m <= k + policy.depthCap; ++m) {
        Cyclotomic cur = residueSum(ball, a, b, m, policy.reference);
        if (cur == prev) {
            if (++agree >= policy.window) return {std::move(cur), true, m - policy.window};
        } else {
            agree = 0;
        }
        prev = std::move(cur);
    }
    return {std::move(prev), false, k + policy.depthCap};
}

std::optional<long> gaussTailIndex(Prime p, const Rational& a, const Rational& b) {
    requirePrime(p);
    if (a == 0) {
        if (b == 0) return std::nullopt;
        return valuation(b, p).value() + 2;
    }
    const long va = valuation(a, p).value();
    const long v2a = valuation(Rational(2 * a), p).value();
    const Valuation vb = valuation(b, p);
    // On |x| = p^j split into balls x0 + p^n Z_p with a h^2 integral; the
    // linear term 2 a x0 + b then has norm above p^n and integrates to zero.
    const long halfA = va >= 0 ? 0 : (-va + 1) / 2;
    auto vanishes = [&](long j) {
        long n = std::max(-j + 1, halfA);
        bool linearDominates = vb.isInfinite() || v2a - j < vb.value();
        return n < j - v2a && linearDominates;
    };
    long j = -(std::labs(va) + (vb.isFinite() ? std::labs(vb.value()) : 0) + 8);
    while (!vanishes(j)) ++j;
    return j;
}

SphereDecompositionPlan SphereDecompositionPlan::forGauss(Prime p, const Rational& a, const Rational& b) {
    SphereDecompositionPlan plan;
    plan.innerLevel = 0;
    if (auto tail = gaussTailIndex(p, a, b)) plan.sphereHigh = std::max(*tail, 1L);
    return plan;
}

QpIntegral integrateQp(Prime p, const QpIntegrand& integrand, const SphereDecompositionPlan& plan) {
    QpIntegral out;
    auto note = [&](const BallIntegral& bi) {
        if (!bi.stabilized) {
            out.flagged = true;
            out.flag = "residue sums did not stabilize within the refinement cap";
        }
        return bi.value;
    };

    if (integrand.test) {
        for (const auto& t : integrand.test->terms()) {
            if (t.coefficient.isZero()) continue;
            auto bi = integrateBallCharacter(t.ball, integrand.a, integrand.b + t.frequency, plan.stabilization);
            Cyclotomic v = note(bi);
            out.spheres.push_back(v);
            out.value += t.coefficient * v;
        }
        return out;
    }

    const long low = -plan.innerLevel + 1;
    if (plan.sphereHigh < low) throw ArgumentError("sphere range is empty");
    Cyclotomic inner = note(integrateBallCharacter(Ball(p, 0, plan.innerLevel), integrand.a, integrand.b, plan.stabilization));
    out.spheres.push_back(inner);
    out.value = inner;
    Cyclotomic below = inner;
    for (long j = low; j <= plan.sphereHigh; ++j) {
        Cyclotomic ball = note(integrateBallCharacter(Ball(p, 0, -j), integrand.a, integrand.b, plan.stabilization));
        Cyclotomic sphere = ball - below;
        out.spheres.push_back(sphere);
        out.value += sphere;
        below = std::move(ball);
    }

    long tail = plan.sphereHigh + 1;
    for (long j = plan.sphereHigh; j >= low && out.spheres[static_cast<std::size_t>(j - low + 1)].isZero(); --j) tail = j;
    if (tail <= plan.sphereHigh) out.tailIndex = tail;

    auto proven = gaussTailIndex(p, integrand.a, integrand.b);
    if (!proven) {
        out.flagged = true;
        out.flag = "integrand tail does not vanish on Q_p";
    } else if (plan.sphereHigh < *proven - 1 || !out.tailIndex) {
        out.flagged = true;
        out.flag = "sphere range ends before the tail vanishes";
    }
    return out;
}

RealIntegral integrateReal(const std::function<Complex(double)>& f, const QuadratureConfig& cfg) {
    std::int64_t n = std::max<std::int64_t>(cfg.nodes, 2);
    n += n % 2;
    Complex full = kernels::trapezoid(f, -cfg.radius, cfg.radius, n);
    Complex half = kernels::trapezoid(f, -cfg.radius, cfg.radius, n / 2);
    double err = std::abs(full - half);
    return {full, err, err > cfg.errorBudget};
}

RealIntegral integrateReal(const RealTestFunction& f, const QuadratureConfig& cfg, double a, double b) {
    auto radius = f.decayRadius();
    if (!radius) throw ArgumentError("real test function has no declared decay bound");
    QuadratureConfig local = cfg;
    local.radius = std::max(cfg.radius, *radius);
    const double freq = 2 * std::fabs(a) * local.radius + std::fabs(b) + 1;
    local.nodes = std::max<std::int64_t>(cfg.nodes, static_cast<std::int64_t>(std::ceil(32 * local.radius * freq)));
    if (a == 0 && b == 0) return integrateReal([&](double x) { return f(x); }, local);
    return integrateReal([&](double x) { return f(x) * chiInf(a * x * x + b * x); }, local);
}

RealIntegral integrateMellinReal(const std::function<Complex(double)>& f, Complex alpha, double decayRadius,
                                 double errorBudget) {
    if (alpha.real() <= 0) throw DomainError("Mellin quadrature needs Re alpha > 0");
    const double hi = std::log(decayRadius);
    const double lo = std::log(1e-18) / alpha.real() - 1.0;
    auto g = [&](double t) {
        double x = std::exp(t);
        return std::exp(alpha * t) * (f(x) + f(-x));
    };
    const double h = 0.01;
    std::int64_t n = static_cast<std::int64_t>(std::ceil((hi - lo) / h));
    n += n % 2;
    Complex full = kernels::trapezoid(g, lo, hi, n);
    Complex half = kernels::trapezoid(g, lo, hi, n / 2);
    double err = std::abs(full - half);
    return {full, err, err > errorBudget};
}

namespace {

Complex nevilleAtZero(const std::vector<double>& xs, std::vector<Complex> ys) {
    const std::size_t n = xs.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            ys[i] = (xs[i + m] * ys[i] - xs[i] * ys[i + 1]) / (xs[i + m] - xs[i]);
    return ys[0];
}

}  // namespace

RealIntegral fresnelRegularized(double a, double b, double errorBudget) {
    if (a == 0) throw DomainError("Fresnel integral needs a != 0");
    // x = y / sqrt|a| normalizes the quadratic coefficient to +-1.
    const double s = a > 0 ? 1.0 : -1.0;
    const double c = std::sqrt(std::fabs(a));
    const double beta = b / c;
    const double y0 = -beta / (2 * s);

    std::vector<double> eps;
    std::vector<Complex> values;
    for (int i = 0; i < 8; ++i) {
        const double e = std::ldexp(2.0, -i);
        const double radius = std::sqrt(42.0 / e);
        const std::int64_t intervals = static_cast<std::int64_t>(std::ceil(32 * radius * (radius + 1)));
        auto damped = [&](double z) {
            const double y = y0 + z;
            return std::exp(-e * z * z) * chiInf(s * y * y + beta * y);
        };
        eps.push_back(e);
        values.push_back(kernels::trapezoid(damped, -radius, radius, intervals));
    }
    Complex all = nevilleAtZero(eps, values);
    Complex fewer = nevilleAtZero({eps.begin(), eps.end() - 1}, {values.begin(), values.end() - 1});
    double err = std::abs(all - fewer) / c;
    return {all / c, err, err > errorBudget};
}

}  // namespace adelic
