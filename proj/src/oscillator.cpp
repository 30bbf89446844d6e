#include "adelic/oscillator.hpp"

#include <cmath>
#include <numbers>

#include "adelic/integrate.hpp"
#include "adelic/kernels.hpp"

namespace adelic {

namespace {

long minTrigValuation(Prime p) { return p == 2 ? 2 : 1; }

void requireTrigDomain(const PAdicApprox& t) {
    const Valuation v = t.knownValuation();
    if (v < Valuation(minTrigValuation(t.prime())))
        throw DomainError("t lies outside the convergence domain of the p-adic trigonometric series");
}

// Sum of sign_k t^m / m! over m = start, start + 2, ... until the lower bound
// m v(t) - (m-1)/(p-1) on the next term's valuation reaches the precision.
PAdicAnalyticValue trigSeries(const PAdicApprox& t, long precision, int start) {
    requireTrigDomain(t);
    const Prime p = t.prime();
    if (t.approximant() == 0 && t.precision().isInfinite())
        return {PAdicApprox(p, Rational(start == 0 ? 1 : 0)), Valuation::infinity(), 0};

    const Valuation kv = t.knownValuation();
    const double vt = static_cast<double>(kv.isFinite() ? kv.value() : precision);
    auto bound = [&](int m) { return m * vt - static_cast<double>(m - 1) / static_cast<double>(p - 1); };

    const Rational& x = t.approximant();
    Rational sum = 0, power = start == 0 ? Rational(1) : x, factorial = 1;
    int m = start, terms = 0;
    long sign = 1;
    while (true) {
        sum += sign * power / factorial;
        ++terms;
        const int next = m + 2;
        if (bound(next) >= static_cast<double>(precision)) {
            const long tail = static_cast<long>(std::ceil(bound(next)));
            const Valuation prec = min(Valuation(precision), t.precision());
            return {PAdicApprox(p, sum, prec), Valuation(tail), terms};
        }
        power *= x * x;
        factorial *= Rational((m + 1) * (m + 2));
        sign = -sign;
        m = next;
    }
}

void requirePrecision(const PAdicApprox& v, long needed, const char* what) {
    if (v.precision() < Valuation(needed))
        throw PrecisionError(std::string("working precision too low to determine ") + what);
}

// lambda(2s) |s|^{-1/2}, exactly; needs the leading digits of s.
Cyclotomic kernelPrefactor(const PAdicApprox& s) {
    const Prime p = s.prime();
    if (!s.valuationDetermined()) throw PrecisionError("valuation of sin t not determined");
    const long v = valuation(s.approximant(), p).value();
    requirePrecision(s, v + (p == 2 ? 3 : 1), "lambda(2 sin t)");
    const Rational two_s = 2 * s.approximant();
    auto pre = gaussPrefactorExact(p, s.approximant() / 2, lambdaV(Place::finite(p), two_s));
    if (!pre) throw DomainError("lambda table entry inconsistent with the field");
    return *pre;
}

void guardTwo(Prime p, const OscillatorOptions& opt) {
    if (p == 2 && !opt.allowTwo) throw ArgumentError("p = 2 oscillator checks are disabled unless explicitly enabled");
}

}  // namespace

PAdicAnalyticValue padicSin(const PAdicApprox& t, long precision) { return trigSeries(t, precision, 1); }
PAdicAnalyticValue padicCos(const PAdicApprox& t, long precision) { return trigSeries(t, precision, 0); }

PAdicAnalyticValue padicTan(const PAdicApprox& t, long precision) {
    PAdicAnalyticValue s = padicSin(t, precision), c = padicCos(t, precision);
    return {s.value / c.value, min(s.truncationValuation, c.truncationValuation), s.terms + c.terms};
}

Cyclotomic kernelKtPExact(Prime p, const PAdicApprox& t, const PAdicApprox& x, const PAdicApprox& y,
                          const OscillatorOptions& opt) {
    guardTwo(p, opt);
    if (t.prime() != p || x.prime() != p || y.prime() != p) throw ArgumentError("kernel arguments at different primes");
    const PAdicApprox s = padicSin(t, opt.precision).value;
    const PAdicApprox tn = padicTan(t, opt.precision).value;
    const PAdicApprox two(p, Rational(2));
    const PAdicApprox arg = x * y / s - (x * x + y * y) / (two * tn);
    requirePrecision(arg, 0, "the kernel's character argument mod Z_p");
    return kernelPrefactor(s) * Cyclotomic::fromPhase(chiP(arg.approximant(), p));
}

Complex kernelKtP(Prime p, const PAdicApprox& t, const PAdicApprox& x, const PAdicApprox& y,
                  const OscillatorOptions& opt) {
    return kernelKtPExact(p, t, x, y, opt).toComplex();
}

EigenCheckResult eigenCheck(Prime p, const PAdicApprox& t, const PAdicTestFunction& psi, const Rational& energy,
                            const std::vector<Rational>& samples, const OscillatorOptions& opt) {
    guardTwo(p, opt);
    if (t.prime() != p || psi.prime() != p) throw ArgumentError("eigen check arguments at different primes");
    const PAdicApprox s = padicSin(t, opt.precision).value;
    const PAdicApprox tn = padicTan(t, opt.precision).value;
    const Cyclotomic pre = kernelPrefactor(s);
    // K_t(x, y) = pre chi(a x^2) chi(a y^2 + b y), a = -1/(2 tan t), b = x / sin t.
    const PAdicApprox a = PAdicApprox(p, makeRational(-1, 2)) / tn;
    const long m = psi.supportLevel();
    requirePrecision(a, -2 * m, "the quadratic coefficient on the support of psi");
    const PAdicApprox et = PAdicApprox(p, energy) * t;
    requirePrecision(et, 0, "chi(E t)");
    const Cyclotomic phaseE = Cyclotomic::fromPhase(chiP(et.approximant(), p));

    EigenCheckResult out;
    for (const Rational& x : samples) {
        const PAdicApprox xp(p, x);
        const PAdicApprox b = xp / s;
        requirePrecision(b, -m, "the linear coefficient on the support of psi");
        requirePrecision(a * xp * xp, 0, "chi(a x^2)");
        QpIntegral inner = integrateQp(p, QpIntegrand{psi, a.approximant(), b.approximant()});
        out.flagged = out.flagged || inner.flagged;
        Cyclotomic lhs = pre * Cyclotomic::fromPhase(chiP(a.approximant() * x * x, p)) * inner.value;
        Cyclotomic rhs = phaseE * psi(x);
        out.maxDeviation = std::max(out.maxDeviation, std::abs(lhs.toComplex() - rhs.toComplex()));
        out.exact = out.exact && lhs == rhs;
        out.lhs.push_back(std::move(lhs));
        out.rhs.push_back(std::move(rhs));
    }
    return out;
}

VacuumFourierResult vacuumFourierCheck(const std::vector<Prime>& primes, int gridPoints) {
    VacuumFourierResult out;
    out.primes = primes;
    out.gridPoints = gridPoints;
    for (Prime p : primes) {
        const PAdicTestFunction omega = PAdicTestFunction::omega(p);
        out.padicExact = out.padicExact && fourierP(omega) == omega;
    }
    const double c = std::pow(2.0, 0.25);
    const RealTestFunction psi0 = RealTestFunction::gaussian(c);
    std::vector<double> xs(static_cast<std::size_t>(gridPoints));
    for (int i = 0; i < gridPoints; ++i) xs[static_cast<std::size_t>(i)] = -4.0 + 8.0 * i / std::max(gridPoints - 1, 1);
    auto err = kernels::evaluateGrid(
        [&](double xi) {
            Complex transformed = integrateReal(psi0, QuadratureConfig{}, 0.0, xi).value;
            return Complex(std::abs(transformed - c * std::exp(-std::numbers::pi * xi * xi)));
        },
        xs);
    for (const Complex& e : err) out.realSupError = std::max(out.realSupError, e.real());
    return out;
}

MultiplierResult fourierMultiplier(int degree) {
    const RealTestFunction psi = ElementaryFunction::oscillatorState(degree).real;
    std::vector<Complex> ratios;
    for (double x : {-1.1, -0.7, -0.3, 0.2, 0.45, 0.9}) {
        const Complex fx = psi(x);
        if (std::abs(fx) < 1e-3) continue;
        ratios.push_back(integrateReal(psi, QuadratureConfig{}, 0.0, x).value / fx);
    }
    MultiplierResult out;
    for (const Complex& r : ratios) out.multiplier += r;
    out.multiplier /= static_cast<double>(ratios.size());
    for (const Complex& r : ratios) out.spread = std::max(out.spread, std::abs(r - out.multiplier));
    return out;
}

double realStateOrthonormality(int maxDegree) {
    if (maxDegree < 0 || maxDegree > 12) throw ArgumentError("Gram check supports degrees 0..12");
    std::vector<RealTestFunction> states;
    for (int n = 0; n <= maxDegree; ++n) states.push_back(ElementaryFunction::oscillatorState(n).real);
    double worst = 0;
    for (int n = 0; n <= maxDegree; ++n)
        for (int m = n; m <= maxDegree; ++m) {
            const auto& a = states[static_cast<std::size_t>(n)];
            const auto& b = states[static_cast<std::size_t>(m)];
            Complex g = kernels::trapezoid([&](double x) { return a(x) * std::conj(b(x)); }, -8.0, 8.0, 16384);
            worst = std::max(worst, std::abs(g - (n == m ? 1.0 : 0.0)));
        }
    return worst;
}

ElementaryFunction translate(const ElementaryFunction& phi, const Adele& x) {
    const double x0 = x.real().get_d();
    auto radius = phi.real.decayRadius();
    RealTestFunction::Generic g{[f = phi.real, x0](double y) { return f(y + x0); },
                                radius ? std::optional<double>(*radius + std::fabs(x0)) : std::nullopt};
    ElementaryFunction out{RealTestFunction(std::move(g)), {}};
    for (const auto& [p, f] : phi.primes) {
        auto xp = x.componentAt(p);
        if (!xp) throw ArgumentError("translation needs the component at p=" + std::to_string(p));
        std::vector<TestTerm> terms;
        for (const auto& t : f.terms())
            terms.push_back({t.coefficient * Cyclotomic::fromPhase(chiP(t.frequency * *xp, p)), t.frequency,
                             Ball(p, t.ball.center() - *xp, t.ball.radiusExp())});
        out.primes.emplace(p, PAdicTestFunction(p, std::move(terms)));
    }
    for (const auto& [p, xp] : x.components()) {
        if (phi.primes.contains(p) || padicNorm(xp, p) <= 1) continue;
        out.primes.emplace(p, PAdicTestFunction::indicator(Ball(p, -xp, 0)));
    }
    return out;
}

double deltaKernelCheck(const SchwartzBruhat& phi, const std::vector<Adele>& samples) {
    const AdelicDistribution delta = deltaDistribution();
    double worst = 0;
    for (const Adele& x : samples) {
        SchwartzBruhat shifted;
        for (const auto& [c, e] : phi.terms) shifted.terms.emplace_back(c, translate(e, x));
        worst = std::max(worst, std::abs(pair(delta, shifted).value - evaluate(phi, x)));
    }
    return worst;
}

Complex realEvolve(const RealTestFunction& psi, double t, double x) {
    const double s = std::sin(t), tn = std::tan(t);
    if (s == 0) throw DomainError("real kernel is singular where sin t = 0");
    const Complex lambda = frozenLambdaTable().real(s > 0 ? 1 : -1).toComplex();
    const double a = -1.0 / (2 * tn), b = x / s;
    RealIntegral inner = integrateReal(psi, QuadratureConfig{}, a, b);
    return lambda / std::sqrt(std::fabs(s)) * chiInf(a * x * x) * inner.value;
}

double unitarityProbe(double t) {
    const RealTestFunction psi0 = ElementaryFunction::vacuum().real;
    const double radius = 6.0;
    const std::int64_t intervals = 2048;
    std::vector<double> xs(static_cast<std::size_t>(intervals) + 1);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -radius + 2 * radius * static_cast<double>(i) / intervals;
    auto values = kernels::evaluateGrid([&](double x) { return realEvolve(psi0, t, x); }, xs);
    const double h = 2 * radius / intervals;
    double norm = 0.5 * (std::norm(values.front()) + std::norm(values.back()));
    for (std::size_t i = 1; i + 1 < values.size(); ++i) norm += std::norm(values[i]);
    norm *= h;
    const double reference = kernels::trapezoid([&](double x) { return Complex(std::norm(psi0(x))); }, -radius, radius,
                                                intervals).real();
    return std::fabs(norm - reference);
}

EigenPhase realEigenPhase(int degree, double t) {
    const RealTestFunction psi = ElementaryFunction::oscillatorState(degree).real;
    std::vector<Complex> ratios;
    for (double x : {-0.9, -0.5, -0.2, 0.15, 0.4, 0.8}) {
        const Complex fx = psi(x);
        if (std::abs(fx) < 1e-3) continue;
        ratios.push_back(realEvolve(psi, t, x) / fx);
    }
    EigenPhase out;
    for (const Complex& r : ratios) out.phase += r;
    out.phase /= static_cast<double>(ratios.size());
    for (const Complex& r : ratios) out.spread = std::max(out.spread, std::abs(r - out.phase));
    return out;
}

}  // namespace adelic
