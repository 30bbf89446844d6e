#include "adelic/gauss.hpp"

#include <cmath>
#include <set>

namespace adelic {

namespace {

long floorDiv(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

Cyclotomic sqrtTwo() {
    return Cyclotomic::rootOfUnity(makeRational(1, 8)) + Cyclotomic::rootOfUnity(makeRational(7, 8));
}

}  // namespace

UnitPhase lambdaV(const Place& v, const Rational& a) { return frozenLambdaTable().lookup(v, a); }

std::optional<Cyclotomic> gaussPrefactorExact(Prime p, const Rational& a, const UnitPhase& lambda) {
    requirePrime(p);
    if (a == 0) throw DomainError("Gauss prefactor needs a != 0");
    const long e = valuation(Rational(2 * a), p).value();  // |2a|^{-1/2} = p^{e/2}
    if (p == 2) {
        // lambda is a power of zeta_8, always in the field.
        Cyclotomic out = Cyclotomic::fromPhase(lambda) * Cyclotomic(primePower(2, floorDiv(e, 2)));
        if (e % 2 != 0) out *= sqrtTwo();
        return out;
    }
    if (e % 2 == 0) {
        // p^{e/2} rational; only lambda = +-1 stays in Q(zeta_{p^inf}).
        if (lambda.value() == 0) return Cyclotomic(primePower(p, e / 2));
        if (lambda.value() == makeRational(1, 2)) return Cyclotomic(-primePower(p, e / 2));
        return std::nullopt;
    }
    // sqrt(p) = g for p = 1 mod 4 and -i g for p = 3 mod 4, with g the Gauss sum.
    UnitPhase s = lambda;
    if (p % 4 == 3) s = s * UnitPhase(makeRational(-1, 4));
    Rational sign;
    if (s.value() == 0)
        sign = 1;
    else if (s.value() == makeRational(1, 2))
        sign = -1;
    else
        return std::nullopt;
    return Cyclotomic::gaussSum(p) * Cyclotomic(sign * primePower(p, floorDiv(e - 1, 2)));
}

Cyclotomic gaussIntegralExact(Prime p, const Rational& a, const Rational& b) {
    const UnitPhase lam = lambdaV(Place::finite(p), a);
    auto pre = gaussPrefactorExact(p, a, lam);
    if (!pre) throw DomainError("lambda table entry inconsistent with the field");
    return *pre * Cyclotomic::fromPhase(chiP(-b * b / (4 * a), p));
}

Complex gaussIntegralV(const Place& v, const Rational& a, const Rational& b) {
    if (a == 0) throw DomainError("Gauss integral needs a != 0");
    const UnitPhase lam = lambdaV(v, a);
    if (v.isInfinite()) {
        const double mag = std::fabs(Rational(2 * a).get_d());
        return lam.toComplex() / std::sqrt(mag) * chiInfPhase(-b * b / (4 * a)).toComplex();
    }
    const Prime p = v.prime();
    const long e = valuation(Rational(2 * a), p).value();
    const double pre = std::pow(static_cast<double>(p), 0.5 * static_cast<double>(e));
    return lam.toComplex() * pre * chiP(-b * b / (4 * a), p).toComplex();
}

std::vector<Prime> relevantPrimes(const Rational& a, const Rational& b) {
    std::set<Prime> s{2};
    for (Prime p : supportPrimes(a)) s.insert(p);
    for (Prime p : supportPrimes(b)) s.insert(p);
    return {s.begin(), s.end()};
}

Complex productFormulaCheck(const Rational& a, const Rational& b) {
    Complex out = gaussIntegralV(Place::infinity(), a, b);
    for (Prime p : relevantPrimes(a, b)) out *= gaussIntegralV(Place::finite(p), a, b);
    return out;
}

Complex lambdaProductCheck(const Rational& a) {
    UnitPhase total = lambdaV(Place::infinity(), a);
    for (Prime p : relevantPrimes(a, Rational(0))) total = total * lambdaV(Place::finite(p), a);
    return total.toComplex();
}

Complex kernelK(const Idele& a, const Adele& b) {
    if (a.real() == 0) throw DomainError("kernel needs an invertible real component");
    Complex out = gaussIntegralV(Place::infinity(), a.real(), b.real());
    std::set<Prime> primes{2};
    for (Prime p : a.listedPrimes()) primes.insert(p);
    for (Prime p : b.listedPrimes()) primes.insert(p);
    // Elsewhere a_p is a unit and b_p integral with p odd: the factor is 1.
    for (Prime p : primes) {
        auto ap = a.componentAt(p);
        auto bp = b.componentAt(p);
        if (!ap || !bp) throw ArgumentError("kernel needs the components at p=" + std::to_string(p));
        out *= gaussIntegralV(Place::finite(p), *ap, *bp);
    }
    return out;
}

BallIntegral lambdaTransformLocal(const PAdicTestFunction& f, const Rational& b) {
    const Prime p = f.prime();
    BallIntegral out{Cyclotomic(), true, 0};
    const PAdicTestFunction canon = f.canonical();
    for (const auto& t : canon.terms()) {
        // int_{c + p^k Z_p} chi(a x^2) da = chi(c x^2) p^-k 1[|x| <= p^{floor(k/2)}].
        const long k = t.ball.radiusExp();
        Ball inner(p, Rational(0), -floorDiv(k, 2));
        BallIntegral bi = integrateBallCharacter(inner, t.ball.center(), b);
        out.value += t.coefficient * Cyclotomic(primePower(p, -k)) * bi.value;
        out.stabilized = out.stabilized && bi.stabilized;
        out.level = std::max(out.level, bi.level);
    }
    return out;
}

RealIntegral lambdaTransformReal(const RealTestFunction& f, double b) {
    const RealTestFunction ft = fourierReal(f);
    auto radius = ft.decayRadius();
    if (!radius) throw ArgumentError("real test function has no declared decay bound");
    QuadratureConfig cfg;
    cfg.radius = std::sqrt(*radius) + 1.0;
    cfg.nodes = std::max<std::int64_t>(
        cfg.nodes, static_cast<std::int64_t>(std::ceil(64 * cfg.radius * (std::fabs(b) + cfg.radius * cfg.radius + 1))));
    return integrateReal([&](double x) { return ft(x * x) * chiInf(b * x); }, cfg);
}

LambdaTransformResult lambdaTransform(const ElementaryFunction& phi, const Adele& b) {
    LambdaTransformResult out;
    RealIntegral re = lambdaTransformReal(phi.real, b.real().get_d());
    out.realFactor = re.value;
    out.flagged = re.flagged;
    Complex value = re.value;
    for (const auto& [p, f] : phi.primes) {
        auto bp = b.componentAt(p);
        if (!bp) throw ArgumentError("transform needs the component at p=" + std::to_string(p));
        BallIntegral local = lambdaTransformLocal(f, *bp);
        out.flagged = out.flagged || !local.stabilized;
        value *= local.value.toComplex();
        out.localFactors.emplace(p, std::move(local.value));
    }
    for (Prime p : b.listedPrimes()) {
        if (phi.primes.contains(p)) continue;
        out.tailOmega *= omega(padicNorm(*b.componentAt(p), p));
    }
    out.value = value * static_cast<double>(out.tailOmega);
    return out;
}

}  // namespace adelic
