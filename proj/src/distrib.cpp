#include "adelic/distrib.hpp"

#include <cmath>

#include "adelic/integrate.hpp"

namespace adelic {

namespace {

bool exactlyOne(Complex z) { return z == Complex(1, 0); }

TailCertificate unitOutside(std::set<Prime> e, std::string why) {
    TailCertificate t;
    t.kind = TailCertificate::Kind::UnitOutside;
    t.exceptional = std::move(e);
    t.description = std::move(why);
    return t;
}

std::set<Prime> exceptionalOf(const Adele& x) {
    auto e = x.exceptionalPrimes();
    return {e.begin(), e.end()};
}

}  // namespace

Pairing pair(const AdelicDistribution& f, const ElementaryFunction& phi) {
    if (!f.tail()) throw DomainError("distribution '" + f.name() + "' has no tail certificate");
    const TailCertificate& tail = *f.tail();
    Pairing out;
    out.value = f.pairReal(phi.real);
    for (const auto& [p, fp] : phi.primes) {
        const Complex v = f.pairLocal(p, fp);
        if (!exactlyOne(v)) ++out.nonUnitFactors;
        out.value *= v;
    }
    std::set<Prime> covered;
    for (const auto& kv : phi.primes) covered.insert(kv.first);
    for (Prime p : tail.exceptional) {
        if (!covered.insert(p).second) continue;
        const Complex v = f.pairLocal(p, phi.factorAt(p));
        if (!exactlyOne(v)) ++out.nonUnitFactors;
        out.value *= v;
    }
    if (tail.kind == TailCertificate::Kind::Euler) {
        if (!tail.eulerTail) throw DomainError("Euler tail certificate without a closed form");
        out.value *= tail.eulerTail(covered);
    }
    out.factorBound = phi.primes.size() + tail.exceptional.size();
    return out;
}

Pairing pair(const AdelicDistribution& f, const SchwartzBruhat& phi) {
    Pairing out;
    for (const auto& [c, e] : phi.terms) {
        Pairing part = pair(f, e);
        out.value += c * part.value;
        out.nonUnitFactors += part.nonUnitFactors;
        out.factorBound += part.factorBound;
    }
    return out;
}

AdelicDistribution deltaDistribution() {
    return {"delta", [](const RealTestFunction& g) { return g(0.0); },
            [](Prime, const PAdicTestFunction& g) { return g(Rational(0)).toComplex(); },
            unitOutside({}, "Omega_p(0) = 1 at every prime")};
}

AdelicDistribution chiDistribution() {
    return {"chi", [](const RealTestFunction& g) { return fourierReal(g)(1.0); },
            [](Prime, const PAdicTestFunction& g) { return fourierP(g)(Rational(1)).toComplex(); },
            unitOutside({}, "Omega~_p(1) = Omega_p(1) = 1 at every prime")};
}

AdelicDistribution chiQuadraticDistribution(const Idele& a, const Adele& b) {
    if (a.real() == 0) throw DomainError("quadratic character needs an invertible real coefficient");
    std::set<Prime> e = exceptionalOf(a);
    for (Prime p : exceptionalOf(b)) e.insert(p);
    const double ar = a.real().get_d(), br = b.real().get_d();
    auto real = [ar, br](const RealTestFunction& g) {
        RealIntegral r = integrateReal(g, QuadratureConfig{}, ar, br);
        if (r.flagged) throw DomainError("real quadratic-character pairing exceeded its error budget");
        return r.value;
    };
    auto local = [a, b](Prime p, const PAdicTestFunction& g) {
        auto ap = a.componentAt(p);
        auto bp = b.componentAt(p);
        if (!ap || !bp) throw ArgumentError("quadratic character needs the components at p=" + std::to_string(p));
        QpIntegral r = integrateQp(p, QpIntegrand{g, *ap, *bp});
        if (r.flagged) throw DomainError("p-adic quadratic-character pairing: " + r.flag);
        return r.complex();
    };
    return {"chi-quad", real, local,
            unitOutside(std::move(e), "a_p, b_p in Z_p off E, so int_{Z_p} chi(a x^2 + b x) dx = 1")};
}

AdelicDistribution piAlphaDistribution(Complex alpha) {
    if (alpha == Complex(0, 0) || alpha == Complex(1, 0)) throw DomainError("pi_alpha pairing has simple poles at alpha = 0 and 1");
    auto real = [alpha](const RealTestFunction& g) { return mellinReal(g, alpha); };
    // int |x|^alpha g d*x = (1-p^-1)^-1 int |x|^{alpha-1} g dx = L_p(alpha) * normalized factor.
    auto local = [alpha](Prime p, const PAdicTestFunction& g) {
        const Complex u = std::exp(-alpha * std::log(static_cast<double>(p)));
        return mellinLocal(g)(alpha) / (1.0 - u);
    };
    TailCertificate tail;
    tail.kind = TailCertificate::Kind::Euler;
    tail.description = "prod_{p not in S} (1-p^-alpha)^-1 = zeta(alpha) prod_{p in S} (1-p^-alpha)";
    tail.eulerTail = [alpha](const std::set<Prime>& excluded) {
        Complex v = zeta(alpha);
        for (Prime p : excluded) v *= 1.0 - std::exp(-alpha * std::log(static_cast<double>(p)));
        return v;
    };
    return {"pi-alpha", real, local, std::move(tail)};
}

Cyclotomic integrateProduct(const PAdicTestFunction& f, const PAdicTestFunction& g) {
    if (f.prime() != g.prime()) throw ArgumentError("test functions at different primes");
    const PAdicTestFunction cf = f.canonical(), cg = g.canonical();
    Cyclotomic out;
    // Canonical balls are disjoint, so each overlapping pair contributes the smaller ball.
    for (const auto& s : cf.terms())
        for (const auto& t : cg.terms()) {
            if (s.ball.disjoint(t.ball)) continue;
            const Ball& small = s.ball.radiusExp() >= t.ball.radiusExp() ? s.ball : t.ball;
            out += s.coefficient * t.coefficient * Cyclotomic(small.measure());
        }
    return out;
}

AdelicDistribution functionDistribution(const ElementaryFunction& g) {
    auto real = [gr = g.real](const RealTestFunction& h) {
        QuadratureConfig cfg;
        double r = std::max(gr.decayRadius().value_or(cfg.radius), h.decayRadius().value_or(cfg.radius));
        cfg.radius = r;
        cfg.nodes = static_cast<std::int64_t>(std::ceil(256 * r));
        RealIntegral out = integrateReal([&](double x) { return gr(x) * h(x); }, cfg);
        if (out.flagged) throw DomainError("real product integral exceeded its error budget");
        return out.value;
    };
    auto local = [g](Prime p, const PAdicTestFunction& h) { return integrateProduct(g.factorAt(p), h).toComplex(); };
    std::set<Prime> e;
    for (const auto& kv : g.primes) e.insert(kv.first);
    return {"function", real, local, unitOutside(std::move(e), "int Omega_p Omega_p dx = 1 off the primes of g")};
}

Complex pairFunctions(const SchwartzBruhat& g, const SchwartzBruhat& phi) {
    Complex sum = 0;
    for (const auto& [cg, eg] : g.terms) sum += cg * pair(functionDistribution(eg), phi).value;
    return sum;
}

}  // namespace adelic
