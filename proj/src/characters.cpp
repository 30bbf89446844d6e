#include "adelic/characters.hpp"

#include <cmath>
#include <numbers>

namespace adelic {

namespace {

Rational reduceModOne(Rational q) {
    q.canonicalize();
    Integer floor;
    mpz_fdiv_q(floor.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    q -= Rational(floor);
    q.canonicalize();
    return q;
}

// e^{2 pi i q} for an exact q; the angle is formed from the reduced fraction to
// keep the floating error independent of the size of q.
Complex expTwoPiI(const Rational& q) {
    long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(q.get_d());
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

}  // namespace

UnitPhase::UnitPhase(const Rational& phase) : phase_(reduceModOne(phase)) {}

Complex UnitPhase::toComplex() const {
    // Exact values at the quarter points.
    if (phase_ == 0) return {1, 0};
    if (phase_ == Rational(1, 2)) return {-1, 0};
    if (phase_ == Rational(1, 4)) return {0, 1};
    if (phase_ == Rational(3, 4)) return {0, -1};
    return expTwoPiI(phase_);
}

UnitPhase chiP(const Rational& x, Prime p) { return UnitPhase(fracPart(x, p)); }

UnitPhase chiInfPhase(const Rational& x) { return UnitPhase(-x); }

Complex chiInf(double x) {
    if (!std::isfinite(x)) throw ArgumentError("chi_inf of a non-finite value");
    // Reduce first so large arguments keep their accuracy.
    const double angle = 2 * std::numbers::pi * (x - std::floor(x));
    return {std::cos(angle), -std::sin(angle)};
}

PrincipalCharacter chiPrincipal(const Rational& r) {
    UnitPhase phase = chiInfPhase(r);
    Complex value = phase.toComplex();
    if (r != 0)
        for (Prime p : primeFactors(r.get_den())) {
            UnitPhase local = chiP(r, p);
            phase = phase * local;
            value *= local.toComplex();
        }
    return {phase, value};
}

UnitPhase chiAdele(const Adele& x) {
    UnitPhase phase = chiInfPhase(x.real());
    for (const auto& [p, value] : x.components()) phase = phase * chiP(value, p);
    return phase;
}

Complex piAlpha(const Idele& lambda, Complex alpha) {
    Complex out = std::exp(alpha * std::log(std::fabs(lambda.real().get_d())));
    for (const auto& [p, value] : lambda.components()) {
        if (value == 0) throw ArgumentError("zero idele component");
        double logNorm = -static_cast<double>(valuation(value, p).value()) * std::log(static_cast<double>(p));
        out *= std::exp(alpha * logNorm);
    }
    return out;
}

}  // namespace adelic
