#pragma once

// Additive characters chi_v and multiplicative characters pi_alpha.
//
// Conventions: chi_inf(x) = exp(-2 pi i x), chi_p(x) = exp(2 pi i {x}_p).

#include "adelic/qcore.hpp"

namespace adelic {

/// e^{2 pi i q} with the rational phase q kept reduced into [0, 1).
class UnitPhase {
public:
    UnitPhase() = default;
    explicit UnitPhase(const Rational& phase);

    const Rational& value() const { return phase_; }
    Complex toComplex() const;

    UnitPhase operator*(const UnitPhase& o) const { return UnitPhase(phase_ + o.phase_); }
    UnitPhase conj() const { return UnitPhase(-phase_); }
    UnitPhase pow(long k) const { return UnitPhase(phase_ * k); }
    bool isOne() const { return phase_ == 0; }

    friend bool operator==(const UnitPhase&, const UnitPhase&) = default;

private:
    Rational phase_{0};
};

/// chi_p(x) = e^{2 pi i {x}_p}.
UnitPhase chiP(const Rational& x, Prime p);
/// chi_inf on a rational argument, kept exact.
UnitPhase chiInfPhase(const Rational& x);
/// chi_inf(x) = e^{-2 pi i x}.
Complex chiInf(double x);

struct PrincipalCharacter {
    UnitPhase phase;  ///< exact sum of all local phases
    Complex value;    ///< product of the local values in floating point
};
/// chi_inf(r) * prod_{p | den r} chi_p(r); all other factors are 1.
PrincipalCharacter chiPrincipal(const Rational& r);

/// Additive character of an adele with exact rational components. The unlisted
/// components must be p-integral, which the Adele invariant guarantees.
UnitPhase chiAdele(const Adele& x);

/// |lambda_inf|^alpha * prod_{listed p} |lambda_p|_p^alpha.
Complex piAlpha(const Idele& lambda, Complex alpha);

}  // namespace adelic
