#pragma once

// Mellin transforms of Schwartz-Bruhat functions
//
//     Phi_P(alpha) = int_R |x|^{alpha-1} phi_inf dx
//                    * prod_{p in P} (1-p^-alpha)/(1-p^-1) int_{Q_p} |x|^{alpha-1} phi_p dx
//                    * zeta(alpha),
//
// together with zeta and gamma numerics, the Tate formula
// Phi(alpha) = Phi~(1 - alpha) and the Riemann functional equation.

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "adelic/bruhat.hpp"
#include "adelic/integrate.hpp"

namespace adelic {

using Extended = boost::multiprecision::cpp_bin_float_50;
using ExtendedComplex = boost::multiprecision::cpp_complex_50;

/// Riemann zeta for Re s > 0, s != 1, from the Borwein-accelerated eta series.
Complex zeta(Complex s);
ExtendedComplex zetaExtended(const ExtendedComplex& s);

/// Euler gamma: Lanczos in double precision, Stirling with argument shift in
/// extended precision. Both use reflection for Re s < 1/2.
Complex gammaFn(Complex s);
ExtendedComplex gammaExtended(const ExtendedComplex& s);

/// The normalized local factor (1-u)/(1-1/p) int |x|^{alpha-1} f dx with
/// u = p^-alpha, which for a test function is a Laurent polynomial in u.
struct LocalMellinFactor {
    Prime p = 0;
    std::map<long, Cyclotomic> coefficients;  ///< power of u -> coefficient

    Complex operator()(Complex alpha) const;
    std::string toString() const;
};

LocalMellinFactor mellinLocal(const PAdicTestFunction& f);

/// int |x|^{alpha-1} f(x) dx. Closed form for the Hermite kind, quadrature for
/// generic profiles.
Complex mellinReal(const RealTestFunction& f, Complex alpha);

struct MellinResult {
    Complex value;
    Complex realFactor;
    std::map<Prime, Complex> localFactors;
    Complex zetaFactor;
    std::string domainNote;
};

MellinResult phiP(const ElementaryFunction& phi, Complex alpha);
Complex phiP(const SchwartzBruhat& phi, Complex alpha);

/// |Phi(alpha) - Phi~(1 - alpha)| for 0 < Re alpha < 1.
double tateCheck(const ElementaryFunction& phi, Complex alpha);

/// |xi(alpha) - xi(1 - alpha)| with xi(s) = pi^{-s/2} Gamma(s/2) zeta(s), both
/// sides evaluated independently in extended precision.
double functionalEquationResidual(Complex alpha);

struct VacuumConstant {
    Complex constant;          ///< mean of Phi_0(alpha) / (Gamma(alpha/2) pi^{-alpha/2} zeta(alpha))
    double relativeSpread = 0; ///< max relative deviation of the individual ratios
    std::vector<Complex> ratios;
};

VacuumConstant measureVacuumConstant(const std::vector<Complex>& alphas);

}  // namespace adelic
