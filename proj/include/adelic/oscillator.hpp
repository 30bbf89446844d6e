#pragma once

// The adelic harmonic oscillator: p-adic sin/cos/tan, the evolution kernel
//
//     K_t(x, y) = lambda(2 sin t) |sin t|^{-1/2} chi(x y / sin t - (x^2 + y^2) / (2 tan t)),
//
// and eigenstate, Fourier-invariance and orthonormality checks.

#include <vector>

#include "adelic/bruhat.hpp"
#include "adelic/distrib.hpp"
#include "adelic/gauss.hpp"

namespace adelic {

struct PAdicAnalyticValue {
    PAdicApprox value;
    /// Guaranteed valuation of the omitted series tail.
    Valuation truncationValuation;
    int terms = 0;
};

/// Power series on |t|_p <= 1/p (p odd) or |t|_2 <= 1/4, summed until the
/// tail valuation reaches `precision`.
PAdicAnalyticValue padicSin(const PAdicApprox& t, long precision);
PAdicAnalyticValue padicCos(const PAdicApprox& t, long precision);
PAdicAnalyticValue padicTan(const PAdicApprox& t, long precision);

struct OscillatorOptions {
    long precision = 20;
    /// p = 2 needs |t|_2 <= 1/4 and finer lambda_2 data; off unless asked for.
    bool allowTwo = false;
};

/// K_t(x, y) at a finite place, exactly. Throws PrecisionError when the
/// working precision cannot fix the character argument mod Z_p.
Cyclotomic kernelKtPExact(Prime p, const PAdicApprox& t, const PAdicApprox& x, const PAdicApprox& y,
                          const OscillatorOptions& opt = {});
Complex kernelKtP(Prime p, const PAdicApprox& t, const PAdicApprox& x, const PAdicApprox& y,
                  const OscillatorOptions& opt = {});

struct EigenCheckResult {
    double maxDeviation = 0;
    bool exact = true;  ///< every sample matched in exact arithmetic
    bool flagged = false;
    std::vector<Cyclotomic> lhs, rhs;
};

/// Compares int K_t(x, y) psi(y) dy with chi_p(E t) psi(x) at each sample x.
EigenCheckResult eigenCheck(Prime p, const PAdicApprox& t, const PAdicTestFunction& psi, const Rational& energy,
                            const std::vector<Rational>& samples, const OscillatorOptions& opt = {});

struct VacuumFourierResult {
    bool padicExact = true;
    std::vector<Prime> primes;
    double realSupError = 0;
    int gridPoints = 0;
};

/// Omega~ = Omega exactly at the given primes; the quadrature transform of
/// 2^{1/4} e^{-pi x^2} against the same function on a grid.
VacuumFourierResult vacuumFourierCheck(const std::vector<Prime>& primes = {2, 3, 5, 7, 11}, int gridPoints = 1000);

struct MultiplierResult {
    Complex multiplier;
    double spread = 0;
};
/// Ratio (quadrature transform of psi_n) / psi_n over sample points.
MultiplierResult fourierMultiplier(int degree);

/// max |G - I| for the Gram matrix of the real oscillator states up to maxDegree.
double realStateOrthonormality(int maxDegree);

/// max over samples x of |(delta, phi(x + .)) - phi(x)|.
double deltaKernelCheck(const SchwartzBruhat& phi, const std::vector<Adele>& samples);

/// y -> phi(y + x), with Omega tails at primes where |x_p| > 1 made explicit.
ElementaryFunction translate(const ElementaryFunction& phi, const Adele& x);

/// Real kernel applied to a Hermite state, by quadrature.
Complex realEvolve(const RealTestFunction& psi, double t, double x);

/// | ||U(t) psi_0||^2 - ||psi_0||^2 |.
double unitarityProbe(double t);

struct EigenPhase {
    Complex phase;      ///< (U(t) psi_n)(x) / psi_n(x), averaged over samples
    double spread = 0;  ///< deviation of individual ratios from the average
};
EigenPhase realEigenPhase(int degree, double t);

}  // namespace adelic
