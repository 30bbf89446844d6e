#pragma once

// Brute-force integration engines used as oracles for every closed form:
// exact p-adic residue sums with stabilization detection, sphere
// decomposition over Q_p, and trapezoid quadrature on the real line.
//
// Haar measure on Q_p is normalized by int_{Z_p} dx = 1.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adelic/bruhat.hpp"
#include "adelic/cyclotomic.hpp"

namespace adelic {

struct StabilizationPolicy {
    /// Number of consecutive equal refinements required.
    int window = 2;
    /// Maximum refinement depth below the ball level.
    int depthCap = 40;
    /// Use the brute-force rational reference instead of the integer kernel.
    bool reference = false;
};

struct BallIntegral {
    Cyclotomic value;
    bool stabilized = false;
    long level = 0;  ///< refinement level at which the value stabilized

    Complex complex() const { return value.toComplex(); }
};

/// int_{ball} chi_p(a x^2 + b x) dx by residue sums at increasing refinement.
BallIntegral integrateBallCharacter(const Ball& ball, const Rational& a, const Rational& b,
                                    const StabilizationPolicy& policy = {});

/// Residue sum at a single refinement level.
Cyclotomic residueSum(const Ball& ball, const Rational& a, const Rational& b, long level, bool reference = false);

struct SphereDecompositionPlan {
    /// Spheres |x|_p = p^j with j <= -innerLevel are folded into the ball
    /// p^innerLevel Z_p.
    long innerLevel = 0;
    /// Largest sphere index summed.
    long sphereHigh = 4;
    StabilizationPolicy stabilization{};

    /// A plan whose range covers the proven tail index of the Gauss integrand.
    static SphereDecompositionPlan forGauss(Prime p, const Rational& a, const Rational& b);
};

/// Sphere index from which every sphere integral of chi_p(a x^2 + b x)
/// vanishes identically; nullopt when the tail never vanishes (a = b = 0).
std::optional<long> gaussTailIndex(Prime p, const Rational& a, const Rational& b);

/// An integrand f(x) chi_p(a x^2 + b x); without a test function f = 1 on Q_p.
struct QpIntegrand {
    std::optional<PAdicTestFunction> test;
    Rational a{0};
    Rational b{0};
};

struct QpIntegral {
    Cyclotomic value;
    bool flagged = false;
    std::string flag;
    /// First sphere index from which all computed sphere integrals were zero.
    std::optional<long> tailIndex;
    std::vector<Cyclotomic> spheres;  ///< per-sphere values, innermost first

    Complex complex() const { return value.toComplex(); }
};

QpIntegral integrateQp(Prime p, const QpIntegrand& integrand, const SphereDecompositionPlan& plan = {});

struct QuadratureConfig {
    double radius = 8.0;
    std::int64_t nodes = 4096;
    double errorBudget = 1e-10;
};

struct RealIntegral {
    Complex value;
    double errorEstimate = 0;
    bool flagged = false;
};

/// Trapezoid on [-radius, radius]; the error estimate compares against the
/// rule with half the nodes.
RealIntegral integrateReal(const std::function<Complex(double)>& f, const QuadratureConfig& cfg = {});

/// int f(x) chi_inf(a x^2 + b x) dx for a decaying test function.
RealIntegral integrateReal(const RealTestFunction& f, const QuadratureConfig& cfg = {}, double a = 0, double b = 0);

/// int |x|^{alpha-1} f(x) dx via x = +-e^t, for Re alpha > 0.
RealIntegral integrateMellinReal(const std::function<Complex(double)>& f, Complex alpha, double decayRadius = 8.0,
                                 double errorBudget = 1e-10);

/// int chi_inf(a x^2 + b x) dx, defined by Gaussian damping e^{-eps (x-x0)^2}
/// with polynomial extrapolation eps -> 0.
RealIntegral fresnelRegularized(double a, double b, double errorBudget = 1e-8);

}  // namespace adelic
