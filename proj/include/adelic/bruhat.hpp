#pragma once

// Schwartz-Bruhat test functions on Q_p, R and the adeles, and their Fourier
// transforms under the kernel chi(xi x).

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "adelic/characters.hpp"
#include "adelic/cyclotomic.hpp"
#include "adelic/qcore.hpp"

namespace adelic {

/// The ball center + p^radiusExp Z_p = { x : |x - center|_p <= p^-radiusExp }.
class Ball {
public:
    Ball(Prime p, Rational center, long radiusExp);

    static Ball integers(Prime p) { return {p, Rational(0), 0}; }

    Prime prime() const { return p_; }
    const Rational& center() const { return center_; }
    long radiusExp() const { return k_; }

    bool contains(const Rational& x) const;
    bool contains(const Ball& inner) const;
    bool disjoint(const Ball& o) const;
    bool containsZero() const { return contains(Rational(0)); }
    /// Haar measure p^-k with the unit ball normalized to 1.
    Rational measure() const { return primePower(p_, -k_); }
    /// The p^(level - k) sub-balls at a finer level.
    std::vector<Ball> refine(long level) const;

    friend bool operator==(const Ball& a, const Ball& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.center_ == b.center_;
    }

private:
    Prime p_;
    Rational center_;  // canonical representative, unique per ball
    long k_;
};

/// Canonical coset representative of x + p^level Z_p.
Rational cosetRepresentative(const Rational& x, Prime p, long level);

/// One term coefficient * chi_p(frequency * x) * 1_ball(x).
struct TestTerm {
    Cyclotomic coefficient;
    Rational frequency;
    Ball ball;
};

/// A locally constant, compactly supported function on Q_p, written as a
/// finite sum of character-modulated ball indicators.
class PAdicTestFunction {
public:
    explicit PAdicTestFunction(Prime p, std::vector<TestTerm> terms = {});

    static PAdicTestFunction indicator(const Ball& ball, const Cyclotomic& coefficient = Cyclotomic(1));
    /// Omega_p: the indicator of Z_p.
    static PAdicTestFunction omega(Prime p) { return indicator(Ball::integers(p)); }

    Prime prime() const { return p_; }
    const std::vector<TestTerm>& terms() const { return terms_; }

    Cyclotomic operator()(const Rational& x) const;

    PAdicTestFunction operator+(const PAdicTestFunction& o) const;
    PAdicTestFunction operator*(const Cyclotomic& c) const;
    PAdicTestFunction reflected() const;

    /// Disjoint plain balls, maximally merged and sorted; zero terms dropped.
    /// Two functions are equal iff their canonical forms coincide.
    PAdicTestFunction canonical() const;
    bool isPlain() const;
    /// Finest ball level at which the function is constant.
    long constancyLevel() const;
    /// Smallest k with support inside p^k Z_p.
    long supportLevel() const;

    /// Exact integral of |f|^2.
    Cyclotomic normSquared() const;
    /// Exact integral of f.
    Cyclotomic integral() const;

    friend bool operator==(const PAdicTestFunction& a, const PAdicTestFunction& b);

private:
    Prime p_;
    std::vector<TestTerm> terms_;
};

/// Closed-form p-adic Fourier transform f~(xi) = int f(x) chi_p(xi x) dx.
PAdicTestFunction fourierP(const PAdicTestFunction& f);

/// Hermite polynomial H_n at y.
double hermite(int n, double y);
/// Integer coefficients of H_n, index = power.
std::vector<double> hermiteCoefficients(int n);

/// A Schwartz function on R. Either a Hermite-Gaussian combination
/// sum_n c_n e^{-pi x^2} H_n(x sqrt(2 pi)), or a generic profile evaluated
/// pointwise with a declared radius beyond which it is negligible.
class RealTestFunction {
public:
    struct Generic {
        std::function<Complex(double)> profile;
        std::optional<double> decayRadius;
    };

    RealTestFunction() = default;
    explicit RealTestFunction(std::vector<Complex> hermite) : hermite_(std::move(hermite)) {}
    explicit RealTestFunction(Generic generic) : generic_(std::move(generic)) {}

    static RealTestFunction gaussian(Complex coefficient = 1.0);
    static RealTestFunction hermiteFunction(int degree, Complex coefficient = 1.0);

    bool isHermite() const { return !generic_.has_value(); }
    const std::vector<Complex>& hermiteCoefficients() const { return hermite_; }
    const std::optional<Generic>& generic() const { return generic_; }
    /// Radius beyond which the function is negligible; nullopt for a generic
    /// profile without a declared bound.
    std::optional<double> decayRadius() const;

    Complex operator()(double x) const;
    RealTestFunction operator*(Complex c) const;
    RealTestFunction operator+(const RealTestFunction& o) const;

private:
    std::vector<Complex> hermite_;
    std::optional<Generic> generic_;
};

/// Fourier transform with kernel chi_inf(xi x) = e^{-2 pi i xi x}. Exact for the
/// Hermite kind (each H_n component picks up (-i)^n); the generic kind is
/// transformed by quadrature and needs a decay radius.
RealTestFunction fourierReal(const RealTestFunction& f);

/// phi_inf(x_inf) prod_{p in P} phi_p(x_p) prod_{p not in P} Omega_p(|x_p|_p).
struct ElementaryFunction {
    RealTestFunction real;
    std::map<Prime, PAdicTestFunction> primes;

    /// 2^{1/4} e^{-pi x^2} with Omega tails everywhere.
    static ElementaryFunction vacuum();
    /// The degree-n oscillator state 2^{1/4} (2^n n!)^{-1/2} e^{-pi x^2} H_n(x sqrt(2 pi)).
    static ElementaryFunction oscillatorState(int n);

    const PAdicTestFunction& factorAt(Prime p) const;
};

/// Value of an elementary function at an adele. Needs the component of x at
/// each prime of P; listed components outside P contribute Omega.
Complex evaluate(const ElementaryFunction& phi, const Adele& x);

ElementaryFunction fourierElementary(const ElementaryFunction& phi);

/// Finite linear combination sum_i C_i phi_i.
struct SchwartzBruhat {
    std::vector<std::pair<Complex, ElementaryFunction>> terms;

    SchwartzBruhat() = default;
    explicit SchwartzBruhat(ElementaryFunction phi, Complex c = 1.0) { terms.emplace_back(c, std::move(phi)); }

    SchwartzBruhat operator+(const SchwartzBruhat& o) const;
    SchwartzBruhat operator*(Complex c) const;
};

Complex evaluate(const SchwartzBruhat& phi, const Adele& x);
SchwartzBruhat fourier(const SchwartzBruhat& phi);

/// Omega(|x|_p): 1 if the norm is at most 1, else 0.
int omega(const Rational& normValue);

}  // namespace adelic
