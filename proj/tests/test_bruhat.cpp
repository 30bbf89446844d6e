#include "doctest.h"

#include <cmath>

#include "adelic/acceptance.hpp"
#include "adelic/bruhat.hpp"
#include "adelic/integrate.hpp"

using namespace adelic;

namespace {
Rational q(const char* s) { return parseRational(s); }
const double kQuarter = std::pow(2.0, 0.25);

/// f(x) -> f(a x + c), written back as balls.
PAdicTestFunction affinePullback(const PAdicTestFunction& f, const Rational& a, const Rational& c) {
    const Prime p = f.prime();
    const long v = valuation(a, p).value();
    std::vector<TestTerm> out;
    for (const auto& t : f.terms())
        out.push_back({t.coefficient * Cyclotomic::fromPhase(chiP(t.frequency * c, p)), t.frequency * a,
                       Ball(p, (t.ball.center() - c) / a, t.ball.radiusExp() - v)});
    return PAdicTestFunction(p, out);
}
}  // namespace

TEST_CASE("omega") {
    CHECK(omega(q("1/2")) == 1);
    CHECK(omega(q("1")) == 1);
    CHECK(omega(q("3")) == 0);
    CHECK(omega(q("0")) == 1);
    CHECK_THROWS(omega(q("-1")));
}

TEST_CASE("balls are nested or disjoint") {
    Sampler s(41);
    for (int i = 0; i < 500; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5}[i % 3];
        const Ball a(p, Rational(s.uniform(-30, 30)) * primePower(p, s.uniform(-2, 1)), s.uniform(-2, 3));
        const Ball b(p, Rational(s.uniform(-30, 30)) * primePower(p, s.uniform(-2, 1)), s.uniform(-2, 3));
        const int relations = int(a.contains(b)) + int(b.contains(a)) + int(a.disjoint(b));
        CHECK((relations == 1 || (relations == 2 && a == b)));
    }
    CHECK(Ball(3, q("1"), 1) == Ball(3, q("4"), 1));
    CHECK(Ball(3, q("1"), 1).contains(q("-2")));
    CHECK_FALSE(Ball(3, q("1"), 1).contains(q("2")));
}

TEST_CASE("evaluation of elementary functions") {
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    CHECK(std::abs(evaluate(vac, principalAdele(q("0"))) - kQuarter) < 1e-15);
    // |1/3|_3 = 3 outside P kills the value.
    CHECK(evaluate(vac, principalAdele(q("1/3"))) == Complex(0));
    ElementaryFunction phi{RealTestFunction::gaussian(), {{2, PAdicTestFunction::indicator(Ball(2, q("0"), 1))}}};
    CHECK(evaluate(phi, principalAdele(q("1"))) == Complex(0));
    CHECK(std::abs(evaluate(phi, principalAdele(q("2"))) - std::exp(-4 * std::numbers::pi)) < 1e-15);
}

TEST_CASE("Haar measure") {
    CHECK(PAdicTestFunction::omega(5).integral() == Cyclotomic(1));
    CHECK(PAdicTestFunction::indicator(Ball(3, q("1/9"), -2)).integral() == Cyclotomic(9));
    // Sphere |x| = 1 has measure 1 - 1/p.
    const PAdicTestFunction sphere =
        PAdicTestFunction::omega(7) + PAdicTestFunction::indicator(Ball(7, q("0"), 1), Cyclotomic(-1));
    CHECK(sphere.integral() == Cyclotomic(q("6/7")));
    // A nontrivial character integrates to zero over a ball it is not constant on.
    CHECK(PAdicTestFunction(3, {{Cyclotomic(1), q("1/3"), Ball::integers(3)}}).integral().isZero());
}

TEST_CASE("property: Haar translation, scaling and additivity") {
    Sampler s(42);
    for (int i = 0; i < 100; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5, 7}[i % 4];
        const PAdicTestFunction f = s.padicTestFunction(p);
        const Rational c = Rational(s.uniform(-50, 50)) * primePower(p, s.uniform(-2, 1));
        CHECK(affinePullback(f, Rational(1), c).integral() == f.integral());
        const Rational a = Rational(s.uniform(1, 6) * (s.uniform(0, 1) ? 1 : -1)) * primePower(p, s.uniform(-2, 2));
        // int f(a x) dx = |a|^-1 int f.
        CHECK(affinePullback(f, a, Rational(0)).integral() * Cyclotomic(padicNorm(a, p)) == f.integral());
        // Splitting every ball into its sub-balls leaves the integral unchanged.
        std::vector<TestTerm> split;
        for (const auto& t : f.terms())
            for (const Ball& b : t.ball.refine(t.ball.radiusExp() + 1)) split.push_back({t.coefficient, t.frequency, b});
        CHECK(PAdicTestFunction(p, split).integral() == f.integral());
        CHECK(PAdicTestFunction(p, split) == f);
    }
}

TEST_CASE("canonical form is a disjoint refinement with the same values") {
    Sampler s(43);
    for (int i = 0; i < 100; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5}[i % 3];
        const PAdicTestFunction f = s.padicTestFunction(p);
        const PAdicTestFunction c = f.canonical();
        CHECK(c.isPlain());
        for (std::size_t a = 0; a < c.terms().size(); ++a)
            for (std::size_t b = a + 1; b < c.terms().size(); ++b) CHECK(c.terms()[a].ball.disjoint(c.terms()[b].ball));
        for (int k = 0; k < 10; ++k) {
            const Rational x = Rational(s.uniform(-200, 200)) * primePower(p, s.uniform(-3, 2));
            CHECK(c(x) == f(x));
        }
    }
}

TEST_CASE("p-adic Fourier transform closed forms") {
    for (Prime p : {2, 3, 5, 7, 11}) {
        CHECK(fourierP(PAdicTestFunction::omega(p)) == PAdicTestFunction::omega(p));
        const PAdicTestFunction pz = PAdicTestFunction::indicator(Ball(p, q("0"), 1));
        CHECK(fourierP(pz) == PAdicTestFunction::indicator(Ball(p, q("0"), -1), Cyclotomic(makeRational(1, p))));
    }
    // A shifted ball picks up a character in the frequency variable.
    const PAdicTestFunction shifted = PAdicTestFunction::indicator(Ball(3, q("1/3"), 0));
    const PAdicTestFunction ft = fourierP(shifted);
    CHECK(ft(q("1")) == Cyclotomic::fromPhase(chiP(q("1/3"), 3)));
    CHECK(ft(q("1/3")).isZero());
}

TEST_CASE("property: transform values agree with the integration oracle") {
    Sampler s(44);
    for (int i = 0; i < 30; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5}[i % 3];
        const PAdicTestFunction f = s.padicTestFunction(p);
        const PAdicTestFunction ft = fourierP(f);
        for (int k = 0; k < 3; ++k) {
            const Rational xi = Rational(s.uniform(-20, 20)) * primePower(p, s.uniform(-2, 1));
            CHECK(ft(xi) == integrateQp(p, QpIntegrand{f, Rational(0), xi}).value);
        }
    }
}

TEST_CASE("property: involution, Plancherel and linearity") {
    Sampler s(45);
    for (int i = 0; i < 100; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5, 7}[i % 4];
        const PAdicTestFunction f = s.padicTestFunction(p), g = s.padicTestFunction(p);
        CHECK(fourierP(fourierP(f)) == f.reflected());
        CHECK(fourierP(f).normSquared() == f.normSquared());
        CHECK(fourierP(f + g) == fourierP(f) + fourierP(g));
        const Cyclotomic c = Cyclotomic::rootOfUnity(makeRational(1, p), q("3/2"));
        CHECK(fourierP(f * c) == fourierP(f) * c);
    }
}

TEST_CASE("real Hermite transforms") {
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    const ElementaryFunction ft = fourierElementary(vac);
    for (double x : {0.0, 0.3, -1.1}) CHECK(std::abs(ft.real(x) - vac.real(x)) < 1e-14);
    for (int n = 0; n < 6; ++n) {
        const RealTestFunction h = RealTestFunction::hermiteFunction(n);
        const RealTestFunction ht = fourierReal(h);
        Complex mult = 1;
        for (int k = 0; k < n; ++k) mult *= Complex(0, -1);
        for (double x : {0.2, 0.7, -0.45}) CHECK(std::abs(ht(x) - mult * h(x)) < 1e-12);
    }
    CHECK(std::abs(hermite(3, 0.5) - (8 * 0.125 - 12 * 0.5)) < 1e-14);
}

TEST_CASE("generic real profiles need a decay radius to transform") {
    RealTestFunction noBound(RealTestFunction::Generic{[](double x) { return Complex(std::exp(-x * x)); }, std::nullopt});
    CHECK_THROWS(fourierReal(noBound));
    RealTestFunction bounded(
        RealTestFunction::Generic{[](double x) { return Complex(std::exp(-std::numbers::pi * x * x)); }, 6.0});
    const RealTestFunction ft = fourierReal(bounded);
    CHECK(std::abs(ft(0.5) - std::exp(-std::numbers::pi * 0.25)) < 1e-9);
}

TEST_CASE("Schwartz-Bruhat linearity") {
    Sampler s(46);
    for (int i = 0; i < 20; ++i) {
        const SchwartzBruhat a(s.elementary({2, 3})), b(s.elementary({3, 5}));
        const SchwartzBruhat sum = a * Complex(2, 1) + b;
        const Adele x = principalAdele(Rational(s.uniform(-9, 9)) / s.uniform(1, 30));
        const Complex lhs = evaluate(fourier(sum), x);
        const Complex rhs = Complex(2, 1) * evaluate(fourier(a), x) + evaluate(fourier(b), x);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}
