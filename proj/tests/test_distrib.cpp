#include "doctest.h"

#include <cmath>
#include <numbers>

#include "adelic/acceptance.hpp"
#include "adelic/distrib.hpp"
#include "adelic/gauss.hpp"
#include "adelic/integrate.hpp"

using namespace adelic;

namespace {
constexpr double kPi = std::numbers::pi;
const double kQuarter = std::pow(2.0, 0.25);
Rational q(const char* s) { return parseRational(s); }

/// int 2^{1/4} e^{-pi x^2} e^{-2 pi i (a x^2 + b x)} dx in closed form.
Complex gaussianAgainstQuadratic(double a, double b) {
    const Complex A(kPi, 2 * kPi * a), B(0, 2 * kPi * b);
    return kQuarter * std::sqrt(kPi / A) * std::exp(B * B / (4.0 * A));
}
}  // namespace

TEST_CASE("delta pairing") {
    const AdelicDistribution delta = deltaDistribution();
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    CHECK(std::abs(pair(delta, vac).value - kQuarter) < 1e-15);
    CHECK(std::abs(pair(delta, SchwartzBruhat(vac, 2.0)).value - 2 * kQuarter) < 1e-15);
    // Omega on the unit sphere of Z_2 only: vanishes at 0.
    ElementaryFunction off = vac;
    off.primes.emplace(2, PAdicTestFunction::indicator(Ball(2, 1, 1)));
    CHECK(pair(delta, off).value == Complex(0));
}

TEST_CASE("property: delta sifts exactly") {
    const AdelicDistribution delta = deltaDistribution();
    Sampler s(91);
    for (int i = 0; i < 50; ++i) {
        const ElementaryFunction phi = s.elementary({2, 3, 5, 7});
        const Pairing r = pair(delta, phi);
        CHECK(r.value == evaluate(phi, principalAdele(0)));
        CHECK(r.nonUnitFactors <= r.factorBound);
    }
}

TEST_CASE("linear character pairing") {
    const AdelicDistribution chi = chiDistribution();
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    CHECK(std::abs(pair(chi, vac).value - kQuarter * std::exp(-kPi)) < 1e-14);
    ElementaryFunction narrow = vac;
    narrow.primes.emplace(3, PAdicTestFunction::indicator(Ball(3, 0, 1)));
    CHECK(std::abs(pair(chi, narrow).value - kQuarter * std::exp(-kPi) / 3.0) < 1e-14);
    // 3^{-1} Z_3 carries a nontrivial character at 1.
    ElementaryFunction wide = vac;
    wide.primes.emplace(3, PAdicTestFunction::indicator(Ball(3, 0, -1)));
    CHECK(pair(chi, wide).value == Complex(0));
}

TEST_CASE("property: character pairing is the transform at 1") {
    const AdelicDistribution chi = chiDistribution();
    Sampler s(92);
    for (int i = 0; i < 20; ++i) {
        const ElementaryFunction phi = s.elementary({2, 3, 5});
        const Complex expected = evaluate(fourierElementary(phi), principalAdele(1));
        CHECK(std::abs(pair(chi, phi).value - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("quadratic character pairing") {
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    const Pairing plain = pair(chiQuadraticDistribution(principalIdele(1), principalAdele(0)), vac);
    CHECK(std::abs(plain.value - gaussianAgainstQuadratic(1, 0)) < 1e-12);
    CHECK(plain.nonUnitFactors == 0);

    // a = 3/4, b = 1/2: only p = 2 is exceptional, where the unit ball gives (1 + i)/2.
    const Pairing mixed = pair(chiQuadraticDistribution(principalIdele(q("3/4")), principalAdele(q("1/2"))), vac);
    const Complex expected = gaussianAgainstQuadratic(0.75, 0.5) * Complex(0.5, 0.5);
    CHECK(std::abs(mixed.value - expected) < 1e-12);
    CHECK(mixed.nonUnitFactors == 1);
    CHECK(mixed.factorBound == 1);

    // Scaling the test function scales the result.
    const AdelicDistribution f = chiQuadraticDistribution(principalIdele(q("-5/3")), principalAdele(q("2/9")));
    const Complex c(0.3, -1.7);
    CHECK(std::abs(pair(f, SchwartzBruhat(vac, c)).value - c * pair(f, vac).value) < 1e-14);
}

TEST_CASE("quadratic character local factors match the oracle") {
    Sampler s(93);
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    for (int i = 0; i < 10; ++i) {
        const Rational a = s.nonzeroRational(40), b = s.rational(40);
        const Idele ia = principalIdele(a);
        const Adele ab = principalAdele(b);
        Complex expected = gaussianAgainstQuadratic(a.get_d(), b.get_d());
        for (Prime p : relevantPrimes(a, b)) {
            const QpIntegral r = integrateQp(p, QpIntegrand{PAdicTestFunction::omega(p), a, b});
            REQUIRE_FALSE(r.flagged);
            expected *= r.complex();
        }
        CHECK(std::abs(pair(chiQuadraticDistribution(ia, ab), vac).value - expected) < 1e-11);
    }
}

TEST_CASE("pi_alpha pairing") {
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    for (Complex a : {Complex(2, 0), Complex(3, 1), Complex(2.5, -4)})
        CHECK(std::abs(pair(piAlphaDistribution(a), vac).value - phiP(vac, a).value) <
              1e-12 * std::abs(phiP(vac, a).value));
    CHECK(std::abs(pair(piAlphaDistribution(2.0), vac).value - kQuarter * kPi / 6) < 1e-13);
    CHECK_THROWS_AS(piAlphaDistribution(1.0), DomainError);
    CHECK_THROWS_AS(piAlphaDistribution(0.0), DomainError);
    Sampler s(94);
    for (int i = 0; i < 10; ++i) {
        const ElementaryFunction phi = s.elementary({2, 3});
        const Complex expected = phiP(phi, 3.0).value;
        CHECK(std::abs(pair(piAlphaDistribution(3.0), phi).value - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("a distribution without a tail certificate cannot be paired") {
    const AdelicDistribution bare("bare", [](const RealTestFunction&) { return Complex(1); },
                                  [](Prime, const PAdicTestFunction&) { return Complex(1); }, std::nullopt);
    CHECK_THROWS_AS(pair(bare, ElementaryFunction::vacuum()), DomainError);
    TailCertificate euler;
    euler.kind = TailCertificate::Kind::Euler;
    const AdelicDistribution broken("broken", [](const RealTestFunction&) { return Complex(1); },
                                    [](Prime, const PAdicTestFunction&) { return Complex(1); }, euler);
    CHECK_THROWS_AS(pair(broken, ElementaryFunction::vacuum()), DomainError);
}

TEST_CASE("regular distributions integrate over the union prime set") {
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    CHECK(std::abs(pairFunctions(SchwartzBruhat(vac), SchwartzBruhat(vac)) - 1.0) < 1e-13);
    ElementaryFunction g = vac;
    g.primes.emplace(3, PAdicTestFunction::indicator(Ball(3, 0, 1)));
    CHECK(std::abs(pairFunctions(SchwartzBruhat(g), SchwartzBruhat(vac)) - 1.0 / 3) < 1e-13);
    Sampler s(95);
    for (int i = 0; i < 10; ++i) {
        const ElementaryFunction a = s.elementary({2, 3}), b = s.elementary({3, 5});
        const Complex direct = pairFunctions(SchwartzBruhat(a), SchwartzBruhat(b));
        CHECK(std::abs(pair(functionDistribution(a), b).value - direct) < 1e-12 * std::max(1.0, std::abs(direct)));
        CHECK(std::abs(pairFunctions(SchwartzBruhat(b), SchwartzBruhat(a)) - direct) < 1e-12 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("property: exact local products") {
    Sampler s(96);
    for (int i = 0; i < 40; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5, 7}[i % 4];
        const PAdicTestFunction f = s.padicTestFunction(p), g = s.padicTestFunction(p);
        CHECK(integrateProduct(f, g) == integrateProduct(g, f));
        CHECK(integrateProduct(f, PAdicTestFunction::indicator(Ball(p, 0, f.supportLevel()))) == f.integral());
    }
}

TEST_CASE("property: pairing is linear") {
    const AdelicDistribution delta = deltaDistribution(), chi = chiDistribution();
    Sampler s(97);
    for (int i = 0; i < 20; ++i) {
        const ElementaryFunction a = s.elementary({2, 3}), b = s.elementary({3, 5});
        const Complex c(s.uniformReal(-2, 2), s.uniformReal(-2, 2));
        const SchwartzBruhat sum = SchwartzBruhat(a) * c + SchwartzBruhat(b);
        for (const AdelicDistribution* f : {&delta, &chi}) {
            const Complex lhs = pair(*f, sum).value, rhs = c * pair(*f, a).value + pair(*f, b).value;
            CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, std::abs(rhs)));
        }
    }
}
