#include "doctest.h"

#include <cmath>
#include <numbers>

#include "adelic/acceptance.hpp"
#include "adelic/gauss.hpp"
#include "adelic/oscillator.hpp"

using namespace adelic;

namespace {
const double kQuarter = std::pow(2.0, 0.25);
Rational q(const char* s) { return parseRational(s); }
PAdicApprox exact(Prime p, const Rational& r) { return PAdicApprox(p, r); }
}  // namespace

TEST_CASE("p-adic sine examples") {
    const PAdicAnalyticValue zero = padicSin(exact(5, 0), 10);
    CHECK(zero.value.approximant() == 0);
    const PAdicAnalyticValue s5 = padicSin(exact(5, 5), 3);
    CHECK(s5.truncationValuation >= Valuation(3));
    CHECK(s5.value.congruent(PAdicApprox(5, 5, Valuation(3))));
    CHECK(padicCos(exact(3, 3), 6).value.congruent(PAdicApprox(3, 1, Valuation(2))));
}

TEST_CASE("property: trigonometric identities to working precision") {
    Sampler s(101);
    for (int i = 0; i < 30; ++i) {
        const Prime p = std::vector<Prime>{3, 5, 7}[i % 3];
        const long n = 12;
        const Rational t = Rational(s.uniform(-30, 30)) * primePower(p, s.uniform(1, 2));
        const PAdicApprox sn = padicSin(exact(p, t), n).value, cs = padicCos(exact(p, t), n).value;
        CHECK((sn * sn + cs * cs).congruent(PAdicApprox(p, 1, Valuation(n))));
        CHECK(padicTan(exact(p, t), n).value.congruent(sn / cs));
        const PAdicApprox s2 = padicSin(exact(p, 2 * t), n).value;
        CHECK(s2.congruent(PAdicApprox(p, 2) * sn * cs));
    }
}

TEST_CASE("trigonometric domain") {
    CHECK_THROWS_AS(padicSin(exact(5, 1), 5), DomainError);
    CHECK_THROWS_AS(padicCos(exact(3, q("1/3")), 5), DomainError);
    CHECK_THROWS_AS(padicSin(exact(2, 2), 5), DomainError);
    CHECK_NOTHROW(padicSin(exact(2, 4), 5));
    CHECK_THROWS_AS(kernelKtP(2, exact(2, 4), exact(2, 0), exact(2, 0)), ArgumentError);
    OscillatorOptions two;
    two.allowTwo = true;
    CHECK_NOTHROW(kernelKtP(2, exact(2, 4), exact(2, 0), exact(2, 0), two));
}

TEST_CASE("kernel at the origin") {
    for (Prime p : {3, 5, 7}) {
        for (long k : {1L, 2L, 4L}) {
            const Rational t = Rational(k) * p;
            const PAdicApprox sn = padicSin(exact(p, t), 20).value;
            const double modulus = std::pow(padicNorm(sn.approximant(), p).get_d(), -0.5);
            const Complex expected = lambdaV(Place::finite(p), 2 * sn.approximant()).toComplex() * modulus;
            const Complex k00 = kernelKtP(p, exact(p, t), exact(p, 0), exact(p, 0));
            CHECK(std::abs(k00 - expected) < 1e-12);
            const Complex kxy = kernelKtP(p, exact(p, t), exact(p, q("2/3")), exact(p, q("-4/7")));
            CHECK(std::abs(std::abs(kxy) - modulus) < 1e-12);
        }
    }
    // p = 5, t = 5: sin t has valuation 1 and leading digit 1, so lambda(2 sin t) = (2/5) = -1.
    CHECK(std::abs(kernelKtP(5, exact(5, 5), exact(5, 0), exact(5, 0)) + std::sqrt(5.0)) < 1e-12);
}

TEST_CASE("kernel refuses an undetermined character argument") {
    OscillatorOptions coarse;
    coarse.precision = 2;
    CHECK_THROWS_AS(kernelKtP(5, exact(5, 5), exact(5, q("1/625")), exact(5, q("1/625")), coarse), PrecisionError);
    CHECK_THROWS_AS(kernelKtP(5, PAdicApprox(5, 5, Valuation(2)), exact(5, q("1/125")), exact(5, 1)), PrecisionError);
    CHECK_NOTHROW(kernelKtP(5, exact(5, 5), exact(5, q("1/625")), exact(5, q("1/625"))));
}

TEST_CASE("vacuum is invariant under the p-adic evolution") {
    const PAdicTestFunction om = PAdicTestFunction::omega(5);
    const EigenCheckResult r = eigenCheck(5, exact(5, 5), om, 0, {0, 1, q("1/5")});
    CHECK_FALSE(r.flagged);
    CHECK(r.exact);
    CHECK(r.maxDeviation == 0);
    REQUIRE(r.lhs.size() == 3);
    CHECK(r.lhs[0] == Cyclotomic(1));
    CHECK(r.lhs[1] == Cyclotomic(1));
    CHECK(r.lhs[2].isZero());
    CHECK(r.rhs[2].isZero());
    for (Prime p : {3, 7}) {
        const EigenCheckResult other =
            eigenCheck(p, exact(p, Rational(2 * p)), PAdicTestFunction::omega(p), 0, {0, q("3"), makeRational(1, p)});
        CHECK(other.exact);
    }
}

TEST_CASE("eigen deviation scales with the state") {
    // A wrong energy leaves a deviation |1 - e^{2 pi i/5}| at x = 0.
    const PAdicTestFunction om = PAdicTestFunction::omega(5);
    const EigenCheckResult one = eigenCheck(5, exact(5, 5), om, q("1/25"), {0});
    const EigenCheckResult three = eigenCheck(5, exact(5, 5), om * Cyclotomic(3), q("1/25"), {0});
    CHECK_FALSE(one.exact);
    CHECK(std::abs(one.maxDeviation - std::abs(1.0 - std::polar(1.0, 2 * std::numbers::pi / 5))) < 1e-12);
    CHECK(std::abs(three.maxDeviation - 3 * one.maxDeviation) < 1e-12);
}

TEST_CASE("vacuum Fourier self-duality") {
    const VacuumFourierResult r = vacuumFourierCheck();
    CHECK(r.padicExact);
    CHECK(r.primes == std::vector<Prime>{2, 3, 5, 7, 11});
    CHECK(r.gridPoints == 1000);
    CHECK(r.realSupError < 1e-10);
    const MultiplierResult m0 = fourierMultiplier(0);
    CHECK(std::abs(m0.multiplier - 1.0) < 1e-10);
    const MultiplierResult m1 = fourierMultiplier(1);
    CHECK(std::abs(m1.multiplier - Complex(0, -1)) < 1e-10);
    CHECK(std::abs(std::abs(m1.multiplier) - 1.0) < 1e-10);
    CHECK(m1.spread < 1e-8);
}

TEST_CASE("real oscillator states are orthonormal") {
    CHECK(realStateOrthonormality(0) < 1e-12);
    CHECK(realStateOrthonormality(1) < 1e-12);
    CHECK(realStateOrthonormality(8) < 1e-9);
    CHECK_THROWS(realStateOrthonormality(13));
}

TEST_CASE("the t = 0 kernel is the delta distribution") {
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    CHECK(std::abs(evaluate(vac, principalAdele(0)) - kQuarter) < 1e-15);
    const std::vector<Adele> xs{principalAdele(0), principalAdele(q("1/2")), principalAdele(q("1/3")),
                                principalAdele(q("-7/4"))};
    CHECK(deltaKernelCheck(SchwartzBruhat(vac), xs) < 1e-14);
    Sampler s(102);
    for (int i = 0; i < 10; ++i) {
        const SchwartzBruhat phi = SchwartzBruhat(s.elementary({2, 3})) * Complex(1, 2) + SchwartzBruhat(s.elementary({5}));
        CHECK(deltaKernelCheck(phi, xs) < 1e-12);
    }
}

TEST_CASE("translation") {
    Sampler s(103);
    for (int i = 0; i < 20; ++i) {
        const ElementaryFunction phi = s.elementary({2, 3});
        const Rational x = Rational(s.uniform(-20, 20)) / s.uniform(1, 12);
        const ElementaryFunction moved = translate(phi, principalAdele(x));
        for (int k = 0; k < 5; ++k) {
            const Rational y = Rational(s.uniform(-20, 20)) / s.uniform(1, 12);
            const Complex expected = evaluate(phi, principalAdele(x + y));
            CHECK(std::abs(evaluate(moved, principalAdele(y)) - expected) < 1e-13);
        }
    }
}

TEST_CASE("real evolution") {
    for (double t : {0.3, 1.1, 2.5}) CHECK(unitarityProbe(t) < 1e-8);
    for (int n : {0, 1, 2, 5})
        for (double t : {0.4, 1.3}) {
            const EigenPhase e = realEigenPhase(n, t);
            CHECK(std::abs(e.phase - std::polar(1.0, -(n + 0.5) * t)) < 1e-8);
            CHECK(e.spread < 1e-8);
        }
}
