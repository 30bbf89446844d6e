#include "doctest.h"

#include <cmath>
#include <numbers>

#include "adelic/acceptance.hpp"
#include "adelic/gauss.hpp"
#include "adelic/integrate.hpp"

using namespace adelic;

namespace {
Rational q(const char* s) { return parseRational(s); }
Rational phaseOf(const Place& v, const char* a) { return lambdaV(v, q(a)).value(); }
}  // namespace

TEST_CASE("frozen lambda values") {
    const Place inf = Place::infinity();
    CHECK(phaseOf(inf, "1") == q("7/8"));
    CHECK(phaseOf(inf, "-3/2") == q("1/8"));
    for (Prime p : {3, 5, 7, 11}) CHECK(lambdaV(Place::finite(p), 4).isOne());
    // Odd valuation: Legendre symbol of the leading digit, times i when p = 3 mod 4.
    CHECK(phaseOf(Place::finite(3), "3") == q("1/4"));
    CHECK(phaseOf(Place::finite(3), "6") == q("3/4"));
    CHECK(phaseOf(Place::finite(5), "5") == 0);
    CHECK(phaseOf(Place::finite(5), "10") == q("1/2"));
    CHECK(phaseOf(Place::finite(7), "1/7") == q("1/4"));
    // p = 2 by parity and unit mod 8.
    CHECK(phaseOf(Place::finite(2), "1") == q("1/8"));
    CHECK(phaseOf(Place::finite(2), "3") == q("7/8"));
    CHECK(phaseOf(Place::finite(2), "5") == q("1/8"));
    CHECK(phaseOf(Place::finite(2), "7") == q("7/8"));
    CHECK(phaseOf(Place::finite(2), "2") == q("1/8"));
    CHECK(phaseOf(Place::finite(2), "6") == q("3/8"));
    CHECK(phaseOf(Place::finite(2), "10") == q("5/8"));
    CHECK(phaseOf(Place::finite(2), "14") == q("7/8"));
    CHECK_THROWS(lambdaV(inf, 0));
    CHECK_THROWS(lambdaV(Place::finite(3), 0));
}

TEST_CASE("recalibration reproduces the frozen table") {
    const CalibrationReport cal = calibrateLambdaTable();
    CHECK(cal.consistent);
    CHECK(cal.table == frozenLambdaTable());
    CHECK(cal.table.describe().size() == 18);
}

TEST_CASE("closed-form Gauss integrals") {
    const Complex real = gaussIntegralV(Place::infinity(), 1, 0);
    CHECK(std::abs(real - std::polar(std::sqrt(0.5), -std::numbers::pi / 4)) < 1e-14);
    for (Prime p : {3, 5, 7}) {
        for (long a : {1L, 2L, -1L})
            for (long b : {0L, 1L, 5L}) {
                const Rational ar(a), br(b);
                const Cyclotomic expected = Cyclotomic::fromPhase(chiP(-br * br / (4 * ar), p));
                CHECK(gaussIntegralExact(p, ar, br) == expected);
                CHECK(std::abs(std::abs(gaussIntegralV(Place::finite(p), ar, br)) - 1.0) < 1e-14);
            }
    }
    CHECK_THROWS(gaussIntegralExact(3, 0, 1));
    CHECK_THROWS(gaussIntegralV(Place::infinity(), 0, 1));
}

TEST_CASE("product formula examples") {
    CHECK(std::abs(productFormulaCheck(1, 0) - 1.0) < 1e-12);
    CHECK(std::abs(productFormulaCheck(q("3/4"), q("1/2")) - 1.0) < 1e-10);
    CHECK(std::abs(productFormulaCheck(-5, 7) - 1.0) < 1e-10);
    CHECK(std::abs(lambdaProductCheck(1) - 1.0) < 1e-12);
    CHECK(std::abs(lambdaProductCheck(2) - 1.0) < 1e-12);
    CHECK(std::abs(lambdaProductCheck(49) - lambdaProductCheck(1)) < 1e-12);
    CHECK(relevantPrimes(q("3/4"), q("1/5")) == std::vector<Prime>{2, 3, 5});
    CHECK(relevantPrimes(1, 0) == std::vector<Prime>{2});
}

TEST_CASE("kernel K") {
    CHECK(std::abs(kernelK(principalIdele(1), principalAdele(0)) - 1.0) < 1e-12);
    CHECK(std::abs(kernelK(principalIdele(q("-6/35")), principalAdele(q("5/4"))) - 1.0) < 1e-12);
    // Changing only the real component of b moves a unit-modulus factor.
    const Idele a = principalIdele(q("3/5"));
    const Adele b1(q("1/3"), {{3, q("1/3")}, {5, q("0")}}, Rational(0));
    const Adele b2(q("7/3"), {{3, q("1/3")}, {5, q("0")}}, Rational(0));
    CHECK(std::abs(std::abs(kernelK(a, b1)) - std::abs(kernelK(a, b2))) < 1e-12);
    CHECK_THROWS(kernelK(Idele(q("1"), {}), principalAdele(0)));
}

TEST_CASE("lambda transform tails") {
    for (Prime p : {2, 3, 5}) {
        CHECK(lambdaTransformLocal(PAdicTestFunction::omega(p), 1).value == Cyclotomic(1));
        CHECK(lambdaTransformLocal(PAdicTestFunction::omega(p), makeRational(1, p)).value.isZero());
    }
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    const LambdaTransformResult at0 = lambdaTransform(vac, principalAdele(0));
    CHECK(at0.tailOmega == 1);
    CHECK(std::abs(at0.value - at0.realFactor) < 1e-15);
    const LambdaTransformResult killed = lambdaTransform(vac, principalAdele(q("1/3")));
    CHECK(killed.tailOmega == 0);
    CHECK(killed.value == Complex(0));
}

TEST_CASE("lambda transform is linear") {
    Sampler s(71);
    for (int i = 0; i < 5; ++i) {
        ElementaryFunction phi = s.elementary({2, 3}, true);
        ElementaryFunction scaled = phi;
        scaled.real = phi.real * Complex(0, 2);
        const Adele b = principalAdele(Rational(s.uniform(-5, 5)) / s.uniform(1, 4));
        const Complex lhs = lambdaTransform(scaled, b).value, rhs = Complex(0, 2) * lambdaTransform(phi, b).value;
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("property: lambda has unit modulus and is square invariant") {
    Sampler s(72);
    const std::vector<Place> places{Place::infinity(), Place::finite(2), Place::finite(3), Place::finite(5),
                                    Place::finite(7), Place::finite(11)};
    for (int i = 0; i < 300; ++i) {
        const Rational a = s.nonzeroRational(5000), c = s.nonzeroRational(300);
        for (const Place& v : places) {
            const UnitPhase l = lambdaV(v, a);
            CHECK(std::abs(std::abs(l.toComplex()) - 1.0) < 1e-14);
            CHECK(lambdaV(v, a * c * c) == l);
        }
    }
}

TEST_CASE("property: product formula on random pairs") {
    Sampler s(73);
    for (int i = 0; i < 100; ++i) {
        const Rational a = s.nonzeroRational(), b = s.rational();
        CHECK(std::abs(productFormulaCheck(a, b) - 1.0) < 1e-10);
        CHECK(std::abs(lambdaProductCheck(a) - 1.0) < 1e-12);
    }
}

TEST_CASE("property: closed form against the oracle on random small parameters") {
    Sampler s(74);
    for (int i = 0; i < 40; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5}[i % 3];
        long u = 0;
        while (u == 0 || u % p == 0) u = s.uniform(-20, 20);
        const Rational a = Rational(u) * primePower(p, s.uniform(-2, 1));
        const Rational b = Rational(s.uniform(-9, 9)) * primePower(p, s.uniform(-2, 0));
        const QpIntegral oracle = integrateQp(p, QpIntegrand{std::nullopt, a, b}, SphereDecompositionPlan::forGauss(p, a, b));
        CHECK_FALSE(oracle.flagged);
        CHECK(oracle.value == gaussIntegralExact(p, a, b));
    }
}
