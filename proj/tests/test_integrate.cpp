#include "doctest.h"

#include <cmath>
#include <numbers>

#include "adelic/acceptance.hpp"
#include "adelic/gauss.hpp"
#include "adelic/integrate.hpp"

using namespace adelic;

namespace {
Rational q(const char* s) { return parseRational(s); }
}  // namespace

TEST_CASE("ball character integrals") {
    for (Prime p : {2, 3, 5, 7}) {
        CHECK(integrateBallCharacter(Ball::integers(p), 0, 0).value == Cyclotomic(1));
        CHECK(integrateBallCharacter(Ball::integers(p), 0, Rational(p + 1)).value == Cyclotomic(1));
        CHECK(integrateBallCharacter(Ball::integers(p), 0, makeRational(1, p)).value.isZero());
    }
    const BallIntegral r = integrateBallCharacter(Ball::integers(3), 0, q("1/3"));
    CHECK(r.stabilized);
    CHECK(r.value.isZero());
}

TEST_CASE("a refinement cap that is too small is flagged") {
    StabilizationPolicy tight;
    tight.depthCap = 1;
    const BallIntegral r = integrateBallCharacter(Ball::integers(3), primePower(3, -8), 0, tight);
    CHECK_FALSE(r.stabilized);
}

TEST_CASE("whole-space integrals") {
    CHECK(integrateQp(5, QpIntegrand{PAdicTestFunction::omega(5)}).value == Cyclotomic(1));
    for (Prime p : {2, 3, 5, 7}) {
        const PAdicTestFunction sphere =
            PAdicTestFunction::omega(p) + PAdicTestFunction::indicator(Ball(p, 0, 1), Cyclotomic(-1));
        CHECK(integrateQp(p, QpIntegrand{sphere}).value == Cyclotomic(1 - makeRational(1, p)));
    }
    // chi_p(x^2) at p = 1 mod 4.
    for (Prime p : {5, 13}) {
        const QpIntegral r = integrateQp(p, QpIntegrand{std::nullopt, 1, 0}, SphereDecompositionPlan::forGauss(p, 1, 0));
        CHECK_FALSE(r.flagged);
        CHECK(r.value == gaussIntegralExact(p, 1, 0));
    }
}

TEST_CASE("a sphere range short of the tail is flagged") {
    SphereDecompositionPlan plan;
    plan.sphereHigh = 1;
    const QpIntegral r = integrateQp(3, QpIntegrand{std::nullopt, q("1/9"), q("1/27")}, plan);
    CHECK(r.flagged);
    CHECK_FALSE(r.flag.empty());
}

TEST_CASE("spheres beyond the proven tail index vanish") {
    Sampler s(51);
    for (int i = 0; i < 30; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5}[i % 3];
        const Rational a = Rational(s.uniform(1, 9)) * primePower(p, s.uniform(-2, 1));
        const Rational b = Rational(s.uniform(-9, 9)) * primePower(p, s.uniform(-2, 0));
        const auto tail = gaussTailIndex(p, a, b);
        REQUIRE(tail.has_value());
        SphereDecompositionPlan plan = SphereDecompositionPlan::forGauss(p, a, b);
        plan.sphereHigh = std::max(*tail, 1L) + 1;
        const QpIntegral r = integrateQp(p, QpIntegrand{std::nullopt, a, b}, plan);
        CHECK_FALSE(r.flagged);
        REQUIRE(r.tailIndex.has_value());
        CHECK(*r.tailIndex <= std::max(*tail, 1L));
    }
}

TEST_CASE("property: Haar translation invariance") {
    Sampler s(52);
    for (int i = 0; i < 60; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5, 7}[i % 4];
        const long k = s.uniform(-2, 2);
        const Rational c = Rational(s.uniform(-40, 40)) * primePower(p, s.uniform(-2, 1));
        const Rational b = Rational(s.uniform(-9, 9)) * primePower(p, s.uniform(-3, 1));
        const Cyclotomic shifted = integrateBallCharacter(Ball(p, c, k), 0, b).value;
        const Cyclotomic base = integrateBallCharacter(Ball(p, 0, k), 0, b).value;
        CHECK(shifted == Cyclotomic::fromPhase(chiP(b * c, p)) * base);
    }
}

TEST_CASE("property: measure of p^k Z_p") {
    for (Prime p : {2, 3, 5, 7})
        for (long k = -3; k <= 3; ++k) CHECK(integrateBallCharacter(Ball(p, 0, k), 0, 0).value == Cyclotomic(primePower(p, -k)));
}

TEST_CASE("property: additivity over cosets of pZ_p") {
    Sampler s(53);
    for (int i = 0; i < 60; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5, 7}[i % 4];
        const Rational a = Rational(s.uniform(-9, 9)) * primePower(p, s.uniform(-3, 1));
        const Rational b = Rational(s.uniform(-9, 9)) * primePower(p, s.uniform(-3, 1));
        Cyclotomic sum;
        for (const Ball& coset : Ball::integers(p).refine(1)) sum += integrateBallCharacter(coset, a, b).value;
        CHECK(sum == integrateBallCharacter(Ball::integers(p), a, b).value);
    }
}

TEST_CASE("property: integer residue kernel matches the rational reference") {
    Sampler s(54);
    for (int i = 0; i < 100; ++i) {
        const Prime p = std::vector<Prime>{2, 3, 5, 7}[i % 4];
        const Ball ball(p, Rational(s.uniform(-20, 20)) * primePower(p, s.uniform(-1, 1)), s.uniform(-1, 2));
        const Rational a = Rational(s.uniform(-9, 9)) * primePower(p, s.uniform(-3, 1));
        const Rational b = Rational(s.uniform(-9, 9)) * primePower(p, s.uniform(-3, 1));
        const long level = ball.radiusExp() + s.uniform(0, 4);
        CHECK(residueSum(ball, a, b, level) == residueSum(ball, a, b, level, true));
    }
}

TEST_CASE("real quadrature") {
    const RealIntegral g = integrateReal(RealTestFunction::gaussian());
    CHECK_FALSE(g.flagged);
    CHECK(std::abs(g.value - 1.0) < 1e-12);
    const RealIntegral m = integrateMellinReal(
        [](double x) { return Complex(std::exp(-std::numbers::pi * x * x)); }, 2.0);
    CHECK(std::abs(m.value - 1.0 / std::numbers::pi) < 1e-10);
    const RealIntegral fr = fresnelRegularized(1, 0);
    CHECK_FALSE(fr.flagged);
    CHECK(std::abs(fr.value - std::polar(std::sqrt(0.5), -std::numbers::pi / 4)) < 1e-8);
    // int e^{-pi x^2} chi_inf(b x) dx = e^{-pi b^2}.
    const RealIntegral shifted = integrateReal(RealTestFunction::gaussian(), {}, 0, 0.75);
    CHECK(std::abs(shifted.value - std::exp(-std::numbers::pi * 0.5625)) < 1e-12);
}

TEST_CASE("an error estimate over budget is flagged") {
    QuadratureConfig coarse;
    coarse.nodes = 8;
    coarse.errorBudget = 1e-14;
    CHECK(integrateReal(RealTestFunction::hermiteFunction(6), coarse).flagged);
}
