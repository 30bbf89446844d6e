#include <sstream>

#include "adelic/gauss.hpp"

namespace adelic {

namespace {

int bit(bool b) { return b ? 1 : 0; }

int parityOf(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

UnitPhase& LambdaTable::odd(int pMod4, int parity, int legendre) {
    if ((pMod4 != 1 && pMod4 != 3) || (parity != 0 && parity != 1) || (legendre != 1 && legendre != -1))
        throw ArgumentError("bad odd-prime lambda key");
    return odd_[bit(pMod4 == 3)][parity][bit(legendre == -1)];
}
const UnitPhase& LambdaTable::odd(int pMod4, int parity, int legendre) const {
    return const_cast<LambdaTable*>(this)->odd(pMod4, parity, legendre);
}

UnitPhase& LambdaTable::two(int parity, int unitMod8) {
    if ((parity != 0 && parity != 1) || unitMod8 < 1 || unitMod8 > 7 || unitMod8 % 2 == 0)
        throw ArgumentError("bad 2-adic lambda key");
    return two_[parity][unitMod8 / 2];
}
const UnitPhase& LambdaTable::two(int parity, int unitMod8) const {
    return const_cast<LambdaTable*>(this)->two(parity, unitMod8);
}

UnitPhase& LambdaTable::real(int sign) {
    if (sign != 1 && sign != -1) throw ArgumentError("bad real lambda key");
    return real_[bit(sign < 0)];
}
const UnitPhase& LambdaTable::real(int sign) const { return const_cast<LambdaTable*>(this)->real(sign); }

UnitPhase LambdaTable::lookup(const Place& v, const Rational& a) const {
    if (a == 0) throw DomainError("lambda(0) is undefined");
    if (v.isInfinite()) return real(sgn(a));
    const Prime p = v.prime();
    const long gamma = valuation(a, p).value();
    const Rational unit = a * primePower(p, -gamma);
    if (p == 2) return two(parityOf(gamma), static_cast<int>(residueModPower(unit, 2, 3).get_si()));
    const Integer lead = residueModPower(unit, p, 1);
    const int legendre = mpz_legendre(lead.get_mpz_t(), Integer(p).get_mpz_t());
    return odd(static_cast<int>(p % 4), parityOf(gamma), legendre);
}

std::vector<std::string> LambdaTable::describe() const {
    std::vector<std::string> out;
    auto line = [&](const std::string& key, const UnitPhase& ph) {
        out.push_back(key + " -> e^{2 pi i " + toString(ph.value()) + "}");
    };
    for (int m : {1, 3})
        for (int par : {0, 1})
            for (int leg : {1, -1})
                line("p=" + std::to_string(m) + " mod 4, v(a) " + (par ? "odd" : "even") + ", (a0/p)=" +
                         std::to_string(leg),
                     odd(m, par, leg));
    for (int par : {0, 1})
        for (int u : {1, 3, 5, 7})
            line("p=2, v(a) " + std::string(par ? "odd" : "even") + ", u=" + std::to_string(u) + " mod 8", two(par, u));
    line("inf, a>0", real(1));
    line("inf, a<0", real(-1));
    return out;
}

const LambdaTable& frozenLambdaTable() {
    // Output of calibrateLambdaTable() with the default configuration.
    static const LambdaTable table = [] {
        LambdaTable t;
        auto q = [](long n, long d) { return UnitPhase(makeRational(n, d)); };
        for (int leg : {1, -1}) {
            t.odd(1, 0, leg) = q(0, 1);
            t.odd(3, 0, leg) = q(0, 1);
        }
        t.odd(1, 1, 1) = q(0, 1);
        t.odd(1, 1, -1) = q(1, 2);
        t.odd(3, 1, 1) = q(1, 4);
        t.odd(3, 1, -1) = q(3, 4);

        t.two(0, 1) = q(1, 8);
        t.two(0, 3) = q(7, 8);
        t.two(0, 5) = q(1, 8);
        t.two(0, 7) = q(7, 8);
        t.two(1, 1) = q(1, 8);
        t.two(1, 3) = q(3, 8);
        t.two(1, 5) = q(5, 8);
        t.two(1, 7) = q(7, 8);

        t.real(1) = q(7, 8);
        t.real(-1) = q(1, 8);
        return t;
    }();
    return table;
}

CalibrationReport calibrateLambdaTable(const CalibrationConfig& cfg) {
    CalibrationReport rep;
    std::map<std::string, UnitPhase> seen;
    auto assign = [&](const std::string& key, UnitPhase& cell, const UnitPhase& found) {
        auto [it, fresh] = seen.try_emplace(key, found);
        if (fresh) {
            cell = found;
        } else if (!(it->second == found)) {
            rep.consistent = false;
            rep.log.push_back("conflict at " + key);
        }
    };

    // Find the unique eighth root of unity for which the closed form matches
    // the oracle exactly.
    auto match = [&](Prime p, const Rational& a) -> std::optional<UnitPhase> {
        auto plan = SphereDecompositionPlan::forGauss(p, a, Rational(0));
        QpIntegral oracle = integrateQp(p, QpIntegrand{std::nullopt, a, Rational(0)}, plan);
        if (oracle.flagged) {
            rep.consistent = false;
            rep.log.push_back("oracle flagged at p=" + std::to_string(p) + " a=" + toString(a) + ": " + oracle.flag);
            return std::nullopt;
        }
        std::optional<UnitPhase> hit;
        int hits = 0;
        for (long k = 0; k < 8; ++k) {
            UnitPhase cand(makeRational(k, 8));
            auto closed = gaussPrefactorExact(p, a, cand);
            if (closed && *closed == oracle.value) {
                hit = cand;
                ++hits;
            }
        }
        if (hits != 1) {
            rep.consistent = false;
            rep.log.push_back(std::to_string(hits) + " matching phases at p=" + std::to_string(p) + " a=" + toString(a));
            return std::nullopt;
        }
        rep.log.push_back("p=" + std::to_string(p) + " a=" + toString(a) + " lambda=e^{2 pi i " +
                          toString(hit->value()) + "}");
        return hit;
    };

    for (Prime p : cfg.oddPrimes) {
        requirePrime(p);
        if (p == 2) throw ArgumentError("odd prime expected");
        for (long gamma : cfg.valuations) {
            for (long d = 1; d < p; ++d) {
                const Rational a = primePower(p, gamma) * d;
                auto hit = match(p, a);
                if (!hit) continue;
                const int legendre = mpz_legendre(Integer(d).get_mpz_t(), Integer(p).get_mpz_t());
                const int m = static_cast<int>(p % 4);
                const int par = parityOf(gamma);
                assign("odd/" + std::to_string(m) + "/" + std::to_string(par) + "/" + std::to_string(legendre),
                       rep.table.odd(m, par, legendre), *hit);
            }
        }
    }
    for (long gamma : cfg.valuations) {
        for (long u : {1L, 3L, 5L, 7L}) {
            const Rational a = primePower(2, gamma) * u;
            auto hit = match(2, a);
            if (!hit) continue;
            const int par = parityOf(gamma);
            assign("two/" + std::to_string(par) + "/" + std::to_string(u), rep.table.two(par, static_cast<int>(u)), *hit);
        }
    }
    // Real place: the damped Fresnel integral times sqrt(2|a|) is an eighth
    // root of unity; pick it by proximity.
    for (int sign : {1, -1}) {
        for (double mag : {0.5, 1.0, 3.0}) {
            const double a = sign * mag;
            RealIntegral fr = fresnelRegularized(a, 0.0);
            const Complex unit = fr.value * std::sqrt(2 * mag);
            int hits = 0;
            UnitPhase found;
            for (long k = 0; k < 8; ++k) {
                UnitPhase cand(makeRational(k, 8));
                if (std::abs(cand.toComplex() - unit) < 1e-6) {
                    found = cand;
                    ++hits;
                }
            }
            if (hits != 1 || fr.flagged) {
                rep.consistent = false;
                rep.log.push_back("no unique real phase for a=" + std::to_string(a));
                continue;
            }
            rep.log.push_back("inf a=" + std::to_string(a) + " lambda=e^{2 pi i " + toString(found.value()) + "}");
            assign("inf/" + std::to_string(sign), rep.table.real(sign), found);
        }
    }
    const std::size_t expectedCells = 8 + 8 + 2;
    if (seen.size() != expectedCells) {
        rep.consistent = false;
        rep.log.push_back("only " + std::to_string(seen.size()) + " of " + std::to_string(expectedCells) +
                          " cells calibrated");
    }
    return rep;
}

}  // namespace adelic
