#pragma once

// Local Gauss integrals
//
//     int_{Q_v} chi_v(a x^2 + b x) dx = lambda_v(a) |2a|_v^{-1/2} chi_v(-b^2 / 4a),
//
// the arithmetic phases lambda_v, their adelic product formula, the kernel
// K(a, b) and its integral transform.
//
// lambda_v is read from a frozen table. The table was produced by
// calibrateLambdaTable(), which matches the integration oracle against every
// eighth root of unity; tests re-run the calibration and compare.

#include <optional>
#include <string>
#include <vector>

#include "adelic/bruhat.hpp"
#include "adelic/characters.hpp"
#include "adelic/cyclotomic.hpp"
#include "adelic/integrate.hpp"

namespace adelic {

/// A place of Q: the real place or a prime.
class Place {
public:
    static Place infinity() { return Place(0); }
    static Place finite(Prime p) {
        requirePrime(p);
        return Place(p);
    }
    bool isInfinite() const { return p_ == 0; }
    Prime prime() const { return p_; }
    std::string toString() const { return p_ == 0 ? "inf" : std::to_string(p_); }

private:
    explicit Place(Prime p) : p_(p) {}
    Prime p_;
};

class LambdaTable {
public:
    /// Odd primes: keyed by p mod 4, parity of v_p(a), Legendre symbol of the
    /// leading digit.
    UnitPhase& odd(int pMod4, int parity, int legendre);
    const UnitPhase& odd(int pMod4, int parity, int legendre) const;
    /// p = 2: keyed by parity of v_2(a) and the unit part of a mod 8.
    UnitPhase& two(int parity, int unitMod8);
    const UnitPhase& two(int parity, int unitMod8) const;
    /// Real place: keyed by the sign of a.
    UnitPhase& real(int sign);
    const UnitPhase& real(int sign) const;

    UnitPhase lookup(const Place& v, const Rational& a) const;

    friend bool operator==(const LambdaTable&, const LambdaTable&) = default;
    /// One line per cell: "place key -> phase".
    std::vector<std::string> describe() const;

private:
    UnitPhase odd_[2][2][2];
    UnitPhase two_[2][4];
    UnitPhase real_[2];
};

const LambdaTable& frozenLambdaTable();

struct CalibrationReport {
    LambdaTable table;
    bool consistent = true;     ///< every cell got one unambiguous phase
    std::vector<std::string> log;
};

struct CalibrationConfig {
    std::vector<Prime> oddPrimes{3, 5, 7, 11, 13};
    std::vector<long> valuations{-1, 0, 1, 2};
};

CalibrationReport calibrateLambdaTable(const CalibrationConfig& cfg = {});

/// lambda_v(a) for a != 0.
UnitPhase lambdaV(const Place& v, const Rational& a);

/// lambda |2a|_p^{-1/2} as an exact element of Q(zeta_{p^inf}); nullopt when
/// the combination does not lie in that field (a wrong candidate phase).
std::optional<Cyclotomic> gaussPrefactorExact(Prime p, const Rational& a, const UnitPhase& lambda);

/// The closed form at a finite place, exactly.
Cyclotomic gaussIntegralExact(Prime p, const Rational& a, const Rational& b);

/// The closed form at any place, as a complex number.
Complex gaussIntegralV(const Place& v, const Rational& a, const Rational& b);

/// Primes where a Gauss factor can differ from 1: support of a and b, plus 2.
std::vector<Prime> relevantPrimes(const Rational& a, const Rational& b);

/// prod_v int chi_v(a x^2 + b x) dx over the relevant places; equals 1.
Complex productFormulaCheck(const Rational& a, const Rational& b);
/// prod_v lambda_v(a); equals 1.
Complex lambdaProductCheck(const Rational& a);

/// K(a, b) = prod_v lambda_v(a_v) |2 a_v|_v^{-1/2} chi_v(-b_v^2 / 4 a_v).
Complex kernelK(const Idele& a, const Adele& b);

struct LambdaTransformResult {
    Complex value;
    Complex realFactor;
    std::map<Prime, Cyclotomic> localFactors;
    int tailOmega = 1;  ///< product of Omega(|b_p|_p) over listed primes outside P
    bool flagged = false;
};

/// Local transform Lambda_p[f](b) = int K_p(a, b) f(a) da, evaluated as
/// int da int dx chi_p(a x^2 + b x) f(a) with the a-integral done first.
BallIntegral lambdaTransformLocal(const PAdicTestFunction& f, const Rational& b);
/// Real factor int dx chi_inf(b x) f~(x^2), by quadrature.
RealIntegral lambdaTransformReal(const RealTestFunction& f, double b);

LambdaTransformResult lambdaTransform(const ElementaryFunction& phi, const Adele& b);

}  // namespace adelic
