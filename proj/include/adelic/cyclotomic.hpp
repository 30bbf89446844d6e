#pragma once

// Exact elements of the cyclotomic fields Q(zeta_{p^k}).
//
// Every p-adic character value is a p-power root of unity, so sums of such
// values with rational weights live in Q(zeta_{p^inf}). Elements are stored in
// the power basis {1, z, ..., z^{phi(p^k)-1}} of the smallest level k that
// contains them, which makes the representation unique and equality exact.

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "adelic/qcore.hpp"

namespace adelic {

class UnitPhase;

class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(const Rational& r);  // NOLINT: rationals embed implicitly
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}  // NOLINT

    /// weight * e^{2 pi i phase}; the phase denominator must be a prime power.
    static Cyclotomic rootOfUnity(const Rational& phase, const Rational& weight = Rational(1));
    static Cyclotomic fromPhase(const UnitPhase& phase);
    /// sum_N counts[N] * zeta_{p^level}^N * scale.
    static Cyclotomic fromHistogram(Prime p, int level, std::span<const std::int64_t> counts,
                                    const Rational& scale = Rational(1));
    /// The quadratic Gauss sum sum_k (k/p) zeta_p^k; its square is (-1/p) p.
    static Cyclotomic gaussSum(Prime p);

    /// 0 when rational.
    Prime prime() const { return p_; }
    int level() const { return level_; }
    bool isZero() const { return coeffs_.empty(); }
    bool isRational() const { return level_ == 0; }
    Rational rationalValue() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Complex conjugate.
    Cyclotomic conj() const;
    Complex toComplex() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.p_ == b.p_ && a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
    }

    const std::map<std::int64_t, Rational>& coefficients() const { return coeffs_; }
    std::string toString() const;

private:
    Cyclotomic(Prime p, int level, std::map<std::int64_t, Rational> raw);
    void reduce();
    Cyclotomic liftedTo(Prime p, int level) const;
    static Prime commonPrime(const Cyclotomic& a, const Cyclotomic& b);

    Prime p_ = 0;
    int level_ = 0;
    std::map<std::int64_t, Rational> coeffs_;
};

/// p^level, checked against 64-bit overflow.
std::int64_t conductor(Prime p, int level);

}  // namespace adelic
