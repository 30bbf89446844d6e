#pragma once

// Exact rationals, p-adic valuations and the adele/idele data model.

#include <cstdint>
#include <complex>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace adelic {

using Integer = mpz_class;
using Rational = mpq_class;
using Prime = std::int64_t;
using Complex = std::complex<double>;

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a p-adic quantity is not known to enough digits for the
/// requested operation.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool isPrime(Prime p);
void requirePrime(Prime p);

/// Parses "num/den", "-num/den" or a bare integer.
Rational parseRational(std::string_view text);
std::string toString(const Rational& r);

Rational makeRational(long num, long den = 1);

/// p^k as an exact rational, k may be negative.
Rational primePower(Prime p, long k);

/// Exact conversion of a finite double.
Rational fromDouble(double x);

/// Valuation of a rational at a prime: an integer, or +infinity for zero.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(long v) : value_(v) {}
    static constexpr Valuation infinity() { return Valuation(Tag{}); }

    bool isInfinite() const { return !value_.has_value(); }
    bool isFinite() const { return value_.has_value(); }
    /// Throws DomainError when infinite.
    long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
    friend Valuation operator+(const Valuation& a, const Valuation& b);
    friend Valuation operator+(const Valuation& a, long k);

    friend Valuation min(const Valuation& a, const Valuation& b) { return a <= b ? a : b; }

    std::string toString() const;

private:
    struct Tag {};
    constexpr explicit Valuation(Tag) : value_(std::nullopt) {}
    std::optional<long> value_{0};
};

Valuation valuation(const Rational& r, Prime p);
Valuation valuation(const Integer& n, Prime p);
Rational padicNorm(const Rational& r, Prime p);

/// The unique q = m/p^k in [0,1) with r - q p-integral.
Rational fracPart(const Rational& r, Prime p);

/// Reduces a p-integral rational to an integer residue modulo p^e.
Integer residueModPower(const Rational& r, Prime p, long e);

struct DigitExpansion {
    long valuation;
    std::vector<int> digits;
};
DigitExpansion digits(const Rational& r, Prime p, int count);

/// The distinct primes dividing a nonzero integer, ascending.
std::vector<Prime> primeFactors(Integer n);
/// Primes dividing numerator or denominator of r.
std::vector<Prime> supportPrimes(const Rational& r);

/// A p-adic number known modulo p^precision. An infinite precision marks an
/// exact value.
class PAdicApprox {
public:
    PAdicApprox(Prime p, Rational approximant, Valuation precision = Valuation::infinity());

    Prime prime() const { return p_; }
    const Rational& approximant() const { return value_; }
    const Valuation& precision() const { return precision_; }

    /// Valuation guaranteed for the true value: min(v(approximant), precision).
    Valuation knownValuation() const;
    /// True when the valuation is determined, i.e. v(approximant) < precision.
    bool valuationDetermined() const;

    PAdicApprox operator+(const PAdicApprox& o) const;
    PAdicApprox operator-(const PAdicApprox& o) const;
    PAdicApprox operator*(const PAdicApprox& o) const;
    PAdicApprox operator-() const;
    /// Throws PrecisionError when the valuation of *this is not determined.
    PAdicApprox inverse() const;
    PAdicApprox operator/(const PAdicApprox& o) const { return *this * o.inverse(); }

    /// Equality up to the joint precision.
    bool congruent(const PAdicApprox& o) const;

private:
    void requireSamePrime(const PAdicApprox& o) const;
    Prime p_;
    Rational value_;
    Valuation precision_;
};

/// A point of the restricted product Q_inf x prod Q_p.
///
/// Components are either listed explicitly or given by the optional diagonal
/// rational, which must be p-integral at every unlisted prime. With no
/// diagonal, unlisted components are only known to lie in Z_p.
class Adele {
public:
    Adele() = default;
    Adele(Rational real, std::map<Prime, Rational> components, std::optional<Rational> diagonal = std::nullopt);

    const Rational& real() const { return real_; }
    const std::map<Prime, Rational>& components() const { return components_; }
    const std::optional<Rational>& diagonal() const { return diagonal_; }

    /// The component at p when it is known.
    std::optional<Rational> componentAt(Prime p) const;
    /// Norm at p; unknown unlisted components are bounded by 1 but reported as
    /// nullopt.
    std::optional<Rational> normAt(Prime p) const;

    /// Listed primes with |a_p|_p > 1.
    std::vector<Prime> exceptionalPrimes() const;
    std::vector<Prime> listedPrimes() const;

    /// Drops listed components recoverable from the diagonal.
    Adele canonical() const;

    Adele operator+(const Adele& o) const;
    Adele operator*(const Adele& o) const;

    friend bool operator==(const Adele& a, const Adele& b);

protected:
    Rational real_;
    std::map<Prime, Rational> components_;
    std::optional<Rational> diagonal_;
};

/// An invertible adele: nonzero components, units outside the listed primes.
class Idele : public Adele {
public:
    Idele() : Adele(Rational(1), {}, Rational(1)) {}
    Idele(Rational real, std::map<Prime, Rational> components, std::optional<Rational> diagonal = std::nullopt);
    explicit Idele(const Adele& a) : Idele(a.real(), a.components(), a.diagonal()) {}

    Idele operator*(const Idele& o) const;
    Idele inverse() const;
    Idele canonical() const;
};

/// Diagonal embedding; listed components are exactly the denominator primes.
Adele principalAdele(const Rational& r);
/// Diagonal embedding of a nonzero rational; lists every prime in its support.
Idele principalIdele(const Rational& r);

/// |r|_inf * prod_p |r|_p as an exact rational (equals 1 for nonzero r).
Rational normProductExact(const Rational& r);
/// |r|_inf^alpha * prod_{p | num*den} |r|_p^alpha.
Complex ideleNormProduct(const Rational& r, Complex alpha);

}  // namespace adelic
