#include "adelic/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace adelic {

bool isPrime(Prime p) {
    if (p < 2) return false;
    Integer n(static_cast<long>(p));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

void requirePrime(Prime p) {
    if (!isPrime(p)) throw ArgumentError("not a prime: " + std::to_string(p));
}

Rational parseRational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return ArgumentError("malformed rational literal: '" + s + "'"); };
    if (s.empty()) throw bad();
    std::size_t pos = 0;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    std::string body = s.substr(pos);
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    auto digitsOnly = [](const std::string& t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!digitsOnly(num) || !digitsOnly(den)) throw bad();
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw ArgumentError("zero denominator in '" + s + "'");
    Rational r(negative ? Integer(-n) : n, d);
    r.canonicalize();
    return r;
}

std::string toString(const Rational& r) { return r.get_str(); }

Rational makeRational(long num, long den) {
    if (den == 0) throw ArgumentError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational primePower(Prime p, long k) {
    Integer base;
    mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::labs(k)));
    return k >= 0 ? Rational(base) : Rational(Integer(1), base);
}

Rational fromDouble(double x) {
    if (!std::isfinite(x)) throw ArgumentError("non-finite real value");
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

long Valuation::value() const {
    if (!value_) throw DomainError("valuation is +infinity");
    return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.isInfinite() || b.isInfinite()) {
        if (a.isInfinite() && b.isInfinite()) return std::strong_ordering::equal;
        return a.isInfinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.isInfinite() || b.isInfinite()) return Valuation::infinity();
    return Valuation(*a.value_ + *b.value_);
}

Valuation operator+(const Valuation& a, long k) { return a + Valuation(k); }

std::string Valuation::toString() const { return value_ ? std::to_string(*value_) : "+inf"; }

Valuation valuation(const Integer& n, Prime p) {
    requirePrime(p);
    if (n == 0) return Valuation::infinity();
    Integer rest, base(static_cast<long>(p));
    return Valuation(static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t())));
}

Valuation valuation(const Rational& r, Prime p) {
    requirePrime(p);
    if (r == 0) return Valuation::infinity();
    return Valuation(valuation(r.get_num(), p).value() - valuation(r.get_den(), p).value());
}

Rational padicNorm(const Rational& r, Prime p) {
    Valuation v = valuation(r, p);
    if (v.isInfinite()) return Rational(0);
    return primePower(p, -v.value());
}

Integer residueModPower(const Rational& r, Prime p, long e) {
    if (e < 0) throw ArgumentError("negative modulus exponent");
    Integer modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    if (e == 0) return Integer(0);
    Integer inv;
    Integer den = r.get_den();
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw ArgumentError("rational is not p-integral: " + r.get_str());
    Integer out = r.get_num() * inv;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

Rational fracPart(const Rational& r, Prime p) {
    Valuation v = valuation(r, p);
    if (v.isInfinite() || v.value() >= 0) return Rational(0);
    long e = -v.value();
    // r * p^e is p-integral; its residue mod p^e gives the negative digits.
    Rational scaled = r * primePower(p, e);
    Integer m = residueModPower(scaled, p, e);
    Rational q(m, primePower(p, e).get_num());
    q.canonicalize();
    return q;
}

DigitExpansion digits(const Rational& r, Prime p, int count) {
    requirePrime(p);
    if (r == 0) throw DomainError("zero has no canonical p-adic expansion");
    if (count < 1) throw ArgumentError("digit count must be positive");
    DigitExpansion out{valuation(r, p).value(), {}};
    Rational unit = r * primePower(p, -out.valuation);
    for (int i = 0; i < count; ++i) {
        Integer d = residueModPower(unit, p, 1);
        out.digits.push_back(static_cast<int>(d.get_si()));
        unit = (unit - Rational(d)) / Rational(static_cast<long>(p));
    }
    return out;
}

std::vector<Prime> primeFactors(Integer n) {
    std::vector<Prime> out;
    if (n < 0) n = -n;
    if (n == 0) throw ArgumentError("cannot factor zero");
    auto strip = [&](long q) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(q))) {
            out.push_back(q);
            while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(q)))
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(q));
        }
    };
    strip(2);
    constexpr long kTrialLimit = 10'000'000;
    for (long q = 3; q <= kTrialLimit && Integer(q) * q <= n; q += 2) strip(q);
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw ArgumentError("integer has a composite cofactor beyond the trial-division limit");
        if (!n.fits_slong_p()) throw ArgumentError("prime factor too large");
        out.push_back(n.get_si());
    }
    return out;
}

std::vector<Prime> supportPrimes(const Rational& r) {
    if (r == 0) return {};
    std::set<Prime> s;
    for (Prime p : primeFactors(r.get_num())) s.insert(p);
    for (Prime p : primeFactors(r.get_den())) s.insert(p);
    return {s.begin(), s.end()};
}

// ---------------------------------------------------------------- PAdicApprox

PAdicApprox::PAdicApprox(Prime p, Rational approximant, Valuation precision)
    : p_(p), value_(std::move(approximant)), precision_(precision) {
    requirePrime(p_);
    value_.canonicalize();
}

Valuation PAdicApprox::knownValuation() const { return min(valuation(value_, p_), precision_); }

bool PAdicApprox::valuationDetermined() const { return valuation(value_, p_) < precision_; }

void PAdicApprox::requireSamePrime(const PAdicApprox& o) const {
    if (o.p_ != p_) throw ArgumentError("p-adic values at different primes");
}

PAdicApprox PAdicApprox::operator+(const PAdicApprox& o) const {
    requireSamePrime(o);
    return {p_, value_ + o.value_, min(precision_, o.precision_)};
}

PAdicApprox PAdicApprox::operator-() const { return {p_, -value_, precision_}; }

PAdicApprox PAdicApprox::operator-(const PAdicApprox& o) const { return *this + (-o); }

PAdicApprox PAdicApprox::operator*(const PAdicApprox& o) const {
    requireSamePrime(o);
    Valuation n = min(precision_ + o.knownValuation(), o.precision_ + knownValuation());
    return {p_, value_ * o.value_, n};
}

PAdicApprox PAdicApprox::inverse() const {
    if (!valuationDetermined()) throw PrecisionError("valuation of divisor not determined at this precision");
    long v = valuation(value_, p_).value();
    Valuation n = precision_.isInfinite() ? Valuation::infinity() : Valuation(precision_.value() - 2 * v);
    return {p_, 1 / value_, n};
}

bool PAdicApprox::congruent(const PAdicApprox& o) const {
    requireSamePrime(o);
    return valuation(value_ - o.value_, p_) >= min(precision_, o.precision_);
}

// ---------------------------------------------------------------------- Adele

Adele::Adele(Rational real, std::map<Prime, Rational> components, std::optional<Rational> diagonal)
    : real_(std::move(real)), components_(std::move(components)), diagonal_(std::move(diagonal)) {
    for (auto& [p, value] : components_) {
        requirePrime(p);
        value.canonicalize();
    }
    if (diagonal_) {
        for (Prime p : primeFactors(diagonal_->get_den()))
            if (!components_.contains(p))
                throw ArgumentError("diagonal " + diagonal_->get_str() + " is not integral at unlisted prime " +
                                    std::to_string(p));
    }
}

std::optional<Rational> Adele::componentAt(Prime p) const {
    if (auto it = components_.find(p); it != components_.end()) return it->second;
    return diagonal_;
}

std::optional<Rational> Adele::normAt(Prime p) const {
    auto c = componentAt(p);
    if (!c) return std::nullopt;
    return padicNorm(*c, p);
}

std::vector<Prime> Adele::exceptionalPrimes() const {
    std::vector<Prime> out;
    for (const auto& [p, value] : components_)
        if (padicNorm(value, p) > 1) out.push_back(p);
    return out;
}

std::vector<Prime> Adele::listedPrimes() const {
    std::vector<Prime> out;
    for (const auto& kv : components_) out.push_back(kv.first);
    return out;
}

Adele Adele::canonical() const {
    Adele out = *this;
    if (!diagonal_) return out;
    std::erase_if(out.components_, [&](const auto& kv) {
        return kv.second == *diagonal_ && valuation(kv.second, kv.first) >= Valuation(0);
    });
    return out;
}

namespace {

template <class Op>
std::map<Prime, Rational> combineComponents(const Adele& a, const Adele& b, Op op) {
    std::set<Prime> primes;
    for (const auto& kv : a.components()) primes.insert(kv.first);
    for (const auto& kv : b.components()) primes.insert(kv.first);
    std::map<Prime, Rational> out;
    for (Prime p : primes) {
        auto x = a.componentAt(p), y = b.componentAt(p);
        if (!x || !y) throw ArgumentError("component at " + std::to_string(p) + " is not known");
        out.emplace(p, op(*x, *y));
    }
    return out;
}

std::optional<Rational> combineDiagonal(const Adele& a, const Adele& b, auto op) {
    if (a.diagonal() && b.diagonal()) return op(*a.diagonal(), *b.diagonal());
    return std::nullopt;
}

}  // namespace

Adele Adele::operator+(const Adele& o) const {
    auto add = [](const Rational& x, const Rational& y) { return Rational(x + y); };
    return {real_ + o.real_, combineComponents(*this, o, add), combineDiagonal(*this, o, add)};
}

Adele Adele::operator*(const Adele& o) const {
    auto mul = [](const Rational& x, const Rational& y) { return Rational(x * y); };
    return {real_ * o.real_, combineComponents(*this, o, mul), combineDiagonal(*this, o, mul)};
}

bool operator==(const Adele& a, const Adele& b) {
    Adele x = a.canonical(), y = b.canonical();
    return x.real_ == y.real_ && x.components_ == y.components_ && x.diagonal_ == y.diagonal_;
}

Idele::Idele(Rational real, std::map<Prime, Rational> components, std::optional<Rational> diagonal)
    : Adele(std::move(real), std::move(components), std::move(diagonal)) {
    if (real_ == 0) throw ArgumentError("idele has zero real component");
    for (const auto& [p, value] : components_)
        if (value == 0) throw ArgumentError("idele has zero component at " + std::to_string(p));
    if (diagonal_) {
        if (*diagonal_ == 0) throw ArgumentError("idele diagonal is zero");
        for (Prime p : primeFactors(diagonal_->get_num()))
            if (!components_.contains(p))
                throw ArgumentError("idele diagonal is not a unit at unlisted prime " + std::to_string(p));
    }
}

Idele Idele::operator*(const Idele& o) const { return Idele(Adele::operator*(o)); }

Idele Idele::inverse() const {
    std::map<Prime, Rational> inv;
    for (const auto& [p, value] : components_) inv.emplace(p, 1 / value);
    std::optional<Rational> d;
    if (diagonal_) d = 1 / *diagonal_;
    return {1 / real_, std::move(inv), d};
}

Idele Idele::canonical() const { return Idele(Adele::canonical()); }

Adele principalAdele(const Rational& r) {
    std::map<Prime, Rational> comps;
    if (r != 0)
        for (Prime p : primeFactors(r.get_den())) comps.emplace(p, r);
    return {r, std::move(comps), r};
}

Idele principalIdele(const Rational& r) {
    if (r == 0) throw ArgumentError("zero is not an idele");
    std::map<Prime, Rational> comps;
    for (Prime p : supportPrimes(r)) comps.emplace(p, r);
    return {r, std::move(comps), r};
}

Rational normProductExact(const Rational& r) {
    if (r == 0) throw DomainError("norm product of zero");
    Rational out = abs(r);
    for (Prime p : supportPrimes(r)) out *= padicNorm(r, p);
    return out;
}

Complex ideleNormProduct(const Rational& r, Complex alpha) {
    if (r == 0) throw DomainError("norm product of zero");
    Complex out = std::exp(alpha * std::log(std::fabs(r.get_d())));
    for (Prime p : supportPrimes(r)) {
        double logNorm = -static_cast<double>(valuation(r, p).value()) * std::log(static_cast<double>(p));
        out *= std::exp(alpha * logNorm);
    }
    return out;
}

}  // namespace adelic
