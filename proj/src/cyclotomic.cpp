#include "adelic/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "adelic/characters.hpp"

namespace adelic {

std::int64_t conductor(Prime p, int level) {
    std::int64_t n = 1;
    for (int i = 0; i < level; ++i) {
        if (n > (std::int64_t{1} << 62) / p) throw ArgumentError("cyclotomic conductor exceeds 64 bits");
        n *= p;
    }
    return n;
}

Cyclotomic::Cyclotomic(const Rational& r) {
    if (r != 0) coeffs_.emplace(0, r);
}

Cyclotomic::Cyclotomic(Prime p, int level, std::map<std::int64_t, Rational> raw)
    : p_(p), level_(level), coeffs_(std::move(raw)) {
    reduce();
}

void Cyclotomic::reduce() {
    if (level_ == 0) {
        Rational total = 0;
        for (const auto& kv : coeffs_) total += kv.second;
        coeffs_.clear();
        if (total != 0) coeffs_.emplace(0, total);
        p_ = 0;
        return;
    }
    const std::int64_t n = conductor(p_, level_);
    const std::int64_t step = n / p_;
    const std::int64_t phi = n - step;

    std::map<std::int64_t, Rational> work;
    for (auto& [k, c] : coeffs_) {
        std::int64_t e = ((k % n) + n) % n;
        work[e] += c;
    }
    // z^{phi + t} = -sum_{i<p-1} z^{t + i*step}; all produced exponents are < phi.
    for (auto it = work.lower_bound(phi); it != work.end();) {
        std::int64_t t = it->first - phi;
        Rational c = it->second;
        it = work.erase(it);
        if (c == 0) continue;
        for (Prime i = 0; i < p_ - 1; ++i) work[t + i * step] -= c;
    }
    std::erase_if(work, [](const auto& kv) { return kv.second == 0; });

    // Descend to the smallest field containing the element.
    while (level_ > 0) {
        bool divisible = true;
        for (const auto& kv : work)
            if (kv.first % p_ != 0) {
                divisible = false;
                break;
            }
        if (!divisible) break;
        std::map<std::int64_t, Rational> lowered;
        for (auto& [k, c] : work) lowered.emplace(k / p_, std::move(c));
        work = std::move(lowered);
        --level_;
    }
    coeffs_ = std::move(work);
    if (level_ == 0) p_ = 0;
}

Cyclotomic Cyclotomic::rootOfUnity(const Rational& phase, const Rational& weight) {
    if (weight == 0) return {};
    Rational q = phase - Rational(mpz_class(phase.get_num() / phase.get_den()));
    if (q < 0) q += 1;
    q.canonicalize();
    if (q.get_den() == 1) return Cyclotomic(weight);
    auto primes = primeFactors(q.get_den());
    if (primes.size() != 1) throw ArgumentError("phase " + q.get_str() + " does not have prime-power denominator");
    Prime p = primes.front();
    int level = static_cast<int>(valuation(Integer(q.get_den()), p).value());
    std::int64_t e = q.get_num().get_si();
    return Cyclotomic(p, level, {{e, weight}});
}

Cyclotomic Cyclotomic::fromPhase(const UnitPhase& phase) { return rootOfUnity(phase.value()); }

Cyclotomic Cyclotomic::fromHistogram(Prime p, int level, std::span<const std::int64_t> counts, const Rational& scale) {
    const std::int64_t n = conductor(p, level);
    if (static_cast<std::int64_t>(counts.size()) != n) throw ArgumentError("histogram size does not match conductor");
    if (level == 0) return Cyclotomic(Rational(counts[0]) * scale);
    const std::int64_t step = n / p;
    const std::int64_t phi = n - step;
    std::vector<std::int64_t> dense(counts.begin(), counts.end());
    for (std::int64_t k = n - 1; k >= phi; --k) {
        if (dense[k] == 0) continue;
        for (Prime i = 0; i < p - 1; ++i) dense[k - phi + i * step] -= dense[k];
        dense[k] = 0;
    }
    std::map<std::int64_t, Rational> raw;
    for (std::int64_t k = 0; k < phi; ++k)
        if (dense[k] != 0) raw.emplace(k, Rational(static_cast<long>(dense[k])) * scale);
    return Cyclotomic(p, level, std::move(raw));
}

Cyclotomic Cyclotomic::gaussSum(Prime p) {
    requirePrime(p);
    if (p == 2) throw ArgumentError("quadratic Gauss sum needs an odd prime");
    std::map<std::int64_t, Rational> raw;
    Integer pp(static_cast<long>(p));
    for (Prime k = 1; k < p; ++k) {
        Integer kk(static_cast<long>(k));
        raw.emplace(k, Rational(mpz_legendre(kk.get_mpz_t(), pp.get_mpz_t())));
    }
    return Cyclotomic(p, 1, std::move(raw));
}

Rational Cyclotomic::rationalValue() const {
    if (!isRational()) throw DomainError("cyclotomic number is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second;
}

Prime Cyclotomic::commonPrime(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
    throw ArgumentError("cannot combine cyclotomic numbers of different primes");
}

Cyclotomic Cyclotomic::liftedTo(Prime p, int level) const {
    if (level == level_) return *this;
    std::int64_t factor = conductor(p, level - level_);
    Cyclotomic out;
    out.p_ = p;
    out.level_ = level;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k * factor, c);
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Prime p = commonPrime(*this, o);
    int level = std::max(level_, o.level_);
    if (level == 0) return Cyclotomic(rationalValue() + o.rationalValue());
    Cyclotomic a = liftedTo(p, level), b = o.liftedTo(p, level);
    for (const auto& [k, c] : b.coeffs_) a.coeffs_[k] += c;
    a.reduce();
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& kv : out.coeffs_) kv.second = -kv.second;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Prime p = commonPrime(*this, o);
    int level = std::max(level_, o.level_);
    if (level == 0) return Cyclotomic(rationalValue() * o.rationalValue());
    if (isZero() || o.isZero()) return {};
    Cyclotomic a = liftedTo(p, level), b = o.liftedTo(p, level);
    const std::int64_t n = conductor(p, level);
    std::map<std::int64_t, Rational> raw;
    for (const auto& [i, x] : a.coeffs_)
        for (const auto& [j, y] : b.coeffs_) raw[(i + j) % n] += x * y;
    return Cyclotomic(p, level, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const {
    if (level_ == 0) return *this;
    const std::int64_t n = conductor(p_, level_);
    std::map<std::int64_t, Rational> raw;
    for (const auto& [k, c] : coeffs_) raw[(n - k) % n] += c;
    return Cyclotomic(p_, level_, std::move(raw));
}

Complex Cyclotomic::toComplex() const {
    if (level_ == 0) return {rationalValue().get_d(), 0.0};
    const long double n = static_cast<long double>(conductor(p_, level_));
    long double re = 0, im = 0;
    for (const auto& [k, c] : coeffs_) {
        long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
        long double w = c.get_d();
        re += w * std::cos(angle);
        im += w * std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::toString() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += c.get_str();
        if (k != 0) out += "*z^" + std::to_string(k);
    }
    if (level_ > 0) out += " (z = zeta_" + std::to_string(conductor(p_, level_)) + ")";
    return out;
}

}  // namespace adelic
