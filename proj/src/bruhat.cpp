#include "adelic/bruhat.hpp"

#include <cmath>
#include <numbers>

#include "adelic/kernels.hpp"

namespace adelic {

namespace {
constexpr std::int64_t kMaxRefinement = 20'000'000;
}

Rational cosetRepresentative(const Rational& x, Prime p, long level) {
    Rational scale = primePower(p, level);
    return scale * fracPart(x / scale, p);
}

Ball::Ball(Prime p, Rational center, long radiusExp) : p_(p), k_(radiusExp) {
    requirePrime(p);
    center_ = cosetRepresentative(center, p, radiusExp);
}

bool Ball::contains(const Rational& x) const { return valuation(x - center_, p_) >= Valuation(k_); }

bool Ball::contains(const Ball& inner) const { return inner.p_ == p_ && inner.k_ >= k_ && contains(inner.center_); }

bool Ball::disjoint(const Ball& o) const { return !contains(o) && !o.contains(*this); }

std::vector<Ball> Ball::refine(long level) const {
    if (level < k_) throw ArgumentError("refinement level coarser than the ball");
    std::int64_t count = conductor(p_, static_cast<int>(level - k_));
    if (count > kMaxRefinement) throw ArgumentError("ball refinement too large");
    std::vector<Ball> out;
    out.reserve(static_cast<std::size_t>(count));
    Rational step = primePower(p_, k_);
    for (std::int64_t r = 0; r < count; ++r) out.emplace_back(p_, center_ + step * Rational(static_cast<long>(r)), level);
    return out;
}

// ------------------------------------------------------------ PAdicTestFunction

PAdicTestFunction::PAdicTestFunction(Prime p, std::vector<TestTerm> terms) : p_(p), terms_(std::move(terms)) {
    requirePrime(p);
    for (const auto& t : terms_)
        if (t.ball.prime() != p_) throw ArgumentError("ball prime differs from test function prime");
}

PAdicTestFunction PAdicTestFunction::indicator(const Ball& ball, const Cyclotomic& coefficient) {
    return PAdicTestFunction(ball.prime(), {TestTerm{coefficient, Rational(0), ball}});
}

Cyclotomic PAdicTestFunction::operator()(const Rational& x) const {
    Cyclotomic out;
    for (const auto& t : terms_)
        if (t.ball.contains(x)) out += t.coefficient * Cyclotomic::fromPhase(chiP(t.frequency * x, p_));
    return out;
}

PAdicTestFunction PAdicTestFunction::operator+(const PAdicTestFunction& o) const {
    if (o.p_ != p_) throw ArgumentError("adding test functions at different primes");
    std::vector<TestTerm> terms = terms_;
    terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
    return PAdicTestFunction(p_, std::move(terms));
}

PAdicTestFunction PAdicTestFunction::operator*(const Cyclotomic& c) const {
    std::vector<TestTerm> terms = terms_;
    for (auto& t : terms) t.coefficient = t.coefficient * c;
    return PAdicTestFunction(p_, std::move(terms));
}

PAdicTestFunction PAdicTestFunction::reflected() const {
    std::vector<TestTerm> terms;
    for (const auto& t : terms_)
        terms.push_back({t.coefficient, -t.frequency, Ball(p_, -t.ball.center(), t.ball.radiusExp())});
    return PAdicTestFunction(p_, std::move(terms));
}

long PAdicTestFunction::constancyLevel() const {
    long level = std::numeric_limits<long>::min();
    for (const auto& t : terms_) {
        long k = t.ball.radiusExp();
        Valuation v = valuation(t.frequency, p_);
        if (v.isFinite()) k = std::max(k, -v.value());
        level = std::max(level, k);
    }
    return terms_.empty() ? 0 : level;
}

long PAdicTestFunction::supportLevel() const {
    long level = std::numeric_limits<long>::max();
    for (const auto& t : terms_) {
        if (t.coefficient.isZero()) continue;
        Valuation vc = valuation(t.ball.center(), p_);
        long k = t.ball.radiusExp();
        level = std::min(level, vc.isFinite() ? std::min(k, vc.value()) : k);
    }
    return level == std::numeric_limits<long>::max() ? 0 : level;
}

bool PAdicTestFunction::isPlain() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const TestTerm& t) { return t.frequency == 0; });
}

PAdicTestFunction PAdicTestFunction::canonical() const {
    const long top = constancyLevel();
    std::map<Rational, Cyclotomic> cur;
    for (const auto& t : terms_) {
        if (t.coefficient.isZero()) continue;
        for (const Ball& sub : t.ball.refine(top)) {
            Cyclotomic value = t.coefficient;
            if (t.frequency != 0) value = value * Cyclotomic::fromPhase(chiP(t.frequency * sub.center(), p_));
            cur[sub.center()] += value;
        }
    }
    std::erase_if(cur, [](const auto& kv) { return kv.second.isZero(); });

    // Merge complete sibling groups with equal values into their parent ball.
    std::map<std::pair<long, Rational>, Cyclotomic> done;
    for (long level = top; !cur.empty(); --level) {
        std::map<Rational, std::vector<std::map<Rational, Cyclotomic>::iterator>> groups;
        for (auto it = cur.begin(); it != cur.end(); ++it)
            groups[cosetRepresentative(it->first, p_, level - 1)].push_back(it);
        std::map<Rational, Cyclotomic> next;
        for (auto& [parent, members] : groups) {
            bool merge = static_cast<Prime>(members.size()) == p_ &&
                         std::all_of(members.begin(), members.end(),
                                     [&](const auto& m) { return m->second == members.front()->second; });
            if (merge) {
                next.emplace(parent, members.front()->second);
            } else {
                for (const auto& m : members) done.emplace(std::make_pair(level, m->first), m->second);
            }
        }
        cur = std::move(next);
    }

    std::vector<TestTerm> terms;
    for (auto& [key, value] : done) terms.push_back({value, Rational(0), Ball(p_, key.second, key.first)});
    return PAdicTestFunction(p_, std::move(terms));
}

bool operator==(const PAdicTestFunction& a, const PAdicTestFunction& b) {
    if (a.p_ != b.p_) return false;
    PAdicTestFunction x = a.canonical(), y = b.canonical();
    if (x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i) {
        const auto &s = x.terms_[i], &t = y.terms_[i];
        if (!(s.ball == t.ball) || !(s.coefficient == t.coefficient)) return false;
    }
    return true;
}

Cyclotomic PAdicTestFunction::normSquared() const {
    Cyclotomic out;
    const PAdicTestFunction canon = canonical();
    for (const auto& t : canon.terms_) out += t.coefficient * t.coefficient.conj() * Cyclotomic(t.ball.measure());
    return out;
}

Cyclotomic PAdicTestFunction::integral() const {
    Cyclotomic out;
    for (const auto& t : terms_) {
        Valuation v = valuation(t.frequency, p_);
        if (v.isFinite() && v.value() + t.ball.radiusExp() < 0) continue;
        out += t.coefficient * Cyclotomic::fromPhase(chiP(t.frequency * t.ball.center(), p_)) *
               Cyclotomic(t.ball.measure());
    }
    return out;
}

PAdicTestFunction fourierP(const PAdicTestFunction& f) {
    // coefficient * chi(eta x) 1_{c + p^k Z_p}(x)
    //   -> coefficient * p^-k chi(eta c) * chi(c xi) 1_{-eta + p^-k Z_p}(xi)
    const Prime p = f.prime();
    std::vector<TestTerm> terms;
    for (const auto& t : f.terms()) {
        const Ball& b = t.ball;
        Cyclotomic c = t.coefficient * Cyclotomic(b.measure()) * Cyclotomic::fromPhase(chiP(t.frequency * b.center(), p));
        terms.push_back({c, b.center(), Ball(p, -t.frequency, -b.radiusExp())});
    }
    return PAdicTestFunction(p, std::move(terms));
}

// ------------------------------------------------------------ real functions

double hermite(int n, double y) {
    if (n < 0) throw ArgumentError("negative Hermite degree");
    double h0 = 1, h1 = 2 * y;
    if (n == 0) return h0;
    for (int k = 1; k < n; ++k) {
        double h2 = 2 * y * h1 - 2 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

std::vector<double> hermiteCoefficients(int n) {
    std::vector<double> prev{1}, cur{0, 2};
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(k + 2, 0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * k * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RealTestFunction RealTestFunction::gaussian(Complex coefficient) { return RealTestFunction(std::vector<Complex>{coefficient}); }

RealTestFunction RealTestFunction::hermiteFunction(int degree, Complex coefficient) {
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = coefficient;
    return RealTestFunction(std::move(c));
}

std::optional<double> RealTestFunction::decayRadius() const {
    if (generic_) return generic_->decayRadius;
    double n = static_cast<double>(hermite_.size());
    return n <= 40 ? 8.0 : 8.0 + std::sqrt(n);
}

Complex RealTestFunction::operator()(double x) const {
    if (generic_) return generic_->profile(x);
    const double y = std::sqrt(2 * std::numbers::pi) * x;
    Complex sum = 0;
    double h0 = 1, h1 = 2 * y;
    for (std::size_t n = 0; n < hermite_.size(); ++n) {
        double hn;
        if (n == 0) {
            hn = h0;
        } else if (n == 1) {
            hn = h1;
        } else {
            hn = 2 * y * h1 - 2 * static_cast<double>(n - 1) * h0;
            h0 = h1;
            h1 = hn;
        }
        sum += hermite_[n] * hn;
    }
    return sum * std::exp(-std::numbers::pi * x * x);
}

RealTestFunction RealTestFunction::operator*(Complex c) const {
    if (!generic_) {
        auto h = hermite_;
        for (auto& x : h) x *= c;
        return RealTestFunction(std::move(h));
    }
    Generic g{[f = generic_->profile, c](double x) { return c * f(x); }, generic_->decayRadius};
    return RealTestFunction(std::move(g));
}

RealTestFunction RealTestFunction::operator+(const RealTestFunction& o) const {
    if (isHermite() && o.isHermite()) {
        auto h = hermite_;
        if (h.size() < o.hermite_.size()) h.resize(o.hermite_.size(), 0.0);
        for (std::size_t i = 0; i < o.hermite_.size(); ++i) h[i] += o.hermite_[i];
        return RealTestFunction(std::move(h));
    }
    std::optional<double> r;
    if (decayRadius() && o.decayRadius()) r = std::max(*decayRadius(), *o.decayRadius());
    Generic g{[a = *this, b = o](double x) { return a(x) + b(x); }, r};
    return RealTestFunction(std::move(g));
}

RealTestFunction fourierReal(const RealTestFunction& f) {
    if (f.isHermite()) {
        auto h = f.hermiteCoefficients();
        const Complex minusI(0, -1);
        Complex factor = 1;
        for (auto& c : h) {
            c *= factor;
            factor *= minusI;
        }
        return RealTestFunction(std::move(h));
    }
    auto radius = f.decayRadius();
    if (!radius) throw ArgumentError("generic real test function has no decay bound; cannot transform");
    const double r = *radius;
    auto profile = f.generic()->profile;
    RealTestFunction::Generic g{
        [profile, r](double xi) {
            auto integrand = [&](double x) { return profile(x) * chiInf(xi * x); };
            std::int64_t intervals = static_cast<std::int64_t>(std::ceil(64 * r * (1 + std::fabs(xi)) * r));
            return kernels::trapezoid(integrand, -r, r, std::max<std::int64_t>(intervals, 2048));
        },
        r};
    return RealTestFunction(std::move(g));
}

// ---------------------------------------------------------------- adelic

ElementaryFunction ElementaryFunction::vacuum() { return {RealTestFunction::gaussian(std::pow(2.0, 0.25)), {}}; }

ElementaryFunction ElementaryFunction::oscillatorState(int n) {
    if (n < 0) throw ArgumentError("negative oscillator level");
    double norm = std::pow(2.0, 0.25) / std::sqrt(std::ldexp(std::tgamma(n + 1.0), n));
    return {RealTestFunction::hermiteFunction(n, norm), {}};
}

const PAdicTestFunction& ElementaryFunction::factorAt(Prime p) const {
    thread_local std::map<Prime, PAdicTestFunction> omegas;
    if (auto it = primes.find(p); it != primes.end()) return it->second;
    return omegas.try_emplace(p, PAdicTestFunction::omega(p)).first->second;
}

int omega(const Rational& normValue) {
    if (normValue < 0) throw ArgumentError("a norm value cannot be negative");
    return normValue <= 1 ? 1 : 0;
}

Complex evaluate(const ElementaryFunction& phi, const Adele& x) {
    Complex value = phi.real(x.real().get_d());
    for (const auto& [p, f] : phi.primes) {
        auto xp = x.componentAt(p);
        if (!xp) throw ArgumentError("adele component at " + std::to_string(p) + " is needed but unknown");
        value *= f(*xp).toComplex();
    }
    for (const auto& [p, xp] : x.components())
        if (!phi.primes.contains(p)) value *= static_cast<double>(omega(padicNorm(xp, p)));
    return value;
}

ElementaryFunction fourierElementary(const ElementaryFunction& phi) {
    ElementaryFunction out{fourierReal(phi.real), {}};
    for (const auto& [p, f] : phi.primes) out.primes.emplace(p, fourierP(f));
    return out;
}

SchwartzBruhat SchwartzBruhat::operator+(const SchwartzBruhat& o) const {
    SchwartzBruhat out = *this;
    out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
    return out;
}

SchwartzBruhat SchwartzBruhat::operator*(Complex c) const {
    SchwartzBruhat out = *this;
    for (auto& t : out.terms) t.first *= c;
    return out;
}

Complex evaluate(const SchwartzBruhat& phi, const Adele& x) {
    Complex sum = 0;
    for (const auto& [c, f] : phi.terms) sum += c * evaluate(f, x);
    return sum;
}

SchwartzBruhat fourier(const SchwartzBruhat& phi) {
    SchwartzBruhat out;
    for (const auto& [c, f] : phi.terms) out.terms.emplace_back(c, fourierElementary(f));
    return out;
}

}  // namespace adelic
