#include "adelic/meltate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

namespace adelic {

namespace {

constexpr int kEtaTermsDouble = 64;
constexpr int kEtaTermsExtended = 160;

// Borwein's d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), k = 0..n.
template <class Real>
std::vector<Real> borweinWeights(int n) {
    std::vector<Real> d(static_cast<std::size_t>(n) + 1);
    Real term = 1, acc = 0;
    for (int i = 0; i <= n; ++i) {
        acc += term;
        d[static_cast<std::size_t>(i)] = acc;
        term *= Real(4) * (n + i) * (n - i) / (Real(2 * i + 1) * (2 * i + 2));
    }
    return d;
}

void requireZetaDomain(Complex s) {
    if (s == Complex(1, 0)) throw DomainError("zeta has a pole at 1");
    if (s.real() <= 0) throw DomainError("zeta is only evaluated for Re s > 0");
}

bool isNonPositiveInteger(Complex s) { return s.imag() == 0 && s.real() <= 0 && s.real() == std::round(s.real()); }

}  // namespace

Complex zeta(Complex s) {
    requireZetaDomain(s);
    static const std::vector<double> d = borweinWeights<double>(kEtaTermsDouble);
    const double dn = d.back();
    Complex eta = 0;
    for (int k = 0; k < kEtaTermsDouble; ++k) {
        const double w = (d[static_cast<std::size_t>(k)] - dn) * (k % 2 == 0 ? 1 : -1);
        eta += w * std::exp(-s * std::log(static_cast<double>(k + 1)));
    }
    eta /= -dn;
    const Complex denom = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
    if (std::abs(denom) < 1e-12) throw DomainError("eta-to-zeta factor vanishes at this point");
    return eta / denom;
}

ExtendedComplex zetaExtended(const ExtendedComplex& s) {
    requireZetaDomain(Complex(static_cast<double>(s.real()), static_cast<double>(s.imag())));
    static const std::vector<Extended> d = borweinWeights<Extended>(kEtaTermsExtended);
    const Extended& dn = d.back();
    ExtendedComplex eta = 0;
    for (int k = 0; k < kEtaTermsExtended; ++k) {
        Extended w = d[static_cast<std::size_t>(k)] - dn;
        if (k % 2 != 0) w = -w;
        eta += w * exp(-s * log(Extended(k + 1)));
    }
    eta /= -dn;
    const ExtendedComplex denom = ExtendedComplex(1) - exp((ExtendedComplex(1) - s) * log(Extended(2)));
    if (abs(denom) < Extended(1e-30)) throw DomainError("eta-to-zeta factor vanishes at this point");
    return eta / denom;
}

Complex gammaFn(Complex s) {
    if (isNonPositiveInteger(s)) throw DomainError("gamma has a pole at a nonpositive integer");
    if (s.real() < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * s) * gammaFn(1.0 - s));
    static constexpr double g = 7;
    static constexpr double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                   771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                   -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    const Complex z = s - 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    const Complex t = z + g + 0.5;
    return std::sqrt(2 * std::numbers::pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

ExtendedComplex gammaExtended(const ExtendedComplex& s) {
    const Complex sd(static_cast<double>(s.real()), static_cast<double>(s.imag()));
    if (isNonPositiveInteger(sd)) throw DomainError("gamma has a pole at a nonpositive integer");
    const Extended pi = boost::math::constants::pi<Extended>();
    if (s.real() < Extended(0.5)) return ExtendedComplex(pi) / (sin(pi * s) * gammaExtended(ExtendedComplex(1) - s));

    // Shift to Re z >= 40 where the Stirling series is accurate far beyond 50 digits.
    ExtendedComplex z = s, prod = 1;
    while (z.real() < Extended(40)) {
        prod *= z;
        z += Extended(1);
    }
    ExtendedComplex lg = (z - Extended(0.5)) * log(z) - z + log(Extended(2) * pi) / 2;
    ExtendedComplex zpow = z;
    const ExtendedComplex z2 = z * z;
    for (int k = 1; k <= 30; ++k) {
        const Extended b = boost::math::bernoulli_b2n<Extended>(k);
        lg += b / (Extended(2 * k) * (2 * k - 1) * zpow);
        zpow *= z2;
    }
    return exp(lg) / prod;
}

Complex LocalMellinFactor::operator()(Complex alpha) const {
    const Complex logU = -alpha * std::log(static_cast<double>(p));
    Complex sum = 0;
    for (const auto& [k, c] : coefficients) sum += c.toComplex() * std::exp(static_cast<double>(k) * logU);
    return sum;
}

std::string LocalMellinFactor::toString() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coefficients) {
        if (!first) os << " + ";
        os << "(" << c.toString() << ") u^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

LocalMellinFactor mellinLocal(const PAdicTestFunction& f) {
    const Prime p = f.prime();
    LocalMellinFactor out{p, {}};
    const Rational unitSphere = 1 - Rational(1) / p;
    const PAdicTestFunction canon = f.canonical();
    for (const auto& t : canon.terms()) {
        const long k = t.ball.radiusExp();
        if (t.ball.containsZero()) {
            // int_{p^k Z_p} |x|^{alpha-1} dx = (1-1/p) u^k / (1-u).
            out.coefficients[k] += t.coefficient;
            continue;
        }
        // |x| = |c| on the ball: |c|^{alpha-1} p^-k = p^{v-k} u^v.
        const long v = valuation(t.ball.center(), p).value();
        const Cyclotomic w = t.coefficient * Cyclotomic(primePower(p, v - k) / unitSphere);
        out.coefficients[v] += w;
        out.coefficients[v + 1] += -w;
    }
    std::erase_if(out.coefficients, [](const auto& kv) { return kv.second.isZero(); });
    return out;
}

Complex mellinReal(const RealTestFunction& f, Complex alpha) {
    if (alpha.real() <= 0) throw DomainError("real Mellin transform needs Re alpha > 0");
    if (!f.isHermite()) {
        auto radius = f.decayRadius();
        if (!radius) throw ArgumentError("real test function has no declared decay bound");
        return integrateMellinReal(f.generic()->profile, alpha, *radius).value;
    }
    // e^{-pi x^2} x^k with k even: int |x|^{alpha-1} ... = pi^{-(alpha+k)/2} Gamma((alpha+k)/2).
    const double pi = std::numbers::pi;
    const auto& c = f.hermiteCoefficients();
    Complex sum = 0;
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n] == 0.0 || n % 2 != 0) continue;
        const auto h = hermiteCoefficients(static_cast<int>(n));
        Complex inner = 0;
        for (std::size_t k = 0; k < h.size(); k += 2) {
            if (h[k] == 0) continue;
            const Complex half = (alpha + static_cast<double>(k)) / 2.0;
            inner += h[k] * std::pow(2 * pi, 0.5 * static_cast<double>(k)) * std::exp(-half * std::log(pi)) *
                     gammaFn(half);
        }
        sum += c[n] * inner;
    }
    return sum;
}

MellinResult phiP(const ElementaryFunction& phi, Complex alpha) {
    if (alpha == Complex(0, 0) || alpha == Complex(1, 0)) throw DomainError("Phi has simple poles at alpha = 0 and 1");
    if (alpha.real() <= 0) throw DomainError("Mellin transform is evaluated for Re alpha > 0");
    MellinResult out;
    out.realFactor = mellinReal(phi.real, alpha);
    out.value = out.realFactor;
    for (const auto& [p, f] : phi.primes) {
        const Complex local = mellinLocal(f)(alpha);
        out.localFactors.emplace(p, local);
        out.value *= local;
    }
    out.zetaFactor = zeta(alpha);
    out.value *= out.zetaFactor;
    out.domainNote = std::string(phi.real.isHermite() ? "real: closed form, continues to Re alpha > 0"
                                                      : "real: quadrature, Re alpha > 0") +
                     "; local: Laurent polynomials in p^-alpha, entire; zeta: eta series, Re alpha > 0";
    return out;
}

Complex phiP(const SchwartzBruhat& phi, Complex alpha) {
    Complex sum = 0;
    for (const auto& [c, e] : phi.terms) sum += c * phiP(e, alpha).value;
    return sum;
}

double tateCheck(const ElementaryFunction& phi, Complex alpha) {
    if (alpha.real() <= 0 || alpha.real() >= 1) throw DomainError("Tate check needs 0 < Re alpha < 1");
    const Complex lhs = phiP(phi, alpha).value;
    const Complex rhs = phiP(fourierElementary(phi), 1.0 - alpha).value;
    return std::abs(lhs - rhs);
}

double functionalEquationResidual(Complex alpha) {
    if (alpha.real() <= 0 || alpha.real() >= 1) throw DomainError("functional equation check needs 0 < Re alpha < 1");
    const Extended logPi = log(boost::math::constants::pi<Extended>());
    auto xi = [&](const ExtendedComplex& s) {
        const ExtendedComplex half = s / Extended(2);
        return exp(-half * logPi) * gammaExtended(half) * zetaExtended(s);
    };
    const ExtendedComplex s(Extended(alpha.real()), Extended(alpha.imag()));
    return static_cast<double>(abs(xi(s) - xi(ExtendedComplex(1) - s)));
}

VacuumConstant measureVacuumConstant(const std::vector<Complex>& alphas) {
    if (alphas.empty()) throw ArgumentError("no alpha points");
    VacuumConstant out;
    const ElementaryFunction vac = ElementaryFunction::vacuum();
    Complex mean = 0;
    for (Complex a : alphas) {
        const Complex reference = gammaFn(a / 2.0) * std::exp(-a / 2.0 * std::log(std::numbers::pi)) * zeta(a);
        out.ratios.push_back(phiP(vac, a).value / reference);
        mean += out.ratios.back();
    }
    out.constant = mean / static_cast<double>(alphas.size());
    for (Complex r : out.ratios) out.relativeSpread = std::max(out.relativeSpread, std::abs(r - out.constant) / std::abs(out.constant));
    return out;
}

}  // namespace adelic
