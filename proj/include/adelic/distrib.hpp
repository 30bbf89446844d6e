#pragma once

// Adelic generalized functions, represented by their pairing rules with
// elementary functions:
//
//   (f, phi_P) = (f_inf, phi_inf) * prod_{p in P} (f_p, phi_p) * prod_{p not in P} (f_p, Omega_p).
//
// The infinite tail product carries a certificate: either every tail factor
// equals 1 outside a finite exceptional set E, or the tail is an Euler
// product with a closed form.

#include <functional>
#include <set>
#include <string>

#include "adelic/bruhat.hpp"
#include "adelic/meltate.hpp"

namespace adelic {

struct TailCertificate {
    enum class Kind { UnitOutside, Euler };
    Kind kind = Kind::UnitOutside;
    /// Primes where (f_p, Omega_p) may differ from 1.
    std::set<Prime> exceptional;
    /// For Kind::Euler: prod_{p not in S} (f_p, Omega_p) given the excluded set S.
    std::function<Complex(const std::set<Prime>&)> eulerTail;
    std::string description;
};

class AdelicDistribution {
public:
    using RealRule = std::function<Complex(const RealTestFunction&)>;
    using LocalRule = std::function<Complex(Prime, const PAdicTestFunction&)>;

    AdelicDistribution(std::string name, RealRule real, LocalRule local, std::optional<TailCertificate> tail)
        : name_(std::move(name)), real_(std::move(real)), local_(std::move(local)), tail_(std::move(tail)) {}

    const std::string& name() const { return name_; }
    Complex pairReal(const RealTestFunction& f) const { return real_(f); }
    Complex pairLocal(Prime p, const PAdicTestFunction& f) const { return local_(p, f); }
    const std::optional<TailCertificate>& tail() const { return tail_; }

private:
    std::string name_;
    RealRule real_;
    LocalRule local_;
    std::optional<TailCertificate> tail_;
};

struct Pairing {
    Complex value;
    /// Explicitly evaluated local factors that were not exactly 1, summed over
    /// the elementary terms, and the bound sum |P_i| + |E| they must respect.
    std::size_t nonUnitFactors = 0;
    std::size_t factorBound = 0;
};

Pairing pair(const AdelicDistribution& f, const ElementaryFunction& phi);
Pairing pair(const AdelicDistribution& f, const SchwartzBruhat& phi);

/// delta: evaluation at 0.
AdelicDistribution deltaDistribution();
/// The additive character chi(x).
AdelicDistribution chiDistribution();
/// chi(a x^2 + b x) for an idele a and an adele b.
AdelicDistribution chiQuadraticDistribution(const Idele& a, const Adele& b);
/// pi_alpha(x) = |x|^alpha against d*x. Throws at the poles alpha = 0, 1.
AdelicDistribution piAlphaDistribution(Complex alpha);
/// The regular distribution phi -> int_A g phi dx of an elementary function.
AdelicDistribution functionDistribution(const ElementaryFunction& g);

/// int_A g phi dx for two Schwartz-Bruhat functions.
Complex pairFunctions(const SchwartzBruhat& g, const SchwartzBruhat& phi);

/// Exact int_{Q_p} f g dx.
Cyclotomic integrateProduct(const PAdicTestFunction& f, const PAdicTestFunction& g);

}  // namespace adelic
