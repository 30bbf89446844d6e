#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "adelic/acceptance.hpp"
#include "adelic/characters.hpp"
#include "adelic/distrib.hpp"
#include "adelic/gauss.hpp"
#include "adelic/integrate.hpp"
#include "adelic/meltate.hpp"
#include "adelic/oscillator.hpp"
#include "adelic/report.hpp"
#include "adelic/serialize.hpp"

namespace adelic::cli {

namespace {

constexpr const char* kPrecisionEnv = "ADELIC_PRECISION";

using Reports = std::vector<CheckReport>;

/// "inf" selects the real place (returned as 0).
Prime parsePlace(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "infinity") return 0;
    const Rational r = parseRational(text);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw ArgumentError("not a prime: '" + text + "'");
    const Prime p = r.get_num().get_si();
    requirePrime(p);
    return p;
}

std::vector<std::string> splitList(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

long defaultPrecision() {
    const char* env = std::getenv(kPrecisionEnv);
    if (!env || !*env) return OscillatorOptions{}.precision;
    const Rational r = parseRational(env);
    if (r.get_den() != 1 || r <= 0 || !r.get_num().fits_slong_p())
        throw ArgumentError(std::string(kPrecisionEnv) + " must be a positive integer");
    return r.get_num().get_si();
}

CheckReport comparison(std::string check, Complex value, Complex expected, double tolerance) {
    CheckReport r;
    r.check = std::move(check);
    r.value = formatComplex(value);
    r.expected = formatComplex(expected);
    r.absError = std::abs(value - expected);
    r.judge(tolerance);
    return r;
}

nlohmann::ordered_json complexMap(const std::map<Prime, Complex>& m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [p, z] : m) j[std::to_string(p)] = formatComplex(z);
    return j;
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact p-adic and adelic analysis checks", "adelic"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<double> tolerance;
    bool json = false;
    bool timing = false;
    app.add_option("--tolerance", tolerance, "Override the pass tolerance of the check");
    app.add_flag("--json", json, "Machine-readable output (check commands always print JSON lines)");
    app.add_flag("--timing", timing, "Add runtime_ms to every report");
    auto tol = [&](double fallback) { return tolerance.value_or(fallback); };

    std::string rText, aText, bText = "0", placeText, alphaText, tText, phiText, phiFile, distName, samplesText, energyText = "0";
    std::optional<long> sphereRange;
    std::optional<long> precisionOpt;
    bool allowTwo = false;
    std::string onlyText;
    std::uint64_t seed = SuiteConfig{}.seed;

    std::map<std::string, std::function<Reports()>> actions;

    auto loadPhi = [&](const std::string& fallback) -> std::pair<std::string, SchwartzBruhat> {
        std::string text = phiText;
        if (!phiFile.empty()) {
            std::ifstream in(phiFile);
            if (!in) throw ArgumentError("cannot read " + phiFile);
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        if (text.empty()) text = fallback;
        return {text, parseSchwartzBruhat(text)};
    };
    auto addPhi = [&](CLI::App* sub) {
        sub->add_option("--phi", phiText, "Schwartz-Bruhat function (directives, 'vacuum' or 'state:<n>')");
        sub->add_option("--phi-file", phiFile, "File holding the Schwartz-Bruhat directives");
    };

    // --- norm
    auto* norm = app.add_subcommand("norm", "|r|_p, |r|_inf, or the exact product over all places");
    norm->add_option("-r", rText, "Rational literal")->required();
    norm->add_option("-p", placeText, "Prime or 'inf'; omitted: product over all places");
    actions["norm"] = [&] {
        const Rational r = parseRational(rText);
        CheckReport rep;
        rep.inputs["r"] = toString(r);
        if (placeText.empty()) {
            rep.check = "norm-product";
            const Rational v = normProductExact(r);
            rep.value = toString(v);
            rep.expected = "1";
            rep.absError = std::fabs(Rational(v - 1).get_d());
            rep.pass = v == 1;
        } else {
            const Prime p = parsePlace(placeText);
            rep.check = "norm";
            rep.inputs["p"] = placeText;
            rep.value = toString(p == 0 ? Rational(abs(r)) : padicNorm(r, p));
        }
        return Reports{rep};
    };

    // --- frac
    auto* frac = app.add_subcommand("frac", "p-adic fractional part {r}_p");
    frac->add_option("-r", rText, "Rational literal")->required();
    frac->add_option("-p", placeText, "Prime")->required();
    actions["frac"] = [&] {
        const Rational r = parseRational(rText);
        const Prime p = parsePlace(placeText);
        if (p == 0) throw ArgumentError("frac needs a finite prime");
        CheckReport rep;
        rep.check = "frac";
        rep.inputs["r"] = toString(r);
        rep.inputs["p"] = placeText;
        rep.value = toString(fracPart(r, p));
        return Reports{rep};
    };

    // --- chi
    auto* chi = app.add_subcommand("chi", "Additive character at one place, or the principal product");
    chi->add_option("-r", rText, "Rational literal")->required();
    chi->add_option("-p", placeText, "Prime or 'inf'; omitted: product over all places");
    actions["chi"] = [&] {
        const Rational r = parseRational(rText);
        if (placeText.empty()) {
            const PrincipalCharacter pc = chiPrincipal(r);
            CheckReport rep = comparison("chi-principal", pc.value, 1.0, tol(1e-12));
            rep.inputs["r"] = toString(r);
            rep.pass = rep.pass && pc.phase.isOne();
            rep.extra["phase"] = toString(pc.phase.value());
            return Reports{rep};
        }
        const Prime p = parsePlace(placeText);
        const UnitPhase phase = p == 0 ? chiInfPhase(r) : chiP(r, p);
        CheckReport rep;
        rep.check = "chi";
        rep.inputs["r"] = toString(r);
        rep.inputs["p"] = placeText;
        rep.value = formatComplex(phase.toComplex());
        rep.extra["phase"] = toString(phase.value());
        return Reports{rep};
    };

    // --- pair
    auto* pairCmd = app.add_subcommand("pair", "Pair a named distribution with a Schwartz-Bruhat function");
    pairCmd->add_option("--dist", distName, "delta | chi | chi-quad | pi-alpha")
        ->required()
        ->check(CLI::IsMember({"delta", "chi", "chi-quad", "pi-alpha"}));
    pairCmd->add_option("-a", aText, "chi-quad: coefficient a (nonzero rational)");
    pairCmd->add_option("-b", bText, "chi-quad: coefficient b");
    pairCmd->add_option("--alpha", alphaText, "pi-alpha: exponent re,im");
    addPhi(pairCmd);
    actions["pair"] = [&] {
        const auto [text, phi] = loadPhi("vacuum");
        AdelicDistribution dist = [&] {
            if (distName == "delta") return deltaDistribution();
            if (distName == "chi") return chiDistribution();
            if (distName == "chi-quad") {
                if (aText.empty()) throw ArgumentError("chi-quad needs -a");
                const Rational a = parseRational(aText);
                if (a == 0) throw ArgumentError("chi-quad needs a nonzero a");
                return chiQuadraticDistribution(principalIdele(a), principalAdele(parseRational(bText)));
            }
            if (alphaText.empty()) throw ArgumentError("pi-alpha needs --alpha");
            return piAlphaDistribution(parseComplex(alphaText));
        }();
        const Pairing pr = pair(dist, phi);
        CheckReport rep;
        rep.check = "pair";
        rep.inputs["dist"] = distName;
        if (distName == "chi-quad") {
            rep.inputs["a"] = aText;
            rep.inputs["b"] = bText;
        }
        if (distName == "pi-alpha") rep.inputs["alpha"] = alphaText;
        rep.inputs["phi"] = text;
        rep.value = formatComplex(pr.value);
        if (distName == "delta") {
            // Sifting: the pairing must reproduce phi(0) exactly.
            const Complex at0 = evaluate(phi, principalAdele(Rational(0)));
            rep.expected = formatComplex(at0);
            rep.absError = std::abs(pr.value - at0);
            rep.judge(tol(0.0));
        }
        rep.extra["non_unit_factors"] = pr.nonUnitFactors;
        rep.extra["factor_bound"] = pr.factorBound;
        if (pr.nonUnitFactors > pr.factorBound) rep.pass = false;
        return Reports{rep};
    };

    // --- gauss
    auto* gauss = app.add_subcommand("gauss", "Local Gauss integral: closed form against the integration oracle");
    gauss->add_option("-p", placeText, "Prime or 'inf'")->required();
    gauss->add_option("-a", aText, "Nonzero rational a")->required();
    gauss->add_option("-b", bText, "Rational b");
    gauss->add_option("--sphere-range", sphereRange, "Largest sphere index summed by the oracle");
    actions["gauss"] = [&] {
        const Prime p = parsePlace(placeText);
        const Rational a = parseRational(aText), b = parseRational(bText);
        if (a == 0) throw DomainError("the Gauss integral needs a != 0");
        CheckReport rep;
        rep.check = "gauss";
        rep.inputs["p"] = placeText;
        rep.inputs["a"] = toString(a);
        rep.inputs["b"] = toString(b);
        if (p == 0) {
            const RealIntegral fr = fresnelRegularized(a.get_d(), b.get_d());
            const Complex closed = gaussIntegralV(Place::infinity(), a, b);
            rep = [&] {
                CheckReport c = comparison("gauss", fr.value, closed, tol(1e-6));
                c.inputs = rep.inputs;
                return c;
            }();
            rep.extra["lambda"] = toString(lambdaV(Place::infinity(), a).value());
            rep.extra["oracle_error_estimate"] = round15(fr.errorEstimate);
            if (fr.flagged) rep.pass = false;
            return Reports{rep};
        }
        SphereDecompositionPlan plan = SphereDecompositionPlan::forGauss(p, a, b);
        if (sphereRange) {
            plan.sphereHigh = *sphereRange;
            rep.inputs["sphere_range"] = *sphereRange;
        }
        const QpIntegral oracle = integrateQp(p, QpIntegrand{std::nullopt, a, b}, plan);
        const Cyclotomic closed = gaussIntegralExact(p, a, b);
        const bool exact = oracle.value == closed;
        CheckReport c = comparison("gauss", oracle.complex(), closed.toComplex(), tol(1e-12));
        c.inputs = rep.inputs;
        c.pass = c.pass && exact && !oracle.flagged;
        c.extra["exact_match"] = exact;
        c.extra["closed_form"] = closed.toString();
        c.extra["lambda"] = toString(lambdaV(Place::finite(p), a).value());
        if (oracle.tailIndex) c.extra["tail_index"] = *oracle.tailIndex;
        if (oracle.flagged) c.extra["flag"] = oracle.flag;
        return Reports{c};
    };

    // --- product-check / lambda-check
    auto* product = app.add_subcommand("product-check", "Product over all places of the local Gauss integrals");
    product->add_option("-a", aText, "Nonzero rational a")->required();
    product->add_option("-b", bText, "Rational b");
    actions["product-check"] = [&] {
        const Rational a = parseRational(aText), b = parseRational(bText);
        CheckReport rep = comparison("product-check", productFormulaCheck(a, b), 1.0, tol(1e-10));
        rep.inputs["a"] = toString(a);
        rep.inputs["b"] = toString(b);
        nlohmann::ordered_json primes = nlohmann::ordered_json::array();
        for (Prime p : relevantPrimes(a, b)) primes.push_back(p);
        rep.extra["places"] = primes;
        return Reports{rep};
    };
    auto* lambda = app.add_subcommand("lambda-check", "Product over all places of lambda_v(a)");
    lambda->add_option("-a", aText, "Nonzero rational a")->required();
    actions["lambda-check"] = [&] {
        const Rational a = parseRational(aText);
        CheckReport rep = comparison("lambda-check", lambdaProductCheck(a), 1.0, tol(1e-12));
        rep.inputs["a"] = toString(a);
        return Reports{rep};
    };

    // --- mellin / tate / zeta-fe
    auto* mellin = app.add_subcommand("mellin", "Adelic Mellin transform Phi(alpha)");
    mellin->add_option("--alpha", alphaText, "Exponent re,im")->required();
    addPhi(mellin);
    actions["mellin"] = [&] {
        const Complex alpha = parseComplex(alphaText);
        const auto [text, phi] = loadPhi("vacuum");
        CheckReport rep;
        rep.check = "mellin";
        rep.inputs["alpha"] = formatComplex(alpha);
        rep.inputs["phi"] = text;
        if (phi.terms.size() == 1 && phi.terms[0].first == Complex(1.0)) {
            const MellinResult m = phiP(phi.terms[0].second, alpha);
            rep.value = formatComplex(m.value);
            rep.extra["real_factor"] = formatComplex(m.realFactor);
            rep.extra["local_factors"] = complexMap(m.localFactors);
            rep.extra["zeta_factor"] = formatComplex(m.zetaFactor);
            if (!m.domainNote.empty()) rep.extra["domain_note"] = m.domainNote;
        } else {
            rep.value = formatComplex(phiP(phi, alpha));
        }
        if (text == "vacuum") {
            // Only the measured value is asserted; the stated sqrt(2) is echoed for comparison.
            const Complex reference =
                gammaFn(alpha / 2.0) * std::pow(std::numbers::pi, -alpha / 2.0) * zeta(alpha);
            const VacuumConstant vc = measureVacuumConstant({alpha});
            rep.extra["measured_constant"] = formatComplex(vc.constant);
            rep.extra["stated_constant"] = formatReal(std::sqrt(2.0));
            rep.extra["gamma_pi_zeta"] = formatComplex(reference);
        }
        return Reports{rep};
    };

    auto* tate = app.add_subcommand("tate", "Tate residual |Phi(alpha) - Phi~(1 - alpha)| in the critical strip");
    tate->add_option("--alpha", alphaText, "Exponent re,im with 0 < re < 1")->required();
    addPhi(tate);
    actions["tate"] = [&] {
        const Complex alpha = parseComplex(alphaText);
        const auto [text, phi] = loadPhi("vacuum");
        double residual = 0;
        if (phi.terms.size() == 1 && phi.terms[0].first == Complex(1.0)) {
            residual = tateCheck(phi.terms[0].second, alpha);
        } else {
            if (!(alpha.real() > 0 && alpha.real() < 1)) throw DomainError("tate needs 0 < Re alpha < 1");
            residual = std::abs(phiP(phi, alpha) - phiP(fourier(phi), 1.0 - alpha));
        }
        CheckReport rep;
        rep.check = "tate";
        rep.inputs["alpha"] = formatComplex(alpha);
        rep.inputs["phi"] = text;
        rep.value = formatReal(residual);
        rep.expected = "0";
        rep.absError = residual;
        rep.judge(tol(1e-6));
        return Reports{rep};
    };

    auto* zetaFe = app.add_subcommand("zeta-fe", "Riemann functional equation residual at alpha");
    zetaFe->add_option("--alpha", alphaText, "Exponent re,im with 0 < re < 1")->required();
    actions["zeta-fe"] = [&] {
        const Complex alpha = parseComplex(alphaText);
        const double residual = functionalEquationResidual(alpha);
        CheckReport rep;
        rep.check = "zeta-fe";
        rep.inputs["alpha"] = formatComplex(alpha);
        rep.value = formatReal(residual);
        rep.expected = "0";
        rep.absError = residual;
        rep.judge(tol(1e-10));
        rep.extra["zeta"] = formatComplex(zeta(alpha));
        return Reports{rep};
    };

    // --- oscillator-check
    auto* osc = app.add_subcommand("oscillator-check", "p-adic trigonometry and vacuum invariance under U(t)");
    osc->add_option("-p", placeText, "Odd prime (2 needs --allow-two)")->required();
    osc->add_option("-t", tText, "Time, a rational literal with |t|_p <= 1/p")->required();
    osc->add_option("--precision", precisionOpt, "Working precision N (default from ADELIC_PRECISION or 20)");
    osc->add_option("--samples", samplesText, "Comma-separated rational sample points x");
    osc->add_option("--energy", energyText, "Energy E_p (default 0)");
    osc->add_flag("--allow-two", allowTwo, "Permit p = 2");
    actions["oscillator-check"] = [&] {
        const Prime p = parsePlace(placeText);
        if (p == 0) throw ArgumentError("oscillator-check needs a finite prime");
        const long n = precisionOpt ? *precisionOpt : defaultPrecision();
        if (n <= 0) throw ArgumentError("precision must be positive");
        const Rational t = parseRational(tText);
        const Rational energy = parseRational(energyText);
        std::vector<Rational> samples;
        if (samplesText.empty())
            samples = {Rational(0), Rational(1), Rational(p), makeRational(1, p), Rational(2), makeRational(2, p)};
        else
            for (const auto& s : splitList(samplesText)) samples.push_back(parseRational(s));

        nlohmann::ordered_json inputs;
        inputs["p"] = placeText;
        inputs["t"] = toString(t);
        inputs["precision"] = n;
        Reports out;

        const PAdicApprox tp(p, t, Valuation(n));
        CheckReport trig;
        trig.check = "oscillator-trig";
        trig.inputs = inputs;
        const PAdicApprox sn = padicSin(tp, n).value, cs = padicCos(tp, n).value;
        const PAdicApprox s2 = padicSin(tp * PAdicApprox(p, Rational(2)), n).value;
        const bool pythagoras = (sn * sn + cs * cs).congruent(PAdicApprox(p, Rational(1)));
        const bool doubleAngle = s2.congruent(PAdicApprox(p, Rational(2)) * sn * cs);
        const bool normIdentity = t == 0 || valuation(sn.approximant(), p) == valuation(t, p);
        trig.value = toString(sn.approximant());
        trig.expected = "n/a";
        trig.pass = pythagoras && doubleAngle && normIdentity;
        trig.absError = trig.pass ? 0 : INFINITY;
        trig.extra["sin_precision"] = sn.precision().toString();
        trig.extra["sin2_plus_cos2"] = pythagoras;
        trig.extra["double_angle"] = doubleAngle;
        trig.extra["norm_identity"] = normIdentity;
        out.push_back(trig);

        OscillatorOptions opt;
        opt.precision = n;
        opt.allowTwo = allowTwo;
        CheckReport eig;
        eig.check = "oscillator-eigen";
        eig.inputs = inputs;
        eig.inputs["energy"] = toString(energy);
        nlohmann::ordered_json xs = nlohmann::ordered_json::array();
        for (const auto& x : samples) xs.push_back(toString(x));
        eig.inputs["samples"] = xs;
        EigenCheckResult r;
        try {
            r = eigenCheck(p, tp, PAdicTestFunction::omega(p), energy, samples, opt);
        } catch (const PrecisionError& e) {
            eig.value = "n/a";
            eig.expected = "0";
            eig.absError = INFINITY;
            eig.pass = false;
            eig.extra["flag"] = e.what();
            out.push_back(eig);
            return out;
        }
        eig.value = formatReal(r.maxDeviation);
        eig.expected = "0";
        eig.absError = r.maxDeviation;
        eig.judge(tol(r.exact ? 0.0 : 1e-12));
        eig.pass = eig.pass && !r.flagged;
        eig.extra["exact"] = r.exact;
        out.push_back(eig);
        return out;
    };

    // --- calibrate-lambda
    app.add_subcommand("calibrate-lambda", "Rederive the lambda table from the oracle and compare with the frozen one");
    actions["calibrate-lambda"] = [&] {
        const CalibrationReport cal = calibrateLambdaTable();
        const bool same = cal.table == frozenLambdaTable();
        CheckReport rep;
        rep.check = "calibrate-lambda";
        rep.value = cal.consistent ? "consistent" : "inconsistent";
        rep.expected = "consistent";
        rep.pass = cal.consistent && same;
        rep.absError = rep.pass ? 0 : INFINITY;
        rep.extra["matches_frozen"] = same;
        rep.extra["table"] = cal.table.describe();
        return Reports{rep};
    };

    // --- suite
    auto* suite = app.add_subcommand("suite", "Run the acceptance grid");
    suite->add_option("--only", onlyText, "Comma-separated groups: qcore,gauss,bruhat,meltate,oscillator,distrib");
    suite->add_option("--seed", seed, "Sampler seed");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    try {
        if (name == "suite") {
            SuiteConfig cfg;
            cfg.seed = seed;
            cfg.timing = timing;
            for (const auto& g : splitList(onlyText)) cfg.only.insert(g);
            const auto results = runAcceptance(cfg);
            std::size_t passed = 0;
            for (const auto& r : results) {
                passed += r.pass;
                if (json) {
                    out << r.report.toJsonLine() << "\n";
                } else {
                    out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  [" << r.group << "] "
                        << r.title << ": " << r.detail;
                    if (timing) out << " (" << formatReal(std::round(*r.report.runtimeMs)) << " ms)";
                    out << "\n";
                }
            }
            const std::string tally = std::to_string(passed) + "/" + std::to_string(results.size());
            if (json) {
                CheckReport summary;
                summary.check = "suite";
                summary.inputs["only"] = onlyText.empty() ? "all" : onlyText;
                summary.inputs["seed"] = seed;
                summary.value = tally;
                summary.expected = std::to_string(results.size()) + "/" + std::to_string(results.size());
                summary.pass = passed == results.size();
                summary.absError = static_cast<double>(results.size() - passed);
                if (timing) summary.runtimeMs = elapsed();
                out << summary.toJsonLine() << "\n";
            } else {
                out << tally << " criteria passed\n";
            }
            return passed == results.size() ? 0 : 1;
        }

        Reports reports = actions.at(name)();
        bool ok = true;
        for (auto& r : reports) {
            if (timing) r.runtimeMs = elapsed();
            ok = ok && r.pass;
            out << r.toJsonLine() << "\n";
        }
        return ok ? 0 : 1;
    } catch (const PrecisionError& e) {
        // Not enough digits to decide: reported as a flagged, failing check.
        CheckReport rep;
        rep.check = name;
        rep.value = "n/a";
        rep.absError = INFINITY;
        rep.pass = false;
        rep.extra["flag"] = e.what();
        out << rep.toJsonLine() << "\n";
        return 1;
    } catch (const ArgumentError& e) {
        err << "adelic " << name << ": " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "adelic " << name << ": " << e.what() << "\n";
        return 2;
    }
}

}  // namespace adelic::cli
